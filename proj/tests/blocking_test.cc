#include "groupmatch/blocking.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>

#include "groupmatch/errors.h"
#include "groupmatch/random.h"
#include "groupmatch/tokenizer.h"
#include "testing/helpers.h"

namespace groupmatch {
namespace {

using testing::Pair;

std::set<RecordPair> PairsOf(const std::vector<CandidatePair>& candidates) {
  std::set<RecordPair> out;
  for (const auto& c : candidates) out.insert(c.pair);
  return out;
}

CompanyRecord Company(const std::string& id, std::uint32_t source) {
  CompanyRecord c;
  c.id = RecordId(id);
  c.source = {source};
  c.name = id;
  return c;
}

SecurityRecord Security(const std::string& id, std::uint32_t source, const std::string& issuer,
                        IdScheme scheme, const std::string& value) {
  SecurityRecord s;
  s.id = RecordId(id);
  s.source = {source};
  s.issuer_id = RecordId(issuer);
  s.name = id;
  s.identifier(scheme) = value;
  return s;
}

TextRecord Text(const std::string& id, std::uint32_t source, const std::string& text) {
  return {RecordId(id), {source}, text};
}

TEST(BlockingKindTest, Names) {
  EXPECT_EQ(BlockingKindName(BlockingKind::kTokenOverlap), "TokenOverlap");
  EXPECT_EQ(ParseBlockingKind("issuer-match"), BlockingKind::kIssuerMatch);
  EXPECT_EQ(ParseBlockingKind("IdOverlap"), BlockingKind::kIdOverlap);
  EXPECT_FALSE(ParseBlockingKind("lsh").has_value());
}

TEST(ProvenanceTest, StringRoundTrip) {
  const Provenance p{BlockingKind::kTokenOverlap, BlockingKind::kIdOverlap};
  EXPECT_EQ(p.ToString(), "IdOverlap+TokenOverlap");
  EXPECT_EQ(Provenance::Parse("IdOverlap+TokenOverlap"), p);
  EXPECT_EQ(Provenance::Parse(""), Provenance{});
  EXPECT_FALSE(Provenance::Parse("IdOverlap+Bogus").has_value());
  EXPECT_TRUE(Provenance{BlockingKind::kTokenOverlap}.IsExactly(BlockingKind::kTokenOverlap));
  EXPECT_FALSE(p.IsExactly(BlockingKind::kTokenOverlap));
}

TEST(IdOverlapTest, SharedIsinAcrossSources) {
  const std::vector<SecurityRecord> s = {
      Security("#12", 0, "c", IdScheme::kIsin, "US0000000001"),
      Security("#31", 2, "c", IdScheme::kIsin, "US0000000001"),
      Security("#40", 2, "c", IdScheme::kIsin, "US0000000002")};
  const auto pairs = IdOverlapSecurities(s);
  ASSERT_EQ(pairs.size(), 1u);
  EXPECT_EQ(pairs[0].pair, Pair("#12", "#31"));
  EXPECT_TRUE(pairs[0].provenance.IsExactly(BlockingKind::kIdOverlap));
}

TEST(IdOverlapTest, SameSourceNeverPairs) {
  const std::vector<SecurityRecord> s = {
      Security("a", 1, "c", IdScheme::kIsin, "US0000000001"),
      Security("b", 1, "c", IdScheme::kIsin, "US0000000001")};
  EXPECT_TRUE(IdOverlapSecurities(s).empty());
}

TEST(IdOverlapTest, DistinctValuesNoPairs) {
  std::vector<SecurityRecord> s;
  for (int i = 0; i < 4; ++i) {
    s.push_back(Security("s" + std::to_string(i), i, "c", IdScheme::kIsin,
                         "US000000000" + std::to_string(i)));
  }
  EXPECT_TRUE(IdOverlapSecurities(s).empty());
}

TEST(IdOverlapCompaniesTest, LinksThroughSecurities) {
  const std::vector<CompanyRecord> c = {Company("#12", 0), Company("#31", 1), Company("#50", 2)};
  const std::vector<SecurityRecord> s = {
      Security("s1", 0, "#12", IdScheme::kIsin, "US0000000001"),
      Security("s2", 1, "#31", IdScheme::kIsin, "US0000000001")};
  const auto pairs = IdOverlapCompanies(c, s);
  ASSERT_EQ(pairs.size(), 1u);
  EXPECT_EQ(pairs[0].pair, Pair("#12", "#31"));
}

TEST(IdOverlapCompaniesTest, SchemeScoped) {
  const std::vector<CompanyRecord> c = {Company("a", 0), Company("b", 1)};
  const std::vector<SecurityRecord> s = {
      Security("s1", 0, "a", IdScheme::kIsin, "123456789"),
      Security("s2", 1, "b", IdScheme::kCusip, "123456789")};
  EXPECT_TRUE(IdOverlapCompanies(c, s).empty());
}

TEST(IdOverlapCompaniesTest, DanglingIssuerThrows) {
  const std::vector<CompanyRecord> c = {Company("a", 0)};
  const std::vector<SecurityRecord> s = {Security("s1", 0, "zz", IdScheme::kIsin, "X")};
  EXPECT_THROW(IdOverlapCompanies(c, s), ReferentialIntegrityError);
}

// Random securities drawing identifier values from a small pool.
std::vector<SecurityRecord> RandomSecurities(Rng& rng, std::size_t n, std::size_t companies) {
  std::vector<SecurityRecord> out;
  for (std::size_t i = 0; i < n; ++i) {
    SecurityRecord s;
    s.id = RecordId(testing::NodeName(i));
    const std::size_t issuer = rng.Uniform(companies);
    s.source = {static_cast<std::uint32_t>(issuer % 4)};
    s.issuer_id = RecordId("c" + std::to_string(issuer));
    for (std::size_t k = 0; k < kNumIdSchemes; ++k) {
      if (rng.Bernoulli(0.4)) s.identifiers[k] = "v" + std::to_string(rng.Uniform(12));
    }
    out.push_back(s);
  }
  return out;
}

TEST(IdOverlapTest, MatchesDoubleLoopOracle) {
  Rng rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t companies = 2 + rng.Uniform(15);
    const auto secs = RandomSecurities(rng, 1 + rng.Uniform(40), companies);
    std::vector<CompanyRecord> comps;
    for (std::size_t i = 0; i < companies; ++i) {
      comps.push_back(Company("c" + std::to_string(i), static_cast<std::uint32_t>(i % 4)));
    }

    std::set<RecordPair> expected_sec, expected_comp;
    for (std::size_t i = 0; i < secs.size(); ++i) {
      for (std::size_t j = i + 1; j < secs.size(); ++j) {
        if (secs[i].source == secs[j].source) continue;
        if (!SharesIdentifier(secs[i].identifiers, secs[j].identifiers)) continue;
        expected_sec.emplace(secs[i].id, secs[j].id);
        if (secs[i].issuer_id != secs[j].issuer_id) {
          expected_comp.emplace(secs[i].issuer_id, secs[j].issuer_id);
        }
      }
    }
    EXPECT_EQ(PairsOf(IdOverlapSecurities(secs)), expected_sec) << "trial " << trial;
    EXPECT_EQ(PairsOf(IdOverlapCompanies(comps, secs)), expected_comp) << "trial " << trial;
  }
}

TEST(TokenOverlapTest, PicksBestPartner) {
  const std::vector<TextRecord> r = {Text("r1", 0, "crowdstrike holdings"),
                                     Text("r2", 1, "crowdstrike holdings inc"),
                                     Text("r3", 2, "acme")};
  const auto pairs = TokenOverlap(r, 1);
  ASSERT_EQ(pairs.size(), 1u);
  EXPECT_EQ(pairs[0].pair, Pair("r1", "r2"));
  EXPECT_TRUE(pairs[0].provenance.IsExactly(BlockingKind::kTokenOverlap));
}

TEST(TokenOverlapTest, NoSharedTokensNoPairs) {
  const std::vector<TextRecord> r = {Text("a", 0, "alpha"), Text("b", 1, "beta"),
                                     Text("c", 1, "beta")};
  EXPECT_TRUE(TokenOverlap(r, 5).empty());
  EXPECT_THROW(TokenOverlap(r, 0), std::invalid_argument);
}

// O(N^2) reference: score all cross-source pairs and keep each record's
// top-n by (count desc, id asc).
std::set<RecordPair> BruteForceTopN(const std::vector<TextRecord>& records, std::size_t n) {
  std::vector<std::vector<std::string>> tokens;
  for (const auto& r : records) tokens.push_back(TokenSet(r.text));
  std::set<RecordPair> out;
  for (std::size_t i = 0; i < records.size(); ++i) {
    std::vector<std::pair<std::size_t, RecordId>> scored;
    for (std::size_t j = 0; j < records.size(); ++j) {
      if (i == j || records[i].source == records[j].source) continue;
      std::vector<std::string> shared;
      std::set_intersection(tokens[i].begin(), tokens[i].end(), tokens[j].begin(),
                            tokens[j].end(), std::back_inserter(shared));
      if (!shared.empty()) scored.emplace_back(shared.size(), records[j].id);
    }
    std::sort(scored.begin(), scored.end(), [](const auto& a, const auto& b) {
      return a.first != b.first ? a.first > b.first : a.second < b.second;
    });
    for (std::size_t k = 0; k < std::min(n, scored.size()); ++k) {
      out.emplace(records[i].id, scored[k].second);
    }
  }
  return out;
}

std::vector<TextRecord> RandomCorpus(Rng& rng, std::size_t n) {
  static const char* kWords[] = {"alpha", "beta", "gamma", "delta", "omega", "north",
                                 "south", "bank", "energy", "group", "capital", "inc"};
  std::vector<TextRecord> out;
  for (std::size_t i = 0; i < n; ++i) {
    std::string text;
    const std::size_t words = rng.Uniform(5);
    for (std::size_t w = 0; w < words; ++w) text += std::string(kWords[rng.Uniform(12)]) + " ";
    out.push_back(Text(testing::NodeName(i), static_cast<std::uint32_t>(rng.Uniform(5)), text));
  }
  return out;
}

TEST(TokenOverlapTest, MatchesBruteForceRanking) {
  Rng rng(2718);
  for (int trial = 0; trial < 60; ++trial) {
    const auto corpus = RandomCorpus(rng, 2 + rng.Uniform(99));
    const std::size_t n = 1 + rng.Uniform(6);
    const auto fast = TokenOverlap(corpus, n);
    EXPECT_EQ(PairsOf(fast), BruteForceTopN(corpus, n)) << "trial " << trial << " n " << n;
    for (const auto& c : fast) {
      EXPECT_TRUE(c.provenance.IsExactly(BlockingKind::kTokenOverlap));
    }
  }
}

TEST(TokenOverlapTest, ThreadCountDoesNotChangeOutput) {
  Rng rng(5);
  const auto corpus = RandomCorpus(rng, 300);
  EXPECT_EQ(TokenOverlap(corpus, 3, 1), TokenOverlap(corpus, 3, 4));
}

TEST(TokenIndexTest, PostingsSortedById) {
  Rng rng(6);
  auto corpus = RandomCorpus(rng, 80);
  std::reverse(corpus.begin(), corpus.end());
  const auto index = TokenIndex::Build(corpus, 3);
  EXPECT_EQ(index.record_count(), 80u);
  for (std::size_t pos = 1; pos < index.record_count(); ++pos) {
    EXPECT_LT(index.id(pos - 1), index.id(pos));
  }
  for (std::uint32_t t = 0; t < index.token_count(); ++t) {
    const auto& p = index.postings(t);
    EXPECT_TRUE(std::is_sorted(p.begin(), p.end()));
  }
  EXPECT_FALSE(index.Lookup("alpha").empty());
  EXPECT_TRUE(index.Lookup("inc").empty());
  EXPECT_TRUE(index.Lookup("zzz").empty());
}

TEST(CompanyTextTest, JoinsAttributes) {
  CompanyRecord c = Company("a", 0);
  c.name = "Acme";
  c.city = "Zurich";
  c.description = "Makes anvils.";
  const std::vector<CompanyRecord> v = {c};
  const auto text = CompanyText(v);
  ASSERT_EQ(text.size(), 1u);
  EXPECT_EQ(TokenSet(text[0].text), (std::vector<std::string>{"acme", "anvils", "makes", "zurich"}));
}

TEST(IssuerMatchTest, Examples) {
  const std::vector<SecurityRecord> s = {Security("s1", 0, "a", IdScheme::kIsin, "X1"),
                                         Security("s2", 1, "b", IdScheme::kIsin, "X2"),
                                         Security("s3", 2, "c", IdScheme::kIsin, "X3"),
                                         Security("s4", 3, "d", IdScheme::kIsin, "X4"),
                                         Security("s5", 3, "zz", IdScheme::kIsin, "X5")};
  const std::vector<std::vector<RecordId>> groups = {testing::Ids({"a", "b", "c"}),
                                                     testing::Ids({"d"})};
  IssuerMatchStats stats;
  const auto pairs = IssuerMatch(s, groups, &stats);
  EXPECT_EQ(PairsOf(pairs), (std::set<RecordPair>{Pair("s1", "s2"), Pair("s1", "s3"),
                                                  Pair("s2", "s3")}));
  EXPECT_EQ(stats.securities_without_group, 1u);
  for (const auto& c : pairs) EXPECT_TRUE(c.provenance.IsExactly(BlockingKind::kIssuerMatch));
}

TEST(IssuerMatchTest, SameSourceExcludedAndOverlapRejected) {
  const std::vector<SecurityRecord> s = {Security("s1", 0, "a", IdScheme::kIsin, "X1"),
                                         Security("s2", 0, "b", IdScheme::kIsin, "X2")};
  const std::vector<std::vector<RecordId>> groups = {testing::Ids({"a", "b"})};
  EXPECT_TRUE(IssuerMatch(s, groups).empty());
  const std::vector<std::vector<RecordId>> bad = {testing::Ids({"a"}), testing::Ids({"a"})};
  EXPECT_THROW(IssuerMatch(s, bad), PartitionError);
}

TEST(MergeCandidatesTest, UnionsProvenance) {
  const std::vector<std::vector<CandidatePair>> lists = {
      {{Pair("a", "b"), {BlockingKind::kIdOverlap}}},
      {{Pair("b", "a"), {BlockingKind::kTokenOverlap}}, {Pair("c", "d"), {BlockingKind::kTokenOverlap}}}};
  const auto merged = MergeCandidates(lists);
  ASSERT_EQ(merged.size(), 2u);
  EXPECT_EQ(merged[0].provenance,
            (Provenance{BlockingKind::kIdOverlap, BlockingKind::kTokenOverlap}));
  EXPECT_EQ(merged[1].pair, Pair("c", "d"));
}

TEST(MergeCandidatesTest, MatchesSetUnionOracle) {
  Rng rng(44);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<std::vector<CandidatePair>> lists(1 + rng.Uniform(4));
    std::map<RecordPair, Provenance> expected;
    for (std::size_t l = 0; l < lists.size(); ++l) {
      const auto kind = static_cast<BlockingKind>(rng.Uniform(kNumBlockingKinds));
      for (std::size_t k = rng.Uniform(30); k > 0; --k) {
        const auto u = rng.Uniform(10), v = rng.Uniform(10);
        if (u == v) continue;
        const RecordPair p(RecordId(testing::NodeName(u)), RecordId(testing::NodeName(v)));
        lists[l].push_back({p, {kind}});
        expected[p].Add(kind);
      }
    }
    const auto merged = MergeCandidates(lists);
    ASSERT_EQ(merged.size(), expected.size());
    std::size_t i = 0;
    for (const auto& [pair, prov] : expected) {
      EXPECT_EQ(merged[i].pair, pair);
      EXPECT_EQ(merged[i].provenance, prov);
      if (i > 0) {
        EXPECT_LT(merged[i - 1].pair, merged[i].pair);
      }
      ++i;
    }
  }
}

}  // namespace
}  // namespace groupmatch
