#include "groupmatch/datagen.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "groupmatch/blocking.h"
#include "groupmatch/csv.h"
#include "groupmatch/errors.h"
#include "groupmatch/matcher.h"
#include "groupmatch/tokenizer.h"
#include "testing/helpers.h"

namespace groupmatch {
namespace {

using testing::Group;
using testing::Ids;

std::vector<CompanySeed> Seeds(std::initializer_list<const char*> names) {
  std::vector<CompanySeed> out;
  for (const char* n : names) out.push_back({n, "Basel", std::nullopt, "CH", std::nullopt});
  return out;
}

const std::vector<CompanySeed>& FixtureSeeds() {
  static const auto seeds = LoadBaseCorpus(testing::FixtureDir() / "base_corpus_200.csv").seeds;
  return seeds;
}

GenerationParams QuietParams(std::size_t groups, std::uint64_t seed = 1) {
  GenerationParams p;
  p.num_groups = groups;
  p.seed = seed;
  p.SetAllRates(0.0);
  return p;
}

std::string Normalized(const std::string& name) {
  std::string out;
  for (const auto& t : Tokenize(name)) out += t + " ";
  return out;
}

std::map<std::string, const SecurityRecord*> SecuritiesById(const GeneratedDataset& d) {
  std::map<std::string, const SecurityRecord*> out;
  for (const auto& s : d.securities) out[s.id.str()] = &s;
  return out;
}

TEST(LoadBaseCorpusTest, NamesOnly) {
  const auto corpus = LoadBaseCorpus(ParseCsv("name\nAcme\nGlobex\nInitech\n"));
  ASSERT_EQ(corpus.seeds.size(), 3u);
  EXPECT_EQ(corpus.seeds[1].name, "Globex");
  EXPECT_FALSE(corpus.seeds[0].city.has_value());
  EXPECT_EQ(corpus.skipped_rows, 0u);
}

TEST(LoadBaseCorpusTest, EmptyNameSkipped) {
  const auto corpus = LoadBaseCorpus(ParseCsv("name,city\nAcme,Bern\n,Basel\nGlobex,\n"));
  EXPECT_EQ(corpus.seeds.size(), 2u);
  EXPECT_EQ(corpus.skipped_rows, 1u);
  EXPECT_FALSE(corpus.seeds[1].city.has_value());
}

TEST(LoadBaseCorpusTest, Errors) {
  EXPECT_THROW(LoadBaseCorpus(ParseCsv("title\nAcme\n")), ParseError);
  EXPECT_THROW(LoadBaseCorpus(std::filesystem::path("/nonexistent/base.csv")), DataError);
}

TEST(LoadBaseCorpusTest, BundledFixture) { EXPECT_EQ(FixtureSeeds().size(), 200u); }

TEST(ArtifactKindTest, NamesRoundTrip) {
  for (auto k : kAllArtifactKinds) EXPECT_EQ(ParseArtifactKind(ArtifactKindName(k)), k);
  EXPECT_EQ(ArtifactKindName(ArtifactKind::kMultipleIds), "MultipleIDs");
  EXPECT_FALSE(ParseArtifactKind("Rebrand").has_value());
}

TEST(GenerationParamsTest, Validate) {
  GenerationParams p;
  EXPECT_NO_THROW(p.Validate());
  p.set_rate(ArtifactKind::kAcronymName, 1.5);
  EXPECT_THROW(p.Validate(), std::invalid_argument);
  p = GenerationParams{};
  p.num_sources = 1;
  EXPECT_THROW(p.Validate(), std::invalid_argument);
  p = GenerationParams{};
  p.num_groups = 0;
  EXPECT_THROW(p.Validate(), std::invalid_argument);
  p = GenerationParams{};
  p.min_securities = 0;
  EXPECT_THROW(p.Validate(), std::invalid_argument);
  EXPECT_THROW(Generate(Seeds({"Acme"}), QuietParams(2)), std::invalid_argument);
}

TEST(AcronymTest, Examples) {
  EXPECT_EQ(Acronym("Crowd Strike Platforms"), "CSP");
  EXPECT_EQ(Acronym("Hearst"), "");
  EXPECT_EQ(Acronym("bank of  north & south"), "BONS");
}

TEST(ApplyArtifactTest, AcronymReplacesSomeSources) {
  auto params = QuietParams(1);
  params.name_jitter = false;
  GenerationState state(Seeds({"Crowd Strike Platforms"}), params);
  Rng rng(3);
  const auto entry = state.ApplyArtifact(ArtifactKind::kAcronymName, 0, rng);
  EXPECT_TRUE(entry.applied);
  std::size_t swapped = 0;
  for (const auto& c : state.group(0).companies) {
    EXPECT_TRUE(c.name == "CSP" || c.name == "Crowd Strike Platforms") << c.name;
    swapped += c.name == "CSP";
  }
  EXPECT_GE(swapped, 1u);
}

TEST(ApplyArtifactTest, AcronymSingleWordIsNoOp) {
  auto params = QuietParams(1);
  params.name_jitter = false;
  GenerationState state(Seeds({"Hearst"}), params);
  Rng rng(3);
  const auto entry = state.ApplyArtifact(ArtifactKind::kAcronymName, 0, rng);
  EXPECT_FALSE(entry.applied);
  for (const auto& c : state.group(0).companies) EXPECT_EQ(c.name, "Hearst");
}

TEST(ApplyArtifactTest, NoIdOverlapsClearsSharedIdentifiers) {
  auto params = QuietParams(1);
  params.num_sources = 3;
  params.max_securities = 1;
  GenerationState state(Seeds({"Acme Mining"}), params);
  const auto& before = state.group(0).securities;
  ASSERT_EQ(before.size(), 3u);
  EXPECT_TRUE(SharesIdentifier(before[0].identifiers, before[1].identifiers));

  Rng rng(9);
  EXPECT_TRUE(state.ApplyArtifact(ArtifactKind::kNoIdOverlaps, 0, rng).applied);
  const auto& after = state.group(0).securities;
  for (std::size_t i = 0; i < after.size(); ++i) {
    for (std::size_t j = i + 1; j < after.size(); ++j) {
      EXPECT_FALSE(SharesIdentifier(after[i].identifiers, after[j].identifiers));
    }
  }
}

TEST(ApplyArtifactTest, PartnerArtifactsNeedAnotherGroup) {
  GenerationState state(Seeds({"Acme Mining"}), QuietParams(1));
  Rng rng(1);
  EXPECT_FALSE(state.ApplyArtifact(ArtifactKind::kCreateCorporateAcquisition, 0, rng).applied);
  EXPECT_FALSE(state.ApplyArtifact(ArtifactKind::kCreateCorporateMerger, 0, rng).applied);
}

TEST(ApplyArtifactTest, MultipleSecuritiesAddsNewTypes) {
  GenerationState state(Seeds({"Acme Mining"}), QuietParams(1));
  const auto entities = state.group(0).entities.size();
  Rng rng(4);
  EXPECT_TRUE(state.ApplyArtifact(ArtifactKind::kMultipleSecurities, 0, rng).applied);
  EXPECT_GT(state.group(0).entities.size(), entities);
  EXPECT_LE(state.group(0).entities.size(), entities + 3);
  for (const auto& s : state.group(0).securities) {
    if (s.entity >= entities) {
      EXPECT_TRUE(s.type == SecurityType::kRight || s.type == SecurityType::kBond ||
                  s.type == SecurityType::kUnit);
    }
  }
}

TEST(ApplyArtifactTest, MultipleIdsAddsSecondValue) {
  auto params = QuietParams(1);
  params.max_securities = 1;
  GenerationState state(Seeds({"Acme Mining"}), params);
  const auto before = state.group(0).securities;
  Rng rng(5);
  EXPECT_TRUE(state.ApplyArtifact(ArtifactKind::kMultipleIds, 0, rng).applied);
  const auto& after = state.group(0).securities;
  std::size_t changed = 0;
  for (std::size_t i = 0; i < after.size(); ++i) changed += after[i].identifiers != before[i].identifiers;
  EXPECT_GE(changed, 1u);
  EXPECT_LT(changed, after.size());
}

TEST(GenerateTest, ZeroRatesGiveCleanGroups) {
  const auto params = QuietParams(20);
  const auto data = Generate(FixtureSeeds(), params);
  EXPECT_EQ(data.companies.size(), 100u);
  ASSERT_EQ(data.company_truth.groups().size(), 20u);
  std::map<std::string, const CompanyRecord*> by_id;
  for (const auto& c : data.companies) by_id[c.id.str()] = &c;
  for (const auto& g : data.company_truth.groups()) {
    ASSERT_EQ(g.members.size(), 5u);
    std::set<std::uint32_t> sources;
    std::set<std::string> names;
    for (const auto& id : g.members) {
      sources.insert(by_id.at(id.str())->source.value);
      names.insert(Normalized(by_id.at(id.str())->name));
    }
    EXPECT_EQ(sources.size(), 5u);
    EXPECT_EQ(names.size(), 1u);
  }
  const auto secs = SecuritiesById(data);
  for (const auto& g : data.security_truth.groups()) {
    const auto& first = secs.at(g.members.front().str())->identifiers;
    for (const auto& id : g.members) {
      EXPECT_EQ(secs.at(id.str())->identifiers, first);
    }
    for (std::size_t k = 0; k < kNumIdSchemes; ++k) {
      ASSERT_TRUE(first[k].has_value());
      EXPECT_TRUE(IsValidIdentifier(kAllIdSchemes[k], *first[k]));
    }
  }
}

TEST(GenerateTest, ZeroRatesWithoutJitterGiveIdenticalNames) {
  auto params = QuietParams(10);
  params.name_jitter = false;
  const auto data = Generate(FixtureSeeds(), params);
  std::map<std::string, std::string> name_of;
  for (const auto& c : data.companies) name_of[c.id.str()] = c.name;
  for (const auto& g : data.company_truth.groups()) {
    for (const auto& id : g.members) EXPECT_EQ(name_of[id.str()], name_of[g.members[0].str()]);
  }
}

TEST(GenerateTest, ZeroRatesAreFullyMatchableByIdentifiers) {
  const auto data = Generate(FixtureSeeds(), QuietParams(30));
  const auto candidates = IdOverlapCompanies(data.companies, data.securities);
  const RecordTable table(data.companies, data.securities);
  const auto preds = PredictAll(candidates, table, MatcherSpec::ExactId());
  std::set<RecordPair> positives;
  for (const auto& p : preds) {
    if (p.is_match()) positives.insert(p.pair);
  }
  const auto truth = TruePairs(data.company_truth);
  EXPECT_EQ(positives, std::set<RecordPair>(truth.begin(), truth.end()));
}

TEST(GenerateTest, AcquisitionMergesTruth) {
  auto params = QuietParams(2, 42);
  params.set_rate(ArtifactKind::kCreateCorporateAcquisition, 1.0);
  const auto data = Generate(FixtureSeeds(), params);
  EXPECT_EQ(data.company_truth.groups().size(), 1u);
  std::set<std::string> names;
  for (const auto& c : data.companies) names.insert(Normalized(c.name));
  EXPECT_GE(names.size(), 2u);  // both seeds' names survive in the merged group
}

TEST(GenerateTest, MergerKeepsGroupsApart) {
  auto params = QuietParams(2, 42);
  params.set_rate(ArtifactKind::kCreateCorporateMerger, 1.0);
  const auto data = Generate(FixtureSeeds(), params);
  EXPECT_EQ(data.company_truth.groups().size(), 2u);
  // Some identifier value now appears in securities of both company groups.
  std::map<std::string, std::size_t> group_of_company;
  for (std::size_t g = 0; g < 2; ++g) {
    for (const auto& id : data.company_truth.groups()[g].members) group_of_company[id.str()] = g;
  }
  std::map<std::string, std::set<std::size_t>> groups_of_value;
  for (const auto& s : data.securities) {
    for (std::size_t k = 0; k < kNumIdSchemes; ++k) {
      if (s.identifiers[k]) {
        groups_of_value[std::to_string(k) + *s.identifiers[k]].insert(
            group_of_company.at(s.issuer_id.str()));
      }
    }
  }
  EXPECT_TRUE(std::any_of(groups_of_value.begin(), groups_of_value.end(),
                          [](const auto& kv) { return kv.second.size() == 2; }));
}

TEST(GenerateTest, DeterministicAndSeedSensitive) {
  GenerationParams params;
  params.num_groups = 60;
  params.seed = 7;
  const auto a = Generate(FixtureSeeds(), params);
  const auto b = Generate(FixtureSeeds(), params);
  EXPECT_EQ(a.companies, b.companies);
  EXPECT_EQ(a.securities, b.securities);
  EXPECT_EQ(TruePairs(a.company_truth), TruePairs(b.company_truth));
  EXPECT_EQ(TruePairs(a.security_truth), TruePairs(b.security_truth));
  EXPECT_EQ(a.provenance, b.provenance);
  params.seed = 8;
  EXPECT_NE(Generate(FixtureSeeds(), params).companies, a.companies);
}

TEST(GenerateTest, StructuralInvariantsWithAllArtifacts) {
  GenerationParams params;
  params.num_groups = 150;
  params.seed = 11;
  params.SetAllRates(0.5);
  const auto data = Generate(FixtureSeeds(), params);

  std::map<std::string, const CompanyRecord*> company;
  for (const auto& c : data.companies) {
    EXPECT_FALSE(c.name.empty());
    company[c.id.str()] = &c;
  }
  for (const auto& s : data.securities) {
    ASSERT_TRUE(company.contains(s.issuer_id.str())) << s.id.str();
    EXPECT_EQ(company[s.issuer_id.str()]->source, s.source);
    for (std::size_t k = 0; k < kNumIdSchemes; ++k) {
      if (s.identifiers[k]) {
        EXPECT_TRUE(IsValidIdentifier(kAllIdSchemes[k], *s.identifiers[k]));
      }
    }
  }
  EXPECT_EQ(data.company_truth.record_count(), data.companies.size());
  EXPECT_EQ(data.security_truth.record_count(), data.securities.size());
  EXPECT_TRUE(std::is_sorted(data.companies.begin(), data.companies.end(),
                             [](const auto& x, const auto& y) { return x.id < y.id; }));
  ASSERT_EQ(data.provenance.size(), 150u);
  for (const auto& p : data.provenance) {
    for (std::size_t i = 1; i < p.artifacts.size(); ++i) {
      EXPECT_LT(p.artifacts[i - 1].kind, p.artifacts[i].kind);
    }
  }
}

TEST(ParaphraseTest, DiffersButOverlaps) {
  const std::string text =
      "The company provides software for banks, and it offers services to the global market.";
  Rng a(1), b(1);
  const auto x = ParaphraseDescription(text, a);
  EXPECT_EQ(x, ParaphraseDescription(text, b));
  EXPECT_NE(x, text);
  const auto before = TokenSet(text);
  const auto after = TokenSet(x);
  EXPECT_GT(Jaccard(before, after), 0.2);
}

GroundTruth GroupsOfSizes(std::initializer_list<std::size_t> sizes) {
  std::vector<EntityGroup> groups;
  std::size_t next = 0;
  for (std::size_t k : sizes) {
    std::vector<RecordId> members;
    for (std::size_t i = 0; i < k; ++i) members.emplace_back(testing::NodeName(next++));
    groups.push_back(Group("g" + std::to_string(groups.size()), members));
  }
  return GroundTruth(groups);
}

std::map<Split, std::size_t> SplitCounts(const SplitAssignment& a) {
  std::map<Split, std::size_t> out;
  for (const auto& [g, s] : a) ++out[s];
  return out;
}

TEST(SplitGroupsTest, Counts) {
  const auto ten = SplitCounts(SplitGroups(GroupsOfSizes({1, 1, 1, 1, 1, 1, 1, 1, 1, 1}), {}, 3));
  EXPECT_EQ(ten.at(Split::kTrain), 6u);
  EXPECT_EQ(ten.at(Split::kVal), 2u);
  EXPECT_EQ(ten.at(Split::kTest), 2u);
  const auto seven = SplitCounts(SplitGroups(GroupsOfSizes({1, 1, 1, 1, 1, 1, 1}), {}, 3));
  EXPECT_EQ(seven.at(Split::kTrain), 4u);
  EXPECT_EQ(seven.at(Split::kVal), 1u);
  EXPECT_EQ(seven.at(Split::kTest), 2u);
}

TEST(SplitGroupsTest, DeterministicAndValidated) {
  const auto truth = GroupsOfSizes({2, 3, 1, 4, 2, 2, 1, 1});
  EXPECT_EQ(SplitGroups(truth, {}, 5), SplitGroups(truth, {}, 5));
  EXPECT_THROW(SplitGroups(GroundTruth(), {}, 1), std::invalid_argument);
  EXPECT_THROW(SplitGroups(truth, {0.5, 0.2, 0.2}, 1), std::invalid_argument);
  EXPECT_THROW(SplitGroups(truth, {1.2, -0.2, 0.0}, 1), std::invalid_argument);
}

TEST(ExportTrainingPairsTest, FiveToOne) {
  // Four 2-record groups: four true pairs and 24 candidate negatives.
  const auto truth = GroupsOfSizes({2, 2, 2, 2});
  SplitAssignment all;
  for (const auto& g : truth.groups()) all[g.group_id] = Split::kTrain;
  const auto out = ExportTrainingPairs(truth, all, Split::kTrain, 5, 1);
  EXPECT_FALSE(out.warning.has_value());
  std::size_t pos = 0, neg = 0;
  std::set<RecordPair> seen;
  for (const auto& p : out.pairs) {
    EXPECT_TRUE(seen.insert(p.pair).second);
    EXPECT_EQ(p.label == MatchLabel::kMatch, IsTrueMatch(truth, p.pair));
    (p.label == MatchLabel::kMatch ? pos : neg)++;
  }
  EXPECT_EQ(pos, 4u);
  EXPECT_EQ(neg, 20u);
  EXPECT_EQ(out.pairs, ExportTrainingPairs(truth, all, Split::kTrain, 5, 1).pairs);
  EXPECT_EQ(ExportTrainingPairs(truth, all, Split::kTrain, 0, 1).pairs.size(), 4u);
  EXPECT_THROW(ExportTrainingPairs(truth, all, Split::kTrain, -1, 1), std::invalid_argument);
}

TEST(ExportTrainingPairsTest, ShortSplitWarns) {
  const auto truth = GroupsOfSizes({2, 3});
  const SplitAssignment a = {{"g0", Split::kVal}, {"g1", Split::kTrain}};
  const auto out = ExportTrainingPairs(truth, a, Split::kVal, 5, 1);
  ASSERT_EQ(out.pairs.size(), 1u);
  EXPECT_EQ(out.pairs[0].label, MatchLabel::kMatch);
  EXPECT_EQ(out.requested_negatives, 5u);
  EXPECT_TRUE(out.warning.has_value());
}

TEST(ExportTrainingPairsTest, PairsStayInsideSplit) {
  GenerationParams params;
  params.num_groups = 100;
  params.seed = 3;
  const auto data = Generate(FixtureSeeds(), params);
  const auto assignment = SplitGroups(data.company_truth, {}, 3);
  std::map<std::string, Split> split_of_record;
  for (const auto& g : data.company_truth.groups()) {
    for (const auto& id : g.members) split_of_record[id.str()] = assignment.at(g.group_id);
  }
  for (Split s : {Split::kTrain, Split::kVal, Split::kTest}) {
    for (const auto& p : ExportTrainingPairs(data.company_truth, assignment, s, 5, 3).pairs) {
      EXPECT_EQ(split_of_record[p.pair.first().str()], s);
      EXPECT_EQ(split_of_record[p.pair.second().str()], s);
    }
  }
}

TEST(StatisticsTest, CountsRecordsAndMatches) {
  const auto data = Generate(FixtureSeeds(), QuietParams(10));
  const auto stats = CompanyStatistics(data);
  EXPECT_EQ(stats.sources, 5u);
  EXPECT_EQ(stats.entities, 10u);
  EXPECT_EQ(stats.records, 50u);
  EXPECT_EQ(stats.matches, 100u);
  EXPECT_DOUBLE_EQ(stats.matches_per_entity, 10.0);
  EXPECT_EQ(SecurityStatistics(data).records, data.securities.size());
}

}  // namespace
}  // namespace groupmatch
