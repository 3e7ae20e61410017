#include "groupmatch/pipeline.h"

#include <gtest/gtest.h>

#include <exception>
#include <filesystem>
#include <sstream>
#include <stdexcept>

#include "groupmatch/datagen.h"
#include "groupmatch/errors.h"
#include "groupmatch/io.h"
#include "testing/helpers.h"

namespace groupmatch {
namespace {

const GeneratedDataset& Data() {
  static const GeneratedDataset data = [] {
    GenerationParams params;
    params.num_groups = 200;
    params.seed = 21;
    return Generate(LoadBaseCorpus(testing::FixtureDir() / "base_corpus_200.csv").seeds, params);
  }();
  return data;
}

PipelineInputs Inputs() { return {Data().companies, Data().securities, std::nullopt}; }

std::size_t MaxSize(const std::vector<Component>& components) {
  std::size_t m = 0;
  for (const auto& c : components) m = std::max(m, c.size());
  return m;
}

TEST(PresetTest, Values) {
  const auto sc = Preset("synthetic-companies");
  EXPECT_EQ(sc.dataset, DatasetKind::kCompanies);
  EXPECT_EQ(sc.blockings,
            (std::vector<BlockingKind>{BlockingKind::kIdOverlap, BlockingKind::kTokenOverlap}));
  EXPECT_EQ(sc.cleanup.gamma, 25u);
  EXPECT_EQ(sc.cleanup.mu, 5u);
  EXPECT_EQ(sc.cleanup.pre_cleanup_limit, 50u);
  EXPECT_EQ(sc.matcher.kind, MatcherKind::kNameJaccard);

  const auto rs = Preset("real-securities");
  EXPECT_EQ(rs.dataset, DatasetKind::kSecurities);
  EXPECT_EQ(rs.blockings,
            (std::vector<BlockingKind>{BlockingKind::kIdOverlap, BlockingKind::kIssuerMatch}));
  EXPECT_EQ(rs.cleanup.gamma, 40u);
  EXPECT_EQ(rs.cleanup.mu, 8u);

  for (auto name : PresetNames()) EXPECT_NO_THROW(Preset(name).Validate());
  EXPECT_THROW(Preset("toy"), std::invalid_argument);
}

TEST(PipelineConfigTest, Validate) {
  auto c = Preset("synthetic-companies");
  c.blockings.push_back(BlockingKind::kIssuerMatch);
  EXPECT_THROW(c.Validate(), std::invalid_argument);
  c = Preset("synthetic-companies");
  c.token_top_n = 0;
  EXPECT_THROW(c.Validate(), std::invalid_argument);
  c = Preset("synthetic-companies");
  c.blockings.clear();
  EXPECT_THROW(c.Validate(), std::invalid_argument);
  EXPECT_EQ(ParseDatasetKind(DatasetKindName(DatasetKind::kSecurities)), DatasetKind::kSecurities);
}

TEST(RunPipelineTest, CompaniesStagesAreConsistent) {
  const auto config = Preset("synthetic-companies");
  const auto result = RunPipeline(config, Inputs(), &Data().company_truth);
  ASSERT_EQ(result.scores.size(), 3u);
  const auto& pairwise = result.scores[0];
  const auto& pre = result.scores[1];
  const auto& post = result.scores[2];
  EXPECT_EQ(pairwise.stage, Stage::kPairwise);
  EXPECT_GE(pre.recall, pairwise.recall);
  EXPECT_LE(*post.max_component_size, config.cleanup.mu);
  EXPECT_LE(MaxSize(result.cleanup.components), config.cleanup.mu);
  EXPECT_GT(pairwise.recall, 0.3);
  EXPECT_GT(post.precision, 0.9);

  // Post-cleanup scores equal an offline evaluation of the written groups.
  const auto groups = NamePredictedGroups(ComponentMembers(result.cleanup.components),
                                          GroupKind::kCompany);
  std::ostringstream out;
  WriteGroups(out, groups);
  const auto reread = ReadGroups(ParseCsv(out.str()), GroupKind::kCompany);
  std::vector<std::vector<RecordId>> members;
  for (const auto& g : reread) members.push_back(g.members);
  EXPECT_EQ(GroupScores(members, Data().company_truth, Stage::kPostCleanup), post);
  EXPECT_EQ(result.cleanup.raw_graph.node_count(), Data().companies.size());
}

TEST(RunPipelineTest, ThreadCountDoesNotChangeResults) {
  auto config = Preset("synthetic-companies");
  const auto one = RunPipeline(config, Inputs(), &Data().company_truth);
  config.threads = 4;
  const auto four = RunPipeline(config, Inputs(), &Data().company_truth);
  EXPECT_EQ(one.candidates, four.candidates);
  EXPECT_EQ(one.predictions, four.predictions);
  EXPECT_EQ(one.cleanup.components, four.cleanup.components);
  EXPECT_EQ(one.scores, four.scores);
}

TEST(RunPipelineTest, CompaniesWithoutSecuritiesWarn) {
  const PipelineInputs inputs{Data().companies, {}, std::nullopt};
  const auto result = RunPipeline(Preset("synthetic-companies"), inputs, &Data().company_truth);
  ASSERT_FALSE(result.warnings.empty());
  EXPECT_NE(result.warnings[0].find("IdOverlap skipped"), std::string::npos);
  for (const auto& c : result.candidates) {
    EXPECT_TRUE(c.provenance.IsExactly(BlockingKind::kTokenOverlap));
  }
}

TEST(RunPipelineTest, SecuritiesNeedCompanyGroups) {
  const auto config = Preset("synthetic-securities");
  EXPECT_THROW(RunPipeline(config, Inputs()), std::invalid_argument);

  PipelineInputs inputs = Inputs();
  inputs.company_groups = ComponentMembers(
      RunPipeline(Preset("synthetic-companies"), Inputs()).cleanup.components);
  const auto result = RunPipeline(config, inputs, &Data().security_truth);
  ASSERT_EQ(result.scores.size(), 3u);
  EXPECT_GE(result.scores[1].recall, result.scores[0].recall);
  EXPECT_LE(*result.scores[2].max_component_size, config.cleanup.mu);
  bool issuer = false;
  for (const auto& c : result.candidates) issuer |= c.provenance.Contains(BlockingKind::kIssuerMatch);
  EXPECT_TRUE(issuer);
}

TEST(RunPipelineTest, ExternalPredictionsReproduceBuiltIn) {
  const auto config = Preset("synthetic-companies");
  const auto builtin = RunPipeline(config, Inputs(), &Data().company_truth);
  const auto path = std::filesystem::temp_directory_path() / "groupmatch_pipeline_preds.csv";
  WriteFile(path, [&](std::ostream& out) { WritePredictions(out, builtin.predictions); });

  auto external = config;
  external.matcher = MatcherSpec::External(path);
  const auto imported = RunPipeline(external, Inputs(), &Data().company_truth);
  EXPECT_EQ(imported.scores, builtin.scores);
  EXPECT_TRUE(imported.warnings.empty());
  std::filesystem::remove(path);
}

TEST(RunPipelineTest, DataErrorsNameTheStage) {
  const auto path = std::filesystem::temp_directory_path() / "groupmatch_bad_preds.csv";
  WriteFile(path, [](std::ostream& out) { out << "id_a,id_b,score\na,b,not-a-number\n"; });
  auto config = Preset("synthetic-companies");
  config.matcher = MatcherSpec::External(path);
  try {
    RunPipeline(config, Inputs());
    FAIL() << "expected StageError";
  } catch (const StageError& e) {
    EXPECT_EQ(e.stage(), "matching");
    try {
      std::rethrow_if_nested(e);
      FAIL() << "expected a nested error";
    } catch (const ParseError& inner) {
      EXPECT_EQ(inner.line(), 2u);
    }
  }
  std::filesystem::remove(path);
}

TEST(RunPipelineTest, WithoutTruthNoScores) {
  EXPECT_TRUE(RunPipeline(Preset("synthetic-companies"), Inputs()).scores.empty());
}

}  // namespace
}  // namespace groupmatch
