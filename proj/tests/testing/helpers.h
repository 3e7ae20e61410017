#ifndef GROUPMATCH_TESTS_TESTING_HELPERS_H_
#define GROUPMATCH_TESTS_TESTING_HELPERS_H_

#include <filesystem>
#include <string>
#include <vector>

#include "groupmatch/blocking.h"
#include "groupmatch/graph.h"
#include "groupmatch/metrics.h"
#include "groupmatch/model.h"
#include "testing/oracles.h"

namespace groupmatch::testing {

inline std::filesystem::path DataDir() { return GROUPMATCH_TEST_DATA_DIR; }
inline std::filesystem::path FixtureDir() { return GROUPMATCH_TEST_FIXTURE_DIR; }

inline RecordId Id(const std::string& s) { return RecordId(s); }
inline RecordPair Pair(const std::string& a, const std::string& b) {
  return RecordPair(RecordId(a), RecordId(b));
}

inline std::vector<RecordId> Ids(std::initializer_list<const char*> names) {
  std::vector<RecordId> out;
  for (const char* n : names) out.emplace_back(n);
  return out;
}

inline std::vector<RecordId> NodeIds(std::size_t n) {
  std::vector<RecordId> out;
  for (std::size_t i = 0; i < n; ++i) out.emplace_back(NodeName(i));
  return out;
}

// Match graph over n00..n{n-1} with the given index edges.
inline MatchGraph GraphFromEdges(std::size_t n, const std::vector<Edge>& edges,
                                 Provenance provenance = {BlockingKind::kIdOverlap}) {
  MatchGraph g(NodeIds(n));
  for (auto [u, v] : edges) {
    g.AddEdge(RecordPair(RecordId(NodeName(u)), RecordId(NodeName(v))), {1.0, provenance});
  }
  return g;
}

inline EntityGroup Group(const std::string& id, std::vector<RecordId> members) {
  return {id, std::move(members), GroupKind::kCompany};
}

}  // namespace groupmatch::testing

#endif  // GROUPMATCH_TESTS_TESTING_HELPERS_H_
