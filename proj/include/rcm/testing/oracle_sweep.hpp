#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "rcm/graph.hpp"
#include "rcm/serialize.hpp"

namespace rcm::testing {

/// Every graph in the *.g6 files of `dir`, files in name order.
std::vector<Graph> load_corpus(const std::string& dir);

struct SweepReport {
  std::vector<Json> records;  // one per k
  std::size_t pairs = 0;
  std::size_t disagreements = 0;
};

/// For each k and each graph with at least k vertices, runs every ordered
/// root sequence through both the engine and the naive oracle and counts
/// disagreements. Engine models must also pass the independent checker.
SweepReport oracle_sweep(const std::vector<Graph>& corpus, const std::vector<std::size_t>& ks,
                         std::size_t workers = 1);

}  // namespace rcm::testing
