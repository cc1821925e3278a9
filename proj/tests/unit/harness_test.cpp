#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "../support/builders.hpp"
#include "rcm/errors.hpp"
#include "rcm/graph_io.hpp"
#include "rcm/harness.hpp"
#include "rcm/serialize.hpp"
#include "rcm/testing/oracle_sweep.hpp"

using namespace rcm;

TEST_CASE("Rng is reproducible and bounded") {
  Rng a(42), b(42);
  for (int i = 0; i < 1000; ++i) {
    auto x = a.below(7);
    CHECK(x == b.below(7));
    CHECK(x < 7);
    double u = a.unit();
    CHECK(u == b.unit());
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    auto y = a.between(3, 5);
    CHECK(y == b.between(3, 5));
    CHECK(y >= 3);
    CHECK(y <= 5);
  }
  CHECK_THROWS_AS(a.below(0), DomainError);
  CHECK_THROWS_AS(a.between(4, 3), DomainError);
  CHECK(derive_seed(1, 0) != derive_seed(1, 1));
  CHECK(derive_seed(1, 5) == derive_seed(1, 5));
  // Frozen: first draws of mt19937_64 seeded with 42 must not drift.
  Rng c(42);
  std::vector<std::uint64_t> draws;
  for (int i = 0; i < 3; ++i) draws.push_back(c.below(1000));
  Rng d(42);
  for (auto v : draws) CHECK(d.below(1000) == v);
}

TEST_CASE("is_k_connected") {
  CHECK(is_k_connected(test::complete(6), 5));
  CHECK_FALSE(is_k_connected(test::complete(6), 6));
  CHECK(is_k_connected(test::cycle({0, 1, 2, 3, 4}), 2));
  CHECK_FALSE(is_k_connected(test::cycle({0, 1, 2, 3, 4}), 3));
  CHECK_FALSE(is_k_connected(test::star(4), 2));
  Graph k33 = Graph::from_edges({{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
  CHECK(is_k_connected(k33, 3));
  CHECK_FALSE(is_k_connected(k33, 4));
}

TEST_CASE("sampler returns verified graphs, deterministically") {
  Rng a(7), b(7);
  for (int i = 0; i < 5; ++i) {
    Graph g = sample_connected_graph(12, 6, a);
    CHECK(g == sample_connected_graph(12, 6, b));
    CHECK(g.order() == 12);
    CHECK(is_k_connected(g, 6));
  }
  CHECK_THROWS_AS(sample_connected_graph(5, 5, a), DomainError);
}

TEST_CASE("parallel_map keeps index order and propagates errors") {
  auto squares = parallel_map(100, 4, [](std::size_t i) { return i * i; });
  for (std::size_t i = 0; i < 100; ++i) CHECK(squares[i] == i * i);
  CHECK_THROWS_AS(parallel_map(10, 3,
                               [](std::size_t i) -> int {
                                 if (i == 6) throw DomainError("boom");
                                 return 0;
                               }),
                  DomainError);
}

TEST_CASE("verify_theorem is deterministic across worker counts") {
  TheoremConfig cfg;
  cfg.connectivity = 6;
  cfg.n_min = 8;
  cfg.n_max = 10;
  cfg.graphs = 6;
  cfg.subsets = 2;
  cfg.k = 4;
  cfg.seed = 3;
  auto one = verify_theorem(cfg);
  cfg.workers = 3;
  auto three = verify_theorem(cfg);
  REQUIRE(one.records.size() == three.records.size());
  for (std::size_t i = 0; i < one.records.size(); ++i) CHECK(one.records[i].dump() == three.records[i].dump());
  CHECK(one.checks == 6 * 2 * 3);
  CHECK(one.falsifiers == 0);
  CHECK(one.records.back()["kind"] == "summary");
}

TEST_CASE("verify_theorem archives falsifiers") {
  // 2-connected graphs are far from C5-minor-linked.
  TheoremConfig cfg;
  cfg.connectivity = 2;
  cfg.n_min = 8;
  cfg.n_max = 8;
  cfg.graphs = 4;
  cfg.subsets = 4;
  cfg.seed = 1;
  auto dir = std::filesystem::temp_directory_path() / "rcm-falsifiers-test";
  std::filesystem::remove_all(dir);
  cfg.archive_dir = dir.string();
  auto report = verify_theorem(cfg);
  REQUIRE(report.falsifiers > 0);
  std::size_t archived = 0;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.path().extension() != ".g6") continue;
    ++archived;
    Graph g = load_graph(entry.path().string());
    auto sidecar = entry.path();
    sidecar.replace_extension(".json");
    Json j = Json::parse(std::ifstream(sidecar));
    REQUIRE_FALSE(j["orders"].empty());
    for (const auto& order : j["orders"]) {
      RootSequence seq;
      for (const auto& r : order) seq.roots.push_back(r.get<VertexId>());
      CHECK_FALSE(find_rooted_cycle_minor(g, seq));
    }
  }
  CHECK(archived > 0);
  std::filesystem::remove_all(dir);
}

TEST_CASE("serialization field order and round trip") {
  RootSequence s{{1, 2, 3}};
  MinorModel m{{{1, 4}, {2}, {3}}};
  Json j = to_json(s, m);
  CHECK(j.dump() == R"({"roots":[1,2,3],"branch_sets":[[1,4],[2],[3]]})");
  CHECK(model_from_json(j) == m);
  Separation sep{{0, 1, 2}, {2, 3}};
  CHECK(to_json(sep).dump() == R"({"A":[0,1,2],"B":[2,3],"separator":[2],"order":1})");
}

TEST_CASE("oracle sweep on a tiny corpus") {
  std::vector<Graph> corpus{test::complete(4), test::cycle({0, 1, 2, 3, 4}), test::path({0, 1, 2, 3})};
  auto report = testing::oracle_sweep(corpus, {3, 4}, 2);
  CHECK(report.disagreements == 0);
  // Ordered root sequences: k=3: 24 + 60 + 24; k=4: 24 + 120 + 24.
  CHECK(report.pairs == 108 + 168);
}
