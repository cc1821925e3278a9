#pragma once

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "rcm/graph.hpp"
#include "rcm/serialize.hpp"

namespace rcm {

// Bounded draws are done here rather than with std distributions, whose
// output differs between standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t below(std::uint64_t bound);             // uniform in [0, bound)
  std::size_t between(std::size_t lo, std::size_t hi);  // uniform in [lo, hi]
  double unit();                                        // [0, 1), 53 bits
  bool chance(double p) { return unit() < p; }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

/// Independent per-instance seed (splitmix64 of seed and index).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

/// Exact test of vertex connectivity >= c: every non-adjacent pair has c
/// internally disjoint paths, and |V| > c.
bool is_k_connected(const Graph& g, std::size_t c);

/// Random G(n, p) with p drawn above c/(n-1), degree deficits patched with
/// random edges, kept only if is_k_connected holds. Throws ResourceError
/// after max_attempts rejections and DomainError when c >= n.
Graph sample_connected_graph(std::size_t n, std::size_t c, Rng& rng, std::size_t max_attempts = 1000);

/// Worker count from RCM_WORKERS, default 1.
std::size_t workers_from_env();

/// fn(i) for i in [0, count) on up to `workers` threads; results in index order.
template <class Fn>
auto parallel_map(std::size_t count, std::size_t workers, Fn fn)
    -> std::vector<decltype(fn(std::size_t{}))> {
  std::vector<decltype(fn(std::size_t{}))> out(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        out[i] = fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  workers = std::max<std::size_t>(1, std::min(workers, count));
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

struct TheoremConfig {
  std::size_t connectivity = 10;
  std::size_t n_min = 12;
  std::size_t n_max = 16;
  std::size_t graphs = 50;
  std::optional<std::size_t> subsets = 3;  // nullopt: every k-subset
  std::size_t k = 5;
  std::uint64_t seed = 0;
  std::size_t workers = 1;
  std::string archive_dir;  // falsifiers written here when non-empty
};

struct TheoremReport {
  std::vector<Json> records;  // one per graph, then a summary
  std::size_t checks = 0;
  std::size_t falsifiers = 0;
};

/// Samples graphs of the requested connectivity and checks every canonical
/// cyclic order of the sampled root sets with the exact engine. Records carry
/// no timing so equal configs give byte-identical output.
TheoremReport verify_theorem(const TheoremConfig& config);

}  // namespace rcm
