#ifndef NTP_NONF_GRAPH_HPP
#define NTP_NONF_GRAPH_HPP

// The non-two-primes graph and its relatives: x ~ y iff x != y and
// |<x, y>| has at least k distinct prime divisors (k = 3 by default).
// Vertices with no neighbours are isolated; the graph proper is the
// subgraph induced on the remaining vertices.

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ntp/element_table.hpp"
#include "ntp/group.hpp"
#include "ntp/number_theory.hpp"
#include "ntp/parallel.hpp"

namespace ntp {

inline constexpr unsigned default_prime_threshold = 3;

/// Square bit matrix, one 64-bit-word-aligned row per vertex.
class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {}

  std::size_t size() const noexcept { return n_; }
  std::size_t words_per_row() const noexcept { return words_; }

  bool test(std::size_t i, std::size_t j) const noexcept {
    return (bits_[i * words_ + j / 64] >> (j % 64)) & 1U;
  }
  void set(std::size_t i, std::size_t j) noexcept { bits_[i * words_ + j / 64] |= 1ULL << (j % 64); }

  const std::uint64_t* row(std::size_t i) const noexcept { return bits_.data() + i * words_; }
  std::uint64_t* row(std::size_t i) noexcept { return bits_.data() + i * words_; }

  std::size_t row_count(std::size_t i) const noexcept {
    std::size_t c = 0;
    for (std::size_t w = 0; w < words_; ++w) c += static_cast<std::size_t>(std::popcount(row(i)[w]));
    return c;
  }

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Calls fn(j) for each set bit j of a row of `words` words.
template <typename Fn>
void for_each_bit(const std::uint64_t* row, std::size_t words, Fn&& fn) {
  for (std::size_t w = 0; w < words; ++w) {
    std::uint64_t bits = row[w];
    while (bits) {
      fn(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
}

/// Decides adjacency of elements i and j. Cheap tests come first: identical
/// indices, too few primes in |G|, then the union of the element prime sets
/// (both element orders divide |<x,y>|). Only the remaining pairs build a
/// stabilizer chain; `chain_builds` counts those.
inline bool adjacent(const ElementTable& table, index_t i, index_t j,
                     unsigned k = default_prime_threshold,
                     std::atomic<std::uint64_t>* chain_builds = nullptr) {
  if (i == j) return false;
  if (table.group_primes.size() < k) return false;
  if (static_cast<unsigned>(std::popcount(table.prime_mask_of[i] | table.prime_mask_of[j])) >= k) {
    return true;
  }
  if (chain_builds) ++*chain_builds;
  return prime_count(two_generated_order(table.elements[i], table.elements[j])) >= k;
}

enum class BuildMode { naive, symmetry_reduced };

struct NonFGraph {
  const ElementTable* table = nullptr;
  unsigned k = default_prime_threshold;
  BitMatrix adjacency;
  std::vector<std::uint64_t> isolated_mask;  // bit set = isolated
  std::vector<std::uint64_t> vertex_mask;    // complement of isolated_mask within [0, |G|)
  std::vector<index_t> vertices;             // sorted non-isolated indices
  std::uint64_t chain_builds = 0;

  std::size_t size() const noexcept { return adjacency.size(); }
  bool is_isolated(index_t i) const noexcept { return (isolated_mask[i / 64] >> (i % 64)) & 1U; }
  bool has_edge(index_t i, index_t j) const noexcept { return adjacency.test(i, j); }
  bool empty() const noexcept { return vertices.empty(); }
};

class IsolatedVertex : public std::invalid_argument {
 public:
  explicit IsolatedVertex(index_t v)
      : std::invalid_argument("vertex " + std::to_string(v) + " is isolated"), vertex_(v) {}
  index_t vertex() const noexcept { return vertex_; }

 private:
  index_t vertex_;
};

namespace detail {

inline void finish_graph(NonFGraph& g) {
  const std::size_t n = g.adjacency.size();
  const std::size_t words = g.adjacency.words_per_row();
  g.isolated_mask.assign(words, 0);
  g.vertex_mask.assign(words, 0);
  g.vertices.clear();
  for (index_t i = 0; i < n; ++i) {
    const std::uint64_t* r = g.adjacency.row(i);
    bool any = std::any_of(r, r + words, [](std::uint64_t w) { return w != 0; });
    if (any) {
      g.vertex_mask[i / 64] |= 1ULL << (i % 64);
      g.vertices.push_back(i);
    } else {
      g.isolated_mask[i / 64] |= 1ULL << (i % 64);
    }
  }
}

}  // namespace detail

/// Builds the graph over all elements of `table`.
///
/// symmetry_reduced computes only the rows of conjugacy class representatives
/// and fills every other row through the conjugator stored in the table: if
/// x = r^h then y ~ r iff y^h ~ x. Representative rows may be computed on up
/// to `jobs` threads.
inline NonFGraph build_graph(const ElementTable& table, unsigned k = default_prime_threshold,
                             BuildMode mode = BuildMode::symmetry_reduced, std::size_t jobs = 1) {
  NonFGraph g;
  g.table = &table;
  g.k = k;
  const std::size_t n = table.size();
  g.adjacency = BitMatrix(n);
  std::atomic<std::uint64_t> builds{0};

  if (mode == BuildMode::naive) {
    for (index_t i = 0; i < n; ++i) {
      for (index_t j = i + 1; j < n; ++j) {
        if (adjacent(table, i, j, k, &builds)) {
          g.adjacency.set(i, j);
          g.adjacency.set(j, i);
        }
      }
    }
  } else {
    // Each representative writes only its own row.
    parallel_for(table.class_count(), jobs, [&](std::size_t c) {
      const index_t r = table.class_rep[c];
      for (index_t j = 0; j < n; ++j) {
        if (adjacent(table, r, j, k, &builds)) g.adjacency.set(r, j);
      }
    });
    const std::size_t words = g.adjacency.words_per_row();
    for (index_t x = 0; x < n; ++x) {
      const index_t r = table.class_rep[table.class_of[x]];
      if (r == x) continue;
      const Permutation& h = table.conjugator[x];
      const Permutation h_inv = inverse(h);
      Permutation tmp(table.degree), conj(table.degree);
      for_each_bit(g.adjacency.row(r), words, [&](std::size_t y) {
        compose_into(h_inv, table.elements[y], tmp);
        compose_into(tmp, h, conj);
        g.adjacency.set(x, table.at(conj));
      });
    }
  }
  g.chain_builds = builds.load();
  detail::finish_graph(g);
  return g;
}

inline std::vector<index_t> isolated_vertices(const NonFGraph& g) {
  std::vector<index_t> out;
  for (index_t i = 0; i < g.size(); ++i) {
    if (g.is_isolated(i)) out.push_back(i);
  }
  return out;
}

struct DistanceReport {
  index_t source = 0;
  /// Hop count per element index; -1 for unreachable or isolated elements.
  std::vector<int> distances;
  unsigned eccentricity = 0;
  bool reaches_all = false;

  std::optional<unsigned> distance_to(index_t v) const {
    if (distances[v] < 0) return std::nullopt;
    return static_cast<unsigned>(distances[v]);
  }
};

/// Breadth-first search by whole-frontier bitset expansion.
/// Throws IsolatedVertex when the source has no neighbours.
inline DistanceReport bfs(const NonFGraph& g, index_t source) {
  if (source >= g.size()) throw std::out_of_range("bfs: source index out of range");
  if (g.is_isolated(source)) throw IsolatedVertex(source);
  const std::size_t n = g.size();
  const std::size_t words = g.adjacency.words_per_row();

  DistanceReport rep;
  rep.source = source;
  rep.distances.assign(n, -1);
  rep.distances[source] = 0;

  std::vector<std::uint64_t> visited(words, 0), frontier(words, 0), next(words, 0);
  visited[source / 64] |= 1ULL << (source % 64);
  frontier = visited;
  int level = 0;
  while (true) {
    std::fill(next.begin(), next.end(), 0);
    for_each_bit(frontier.data(), words, [&](std::size_t u) {
      const std::uint64_t* r = g.adjacency.row(u);
      for (std::size_t w = 0; w < words; ++w) next[w] |= r[w];
    });
    bool grew = false;
    for (std::size_t w = 0; w < words; ++w) {
      next[w] &= ~visited[w];
      visited[w] |= next[w];
      grew |= next[w] != 0;
    }
    if (!grew) break;
    ++level;
    for_each_bit(next.data(), words, [&](std::size_t v) { rep.distances[v] = level; });
    std::swap(frontier, next);
  }
  rep.eccentricity = static_cast<unsigned>(level);
  rep.reaches_all = visited == g.vertex_mask;
  return rep;
}

/// Hop count between two vertices, or nullopt when they lie in different components.
inline std::optional<unsigned> distance(const NonFGraph& g, index_t i, index_t j) {
  if (g.is_isolated(j)) throw IsolatedVertex(j);
  return bfs(g, i).distance_to(j);
}

enum class GraphStatus { empty, disconnected, connected };

inline const char* to_string(GraphStatus s) {
  switch (s) {
    case GraphStatus::empty:
      return "empty";
    case GraphStatus::disconnected:
      return "disconnected";
    case GraphStatus::connected:
      return "connected";
  }
  return "?";
}

struct DiameterResult {
  GraphStatus status = GraphStatus::empty;
  unsigned value = 0;  // meaningful only when connected
  /// For a disconnected graph: a BFS source and a vertex it cannot reach.
  std::optional<std::pair<index_t, index_t>> witness;
};

struct DiameterOptions {
  /// BFS from every vertex instead of one per conjugacy class.
  bool per_vertex = false;
  std::size_t jobs = 1;
};

/// Eccentricity of every vertex (-1 for isolated elements). In the default
/// mode only class representatives are searched and the value is copied to
/// the rest of the class, since conjugation is a graph automorphism.
inline std::vector<int> eccentricities(const NonFGraph& g, DiameterOptions opts = {}) {
  const ElementTable& t = *g.table;
  std::vector<int> ecc(g.size(), -1);
  std::vector<index_t> sources;
  if (opts.per_vertex) {
    sources = g.vertices;
  } else {
    for (index_t r : t.class_rep) {
      if (!g.is_isolated(r)) sources.push_back(r);
    }
  }
  std::vector<int> found(sources.size(), -1);
  parallel_for(sources.size(), opts.jobs, [&](std::size_t s) {
    DistanceReport rep = bfs(g, sources[s]);
    found[s] = rep.reaches_all ? static_cast<int>(rep.eccentricity) : -2;
  });
  for (std::size_t s = 0; s < sources.size(); ++s) ecc[sources[s]] = found[s];
  if (!opts.per_vertex) {
    for (index_t v : g.vertices) ecc[v] = ecc[t.class_rep[t.class_of[v]]];
  }
  return ecc;
}

inline DiameterResult diameter(const NonFGraph& g, DiameterOptions opts = {}) {
  DiameterResult res;
  if (g.empty()) return res;
  const ElementTable& t = *g.table;
  std::vector<index_t> sources;
  if (opts.per_vertex) {
    sources = g.vertices;
  } else {
    for (index_t r : t.class_rep) {
      if (!g.is_isolated(r)) sources.push_back(r);
    }
  }
  std::vector<DistanceReport> reports(sources.size());
  parallel_for(sources.size(), opts.jobs,
               [&](std::size_t s) { reports[s] = bfs(g, sources[s]); });
  res.status = GraphStatus::connected;
  for (const auto& rep : reports) {
    if (!rep.reaches_all) {
      res.status = GraphStatus::disconnected;
      for (index_t v : g.vertices) {
        if (rep.distances[v] < 0) {
          res.witness = std::pair{rep.source, v};
          break;
        }
      }
      return res;
    }
    res.value = std::max(res.value, rep.eccentricity);
  }
  return res;
}

/// Element order -> number of neighbours of v with that order.
inline std::map<std::uint64_t, std::size_t> neighbor_order_profile(const NonFGraph& g, index_t v) {
  std::map<std::uint64_t, std::size_t> profile;
  for_each_bit(g.adjacency.row(v), g.adjacency.words_per_row(),
               [&](std::size_t u) { ++profile[g.table->order_of[u]]; });
  return profile;
}

}  // namespace ntp

#endif  // NTP_NONF_GRAPH_HPP
