#ifndef NTP_ANALYSIS_HPP
#define NTP_ANALYSIS_HPP

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ntp/element_table.hpp"
#include "ntp/group.hpp"
#include "ntp/nonf_graph.hpp"
#include "ntp/number_theory.hpp"

namespace ntp {

// ---- element sets ----

/// Elements whose order has at least two prime divisors.
inline std::vector<index_t> sigma_set(const ElementTable& t) {
  std::vector<index_t> out;
  for (index_t i = 0; i < t.size(); ++i) {
    if (t.primes_of[i].size() >= 2) out.push_back(i);
  }
  return out;
}

/// Non-isolated elements whose order is divisible by the squarefree `n` and
/// has no prime divisor outside those of n. Defined for the k = 3 graph only.
inline std::vector<index_t> omega_set(const NonFGraph& g, std::uint64_t n) {
  if (!is_squarefree(n)) throw std::invalid_argument("omega_set: " + std::to_string(n) + " is not squarefree");
  if (g.k != 3) throw std::invalid_argument("omega_set: only defined for prime threshold 3");
  const auto support = prime_factors(n);
  std::vector<index_t> out;
  for (index_t v : g.vertices) {
    const auto o = g.table->order_of[v];
    if (o % n != 0) continue;
    const auto& ps = g.table->primes_of[v];
    if (std::includes(support.begin(), support.end(), ps.begin(), ps.end())) out.push_back(v);
  }
  return out;
}

// ---- prime graph ----

struct PrimeGraph {
  std::vector<std::uint64_t> vertices;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> edges;  // p < q, sorted
  std::vector<std::vector<std::uint64_t>> components;          // each sorted; ordered by least prime

  bool has_edge(std::uint64_t p, std::uint64_t q) const {
    if (p > q) std::swap(p, q);
    return std::binary_search(edges.begin(), edges.end(), std::pair{p, q});
  }
};

/// Edge {p,q} iff some element has order exactly pq.
inline PrimeGraph prime_graph(const ElementTable& t) {
  PrimeGraph pg;
  pg.vertices = t.group_primes;
  const std::size_t n = pg.vertices.size();
  for (std::uint64_t o : t.order_of) {
    auto ps = prime_factors(o);
    if (ps.size() == 2 && ps[0] * ps[1] == o) pg.edges.emplace_back(ps[0], ps[1]);
  }
  std::sort(pg.edges.begin(), pg.edges.end());
  pg.edges.erase(std::unique(pg.edges.begin(), pg.edges.end()), pg.edges.end());

  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto pos = [&](std::uint64_t p) {
    return static_cast<std::size_t>(std::lower_bound(pg.vertices.begin(), pg.vertices.end(), p) -
                                    pg.vertices.begin());
  };
  for (auto [p, q] : pg.edges) {
    std::size_t a = find(pos(p)), b = find(pos(q));
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::vector<std::uint64_t>> by_root(n);
  for (std::size_t i = 0; i < n; ++i) by_root[find(i)].push_back(pg.vertices[i]);
  for (auto& c : by_root) {
    if (!c.empty()) pg.components.push_back(std::move(c));
  }
  return pg;
}

struct PathLabel {
  std::uint64_t p;  // endpoint
  std::uint64_t r;  // centre
  std::uint64_t q;  // endpoint
};

/// A three-vertex path p - r - q (two edges); endpoints returned with p < q.
/// The "length three" wording this is checked against counts vertices: the
/// only edges allowed are {p,r} and {r,q}.
inline std::optional<PathLabel> is_path_on_three(const PrimeGraph& pg) {
  if (pg.vertices.size() != 3 || pg.edges.size() != 2) return std::nullopt;
  for (std::uint64_t r : pg.vertices) {
    std::vector<std::uint64_t> ends;
    for (std::uint64_t v : pg.vertices) {
      if (v != r && pg.has_edge(v, r)) ends.push_back(v);
    }
    if (ends.size() == 2) return PathLabel{ends[0], r, ends[1]};
  }
  return std::nullopt;
}

// ---- lemma outcomes ----

enum class Outcome { pass, fail, not_applicable };

inline const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::pass:
      return "pass";
    case Outcome::fail:
      return "fail";
    case Outcome::not_applicable:
      return "not_applicable";
  }
  return "?";
}

struct LemmaOutcome {
  std::string name;
  Outcome outcome = Outcome::not_applicable;
  /// Elements involved: the counterexample on failure, the found certificate on a pass.
  std::vector<index_t> witness;
  std::string detail;
  /// Cycle notation of the witness elements, filled in by verify_theorem.
  std::vector<std::string> witness_elements;
};

class LemmaPrecondition : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

inline bool index_set_is_normal_subgroup(const PermutationGroup& g, const ElementTable& t,
                                         std::span<const index_t> subset) {
  std::vector<bool> in(t.size(), false);
  for (index_t i : subset) in[i] = true;
  if (subset.empty() || !in[0]) return false;
  for (index_t a : subset) {
    for (index_t b : subset) {
      if (!in[t.multiply(a, b)]) return false;
    }
    for (const auto& s : g.generators()) {
      if (!in[t.at(conjugate(t.elements[a], s))]) return false;
    }
  }
  return true;
}

inline std::uint64_t prime_of_p_subgroup(std::span<const index_t> subset) {
  std::uint64_t p = 0;
  if (!is_prime_power(subset.size(), &p)) {
    throw LemmaPrecondition("subgroup of order " + std::to_string(subset.size()) +
                            " is not a non-trivial prime-power group");
  }
  return p;
}

// p divides |<a, b>|, resolved by element orders when possible.
inline bool prime_divides_generated(std::uint64_t p, const Permutation& a,
                                    const Permutation& b) {
  if (element_order(a) % p == 0 || element_order(b) % p == 0) return true;
  return two_generated_order(a, b) % p == 0;
}

}  // namespace detail

/// Solvable EPPO groups have at most two primes; a solvable group whose graph
/// has a vertex contains an element of order divisible by two primes.
inline LemmaOutcome check_higman(bool solvable, const ElementTable& t, const NonFGraph& g) {
  LemmaOutcome out{"higman", Outcome::not_applicable, {}, "", {}};
  if (!solvable) {
    out.detail = "group is not solvable";
    return out;
  }
  auto sigma = sigma_set(t);
  const bool eppo = sigma.empty();
  if (eppo && t.group_primes.size() > 2) {
    out.outcome = Outcome::fail;
    out.detail = "solvable group with prime-power element orders has " +
                 std::to_string(t.group_primes.size()) + " primes";
    for (std::uint64_t p : t.group_primes) {
      for (index_t i = 0; i < t.size(); ++i) {
        if (t.order_of[i] == p) {
          out.witness.push_back(i);
          break;
        }
      }
    }
    return out;
  }
  if (!g.empty() && sigma.empty()) {
    out.outcome = Outcome::fail;
    out.witness = {g.vertices.front()};
    out.detail = "graph has vertices but no element order has two prime divisors";
    return out;
  }
  out.outcome = Outcome::pass;
  if (!sigma.empty()) out.witness = {sigma.front()};
  return out;
}

inline LemmaOutcome check_higman(const PermutationGroup& G, const ElementTable& t, const NonFGraph& g) {
  return check_higman(is_solvable(G), t, g);
}

/// For a normal p-subgroup N and x1, x2 in G: some n1, n2 in N make p divide
/// |<x1 n1, x2 n2>|. Exhaustive over N x N. Throws LemmaPrecondition if N is
/// not a normal subgroup of non-trivial prime-power order.
inline LemmaOutcome check_rdivides(const PermutationGroup& G, const ElementTable& t,
                                   std::span<const index_t> normal_subgroup, index_t x1, index_t x2,
                                   bool verify_normal = true) {
  const std::uint64_t p = detail::prime_of_p_subgroup(normal_subgroup);
  if (verify_normal && !detail::index_set_is_normal_subgroup(G, t, normal_subgroup)) {
    throw LemmaPrecondition("given subset is not a normal subgroup");
  }
  LemmaOutcome out{"rdivides", Outcome::fail, {x1, x2}, "", {}};
  for (index_t n1 : normal_subgroup) {
    Permutation a = compose(t.elements[x1], t.elements[n1]);
    for (index_t n2 : normal_subgroup) {
      Permutation b = compose(t.elements[x2], t.elements[n2]);
      if (detail::prime_divides_generated(p, a, b)) {
        out.outcome = Outcome::pass;
        out.witness = {n1, n2};
        return out;
      }
    }
  }
  out.detail = "no translate pair generates a subgroup of order divisible by " + std::to_string(p);
  return out;
}

/// For a normal p-subgroup N with C_N(x) = 1: some n in N makes p divide
/// |<x, y n>|. Not applicable when C_N(x) is non-trivial.
inline LemmaOutcome check_fpf(const PermutationGroup& G, const ElementTable& t,
                              std::span<const index_t> normal_subgroup, index_t x, index_t y,
                              bool verify_normal = true) {
  const std::uint64_t p = detail::prime_of_p_subgroup(normal_subgroup);
  if (verify_normal && !detail::index_set_is_normal_subgroup(G, t, normal_subgroup)) {
    throw LemmaPrecondition("given subset is not a normal subgroup");
  }
  LemmaOutcome out{"fpf", Outcome::not_applicable, {}, "", {}};
  if (centralizer_elements(t, normal_subgroup, x).size() != 1) {
    out.detail = "C_N(x) is non-trivial";
    return out;
  }
  out.outcome = Outcome::fail;
  out.witness = {x, y};
  for (index_t n : normal_subgroup) {
    if (detail::prime_divides_generated(p, t.elements[x], compose(t.elements[y], t.elements[n]))) {
      out.outcome = Outcome::pass;
      out.witness = {n};
      return out;
    }
  }
  out.detail = "no n in N gives order divisible by " + std::to_string(p);
  return out;
}

struct SuiteResult {
  std::size_t instances = 0;
  std::size_t passed = 0;
  std::size_t not_applicable = 0;
  std::optional<LemmaOutcome> first_failure;

  bool ok() const noexcept { return !first_failure.has_value(); }
};

/// check_rdivides over every pair (x1, x2) in G x G.
inline SuiteResult rdivides_suite(const PermutationGroup& G, const ElementTable& t,
                                  std::span<const index_t> normal_subgroup) {
  if (!detail::index_set_is_normal_subgroup(G, t, normal_subgroup)) {
    throw LemmaPrecondition("given subset is not a normal subgroup");
  }
  SuiteResult res;
  for (index_t a = 0; a < t.size(); ++a) {
    for (index_t b = 0; b < t.size(); ++b) {
      auto o = check_rdivides(G, t, normal_subgroup, a, b, false);
      ++res.instances;
      if (o.outcome == Outcome::pass) {
        ++res.passed;
      } else if (!res.first_failure) {
        res.first_failure = o;
      }
    }
  }
  return res;
}

/// check_fpf over every pair (x, y) in G x G; pairs with C_N(x) != 1 count as not applicable.
inline SuiteResult fpf_suite(const PermutationGroup& G, const ElementTable& t,
                             std::span<const index_t> normal_subgroup) {
  if (!detail::index_set_is_normal_subgroup(G, t, normal_subgroup)) {
    throw LemmaPrecondition("given subset is not a normal subgroup");
  }
  SuiteResult res;
  for (index_t x = 0; x < t.size(); ++x) {
    for (index_t y = 0; y < t.size(); ++y) {
      auto o = check_fpf(G, t, normal_subgroup, x, y, false);
      ++res.instances;
      if (o.outcome == Outcome::pass) {
        ++res.passed;
      } else if (o.outcome == Outcome::not_applicable) {
        ++res.not_applicable;
      } else if (!res.first_failure) {
        res.first_failure = o;
      }
    }
  }
  return res;
}

// ---- whole-group verification ----

struct VerificationReport {
  std::string group;
  std::uint64_t order = 0;
  std::vector<std::uint64_t> primes;
  bool solvable = false;
  std::size_t isolated_count = 0;
  GraphStatus status = GraphStatus::empty;
  std::optional<unsigned> diameter;
  std::size_t max_pi_tilde = 0;
  std::size_t sigma_count = 0;
  std::size_t class_count = 0;
  std::uint64_t chain_builds = 0;
  PrimeGraph prime_graph;
  std::vector<LemmaOutcome> lemmas;
  std::optional<std::pair<index_t, index_t>> disconnected_witness;

  bool passed() const {
    return std::none_of(lemmas.begin(), lemmas.end(),
                        [](const LemmaOutcome& l) { return l.outcome == Outcome::fail; });
  }
};

struct VerifyOptions {
  std::uint64_t cap = default_element_cap;
  std::size_t jobs = 1;
};

namespace detail {

// Vertices within distance 2 of v (v included).
inline std::vector<std::uint64_t> ball2(const NonFGraph& g, index_t v) {
  const std::size_t words = g.adjacency.words_per_row();
  std::vector<std::uint64_t> ball(g.adjacency.row(v), g.adjacency.row(v) + words);
  ball[v / 64] |= 1ULL << (v % 64);
  for_each_bit(g.adjacency.row(v), words, [&](std::size_t u) {
    const std::uint64_t* r = g.adjacency.row(u);
    for (std::size_t w = 0; w < words; ++w) ball[w] |= r[w];
  });
  return ball;
}

inline std::vector<std::uint64_t> mask_of(std::size_t n, std::span<const index_t> items) {
  std::vector<std::uint64_t> m((n + 63) / 64, 0);
  for (index_t i : items) m[i / 64] |= 1ULL << (i % 64);
  return m;
}

}  // namespace detail

/// The graph-level claims checked on one group. Assumes k = 3 graph.
inline std::vector<LemmaOutcome> check_graph_claims(bool solvable, const ElementTable& t,
                                                    const NonFGraph& g, const DiameterResult& diam) {
  std::vector<LemmaOutcome> out;
  const std::size_t n = t.size();
  const std::size_t words = g.adjacency.words_per_row();
  const std::size_t group_primes = t.group_primes.size();
  const auto sigma = sigma_set(t);
  const auto sigma_mask = detail::mask_of(n, sigma);

  // Connected with diameter at most 5.
  {
    LemmaOutcome l{"diameter_at_most_5", Outcome::not_applicable, {}, "", {}};
    if (diam.status == GraphStatus::empty) {
      l.detail = "graph is empty";
    } else if (diam.status == GraphStatus::disconnected) {
      l.outcome = Outcome::fail;
      l.witness = {diam.witness->first, diam.witness->second};
      l.detail = "graph is disconnected";
    } else if (diam.value > 5) {
      l.outcome = Outcome::fail;
      l.detail = "diameter " + std::to_string(diam.value);
    } else {
      l.outcome = Outcome::pass;
    }
    out.push_back(std::move(l));
  }

  out.push_back(check_higman(solvable, t, g));

  // An element with three or more prime divisors forces no isolated vertices and diameter <= 2.
  {
    LemmaOutcome l{"three_prime_element", Outcome::not_applicable, {}, "", {}};
    auto it = std::find_if(sigma.begin(), sigma.end(),
                           [&](index_t i) { return t.primes_of[i].size() >= 3; });
    if (it != sigma.end()) {
      l.witness = {*it};
      if (g.vertices.size() != n) {
        l.outcome = Outcome::fail;
        l.witness = isolated_vertices(g);
        l.detail = "isolated vertices present";
      } else if (diam.status != GraphStatus::connected || diam.value > 2) {
        l.outcome = Outcome::fail;
        l.detail = "diameter exceeds 2";
      } else {
        l.outcome = Outcome::pass;
      }
    }
    out.push_back(std::move(l));
  }

  // Class representatives suffice below: conjugation preserves the graph and Sigma.
  std::vector<std::pair<index_t, std::vector<std::uint64_t>>> rep_balls;
  if (group_primes >= 3 && !g.empty()) {
    for (index_t r : t.class_rep) {
      if (!g.is_isolated(r)) rep_balls.emplace_back(r, detail::ball2(g, r));
    }
  }

  // Sigma vertices are pairwise within distance 2 when |pi(G)| >= 3.
  {
    LemmaOutcome l{"sigma_pairs_within_2", Outcome::not_applicable, {}, "", {}};
    if (group_primes >= 3 && !g.empty()) {
      l.outcome = Outcome::pass;
      for (const auto& [r, ball] : rep_balls) {
        if (t.primes_of[r].size() < 2) continue;
        for (std::size_t w = 0; w < words && l.outcome == Outcome::pass; ++w) {
          std::uint64_t missing = sigma_mask[w] & g.vertex_mask[w] & ~ball[w];
          if (missing) {
            l.outcome = Outcome::fail;
            l.witness = {r, static_cast<index_t>(w * 64 + static_cast<std::size_t>(std::countr_zero(missing)))};
          }
        }
        if (l.outcome == Outcome::fail) break;
      }
    }
    out.push_back(std::move(l));
  }

  // Solvable with a non-empty graph: every vertex is within distance 2 of Sigma.
  {
    LemmaOutcome l{"vertex_within_2_of_sigma", Outcome::not_applicable, {}, "", {}};
    if (solvable && !g.empty()) {
      l.outcome = Outcome::pass;
      for (const auto& [r, ball] : rep_balls) {
        bool hit = false;
        for (std::size_t w = 0; w < words && !hit; ++w) hit = (ball[w] & sigma_mask[w]) != 0;
        if (!hit) {
          l.outcome = Outcome::fail;
          l.witness = {r};
          break;
        }
      }
      // With fewer than three primes there are no vertices, so rep_balls covers every case.
    }
    out.push_back(std::move(l));
  }

  const bool connected = diam.status == GraphStatus::connected;

  // Solvable, three primes, diameter above 4: the prime graph is a path p - r - q.
  {
    LemmaOutcome l{"long_diameter_path_prime_graph", Outcome::not_applicable, {}, "", {}};
    if (solvable && group_primes == 3 && connected && diam.value > 4) {
      l.outcome = is_path_on_three(prime_graph(t)) ? Outcome::pass : Outcome::fail;
      if (l.outcome == Outcome::fail) l.detail = "prime graph is not a two-edge path";
    }
    out.push_back(std::move(l));
  }

  // Solvable with four or more primes: diameter at most 3.
  {
    LemmaOutcome l{"solvable_four_primes_diameter_at_most_3", Outcome::not_applicable, {}, "", {}};
    if (solvable && group_primes >= 4 && !g.empty()) {
      l.outcome = connected && diam.value <= 3 ? Outcome::pass : Outcome::fail;
    }
    out.push_back(std::move(l));
  }

  // Solvable with exactly three primes: diameter at most 5.
  {
    LemmaOutcome l{"solvable_three_primes_diameter_at_most_5", Outcome::not_applicable, {}, "", {}};
    if (solvable && group_primes == 3 && !g.empty()) {
      l.outcome = connected && diam.value <= 5 ? Outcome::pass : Outcome::fail;
    }
    out.push_back(std::move(l));
  }
  return out;
}

/// Builds the element table and the k = 3 graph of `G` and adjudicates every
/// applicable claim. Throws CapExceeded when |G| > opts.cap.
inline VerificationReport verify_theorem(const PermutationGroup& G, const std::string& name,
                                         VerifyOptions opts = {}) {
  VerificationReport rep;
  rep.group = name;
  rep.order = G.order();
  if (rep.order > opts.cap) throw CapExceeded(rep.order, opts.cap);
  const ElementTable t = enumerate_elements(G, opts.cap);
  const NonFGraph g = build_graph(t, 3, BuildMode::symmetry_reduced, opts.jobs);
  const DiameterResult diam = diameter(g, {.per_vertex = false, .jobs = opts.jobs});

  rep.primes = t.group_primes;
  rep.solvable = is_solvable(G);
  rep.isolated_count = t.size() - g.vertices.size();
  rep.status = diam.status;
  if (diam.status == GraphStatus::connected) rep.diameter = diam.value;
  rep.disconnected_witness = diam.witness;
  for (const auto& ps : t.primes_of) rep.max_pi_tilde = std::max(rep.max_pi_tilde, ps.size());
  rep.sigma_count = sigma_set(t).size();
  rep.class_count = t.class_count();
  rep.chain_builds = g.chain_builds;
  rep.prime_graph = prime_graph(t);
  rep.lemmas = check_graph_claims(rep.solvable, t, g, diam);
  for (auto& l : rep.lemmas) {
    for (index_t w : l.witness) l.witness_elements.push_back(format_cycles(t.elements[w]));
  }
  return rep;
}

}  // namespace ntp

#endif  // NTP_ANALYSIS_HPP
