// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <memory>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "designated.hpp"
#include "ntp/analysis.hpp"
#include "ntp/catalog.hpp"
#include "oracle.hpp"

namespace {

using ntp::index_t;
using Clock = std::chrono::steady_clock;
namespace cat = ntp::catalog;

struct Check {
  bool ok = true;
  std::ostringstream note;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) note << what << "; ";
    ok = ok && cond;
  }
};

struct Entry {
  std::string name;
  ntp::PermutationGroup group;
  ntp::ElementTable table;
  ntp::NonFGraph graph;
  ntp::DiameterResult diam;
  bool solvable = false;
};

std::unique_ptr<Entry> build_entry(const std::string& name, std::size_t jobs = 1) {
  auto g = cat::make(name);
  auto e = std::make_unique<Entry>(Entry{name, g, ntp::enumerate_elements(g), {}, {}, ntp::is_solvable(g)});
  e->graph = ntp::build_graph(e->table, 3, ntp::BuildMode::symmetry_reduced, jobs);
  e->diam = ntp::diameter(e->graph, {.per_vertex = false, .jobs = jobs});
  return e;
}

// Catalog groups up to 5000 elements: the standard sweep plus further direct
// products of the named small groups.
std::vector<std::string> desk_scale_groups() {
  std::vector<std::string> names;
  for (const auto& n : cat::standard_sweep()) {
    if (cat::make(n).order() <= 5000) names.push_back(n);
  }
  for (const char* extra : {"direct_product(cyclic(30),dihedral(30))", "direct_product(alternating(5),dihedral(30))",
                            "direct_product(symmetric(5),cyclic(30))", "direct_product(cyclic(105),dihedral(30))",
                            "direct_product(direct_product(frobenius(7,3),cyclic(2)),dihedral(30))",
                            "direct_product(alternating(5),cyclic(30))",
                            "direct_product(cyclic(30),cyclic(105))"}) {
    names.emplace_back(extra);
  }
  return names;
}

std::vector<std::unique_ptr<Entry>>& desk_scale_cache() {
  static std::vector<std::unique_ptr<Entry>> cache;
  return cache;
}

bool is_connected_at_most(const ntp::DiameterResult& d, unsigned bound) {
  return d.status == ntp::GraphStatus::connected && d.value <= bound;
}

std::size_t max_pi_tilde(const ntp::ElementTable& t) {
  std::size_t m = 0;
  for (const auto& ps : t.primes_of) m = std::max(m, ps.size());
  return m;
}

// ---- criteria ----

void dihedral_isolated_set(Check& c) {
  auto e = build_entry("dihedral(30)");
  const auto& a = e->group.generators()[0];
  std::set<ntp::Permutation> expected{ntp::Permutation(15)};
  for (int k : {3, 5, 6, 9, 10, 12}) expected.insert(ntp::power(a, k));
  std::set<ntp::Permutation> got;
  for (index_t i : ntp::isolated_vertices(e->graph)) got.insert(e->table.elements[i]);
  c.require(got == expected, "isolated set differs from {1,a^3,a^5,a^6,a^9,a^10,a^12}");
  c.note << got.size() << " isolated elements";
}

void sl23_example_neighbours(Check& c) {
  auto e = build_entry("sl23_example");
  const auto& t = e->table;
  c.require(t.size() == 1512, "order is not 1512");
  std::size_t sevens = 0, twos = 0, pairs = 0;
  unsigned min_dist = ~0u;
  std::vector<index_t> order2;
  for (index_t i = 0; i < t.size(); ++i) {
    if (t.order_of[i] == 2) order2.push_back(i);
  }
  for (index_t i = 0; i < t.size(); ++i) {
    if (t.order_of[i] == 7) {
      ++sevens;
      auto prof = ntp::neighbor_order_profile(e->graph, i);
      c.require(!prof.empty(), "order-7 element is isolated");
      for (auto [o, n] : prof) c.require(o == 6, "order-7 element has a neighbour of order " + std::to_string(o));
      auto rep = ntp::bfs(e->graph, i);
      for (index_t y : order2) {
        ++pairs;
        auto d = rep.distance_to(y);
        c.require(d.has_value() && *d >= 3, "order-7/order-2 pair closer than 3");
        if (d) min_dist = std::min(min_dist, *d);
      }
    }
    if (t.order_of[i] == 2) {
      ++twos;
      auto prof = ntp::neighbor_order_profile(e->graph, i);
      c.require(!prof.empty(), "order-2 element is isolated");
      for (auto [o, n] : prof) {
        c.require(o == 14 || o == 21 || o == 28, "order-2 element has a neighbour of order " + std::to_string(o));
      }
    }
  }
  c.require(sevens > 0 && twos > 0, "no order-7 or order-2 elements");
  c.note << sevens << " order-7 and " << twos << " order-2 elements; min distance over " << pairs
         << " pairs = " << min_dist;
}

void desk_scale_theorem(Check& c) {
  auto& cache = desk_scale_cache();
  const std::vector<std::string> required{
      "cyclic(30)", "cyclic(105)", "dihedral(30)", "dihedral(210)", "direct_product(frobenius(7,3),cyclic(2))",
      "alternating(5)", "symmetric(5)", "psl27", "sl23_example"};
  const auto names = desk_scale_groups();
  for (const auto& r : required) {
    c.require(std::find(names.begin(), names.end(), r) != names.end(), "required group missing: " + r);
  }
  std::size_t checked = 0;
  unsigned worst = 0;
  for (const auto& name : names) {
    auto e = build_entry(name);
    c.require(e->table.size() <= 5000, name + " exceeds 5000 elements");
    if (e->table.group_primes.size() >= 3 && !e->graph.empty()) {
      ++checked;
      c.require(is_connected_at_most(e->diam, 5), name + " is disconnected or has diameter above 5");
      worst = std::max(worst, e->diam.value);
      auto claims = ntp::check_graph_claims(e->solvable, e->table, e->graph, e->diam);
      for (const auto& l : claims) c.require(l.outcome != ntp::Outcome::fail, name + ": " + l.name + " failed");
    }
    cache.push_back(std::move(e));
  }
  c.note << checked << " non-empty graphs on three or more primes; largest diameter " << worst;
}

void three_prime_element(Check& c) {
  std::size_t applicable = 0;
  for (const auto& e : desk_scale_cache()) {
    if (max_pi_tilde(e->table) < 3) continue;
    ++applicable;
    c.require(ntp::isolated_vertices(e->graph).empty(), e->name + " has isolated vertices");
    c.require(is_connected_at_most(e->diam, 2), e->name + " has diameter above 2");
  }
  c.require(applicable > 0, "no group has an element of order divisible by three primes");
  c.note << applicable << " groups with such an element";
}

void sigma_distance(Check& c) {
  std::size_t groups = 0, sigma_sources = 0, solvable_groups = 0;
  for (const auto& e : desk_scale_cache()) {
    const auto& t = e->table;
    const auto& g = e->graph;
    if (t.group_primes.size() < 3 || g.empty()) continue;
    ++groups;
    const auto sigma = ntp::sigma_set(t);
    std::vector<bool> in_sigma(t.size(), false);
    for (index_t s : sigma) in_sigma[s] = true;
    std::vector<int> dist_to_sigma(t.size(), -1);
    for (index_t s : sigma) {
      if (g.is_isolated(s)) continue;
      ++sigma_sources;
      auto rep = ntp::bfs(g, s);
      for (index_t u : sigma) {
        if (!g.is_isolated(u)) c.require(rep.distances[u] >= 0 && rep.distances[u] <= 2, e->name + ": Sigma pair beyond 2");
      }
      for (index_t v : g.vertices) {
        int d = rep.distances[v];
        if (d >= 0 && (dist_to_sigma[v] < 0 || d < dist_to_sigma[v])) dist_to_sigma[v] = d;
      }
    }
    if (e->solvable) {
      ++solvable_groups;
      for (index_t v : g.vertices) {
        c.require(dist_to_sigma[v] >= 0 && dist_to_sigma[v] <= 2, e->name + ": vertex farther than 2 from Sigma");
      }
    }
  }
  c.note << groups << " groups (" << solvable_groups << " solvable), BFS from " << sigma_sources << " Sigma vertices";
}

void higman(Check& c) {
  std::size_t nonempty = 0, eppo = 0;
  for (const auto& e : desk_scale_cache()) {
    if (!e->solvable) continue;
    const auto sigma = ntp::sigma_set(e->table);
    if (!e->graph.empty()) {
      ++nonempty;
      c.require(!sigma.empty(), e->name + ": non-empty graph but no element of mixed order");
    }
    if (sigma.empty()) {
      ++eppo;
      c.require(e->table.group_primes.size() <= 2, e->name + ": prime-power orders only, yet three primes");
    }
  }
  c.note << nonempty << " solvable groups with edges, " << eppo << " with prime-power orders only";
}

void lemma_suites(Check& c) {
  std::size_t cases = 0, instances = 0, not_applicable = 0, fpf_instances = 0;
  for (const auto& lc : designated::lemma_cases()) {
    c.require(lc.group.order() <= 120, lc.label + " exceeds order 120");
    auto t = ntp::enumerate_elements(lc.group);
    auto n = ntp::subgroup_indices(t, lc.normal);
    std::uint64_t p = 0;
    c.require(ntp::is_prime_power(n.size(), &p), lc.label + ": N is not a p-group");
    auto r = ntp::rdivides_suite(lc.group, t, n);
    auto f = ntp::fpf_suite(lc.group, t, n);
    c.require(r.ok(), lc.label + ": translate-pair lemma failed");
    c.require(f.ok(), lc.label + ": fixed-point-free lemma failed");
    ++cases;
    instances += r.instances + f.instances;
    not_applicable += f.not_applicable;
    fpf_instances += f.instances;
  }
  c.require(not_applicable < fpf_instances, "fixed-point-free lemma never applicable");
  c.note << cases << " (G, N) cases, " << instances << " instances (" << not_applicable << " not applicable)";
}

void oracle_equivalence(Check& c) {
  std::size_t compared = 0, ecc_groups = 0;
  auto names = desk_scale_groups();
  for (const auto& name : names) {
    auto g = cat::make(name);
    if (g.order() > 500) continue;
    auto t = ntp::enumerate_elements(g);
    if (g.order() <= 200) {
      auto naive = ntp::build_graph(t, 3, ntp::BuildMode::naive);
      auto reduced = ntp::build_graph(t, 3, ntp::BuildMode::symmetry_reduced);
      c.require(naive.adjacency == reduced.adjacency, name + ": naive and reduced adjacency differ");
      ++compared;
    }
    auto graph = ntp::build_graph(t);
    auto ecc = ntp::eccentricities(graph, {.per_vertex = true});
    for (index_t v = 0; v < t.size(); ++v) {
      c.require(ecc[v] == ecc[t.class_rep[t.class_of[v]]], name + ": eccentricity varies within a class");
    }
    ++ecc_groups;
  }
  c.note << compared << " groups bit-identical, " << ecc_groups << " groups class-constant";
}

void prime_graphs(Check& c) {
  auto is_prime = [](std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
      if (n % d == 0) return false;
    }
    return true;
  };
  // Order-multiset scan: an element of order p*q with p < q prime gives edge {p,q}.
  auto scan = [&](const ntp::PermutationGroup& g) {
    std::set<std::pair<std::uint64_t, std::uint64_t>> edges;
    for (const auto& e : oracle::closure(g.generators())) {
      const std::uint64_t o = oracle::order_by_powering(e);
      for (std::uint64_t p = 2; p * p < o; ++p) {
        if (o % p == 0 && is_prime(p) && is_prime(o / p)) edges.insert({p, o / p});
      }
    }
    return edges;
  };
  auto d30 = cat::dihedral(30);
  auto pg = ntp::prime_graph(ntp::enumerate_elements(d30));
  const std::vector<std::pair<std::uint64_t, std::uint64_t>> d30_edges{{3, 5}};
  c.require(pg.vertices == std::vector<std::uint64_t>{2, 3, 5}, "D30 prime graph vertices");
  c.require(pg.edges == d30_edges, "D30 prime graph edges");
  c.require(pg.components.size() == 2, "D30 prime graph components");
  c.require(std::set(pg.edges.begin(), pg.edges.end()) == scan(d30), "D30 edges disagree with order scan");

  auto c30 = cat::cyclic(30);
  auto pc = ntp::prime_graph(ntp::enumerate_elements(c30));
  const std::vector<std::pair<std::uint64_t, std::uint64_t>> triangle{{2, 3}, {2, 5}, {3, 5}};
  c.require(pc.edges == triangle && pc.components.size() == 1, "C30 prime graph is not a triangle");
  c.require(std::set(pc.edges.begin(), pc.edges.end()) == scan(c30), "C30 edges disagree with order scan");
  c.note << "D30 edges {3,5}, components " << pg.components.size() << "; C30 edges " << pc.edges.size();
}

void performance(Check& c) {
  auto timed = [](std::size_t jobs, std::unique_ptr<Entry>& out) {
    auto start = Clock::now();
    out = build_entry("sl23_example", jobs);
    return std::chrono::duration<double>(Clock::now() - start).count();
  };
  std::unique_ptr<Entry> one, eight;
  const double t1 = timed(1, one);
  const double t8 = timed(8, eight);
  const std::uint64_t bound = (one->table.class_count() + 2) * one->table.size();
  c.require(t1 < 60.0, "single worker took " + std::to_string(t1) + " s");
  c.require(t8 < 15.0, "8 workers took " + std::to_string(t8) + " s");
  c.require(one->graph.chain_builds <= bound, "chain builds exceed (#classes+2)|G|");
  c.require(eight->graph.chain_builds <= bound, "chain builds exceed (#classes+2)|G| with 8 workers");
  c.require(one->diam.status == ntp::GraphStatus::connected && one->diam.value == eight->diam.value &&
                one->graph.adjacency == eight->graph.adjacency,
            "single and 8-worker results differ");
  char buf[200];
  std::snprintf(buf, sizeof buf, "diameter %u, %zu classes, %llu chain builds <= %llu, 1 worker %.2f s, 8 workers %.2f s",
                one->diam.value, one->table.class_count(),
                static_cast<unsigned long long>(one->graph.chain_builds), static_cast<unsigned long long>(bound), t1,
                t8);
  c.note << buf;
}

struct Criterion {
  int id;
  const char* title;
  double limit_seconds;  // 0: no time limit
  std::function<void(Check&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "dihedral(30) isolated set", 1.0, dihedral_isolated_set},
      {2, "order-1512 example neighbours and distance", 60.0, sl23_example_neighbours},
      {3, "diameter at most 5 up to 5000 elements", 300.0, desk_scale_theorem},
      {4, "three-prime element forces no isolated vertices and diameter 2", 0.0, three_prime_element},
      {5, "Sigma pairs and vertices within distance 2", 0.0, sigma_distance},
      {6, "solvable groups: Sigma non-empty, prime-power orders imply two primes", 0.0, higman},
      {7, "translate lemmas exhaustive up to order 120", 120.0, lemma_suites},
      {8, "naive == symmetry-reduced; eccentricity constant on classes", 0.0, oracle_equivalence},
      {9, "prime graphs of D30 and C30", 0.0, prime_graphs},
      {10, "order-1512 diameter timing and chain-build bound", 0.0, performance},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    Check c;
    const auto start = Clock::now();
    try {
      cr.run(c);
    } catch (const std::exception& e) {
      c.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (cr.limit_seconds > 0) {
      c.require(secs < cr.limit_seconds, " [over time limit of " + std::to_string(cr.limit_seconds) + " s]");
    }
    if (!c.ok) ++failed;
    std::printf("%s  %2d  %-70s %8.2f s  %s\n", c.ok ? "PASS" : "FAIL", cr.id, cr.title, secs, c.note.str().c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed ? 1 : 0;
}
