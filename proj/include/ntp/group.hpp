#ifndef NTP_GROUP_HPP
#define NTP_GROUP_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ntp/permutation.hpp"
#include "ntp/stabilizer_chain.hpp"

namespace ntp {

/// A permutation group given by generators, with its stabilizer chain.
/// Immutable after construction and safe to share between threads.
class PermutationGroup {
 public:
  /// Throws std::invalid_argument for an empty list, DegreeMismatch for mixed degrees.
  explicit PermutationGroup(std::vector<Permutation> generators)
      : generators_(std::move(generators)), chain_(generators_) {
    degree_ = generators_.front().degree();
  }

  static PermutationGroup trivial(std::size_t degree) {
    return PermutationGroup({Permutation(degree)});
  }

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  const StabilizerChain& chain() const noexcept { return chain_; }
  std::uint64_t order() const { return chain_.order(); }

  bool contains(const Permutation& p) const {
    if (p.degree() != degree_) throw DegreeMismatch(degree_, p.degree());
    return chain_.contains(p);
  }

  bool is_trivial() const { return order() == 1; }

 private:
  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  StabilizerChain chain_;
};

inline std::uint64_t group_order(const PermutationGroup& g) { return g.order(); }

inline bool contains(const PermutationGroup& g, const Permutation& p) { return g.contains(p); }

/// |<x, y>| from a fresh stabilizer chain.
inline std::uint64_t two_generated_order(const Permutation& x, const Permutation& y) {
  if (x.degree() != y.degree()) throw DegreeMismatch(x.degree(), y.degree());
  const Permutation gens[] = {x, y};
  return StabilizerChain(gens).order();
}

namespace detail {

inline PermutationGroup closure_under_conjugation(const PermutationGroup& g,
                                                  std::vector<Permutation> gens) {
  std::vector<Permutation> kept;
  for (auto& s : gens) {
    if (!s.is_identity()) kept.push_back(std::move(s));
  }
  if (kept.empty()) return PermutationGroup::trivial(g.degree());

  StabilizerChain chain(kept);
  for (std::size_t i = 0; i < kept.size(); ++i) {
    for (const auto& c : g.generators()) {
      Permutation conj = conjugate(kept[i], c);
      if (chain.contains(conj)) continue;
      kept.push_back(std::move(conj));
      chain = StabilizerChain(kept);
    }
  }
  return PermutationGroup(std::move(kept));
}

}  // namespace detail

class NotInGroup : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Smallest subgroup containing `seeds` that is normalized by every generator of `g`.
/// Throws NotInGroup if a seed lies outside `g`.
inline PermutationGroup normal_closure(const PermutationGroup& g,
                                       std::span<const Permutation> seeds) {
  for (const auto& s : seeds) {
    if (!g.contains(s)) throw NotInGroup("normal_closure: seed " + format_cycles(s) + " not in group");
  }
  return detail::closure_under_conjugation(g, {seeds.begin(), seeds.end()});
}

/// Normal closure of the commutators of generator pairs.
inline PermutationGroup derived_subgroup(const PermutationGroup& g) {
  std::vector<Permutation> comms;
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      comms.push_back(commutator(gens[i], gens[j]));
    }
  }
  return detail::closure_under_conjugation(g, std::move(comms));
}

/// Derived series G, G', G'', ... (stops at the trivial group or when it stabilizes).
inline std::vector<PermutationGroup> derived_series(const PermutationGroup& g,
                                                    std::size_t max_steps = 64) {
  std::vector<PermutationGroup> series{g};
  for (std::size_t step = 0; step < max_steps && !series.back().is_trivial(); ++step) {
    PermutationGroup next = derived_subgroup(series.back());
    if (next.order() == series.back().order()) break;
    series.push_back(std::move(next));
  }
  return series;
}

inline bool is_solvable(const PermutationGroup& g) { return derived_series(g).back().is_trivial(); }

}  // namespace ntp

#endif  // NTP_GROUP_HPP
