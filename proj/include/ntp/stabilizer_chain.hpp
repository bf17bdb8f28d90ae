#ifndef NTP_STABILIZER_CHAIN_HPP
#define NTP_STABILIZER_CHAIN_HPP

// Deterministic Schreier-Sims.
//
// Level i stores a base point b_i, the strong generators S_i fixing
// b_0..b_{i-1}, the orbit b_i^<S_i> and a transversal u_x with b_i^{u_x} = x.
// A level is complete once every Schreier generator u_x s u_{x^s}^-1 sifts to
// the identity through the levels below it. Checked (orbit point, generator)
// pairs are remembered per level: the sift witness stays valid as lower levels
// grow, so revisiting a level only examines new pairs.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ntp/permutation.hpp"

namespace ntp {

class StabilizerChain {
 public:
  struct Level {
    point_t base = 0;
    std::vector<Permutation> generators;
    std::vector<point_t> orbit;
    std::vector<int> slot;  // point -> index in orbit, or -1
    std::vector<Permutation> transversal;
    std::vector<Permutation> transversal_inv;
    std::vector<std::size_t> checked;  // per orbit index: generators already examined
  };

  StabilizerChain() = default;

  /// Throws std::invalid_argument on an empty generator list, DegreeMismatch on mixed degrees.
  explicit StabilizerChain(std::span<const Permutation> generators) {
    if (generators.empty()) throw std::invalid_argument("build_chain: no generators");
    degree_ = generators.front().degree();
    for (const auto& g : generators) {
      if (g.degree() != degree_) throw DegreeMismatch(degree_, g.degree());
    }
    scratch_a_ = Permutation(degree_);
    scratch_b_ = Permutation(degree_);
    for (const auto& g : generators) {
      if (g.is_identity()) continue;
      std::size_t j = 0;
      while (j < levels_.size() && g(levels_[j].base) == levels_[j].base) ++j;
      if (j == levels_.size()) new_level(static_cast<point_t>(g.first_moved_point()));
      for (std::size_t l = 0; l <= j; ++l) add_generator(l, g);
    }
    complete();
  }

  std::size_t degree() const noexcept { return degree_; }
  std::span<const Level> levels() const noexcept { return levels_; }

  std::vector<point_t> base() const {
    std::vector<point_t> b;
    for (const auto& l : levels_) b.push_back(l.base);
    return b;
  }

  /// Product of basic orbit lengths. Throws std::overflow_error past 2^64.
  std::uint64_t order() const {
    std::uint64_t n = 1;
    for (const auto& l : levels_) {
      std::uint64_t s = l.orbit.size();
      if (n > std::numeric_limits<std::uint64_t>::max() / s) {
        throw std::overflow_error("group order exceeds 64 bits");
      }
      n *= s;
    }
    return n;
  }

  /// Residue of sifting p from level `from`; second is the level where sifting stopped.
  std::pair<Permutation, std::size_t> sift(const Permutation& p, std::size_t from = 0) const {
    if (p.degree() != degree_) throw DegreeMismatch(degree_, p.degree());
    Permutation g = p;
    Permutation tmp(degree_);
    for (std::size_t l = from; l < levels_.size(); ++l) {
      const Level& lev = levels_[l];
      int s = lev.slot[g(lev.base)];
      if (s < 0) return {std::move(g), l};
      compose_into(g, lev.transversal_inv[static_cast<std::size_t>(s)], tmp);
      std::swap(g, tmp);
    }
    return {std::move(g), levels_.size()};
  }

  bool contains(const Permutation& p) const {
    if (degree_ == 0) return p.degree() == 0;
    auto [residue, level] = sift(p);
    return level == levels_.size() && residue.is_identity();
  }

 private:
  void new_level(point_t base) {
    Level lev;
    lev.base = base;
    lev.slot.assign(degree_, -1);
    lev.orbit.push_back(base);
    lev.slot[base] = 0;
    lev.transversal.emplace_back(degree_);
    lev.transversal_inv.emplace_back(degree_);
    lev.checked.push_back(0);
    levels_.push_back(std::move(lev));
  }

  void add_generator(std::size_t l, const Permutation& g) {
    Level& lev = levels_[l];
    lev.generators.push_back(g);
    const std::size_t newest = lev.generators.size() - 1;
    const std::size_t old_size = lev.orbit.size();
    for (std::size_t i = 0; i < lev.orbit.size(); ++i) {
      const std::size_t first = i < old_size ? newest : 0;
      for (std::size_t gi = first; gi < lev.generators.size(); ++gi) {
        const Permutation& s = lev.generators[gi];
        point_t y = s(lev.orbit[i]);
        if (lev.slot[y] >= 0) continue;
        lev.slot[y] = static_cast<int>(lev.orbit.size());
        lev.orbit.push_back(y);
        Permutation u = compose(lev.transversal[i], s);
        lev.transversal_inv.push_back(inverse(u));
        lev.transversal.push_back(std::move(u));
        lev.checked.push_back(0);
      }
    }
  }

  void complete() {
    std::size_t i = levels_.size();
    while (i > 0) {
      std::size_t level = i - 1;
      std::size_t restart = find_missing(level);
      if (restart == npos) {
        i = level;
      } else {
        i = restart + 1;
      }
    }
  }

  // Examines unchecked Schreier generators at `level`. Returns npos when the
  // level is complete, otherwise the deepest level that received a new generator.
  std::size_t find_missing(std::size_t level) {
    for (std::size_t oi = 0; oi < levels_[level].orbit.size(); ++oi) {
      while (levels_[level].checked[oi] < levels_[level].generators.size()) {
        Level& lev = levels_[level];
        const std::size_t gi = lev.checked[oi]++;
        const Permutation& s = lev.generators[gi];
        point_t y = s(lev.orbit[oi]);
        std::size_t yi = static_cast<std::size_t>(lev.slot[y]);
        compose_into(lev.transversal[oi], s, scratch_a_);
        if (scratch_a_ == lev.transversal[yi]) continue;
        compose_into(scratch_a_, lev.transversal_inv[yi], scratch_b_);
        auto [residue, stop] = sift(scratch_b_, level + 1);
        if (residue.is_identity()) continue;
        if (stop == levels_.size()) new_level(static_cast<point_t>(residue.first_moved_point()));
        for (std::size_t l = level + 1; l <= stop; ++l) add_generator(l, residue);
        return stop;
      }
    }
    return npos;
  }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  std::size_t degree_ = 0;
  std::vector<Level> levels_;
  Permutation scratch_a_;
  Permutation scratch_b_;
};

inline StabilizerChain build_chain(std::span<const Permutation> generators) {
  return StabilizerChain(generators);
}

}  // namespace ntp

#endif  // NTP_STABILIZER_CHAIN_HPP
