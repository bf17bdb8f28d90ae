#ifndef NTP_ELEMENT_TABLE_HPP
#define NTP_ELEMENT_TABLE_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "ntp/group.hpp"
#include "ntp/number_theory.hpp"
#include "ntp/permutation.hpp"

namespace ntp {

using index_t = std::uint32_t;

inline constexpr std::uint64_t default_element_cap = 100000;

class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(std::uint64_t order, std::uint64_t cap)
      : std::runtime_error("group order " + std::to_string(order) + " exceeds element cap " +
                           std::to_string(cap) + " (raise the cap to proceed)"),
        order_(order),
        cap_(cap) {}
  std::uint64_t order() const noexcept { return order_; }
  std::uint64_t cap() const noexcept { return cap_; }

 private:
  std::uint64_t order_;
  std::uint64_t cap_;
};

/// Every element of a group, sorted by image table (so index 0 is the
/// identity), with per-element order, prime support and conjugacy data.
struct ElementTable {
  std::size_t degree = 0;
  std::vector<Permutation> elements;
  std::vector<std::uint64_t> order_of;
  std::vector<std::vector<std::uint64_t>> primes_of;
  /// Primes dividing |G|, increasing; prime_mask_of bit k stands for group_primes[k].
  std::vector<std::uint64_t> group_primes;
  std::vector<std::uint32_t> prime_mask_of;

  std::vector<std::uint32_t> class_of;
  std::vector<index_t> class_rep;
  /// conjugator[i] = h with elements[class_rep[class_of[i]]]^h == elements[i].
  std::vector<Permutation> conjugator;

  std::unordered_map<Permutation, index_t> index_of;

  std::size_t size() const noexcept { return elements.size(); }
  std::size_t class_count() const noexcept { return class_rep.size(); }

  std::optional<index_t> find(const Permutation& p) const {
    auto it = index_of.find(p);
    if (it == index_of.end()) return std::nullopt;
    return it->second;
  }

  index_t at(const Permutation& p) const {
    auto it = index_of.find(p);
    if (it == index_of.end()) throw NotInGroup("element " + format_cycles(p) + " not in group");
    return it->second;
  }

  index_t multiply(index_t a, index_t b) const { return at(compose(elements[a], elements[b])); }

  std::vector<index_t> class_members(std::uint32_t cls) const {
    std::vector<index_t> out;
    for (index_t i = 0; i < size(); ++i) {
      if (class_of[i] == cls) out.push_back(i);
    }
    return out;
  }
};

/// Orbits of the conjugation action of the generators on the elements,
/// recorded in `table` together with a conjugator to each class representative.
/// The representative is the least index in its class.
inline void conjugacy_classes(const PermutationGroup& g, ElementTable& table) {
  constexpr std::uint32_t unassigned = static_cast<std::uint32_t>(-1);
  const std::size_t n = table.size();
  table.class_of.assign(n, unassigned);
  table.class_rep.clear();
  table.conjugator.assign(n, Permutation(table.degree));

  std::vector<Permutation> gen_inv;
  for (const auto& s : g.generators()) gen_inv.push_back(inverse(s));

  std::deque<index_t> queue;
  for (index_t start = 0; start < n; ++start) {
    if (table.class_of[start] != unassigned) continue;
    const auto cls = static_cast<std::uint32_t>(table.class_rep.size());
    table.class_rep.push_back(start);
    table.class_of[start] = cls;
    queue.push_back(start);
    while (!queue.empty()) {
      index_t cur = queue.front();
      queue.pop_front();
      for (std::size_t k = 0; k < g.generators().size(); ++k) {
        const Permutation& s = g.generators()[k];
        Permutation conj = compose(compose(gen_inv[k], table.elements[cur]), s);
        index_t j = table.at(conj);
        if (table.class_of[j] != unassigned) continue;
        table.class_of[j] = cls;
        table.conjugator[j] = compose(table.conjugator[cur], s);
        queue.push_back(j);
      }
    }
  }
}

/// Materializes all elements of `g`. Throws CapExceeded when |G| > cap.
inline ElementTable enumerate_elements(const PermutationGroup& g,
                                       std::uint64_t cap = default_element_cap) {
  const std::uint64_t order = g.order();
  if (order > cap) throw CapExceeded(order, cap);

  ElementTable t;
  t.degree = g.degree();
  t.elements.reserve(order);

  // Every element factors uniquely as u_{k-1} * ... * u_1 * u_0 over the transversals.
  const auto levels = g.chain().levels();
  std::vector<Permutation> partial{Permutation(g.degree())};
  for (std::size_t l = levels.size(); l-- > 0;) {
    std::vector<Permutation> next;
    next.reserve(partial.size() * levels[l].transversal.size());
    for (const auto& p : partial) {
      for (const auto& u : levels[l].transversal) next.push_back(compose(p, u));
    }
    partial = std::move(next);
  }
  t.elements = std::move(partial);
  std::sort(t.elements.begin(), t.elements.end());

  t.group_primes = prime_factors(order);
  t.index_of.reserve(order);
  for (index_t i = 0; i < t.elements.size(); ++i) {
    t.index_of.emplace(t.elements[i], i);
    std::uint64_t o = element_order(t.elements[i]);
    t.order_of.push_back(o);
    auto ps = prime_factors(o);
    std::uint32_t mask = 0;
    for (auto p : ps) {
      auto it = std::lower_bound(t.group_primes.begin(), t.group_primes.end(), p);
      mask |= 1U << static_cast<unsigned>(it - t.group_primes.begin());
    }
    t.prime_mask_of.push_back(mask);
    t.primes_of.push_back(std::move(ps));
  }
  conjugacy_classes(g, t);
  return t;
}

/// { n in N : n x = x n }
inline std::vector<index_t> centralizer_elements(const ElementTable& table,
                                                 std::span<const index_t> subset, index_t x) {
  std::vector<index_t> out;
  const Permutation& xe = table.elements[x];
  for (index_t n : subset) {
    const Permutation& ne = table.elements[n];
    if (compose(ne, xe) == compose(xe, ne)) out.push_back(n);
  }
  return out;
}

/// Indices of the elements of a subgroup `h` of the tabulated group.
inline std::vector<index_t> subgroup_indices(const ElementTable& table, const PermutationGroup& h) {
  std::vector<index_t> out;
  for (index_t i = 0; i < table.size(); ++i) {
    if (h.contains(table.elements[i])) out.push_back(i);
  }
  return out;
}

}  // namespace ntp

#endif  // NTP_ELEMENT_TABLE_HPP
