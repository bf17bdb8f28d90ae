#ifndef NTP_TESTS_DESIGNATED_HPP
#define NTP_TESTS_DESIGNATED_HPP

// Groups of order at most 120 paired with normal p-subgroups, for the
// exhaustive translate-lemma suites. Each N is the normal closure of one
// seed element, so normality holds by construction.

#include <string>
#include <vector>

#include "ntp/catalog.hpp"
#include "ntp/group.hpp"

namespace designated {

struct LemmaCase {
  std::string label;
  ntp::PermutationGroup group;
  ntp::PermutationGroup normal;
};

inline std::vector<LemmaCase> lemma_cases() {
  using ntp::power;
  namespace cat = ntp::catalog;
  std::vector<LemmaCase> out;
  auto add = [&](const std::string& expr, const std::string& n_label,
                 auto seed_of) {
    auto g = cat::make(expr);
    const ntp::Permutation seed = seed_of(g);
    const ntp::Permutation seeds[] = {seed};
    out.push_back({expr + " / " + n_label, g, ntp::normal_closure(g, seeds)});
  };
  auto gen = [](std::size_t i, long long e = 1) {
    return [=](const ntp::PermutationGroup& g) { return power(g.generators()[i], e); };
  };

  add("cyclic(30)", "C2", gen(0, 15));
  add("cyclic(30)", "C3", gen(0, 10));
  add("cyclic(30)", "C5", gen(0, 6));
  add("dihedral(30)", "<a^3>", gen(0, 3));
  add("dihedral(30)", "<a^5>", gen(0, 5));
  add("dihedral(42)", "C7", gen(0, 3));
  add("dihedral(42)", "C3", gen(0, 7));
  add("dihedral(90)", "C5", gen(0, 9));
  add("dihedral(90)", "C9", gen(0, 5));
  add("symmetric(4)", "V4", [](const auto& g) { return ntp::parse_cycles("(1,2)(3,4)", g.degree()); });
  add("alternating(4)", "V4", [](const auto& g) { return ntp::parse_cycles("(1,2)(3,4)", g.degree()); });
  add("sl23", "center", gen(0, 2));
  add("sl23", "Q8", gen(0));
  add("frobenius(7,3)", "C7", gen(0));
  add("frobenius(7,6)", "C7", gen(0));
  add("frobenius(11,5)", "C11", gen(0));
  add("direct_product(frobenius(7,3),cyclic(2))", "C7", gen(0));
  add("direct_product(frobenius(7,3),cyclic(2))", "C2", gen(2));
  add("direct_product(symmetric(3),cyclic(5))", "C3", [](const auto& g) { return ntp::parse_cycles("(1,2,3)", g.degree()); });
  add("direct_product(symmetric(3),cyclic(5))", "C5", gen(2));
  return out;
}

}  // namespace designated

#endif  // NTP_TESTS_DESIGNATED_HPP
