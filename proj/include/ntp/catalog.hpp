#ifndef NTP_CATALOG_HPP
#define NTP_CATALOG_HPP

// Named group constructors and a small expression language over them:
//
//   expr  := name | name "(" arg ("," arg)* ")"
//   arg   := integer | expr
//
// e.g. "dihedral(30)", "psl27", "direct_product(frobenius(7,3),cyclic(2))".

#include <array>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ntp/group.hpp"
#include "ntp/number_theory.hpp"
#include "ntp/permutation.hpp"

namespace ntp {

class CatalogError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace catalog {

inline Permutation from_map(std::size_t degree, const std::function<std::size_t(std::size_t)>& f) {
  std::vector<std::size_t> images(degree);
  for (std::size_t i = 0; i < degree; ++i) images[i] = f(i);
  return Permutation::from_images(images);
}

inline PermutationGroup cyclic(std::size_t n) {
  if (n == 0) throw CatalogError("cyclic: n must be positive");
  if (n == 1) return PermutationGroup::trivial(1);
  return PermutationGroup({from_map(n, [n](std::size_t i) { return (i + 1) % n; })});
}

/// Dihedral group of the given order (even, >= 6), acting on order/2 points.
/// Generators: the rotation a = (1,2,...,m) and the reflection b: i -> -i mod m.
inline PermutationGroup dihedral(std::size_t order) {
  if (order < 6 || order % 2 != 0) {
    throw CatalogError("dihedral: order must be even and at least 6, got " + std::to_string(order));
  }
  const std::size_t m = order / 2;
  return PermutationGroup({from_map(m, [m](std::size_t i) { return (i + 1) % m; }),
                           from_map(m, [m](std::size_t i) { return (m - i) % m; })});
}

inline PermutationGroup symmetric(std::size_t n) {
  if (n == 0) throw CatalogError("symmetric: n must be positive");
  if (n == 1) return PermutationGroup::trivial(1);
  return PermutationGroup({from_map(n, [](std::size_t i) { return i < 2 ? 1 - i : i; }),
                           from_map(n, [n](std::size_t i) { return (i + 1) % n; })});
}

/// Generated by the 3-cycles (1,2,k).
inline PermutationGroup alternating(std::size_t n) {
  if (n == 0) throw CatalogError("alternating: n must be positive");
  if (n < 3) return PermutationGroup::trivial(n);
  std::vector<Permutation> gens;
  for (std::size_t k = 2; k < n; ++k) {
    const std::vector<std::size_t> cyc[] = {{0, 1, k}};
    gens.push_back(Permutation::from_cycles(n, cyc));
  }
  return PermutationGroup(std::move(gens));
}

/// G x H acting on disjoint point sets (H shifted past G's points).
inline PermutationGroup direct_product(const PermutationGroup& g, const PermutationGroup& h) {
  const std::size_t dg = g.degree();
  const std::size_t degree = dg + h.degree();
  std::vector<Permutation> gens;
  for (const auto& s : g.generators()) {
    gens.push_back(from_map(degree, [&](std::size_t i) { return i < dg ? s(i) : i; }));
  }
  for (const auto& s : h.generators()) {
    gens.push_back(from_map(degree, [&](std::size_t i) { return i < dg ? i : dg + s(i - dg); }));
  }
  return PermutationGroup(std::move(gens));
}

/// C_p x| C_d acting on F_p by z -> z + 1 and z -> w z with w of order d.
inline PermutationGroup frobenius(std::size_t p, std::size_t d) {
  if (!is_prime(p)) throw CatalogError("frobenius: " + std::to_string(p) + " is not prime");
  if (d == 0 || (p - 1) % d != 0) {
    throw CatalogError("frobenius: d must divide p-1, got p=" + std::to_string(p) +
                       " d=" + std::to_string(d));
  }
  // Smallest element of multiplicative order exactly d.
  std::size_t w = 1;
  for (std::size_t cand = 1; cand < p; ++cand) {
    std::size_t x = cand % p, ord = 1;
    while (x != 1) {
      x = x * cand % p;
      ++ord;
    }
    if (ord == d) {
      w = cand;
      break;
    }
  }
  std::vector<Permutation> gens{from_map(p, [p](std::size_t z) { return (z + 1) % p; })};
  if (d > 1) gens.push_back(from_map(p, [p, w](std::size_t z) { return z * w % p; }));
  return PermutationGroup(std::move(gens));
}

namespace detail {

using Mat2 = std::array<int, 4>;  // row-major over F_3

// Points of F_3^2 as 3x + y.
inline std::size_t f3_index(int x, int y) { return static_cast<std::size_t>(3 * x + y); }

inline std::size_t apply_f3(const Mat2& m, std::size_t v) {
  int x = static_cast<int>(v / 3), y = static_cast<int>(v % 3);
  int nx = ((m[0] * x + m[1] * y) % 3 + 3) % 3;
  int ny = ((m[2] * x + m[3] * y) % 3 + 3) % 3;
  return f3_index(nx, ny);
}

// SL(2,3) generators: S has order 4 and lies in Q8; T has order 3 and maps to
// a generator of the abelianization C_3.
inline constexpr Mat2 sl23_s{0, -1, 1, 0};
inline constexpr Mat2 sl23_t{1, 1, 0, 1};

}  // namespace detail

/// SL(2,3) on the 8 non-zero vectors of F_3^2.
inline PermutationGroup sl23() {
  using namespace detail;
  std::vector<std::size_t> nonzero;
  std::vector<std::size_t> slot(9, 0);
  for (std::size_t v = 1; v < 9; ++v) {
    slot[v] = nonzero.size();
    nonzero.push_back(v);
  }
  auto gen = [&](const Mat2& m) {
    return from_map(8, [&](std::size_t i) { return slot[apply_f3(m, nonzero[i])]; });
  };
  return PermutationGroup({gen(sl23_s), gen(sl23_t)});
}

/// (C_3^2 x C_7) x| SL(2,3), order 1512, degree 16.
/// Points 0..8: affine action of C_3^2 x| SL(2,3) on F_3^2 (vector (x,y) is point 3x+y).
/// Points 9..15: affine action of C_7 x| C_3 on F_7 (z is point 9+z), where SL(2,3)
/// acts through its abelianization: S acts trivially, T acts as z -> 2z.
inline PermutationGroup sl23_example() {
  using namespace detail;
  constexpr std::size_t degree = 16;
  auto on_f3 = [](const std::function<std::size_t(std::size_t)>& f) {
    return from_map(degree, [&](std::size_t i) { return i < 9 ? f(i) : i; });
  };
  Permutation t1 = on_f3([](std::size_t v) { return f3_index(static_cast<int>((v / 3 + 1) % 3), static_cast<int>(v % 3)); });
  Permutation t2 = on_f3([](std::size_t v) { return f3_index(static_cast<int>(v / 3), static_cast<int>((v % 3 + 1) % 3)); });
  Permutation c7 = from_map(degree, [](std::size_t i) { return i < 9 ? i : 9 + (i - 9 + 1) % 7; });
  Permutation s = on_f3([](std::size_t v) { return apply_f3(sl23_s, v); });
  Permutation t = from_map(degree, [](std::size_t i) {
    return i < 9 ? apply_f3(sl23_t, i) : 9 + (2 * (i - 9)) % 7;
  });
  return PermutationGroup({t1, t2, c7, s, t});
}

/// PSL(2,7) ~ GL(3,2) acting on the 7 non-zero vectors of F_2^3.
inline PermutationGroup psl27() {
  // Columns are the images of e1, e2, e3 as bit vectors.
  using Cols = std::array<std::size_t, 3>;
  auto gen = [](const Cols& cols) {
    return from_map(7, [&](std::size_t i) {
      std::size_t v = i + 1, img = 0;
      for (std::size_t b = 0; b < 3; ++b) {
        if (v >> b & 1U) img ^= cols[b];
      }
      return img - 1;
    });
  };
  // Companion matrix of x^3 + x + 1 (order 7) and an elementary transvection.
  return PermutationGroup({gen({0b010, 0b100, 0b011}), gen({0b001, 0b011, 0b100})});
}

// ---- expression parsing ----

struct Expr {
  std::string name;
  std::vector<std::variant<std::uint64_t, Expr>> args;
};

namespace detail {

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : text_(text) {}

  Expr parse() {
    Expr e = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing characters");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw CatalogError("catalog expression \"" + std::string(text_) + "\": " + what +
                       " at offset " + std::to_string(pos_));
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  Expr expr() {
    skip_ws();
    Expr e;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      e.name += text_[pos_++];
    }
    if (e.name.empty()) fail("expected group name");
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '(') {
      ++pos_;
      while (true) {
        skip_ws();
        if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
          std::uint64_t v = 0;
          while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            if (v > 1'000'000'000ULL) fail("integer too large");
            v = v * 10 + static_cast<std::uint64_t>(text_[pos_++] - '0');
          }
          e.args.emplace_back(v);
        } else {
          e.args.emplace_back(expr());
        }
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == ',') {
          ++pos_;
          continue;
        }
        if (pos_ < text_.size() && text_[pos_] == ')') {
          ++pos_;
          break;
        }
        fail("expected ',' or ')'");
      }
    }
    return e;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

inline PermutationGroup evaluate(const Expr& e) {
  auto int_arg = [&](std::size_t i) -> std::size_t {
    if (i >= e.args.size() || !std::holds_alternative<std::uint64_t>(e.args[i])) {
      throw CatalogError(e.name + ": argument " + std::to_string(i + 1) + " must be an integer");
    }
    return static_cast<std::size_t>(std::get<std::uint64_t>(e.args[i]));
  };
  auto group_arg = [&](std::size_t i) -> PermutationGroup {
    if (i >= e.args.size() || !std::holds_alternative<Expr>(e.args[i])) {
      throw CatalogError(e.name + ": argument " + std::to_string(i + 1) + " must be a group");
    }
    return evaluate(std::get<Expr>(e.args[i]));
  };
  auto arity = [&](std::size_t n) {
    if (e.args.size() != n) {
      throw CatalogError(e.name + " takes " + std::to_string(n) + " argument(s), got " +
                         std::to_string(e.args.size()));
    }
  };

  auto bounded = [](std::size_t degree) {
    if (degree > max_degree) throw CatalogError("degree " + std::to_string(degree) + " too large");
    return degree;
  };

  if (e.name == "cyclic") {
    arity(1);
    return cyclic(bounded(int_arg(0)));
  }
  if (e.name == "dihedral") {
    arity(1);
    bounded(int_arg(0) / 2);
    return dihedral(int_arg(0));
  }
  if (e.name == "symmetric") {
    arity(1);
    return symmetric(bounded(int_arg(0)));
  }
  if (e.name == "alternating") {
    arity(1);
    return alternating(bounded(int_arg(0)));
  }
  if (e.name == "frobenius") {
    arity(2);
    return frobenius(bounded(int_arg(0)), int_arg(1));
  }
  if (e.name == "direct_product") {
    arity(2);
    auto g = group_arg(0);
    auto h = group_arg(1);
    bounded(g.degree() + h.degree());
    return direct_product(g, h);
  }
  if (e.name == "psl27" || e.name == "sl23" || e.name == "sl23_example") {
    arity(0);
    if (e.name == "psl27") return psl27();
    if (e.name == "sl23") return sl23();
    return sl23_example();
  }
  throw CatalogError("unknown catalog group \"" + e.name + "\"");
}

}  // namespace detail

inline Expr parse_expr(std::string_view text) { return detail::ExprParser(text).parse(); }

/// Builds a group from a catalog expression. Throws CatalogError.
inline PermutationGroup make(std::string_view text) { return detail::evaluate(parse_expr(text)); }

inline const std::vector<std::string>& names() {
  static const std::vector<std::string> n{"cyclic(n)",      "dihedral(order)",  "symmetric(n)",
                                          "alternating(n)", "frobenius(p,d)",   "direct_product(G,H)",
                                          "psl27",          "sl23",             "sl23_example"};
  return n;
}

/// The verification sweep, in a fixed order.
inline const std::vector<std::string>& standard_sweep() {
  static const std::vector<std::string> sweep{
      // two primes or fewer: empty graphs
      "cyclic(1)", "cyclic(12)", "symmetric(3)", "symmetric(4)", "alternating(4)", "sl23",
      "dihedral(24)", "frobenius(7,3)", "direct_product(frobenius(7,3),frobenius(7,3))",
      // solvable, three primes
      "cyclic(30)", "dihedral(30)", "dihedral(42)", "dihedral(90)",
      "direct_product(frobenius(7,3),cyclic(2))", "frobenius(7,6)", "frobenius(13,12)",
      "frobenius(11,5)", "direct_product(symmetric(3),frobenius(7,3))",
      "direct_product(frobenius(7,3),cyclic(5))", "direct_product(sl23,frobenius(7,3))",
      "direct_product(dihedral(30),dihedral(6))", "sl23_example",
      "direct_product(sl23_example,cyclic(2))",
      // solvable, four primes
      "cyclic(105)", "dihedral(210)", "direct_product(dihedral(30),cyclic(7))",
      "direct_product(frobenius(5,4),frobenius(7,3))",
      // non-solvable
      "alternating(5)", "symmetric(5)", "psl27", "alternating(6)", "symmetric(6)", "alternating(7)",
      "direct_product(alternating(5),cyclic(2))", "direct_product(alternating(5),cyclic(7))",
      "direct_product(psl27,cyclic(5))", "direct_product(symmetric(5),cyclic(7))",
      "direct_product(alternating(5),symmetric(3))"};
  return sweep;
}

}  // namespace catalog

}  // namespace ntp

#endif  // NTP_CATALOG_HPP
