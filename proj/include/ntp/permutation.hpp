#ifndef NTP_PERMUTATION_HPP
#define NTP_PERMUTATION_HPP

// Dense permutations on {0..n-1}.
//
// Action convention (project-wide): permutations act on the right, so the
// product p*q means "apply p, then q":  compose(p, q)(i) == q(p(i)).
// Conjugation follows the same convention:  x^g == g^-1 * x * g.
//
// Points are 0-based in memory and 1-based in all text I/O.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ntp {

using point_t = std::uint16_t;

inline constexpr std::size_t max_degree = 1024;

class DegreeMismatch : public std::invalid_argument {
 public:
  DegreeMismatch(std::size_t a, std::size_t b)
      : std::invalid_argument("permutation degree mismatch: " + std::to_string(a) + " vs " +
                              std::to_string(b)) {}
};

class CycleParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Permutation {
 public:
  Permutation() = default;

  /// Identity of the given degree.
  explicit Permutation(std::size_t degree) : images_(degree) {
    check_degree(degree);
    std::iota(images_.begin(), images_.end(), point_t{0});
  }

  /// Throws std::invalid_argument unless `images` is a bijection of {0..n-1}.
  static Permutation from_images(std::span<const std::size_t> images) {
    check_degree(images.size());
    Permutation p;
    p.images_.resize(images.size());
    std::vector<bool> seen(images.size(), false);
    for (std::size_t i = 0; i < images.size(); ++i) {
      std::size_t img = images[i];
      if (img >= images.size() || seen[img]) {
        throw std::invalid_argument("image table is not a bijection");
      }
      seen[img] = true;
      p.images_[i] = static_cast<point_t>(img);
    }
    return p;
  }

  static Permutation from_images(std::initializer_list<std::size_t> images) {
    std::vector<std::size_t> v(images);
    return from_images(std::span<const std::size_t>(v));
  }

  /// Builds from disjoint cycles given with 0-based points.
  static Permutation from_cycles(std::size_t degree,
                                 std::span<const std::vector<std::size_t>> cycles) {
    Permutation p(degree);
    std::vector<bool> used(degree, false);
    for (const auto& cyc : cycles) {
      for (std::size_t k = 0; k < cyc.size(); ++k) {
        std::size_t a = cyc[k];
        if (a >= degree) throw std::invalid_argument("cycle point out of range");
        if (used[a]) throw std::invalid_argument("cycle point repeated");
        used[a] = true;
        p.images_[a] = static_cast<point_t>(cyc[(k + 1) % cyc.size()]);
      }
    }
    return p;
  }

  std::size_t degree() const noexcept { return images_.size(); }
  point_t operator()(std::size_t i) const noexcept { return images_[i]; }
  point_t operator[](std::size_t i) const noexcept { return images_[i]; }
  std::span<const point_t> images() const noexcept { return images_; }

  bool is_identity() const noexcept {
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (images_[i] != i) return false;
    }
    return true;
  }

  /// Smallest point not fixed, or degree() for the identity.
  std::size_t first_moved_point() const noexcept {
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (images_[i] != i) return i;
    }
    return images_.size();
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  static void check_degree(std::size_t degree) {
    if (degree > max_degree) {
      throw std::invalid_argument("degree " + std::to_string(degree) + " exceeds " +
                                  std::to_string(max_degree));
    }
  }

  std::vector<point_t> images_;

  friend Permutation compose(const Permutation&, const Permutation&);
  friend Permutation inverse(const Permutation&);
  friend void compose_into(const Permutation&, const Permutation&, Permutation&);
};

/// Left-to-right product: i -> q(p(i)).
inline Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) throw DegreeMismatch(p.degree(), q.degree());
  Permutation r;
  r.images_.resize(p.degree());
  for (std::size_t i = 0; i < p.degree(); ++i) r.images_[i] = q.images_[p.images_[i]];
  return r;
}

/// Same as `out = compose(p, q)` without reallocating `out`; `out` must not alias p or q.
inline void compose_into(const Permutation& p, const Permutation& q, Permutation& out) {
  if (p.degree() != q.degree()) throw DegreeMismatch(p.degree(), q.degree());
  out.images_.resize(p.degree());
  for (std::size_t i = 0; i < p.degree(); ++i) out.images_[i] = q.images_[p.images_[i]];
}

inline Permutation operator*(const Permutation& p, const Permutation& q) { return compose(p, q); }

inline Permutation inverse(const Permutation& p) {
  Permutation r;
  r.images_.resize(p.degree());
  for (std::size_t i = 0; i < p.degree(); ++i) r.images_[p.images_[i]] = static_cast<point_t>(i);
  return r;
}

/// x^g = g^-1 x g
inline Permutation conjugate(const Permutation& x, const Permutation& g) {
  return compose(compose(inverse(g), x), g);
}

inline Permutation power(const Permutation& p, long long e) {
  Permutation base = e < 0 ? inverse(p) : p;
  unsigned long long n = e < 0 ? static_cast<unsigned long long>(-e) : static_cast<unsigned long long>(e);
  Permutation result(p.degree());
  while (n > 0) {
    if (n & 1ULL) result = compose(result, base);
    base = compose(base, base);
    n >>= 1;
  }
  return result;
}

/// Commutator [a,b] = a^-1 b^-1 a b.
inline Permutation commutator(const Permutation& a, const Permutation& b) {
  return compose(compose(inverse(a), inverse(b)), compose(a, b));
}

using Cycle = std::vector<std::size_t>;

/// Non-trivial cycles, each starting at its smallest point, sorted by first point.
inline std::vector<Cycle> cycle_decomposition(const Permutation& p) {
  std::vector<Cycle> cycles;
  std::vector<bool> seen(p.degree(), false);
  for (std::size_t start = 0; start < p.degree(); ++start) {
    if (seen[start] || p(start) == start) continue;
    Cycle c;
    for (std::size_t x = start; !seen[x]; x = p(x)) {
      seen[x] = true;
      c.push_back(x);
    }
    cycles.push_back(std::move(c));
  }
  return cycles;
}

/// lcm of the cycle lengths.
inline std::uint64_t element_order(const Permutation& p) {
  std::uint64_t order = 1;
  std::vector<bool> seen(p.degree(), false);
  for (std::size_t start = 0; start < p.degree(); ++start) {
    if (seen[start]) continue;
    std::uint64_t len = 0;
    for (std::size_t x = start; !seen[x]; x = p(x)) {
      seen[x] = true;
      ++len;
    }
    order = std::lcm(order, len);
  }
  return order;
}

/// Canonical 1-based cycle notation, "()" for the identity.
inline std::string format_cycles(const Permutation& p) {
  auto cycles = cycle_decomposition(p);
  if (cycles.empty()) return "()";
  std::string out;
  for (const auto& c : cycles) {
    out += '(';
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (k) out += ',';
      out += std::to_string(c[k] + 1);
    }
    out += ')';
  }
  return out;
}

/// Grammar: permutation := "()" | cycle+ ; cycle := "(" int ("," int)+ ")".
/// Points are 1-based; whitespace between tokens is ignored.
inline Permutation parse_cycles(std::string_view text, std::size_t degree) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& what) -> CycleParseError {
    return CycleParseError(what + " at offset " + std::to_string(pos) + " in \"" +
                           std::string(text) + "\"");
  };

  skip_ws();
  if (pos == text.size()) throw fail("empty permutation text");

  // "()" alone is the identity.
  {
    std::size_t save = pos;
    if (text[pos] == '(') {
      ++pos;
      skip_ws();
      if (pos < text.size() && text[pos] == ')') {
        ++pos;
        skip_ws();
        if (pos == text.size()) return Permutation(degree);
        throw fail("\"()\" must stand alone");
      }
    }
    pos = save;
  }

  std::vector<Cycle> cycles;
  std::vector<bool> used(degree, false);
  while (true) {
    skip_ws();
    if (pos == text.size()) break;
    if (text[pos] != '(') throw fail("expected '('");
    ++pos;
    Cycle c;
    while (true) {
      skip_ws();
      if (pos == text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) {
        throw fail("expected point");
      }
      std::size_t value = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + static_cast<std::size_t>(text[pos] - '0');
        if (value > max_degree) throw fail("point out of range");
        ++pos;
      }
      if (value == 0 || value > degree) throw fail("point " + std::to_string(value) + " out of range");
      if (used[value - 1]) throw fail("repeated point " + std::to_string(value));
      used[value - 1] = true;
      c.push_back(value - 1);
      skip_ws();
      if (pos == text.size()) throw fail("unterminated cycle");
      if (text[pos] == ',') {
        ++pos;
        continue;
      }
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      throw fail("expected ',' or ')'");
    }
    if (c.size() < 2) throw fail("cycle needs at least two points");
    cycles.push_back(std::move(c));
  }
  return Permutation::from_cycles(degree, cycles);
}

}  // namespace ntp

template <>
struct std::hash<ntp::Permutation> {
  std::size_t operator()(const ntp::Permutation& p) const noexcept {
    // FNV-1a over the image table.
    std::uint64_t h = 1469598103934665603ULL;
    for (auto v : p.images()) {
      h ^= v;
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

#endif  // NTP_PERMUTATION_HPP
