#pragma once

// Picard lattice of the blowup of P^2 at n points: Z^{1,n} with the pairing
// diag(1, -1, ..., -1) in the basis e_0 (line class), e_1..e_n (exceptional
// divisors).  Everything here is exact; there is no floating point.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cremona/error.hpp"

namespace cremona {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline int sign(const Integer& x) { return x.sign(); }
inline int sign(const Rational& x) { return x.sign(); }

/// Signed decimal integer; surrounding whitespace is ignored.
inline Integer parse_integer(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  const auto last = text.find_last_not_of(" \t\r\n");
  require(first != std::string_view::npos, "empty integer");
  text = text.substr(first, last - first + 1);
  std::size_t pos = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  require(pos < text.size(), "malformed integer '" + std::string(text) + "'");
  for (std::size_t i = pos; i < text.size(); ++i)
    require(text[i] >= '0' && text[i] <= '9', "malformed integer '" + std::string(text) + "'");
  Integer v(std::string(text.substr(pos)));
  return text[0] == '-' ? Integer(-v) : v;
}

/// An integer class x_0 e_0 + x_1 e_1 + ... + x_n e_n.
///
/// The type itself accepts any n >= 1 so the cone machinery can be exercised
/// on toy cones; operations that need three blown-up points (the Cremona
/// generators, the canonical class, (-1)-classes) check n >= 3 themselves.
class PicClass {
 public:
  PicClass() = default;

  explicit PicClass(std::vector<Integer> coords) : coords_(std::move(coords)) {
    require(coords_.size() >= 2, "a Picard class needs at least two coordinates (n >= 1)");
  }

  PicClass(std::initializer_list<long long> coords) {
    coords_.reserve(coords.size());
    for (long long c : coords) coords_.emplace_back(c);
    require(coords_.size() >= 2, "a Picard class needs at least two coordinates (n >= 1)");
  }

  static PicClass zero(int n) {
    require(n >= 1, "n must be positive");
    return PicClass(std::vector<Integer>(static_cast<std::size_t>(n) + 1));
  }

  /// The basis vector e_i, 0 <= i <= n.
  static PicClass basis(int n, int i) {
    require(i >= 0 && i <= n, "basis index out of range");
    std::vector<Integer> c(static_cast<std::size_t>(n) + 1);
    c[static_cast<std::size_t>(i)] = 1;
    return PicClass(std::move(c));
  }

  int n() const { return static_cast<int>(coords_.size()) - 1; }
  std::size_t size() const { return coords_.size(); }
  const Integer& operator[](std::size_t i) const { return coords_[i]; }
  std::span<const Integer> coords() const { return coords_; }
  const std::vector<Integer>& vector() const { return coords_; }

  /// degree(v) = v . e_0 = x_0.
  const Integer& degree() const { return coords_.front(); }

  bool is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const Integer& x) { return x == 0; });
  }

  PicClass with(std::size_t i, Integer value) const {
    std::vector<Integer> c = coords_;
    c.at(i) = std::move(value);
    return PicClass(std::move(c));
  }

  friend bool operator==(const PicClass&, const PicClass&) = default;

  /// Lexicographic order on (x_0, x_1, ..., x_n); classes of different rank
  /// compare by rank first.
  friend std::strong_ordering operator<=>(const PicClass& a, const PicClass& b) {
    if (a.coords_.size() != b.coords_.size()) return a.coords_.size() <=> b.coords_.size();
    for (std::size_t i = 0; i < a.coords_.size(); ++i) {
      if (a.coords_[i] < b.coords_[i]) return std::strong_ordering::less;
      if (b.coords_[i] < a.coords_[i]) return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
  }

  friend PicClass operator+(const PicClass& a, const PicClass& b) {
    require(a.n() == b.n(), "dimension mismatch");
    std::vector<Integer> c(a.coords_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coords_[i] + b.coords_[i];
    return PicClass(std::move(c));
  }

  friend PicClass operator-(const PicClass& a, const PicClass& b) {
    require(a.n() == b.n(), "dimension mismatch");
    std::vector<Integer> c(a.coords_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coords_[i] - b.coords_[i];
    return PicClass(std::move(c));
  }

  friend PicClass operator-(const PicClass& a) {
    std::vector<Integer> c(a.coords_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = -a.coords_[i];
    return PicClass(std::move(c));
  }

  friend PicClass operator*(const Integer& k, const PicClass& a) {
    std::vector<Integer> c(a.coords_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = k * a.coords_[i];
    return PicClass(std::move(c));
  }

  std::string to_string() const {
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      if (i) out << ',';
      out << coords_[i];
    }
    out << ')';
    return out.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const PicClass& v) { return os << v.to_string(); }

 private:
  std::vector<Integer> coords_;
};

/// A projective point (x_0 : ... : x_n) with rational coordinates.
class RationalRay {
 public:
  explicit RationalRay(std::vector<Rational> coords) : coords_(std::move(coords)) {
    require(coords_.size() >= 2, "a ray needs at least two coordinates");
    require(std::any_of(coords_.begin(), coords_.end(), [](const Rational& x) { return x != 0; }),
            "a ray cannot be the zero vector");
  }

  int n() const { return static_cast<int>(coords_.size()) - 1; }
  std::span<const Rational> coords() const { return coords_; }

 private:
  std::vector<Rational> coords_;
};

/// u . v = u_0 v_0 - sum_{i>=1} u_i v_i.
inline Integer pairing(const PicClass& u, const PicClass& v) {
  require(u.n() == v.n(), "pairing: dimension mismatch (n = " + std::to_string(u.n()) + " vs " +
                              std::to_string(v.n()) + ")");
  Integer acc = u[0] * v[0];
  for (std::size_t i = 1; i < u.size(); ++i) acc -= u[i] * v[i];
  return acc;
}

inline Integer square(const PicClass& v) { return pairing(v, v); }

/// K = -3 e_0 + e_1 + ... + e_n.
inline PicClass canonical_class(int n) {
  require(n >= 3, "the canonical class is defined here for n >= 3");
  std::vector<Integer> c(static_cast<std::size_t>(n) + 1, Integer(1));
  c[0] = -3;
  return PicClass(std::move(c));
}

/// -K = 3 e_0 - e_1 - ... - e_n.
inline PicClass anticanonical_class(int n) { return -canonical_class(n); }

struct LightConePosition {
  enum class Tag { Interior, Boundary, Outside };
  Tag tag;
  bool forward;  // x_0 > 0

  friend bool operator==(const LightConePosition&, const LightConePosition&) = default;
};

inline const char* to_string(LightConePosition::Tag tag) {
  switch (tag) {
    case LightConePosition::Tag::Interior: return "interior";
    case LightConePosition::Tag::Boundary: return "boundary";
    case LightConePosition::Tag::Outside: return "outside";
  }
  return "?";
}

inline LightConePosition light_cone_position(const PicClass& v) {
  require(!v.is_zero(), "light_cone_position: zero vector");
  const int s = sign(square(v));
  const auto tag = s > 0   ? LightConePosition::Tag::Interior
                   : s == 0 ? LightConePosition::Tag::Boundary
                            : LightConePosition::Tag::Outside;
  return {tag, v[0] > 0};
}

namespace detail {

inline Integer gcd_of(std::span<const Integer> xs) {
  Integer g = 0;
  for (const auto& x : xs) g = boost::multiprecision::gcd(g, x);
  return boost::multiprecision::abs(g);
}

/// Divides by the content; keeps the sign.
inline std::vector<Integer> divide_content(std::vector<Integer> xs) {
  const Integer g = gcd_of(xs);
  if (g > 1)
    for (auto& x : xs) x /= g;
  return xs;
}

}  // namespace detail

/// Primitive integer representative with canonical sign: x_0 > 0 when
/// x_0 != 0, otherwise the first nonzero coordinate is positive.
inline PicClass primitive(const PicClass& v) {
  require(!v.is_zero(), "primitive: zero vector");
  std::vector<Integer> c = detail::divide_content(v.vector());
  const auto first = std::find_if(c.begin(), c.end(), [](const Integer& x) { return x != 0; });
  if (*first < 0)
    for (auto& x : c) x = -x;
  return PicClass(std::move(c));
}

/// Integer vector obtained by clearing denominators with a positive factor.
inline PicClass clear_denominators(const RationalRay& r) {
  Integer lcm = 1;
  for (const auto& x : r.coords()) {
    const Integer d = boost::multiprecision::denominator(x);
    lcm = lcm / boost::multiprecision::gcd(lcm, d) * d;
  }
  std::vector<Integer> c;
  for (const auto& x : r.coords())
    c.push_back(boost::multiprecision::numerator(x) * (lcm / boost::multiprecision::denominator(x)));
  return PicClass(std::move(c));
}

inline PicClass primitive(const RationalRay& r) { return primitive(clear_denominators(r)); }

/// Parses "x0,x1,...,xn" (whitespace ignored).  With expected_n >= 0 the
/// number of entries must be expected_n + 1.
inline PicClass parse_pic_class(std::string_view text, int expected_n = -1) {
  std::vector<Integer> c;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    c.push_back(parse_integer(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (expected_n >= 0)
    require(c.size() == static_cast<std::size_t>(expected_n) + 1,
            "expected " + std::to_string(expected_n + 1) + " coordinates, got " + std::to_string(c.size()));
  return PicClass(std::move(c));
}

}  // namespace cremona
