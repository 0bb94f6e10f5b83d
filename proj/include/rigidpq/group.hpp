#pragma once

// Exact arithmetic in G = (Z/nZ)^2, its dual group and formal n-th roots of
// unity. Roots of unity never leave exponent form: eta^x == eta^y iff
// x == y (mod n).

#include <algorithm>
#include <compare>
#include <cstdint>
#include <iterator>
#include <numeric>
#include <optional>
#include <ostream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "rigidpq/error.hpp"

namespace rigidpq {

using Int = std::int64_t;

constexpr Int reduce_mod(Int x, Int n) noexcept {
  const Int r = x % n;
  return r < 0 ? r + n : r;
}

/// Inverse of x modulo n, if gcd(x, n) == 1.
constexpr std::optional<Int> inverse_mod(Int x, Int n) noexcept {
  Int r0 = n, r1 = reduce_mod(x, n);
  Int t0 = 0, t1 = 1;
  while (r1 != 0) {
    const Int q = r0 / r1;
    std::tie(r0, r1) = std::pair{r1, r0 - q * r1};
    std::tie(t0, t1) = std::pair{t1, t0 - q * t1};
  }
  if (r0 != 1) return std::nullopt;
  return reduce_mod(t0, n);
}

/// Order n of each cyclic factor; |G| = n^2.
class GroupModulus {
 public:
  explicit GroupModulus(Int n) : n_(n) {
    if (n < 2) throw DomainError(Hypothesis::Minimum, "group modulus must be at least 2");
  }

  Int value() const noexcept { return n_; }
  Int group_order() const noexcept { return n_ * n_; }
  Int reduce(Int x) const noexcept { return reduce_mod(x, n_); }

  bool operator==(const GroupModulus&) const = default;

 private:
  Int n_;
};

class GroupElement {
 public:
  GroupElement() = default;
  GroupElement(GroupModulus n, Int a, Int b) : a_(n.reduce(a)), b_(n.reduce(b)) {}

  Int a() const noexcept { return a_; }
  Int b() const noexcept { return b_; }

  auto operator<=>(const GroupElement&) const = default;

  friend std::ostream& operator<<(std::ostream& os, const GroupElement& g) {
    return os << '(' << g.a_ << ',' << g.b_ << ')';
  }

 private:
  Int a_ = 0;
  Int b_ = 0;
};

/// Character (alpha, beta) acting by (a, b) -> eta^(alpha a + beta b).
class Character {
 public:
  Character() = default;
  Character(GroupModulus n, Int alpha, Int beta)
      : alpha_(n.reduce(alpha)), beta_(n.reduce(beta)) {}

  Int alpha() const noexcept { return alpha_; }
  Int beta() const noexcept { return beta_; }

  auto operator<=>(const Character&) const = default;

  friend std::ostream& operator<<(std::ostream& os, const Character& c) {
    return os << '(' << c.alpha_ << ',' << c.beta_ << ')';
  }

 private:
  Int alpha_ = 0;
  Int beta_ = 0;
};

/// eta^e with eta = exp(2 pi i / n), kept as the residue e.
class RootOfUnityExponent {
 public:
  RootOfUnityExponent(GroupModulus n, Int e) : n_(n.value()), e_(n.reduce(e)) {}

  Int exponent() const noexcept { return e_; }
  Int modulus() const noexcept { return n_; }

  RootOfUnityExponent inverse() const { return {GroupModulus(n_), -e_}; }
  RootOfUnityExponent operator*(const RootOfUnityExponent& o) const {
    return {GroupModulus(n_), e_ + o.e_};
  }
  bool is_one() const noexcept { return e_ == 0; }

  bool operator==(const RootOfUnityExponent&) const = default;

 private:
  Int n_;
  Int e_;
};

inline GroupElement add(GroupModulus n, const GroupElement& g, const GroupElement& h) {
  return {n, g.a() + h.a(), g.b() + h.b()};
}
inline GroupElement scale(GroupModulus n, Int k, const GroupElement& g) {
  return {n, k * g.a(), k * g.b()};
}
inline GroupElement negate(GroupModulus n, const GroupElement& g) { return {n, -g.a(), -g.b()}; }

inline Character add(GroupModulus n, const Character& x, const Character& y) {
  return {n, x.alpha() + y.alpha(), x.beta() + y.beta()};
}
inline Character negate(GroupModulus n, const Character& x) {
  return {n, -x.alpha(), -x.beta()};
}

/// Smallest k >= 1 with k g = 0.
inline Int element_order(GroupModulus n, const GroupElement& g) {
  return n.value() / std::gcd(n.value(), std::gcd(g.a(), g.b()));
}

/// Elements of <g>, sorted.
inline std::vector<GroupElement> cyclic_subgroup(GroupModulus n, const GroupElement& g) {
  const Int m = element_order(n, g);
  std::vector<GroupElement> out;
  out.reserve(static_cast<std::size_t>(m));
  for (Int k = 0; k < m; ++k) out.push_back(scale(n, k, g));
  std::sort(out.begin(), out.end());
  return out;
}

/// <g> intersected with <h>, sorted.
inline std::vector<GroupElement> cyclic_intersection(GroupModulus n, const GroupElement& g,
                                                     const GroupElement& h) {
  const auto sg = cyclic_subgroup(n, g);
  const auto sh = cyclic_subgroup(n, h);
  std::vector<GroupElement> out;
  std::set_intersection(sg.begin(), sg.end(), sh.begin(), sh.end(), std::back_inserter(out));
  return out;
}

inline RootOfUnityExponent char_eval(GroupModulus n, const Character& chi, const GroupElement& g) {
  return {n, chi.alpha() * g.a() + chi.beta() * g.b()};
}

/// 2x2 matrix over Z/nZ with unit determinant.
class TwistMatrix {
 public:
  TwistMatrix(GroupModulus n, Int m00, Int m01, Int m10, Int m11)
      : n_(n), m_{n.reduce(m00), n.reduce(m01), n.reduce(m10), n.reduce(m11)} {
    if (!inverse_mod(determinant(), n_.value()))
      throw Error(ErrorKind::NotInvertible, "twist not invertible mod n");
  }

  static TwistMatrix identity(GroupModulus n) { return {n, 1, 0, 0, 1}; }

  /// A = (1 -2; 2 -1), det A = 3.
  static TwistMatrix standard(GroupModulus n) { return {n, 1, -2, 2, -1}; }

  GroupModulus modulus() const noexcept { return n_; }
  Int operator()(int row, int col) const noexcept { return m_[row * 2 + col]; }
  Int determinant() const noexcept { return n_.reduce(m_[0] * m_[3] - m_[1] * m_[2]); }

  TwistMatrix transpose() const { return {n_, m_[0], m_[2], m_[1], m_[3]}; }

  /// Adjugate times the inverse of the determinant.
  TwistMatrix inverse() const {
    const Int d = *inverse_mod(determinant(), n_.value());
    return {n_, d * m_[3], -d * m_[1], -d * m_[2], d * m_[0]};
  }

  TwistMatrix transpose_inverse() const { return inverse().transpose(); }

  TwistMatrix operator*(const TwistMatrix& o) const {
    return {n_, m_[0] * o.m_[0] + m_[1] * o.m_[2], m_[0] * o.m_[1] + m_[1] * o.m_[3],
            m_[2] * o.m_[0] + m_[3] * o.m_[2], m_[2] * o.m_[1] + m_[3] * o.m_[3]};
  }

  bool operator==(const TwistMatrix&) const = default;

 private:
  GroupModulus n_;
  Int m_[4];
};

inline GroupElement apply_twist(GroupModulus n, const TwistMatrix& m, const GroupElement& v) {
  if (!(m.modulus() == n)) throw Error(ErrorKind::Precondition, "twist modulus mismatch");
  return {n, m(0, 0) * v.a() + m(0, 1) * v.b(), m(1, 0) * v.a() + m(1, 1) * v.b()};
}

inline Character apply_twist(GroupModulus n, const TwistMatrix& m, const Character& v) {
  if (!(m.modulus() == n)) throw Error(ErrorKind::Precondition, "twist modulus mismatch");
  return {n, m(0, 0) * v.alpha() + m(0, 1) * v.beta(), m(1, 0) * v.alpha() + m(1, 1) * v.beta()};
}

}  // namespace rigidpq
