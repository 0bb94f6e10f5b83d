#pragma once

// Eigensheaf degrees for the (Z/nZ)^2-cover of P^1 branched over {0, 1, inf}.
//
// Every summand of p_* O, p_* omega and p_* omega^2 is a line bundle on P^1,
// so it is recorded by its degree alone. Two routes are provided for the
// canonical and bicanonical degrees: the general building-bundle formulas,
// and the piecewise closed forms in namespace piecewise. They must agree.

#include <algorithm>
#include <array>
#include <cstddef>
#include <string_view>
#include <vector>

#include "rigidpq/error.hpp"
#include "rigidpq/group.hpp"

namespace rigidpq {

enum class BranchPoint { Zero, One, Infinity };

inline constexpr std::array<BranchPoint, 3> kBranchPoints{BranchPoint::Zero, BranchPoint::One,
                                                          BranchPoint::Infinity};

constexpr std::size_t index_of(BranchPoint p) noexcept { return static_cast<std::size_t>(p); }

constexpr std::string_view label(BranchPoint p) noexcept {
  switch (p) {
    case BranchPoint::Zero: return "0";
    case BranchPoint::One: return "1";
    case BranchPoint::Infinity: return "inf";
  }
  return "?";
}

/// Spherical generating triple (g_0, g_1, g_inf) of G with g_0 + g_1 + g_inf = 0.
class TriangleCoverData {
 public:
  TriangleCoverData(GroupModulus n, const GroupElement& g0, const GroupElement& g1,
                    const GroupElement& ginf)
      : n_(n), monodromies_{g0, g1, ginf} {
    if (add(n, add(n, g0, g1), ginf) != GroupElement{})
      throw Error(ErrorKind::Domain, "monodromies must sum to zero");
    // Since the sum vanishes, <g_0, g_inf> is the whole span; it is G iff the
    // 2x2 matrix with columns g_0, g_inf is invertible mod n.
    if (!inverse_mod(g0.a() * ginf.b() - g0.b() * ginf.a(), n.value()))
      throw Error(ErrorKind::Domain, "monodromies must generate G");
  }

  /// g_0 = (1,0), g_inf = (0,1), g_1 = (-1,-1).
  static TriangleCoverData standard(GroupModulus n) {
    return {n, GroupElement{n, 1, 0}, GroupElement{n, -1, -1}, GroupElement{n, 0, 1}};
  }

  GroupModulus modulus() const noexcept { return n_; }
  const GroupElement& monodromy(BranchPoint p) const noexcept { return monodromies_[index_of(p)]; }

  /// Every local monodromy has order n, so each branch point carries a
  /// branch divisor D_{H_p, psi_p} of degree 1 with |H_p| = n.
  bool has_full_order_monodromies() const {
    return std::all_of(monodromies_.begin(), monodromies_.end(),
                       [&](const GroupElement& g) { return element_order(n_, g) == n_.value(); });
  }

 private:
  GroupModulus n_;
  std::array<GroupElement, 3> monodromies_;
};

/// Degree of a line bundle on P^1.
struct EigensheafDegree {
  Int value = 0;
  auto operator<=>(const EigensheafDegree&) const = default;
};

inline Int h0_eigensheaf(EigensheafDegree d) noexcept { return std::max<Int>(0, d.value + 1); }

/// Riemann-Hurwitz: 2g - 2 = |G| (-2 + sum_p (1 - 1/m_p)).
inline Int genus(const TriangleCoverData& cover) {
  const GroupModulus n = cover.modulus();
  const Int order = n.group_order();
  Int twice_g_minus_2 = -2 * order;
  for (BranchPoint p : kBranchPoints) {
    const Int m = element_order(n, cover.monodromy(p));
    twice_g_minus_2 += order - order / m;
  }
  if (twice_g_minus_2 % 2 != 0) inconsistency("odd Riemann-Hurwitz count");
  return 1 + twice_g_minus_2 / 2;
}

namespace detail {

inline void require_full_order(const TriangleCoverData& cover) {
  if (!cover.has_full_order_monodromies())
    throw Error(ErrorKind::Precondition,
                "degree formulas require local monodromies of order n at every branch point");
}

/// Exponents e_p with chi(g_p) = eta^{e_p}, in 0..n-1.
inline std::array<Int, 3> local_exponents(const TriangleCoverData& cover, const Character& chi) {
  std::array<Int, 3> e{};
  for (BranchPoint p : kBranchPoints)
    e[index_of(p)] = char_eval(cover.modulus(), chi, cover.monodromy(p)).exponent();
  return e;
}

}  // namespace detail

/// deg L_chi = (alpha + beta + gamma) / n, with gamma = -alpha - beta mod n
/// for the standard data. In general the three summands are the exponents
/// of chi on the local monodromies.
inline EigensheafDegree building_bundle_degree(const TriangleCoverData& cover,
                                               const Character& chi) {
  detail::require_full_order(cover);
  const auto e = detail::local_exponents(cover, chi);
  const Int sum = e[0] + e[1] + e[2];
  if (sum % cover.modulus().value() != 0) inconsistency("building bundle degree not integral");
  return {sum / cover.modulus().value()};
}

/// (p_* omega)^chi = omega_{P^1} (x) L_{-chi}.
inline EigensheafDegree canonical_eigendegree(const TriangleCoverData& cover,
                                              const Character& chi) {
  return {-2 + building_bundle_degree(cover, negate(cover.modulus(), chi)).value};
}

/// Number of branch points p where chi restricted to H_p differs from psi_p,
/// the character sending g_p to eta.
inline Int bicanonical_correction(const TriangleCoverData& cover, const Character& chi) {
  detail::require_full_order(cover);
  const auto e = detail::local_exponents(cover, chi);
  return std::count_if(e.begin(), e.end(), [](Int x) { return x != 1; });
}

inline EigensheafDegree bicanonical_eigendegree(const TriangleCoverData& cover,
                                                const Character& chi) {
  if (cover.modulus().value() < 4)
    throw DomainError(Hypothesis::Minimum, "closed form requires n >= 4");
  return {canonical_eigendegree(cover, chi).value + bicanonical_correction(cover, chi) - 2};
}

/// Coefficients of the divisor of the eigenform omega^chi along the reduced
/// ramification divisors over 0, inf and 1.
struct EigenformDivisor {
  Int at_zero = 0;
  Int at_infinity = 0;
  Int at_one = 0;
  auto operator<=>(const EigenformDivisor&) const = default;
};

inline EigenformDivisor eigenform_divisor(const TriangleCoverData& cover, const Character& chi) {
  if (canonical_eigendegree(cover, chi).value != 0)
    throw Error(ErrorKind::NoEigenform, "eigenspace is zero; no eigenform");
  const auto e = detail::local_exponents(cover, chi);
  return {e[index_of(BranchPoint::Zero)] - 1, e[index_of(BranchPoint::Infinity)] - 1,
          e[index_of(BranchPoint::One)] - 1};
}

namespace piecewise {

inline Int canonical_degree(GroupModulus n, const Character& chi) {
  const Int a = chi.alpha(), b = chi.beta();
  if (a == 0 && b == 0) return -2;
  if (a != 0 && b != 0 && a + b <= n.value() - 1) return 0;
  return -1;
}

inline Int bicanonical_degree(GroupModulus n, const Character& chi) {
  const Int N = n.value();
  if (N < 4) throw DomainError(Hypothesis::Minimum, "closed form requires n >= 4");
  const Int a = chi.alpha(), b = chi.beta();
  const bool minus_one = (a <= 1 && b <= 1) || (a == 0 && b == N - 1) || (a == N - 1 && b == 0) ||
                         (a == 1 && b == N - 1) || (a == N - 1 && b == 1) ||
                         (a == 1 && b == N - 2) || (a == N - 2 && b == 1);
  if (minus_one) return -1;
  if (a >= 2 && b >= 2 && a + b <= N - 2) return 1;
  return 0;
}

}  // namespace piecewise

/// Degrees of (p_* omega^power)^(alpha, beta); rows by alpha, columns by beta.
struct DegreeTable {
  Int n = 0;
  int power = 1;
  std::vector<std::vector<Int>> degrees;
};

inline DegreeTable eigendegree_table(const TriangleCoverData& cover, int power) {
  if (power != 1 && power != 2) throw Error(ErrorKind::Domain, "power must be 1 or 2");
  const GroupModulus n = cover.modulus();
  if (power == 2 && n.value() < 4)
    throw DomainError(Hypothesis::Minimum, "closed form requires n >= 4");
  DegreeTable table{n.value(), power, {}};
  table.degrees.assign(static_cast<std::size_t>(n.value()),
                       std::vector<Int>(static_cast<std::size_t>(n.value())));
  for (Int a = 0; a < n.value(); ++a) {
    for (Int b = 0; b < n.value(); ++b) {
      const Character chi{n, a, b};
      table.degrees[a][b] = power == 1 ? canonical_eigendegree(cover, chi).value
                                       : bicanonical_eigendegree(cover, chi).value;
    }
  }
  return table;
}

}  // namespace rigidpq
