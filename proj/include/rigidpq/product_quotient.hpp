#pragma once

// X_n = (C x C) / G, with G acting on the second factor through the twist A,
// its singular locus, and the invariants of the minimal resolution S_n.

#include <array>
#include <string>
#include <vector>

#include "rigidpq/error.hpp"
#include "rigidpq/group.hpp"
#include "rigidpq/triangle_cover.hpp"

namespace rigidpq {

/// Domain guard shared by the construction: n even, 3 does not divide n,
/// n >= minimum.
inline void check_construction_domain(Int n, Int minimum) {
  if (n < 2) throw DomainError(Hypothesis::Minimum, "n must be at least " + std::to_string(minimum));
  if (n % 2 != 0) throw DomainError(Hypothesis::Even, "n must be even");
  if (n % 3 == 0) throw DomainError(Hypothesis::NotDivisibleBy3, "n must not be divisible by 3");
  if (n < minimum)
    throw DomainError(Hypothesis::Minimum, "n must be at least " + std::to_string(minimum));
}

class ProductQuotientInput {
 public:
  ProductQuotientInput(TriangleCoverData first_cover, TwistMatrix twist)
      : first_(std::move(first_cover)), twist_(std::move(twist)) {
    check_construction_domain(first_.modulus().value(), 4);
    if (!(twist_.modulus() == first_.modulus()))
      throw Error(ErrorKind::Precondition, "twist modulus mismatch");
  }

  static ProductQuotientInput standard(Int n) {
    check_construction_domain(n, 4);
    const GroupModulus m{n};
    return {TriangleCoverData::standard(m), TwistMatrix::standard(m)};
  }

  GroupModulus modulus() const noexcept { return first_.modulus(); }
  const TriangleCoverData& first_cover() const noexcept { return first_; }
  const TwistMatrix& twist() const noexcept { return twist_; }

 private:
  TriangleCoverData first_;
  TwistMatrix twist_;
};

/// h_p = A g_p: local monodromies of the second factor.
inline std::array<GroupElement, 3> second_monodromies(const ProductQuotientInput& input) {
  std::array<GroupElement, 3> h;
  for (BranchPoint p : kBranchPoints)
    h[index_of(p)] = apply_twist(input.modulus(), input.twist(), input.first_cover().monodromy(p));
  return h;
}

inline TriangleCoverData second_cover(const ProductQuotientInput& input) {
  const auto h = second_monodromies(input);
  return {input.modulus(), h[0], h[1], h[2]};
}

struct NodeRecord {
  BranchPoint p = BranchPoint::Zero;  // branch point on the first factor
  BranchPoint q = BranchPoint::Zero;  // branch point on the second factor
  GroupElement stabilizer_generator;
  Int count = 0;
  std::string type_tag;
};

namespace detail {

/// Exponent x with psi(s) = eta^x, where psi is the local character of the
/// cyclic stabilizer <g> sending g to exp(2 pi i / ord g) and s lies in <g>.
inline Int local_character_exponent(GroupModulus n, const GroupElement& g, const GroupElement& s) {
  const Int m = element_order(n, g);
  for (Int k = 0; k < m; ++k)
    if (scale(n, k, g) == s) return n.reduce(k * (n.value() / m));
  inconsistency("stabilizer element outside the cyclic group");
}

}  // namespace detail

/// Over (p, q) the points of C x C with nontrivial stabilizer are the
/// (|G|/m_p)(|G|/m_q) points with stabilizer <g_p> cap <h_q>; they fall into
/// that many times |I| / |G| orbits.
inline std::vector<NodeRecord> singular_locus(const ProductQuotientInput& input) {
  const GroupModulus n = input.modulus();
  const Int order = n.group_order();
  const auto h = second_monodromies(input);
  std::vector<NodeRecord> nodes;
  for (BranchPoint p : kBranchPoints) {
    const GroupElement& gp = input.first_cover().monodromy(p);
    for (BranchPoint q : kBranchPoints) {
      const GroupElement& hq = h[index_of(q)];
      const auto stab = cyclic_intersection(n, gp, hq);
      const Int size = static_cast<Int>(stab.size());
      if (size == 1) continue;
      if (size > 2)
        throw Error(ErrorKind::NonNodal, "non-nodal singularity: construction assumptions violated");
      const GroupElement s = stab[0] == GroupElement{} ? stab[1] : stab[0];
      // An A1 point needs s to act by (-1, -1) on the tangent space.
      const Int half = n.value() / 2;
      if (n.value() % 2 != 0 || detail::local_character_exponent(n, gp, s) != half ||
          detail::local_character_exponent(n, hq, s) != half)
        throw Error(ErrorKind::NonNodal, "non-nodal singularity: construction assumptions violated");
      const Int points = (order / element_order(n, gp)) * (order / element_order(n, hq));
      if ((points * size) % order != 0) inconsistency("fractional orbit count");
      nodes.push_back({p, q, s, points * size / order, "A1 node"});
    }
  }
  return nodes;
}

inline Int node_total(const std::vector<NodeRecord>& nodes) {
  Int total = 0;
  for (const auto& node : nodes) total += node.count;
  return total;
}

struct SurfaceInvariants {
  Int K2 = 0;
  Int chi_O = 0;
  Int p_g = 0;
  Int q = 0;
  Int euler = 0;
  Int h1_theta = 0;
  Int genus_each_factor = 0;
  Int node_total = 0;
  auto operator<=>(const SurfaceInvariants&) const = default;
};

namespace closed_form {

inline Int K2(Int n) { return 2 * (n - 3) * (n - 3); }
inline Int chi_O(Int n) { return (n * n - 6 * n + 12) / 4; }
inline Int p_g(Int n) { return (n / 2 - 2) * (n / 2 - 1); }

}  // namespace closed_form

/// K^2 from the genera, e(S) from the orbifold point count plus one per
/// exceptional curve, chi from Noether; all three cross-checked.
inline SurfaceInvariants invariants(const ProductQuotientInput& input,
                                    const std::vector<NodeRecord>& nodes) {
  const GroupModulus n = input.modulus();
  const Int order = n.group_order();
  const Int g1 = genus(input.first_cover());
  const Int g2 = genus(second_cover(input));
  if (g1 != g2) inconsistency("factor genera differ");

  SurfaceInvariants inv;
  inv.genus_each_factor = g1;
  inv.node_total = node_total(nodes);
  inv.q = 0;

  const Int k2_num = 8 * (g1 - 1) * (g2 - 1);
  if (k2_num % order != 0) inconsistency("K^2 not integral");
  inv.K2 = k2_num / order;

  Int stabilized_points = 0;
  for (const auto& node : nodes) stabilized_points += node.count * order / 2;
  const Int euler_curves = (2 - 2 * g1) * (2 - 2 * g2) - stabilized_points;
  if (euler_curves % order != 0) inconsistency("free part Euler number not integral");
  inv.euler = euler_curves / order + 2 * inv.node_total;

  if ((inv.K2 + inv.euler) % 12 != 0) inconsistency("Noether: K^2 + e not divisible by 12");
  inv.chi_O = (inv.K2 + inv.euler) / 12;
  inv.p_g = inv.chi_O - 1 + inv.q;
  inv.h1_theta = inv.node_total;

  if (input.first_cover().has_full_order_monodromies()) {
    const Int N = n.value();
    if (inv.K2 != closed_form::K2(N)) inconsistency("K^2 differs from 2(n-3)^2");
    if (inv.chi_O != closed_form::chi_O(N)) inconsistency("chi(O) differs from (n^2-6n+12)/4");
    if (inv.p_g != closed_form::p_g(N)) inconsistency("p_g differs from (n/2-2)(n/2-1)");
  }
  return inv;
}

inline SurfaceInvariants invariants(const ProductQuotientInput& input) {
  return invariants(input, singular_locus(input));
}

}  // namespace rigidpq
