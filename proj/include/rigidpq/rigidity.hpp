#pragma once

// Six-character criterion for surjectivity of the dual obstruction map
// ob*: H^0(Omega^1_Z (x) Omega^2_Z)^G -> T*_X, and the rigidity certificate
// for S_n built on it.
//
// T*_X is ordered (nu_0, nu'_0, nu_1, nu'_1, nu_inf, nu'_inf). A sextuple
// holds (chi_0, chi'_0, chi_1, chi'_1, chi_inf, chi'_inf) in the same order,
// so slot 2i and 2i+1 belong to the i-th branch point.

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <vector>

#include "rigidpq/error.hpp"
#include "rigidpq/group.hpp"
#include "rigidpq/product_quotient.hpp"
#include "rigidpq/triangle_cover.hpp"

namespace rigidpq {

/// k_p translates a point over (p, p) to the other node over (p, p); s_p
/// generates its stabilizer.
struct AuxiliaryElements {
  std::array<GroupElement, 3> k;
  std::array<GroupElement, 3> s;

  const GroupElement& translation(BranchPoint p) const { return k[index_of(p)]; }
  const GroupElement& stabilizer(BranchPoint p) const { return s[index_of(p)]; }
};

inline AuxiliaryElements auxiliary_elements(GroupModulus n) {
  if (n.value() % 2 != 0) throw DomainError(Hypothesis::Even, "n must be even");
  const Int h = n.value() / 2;
  AuxiliaryElements aux;
  aux.k = {GroupElement{n, 1, 0}, GroupElement{n, 1, 0}, GroupElement{n, 0, 1}};
  aux.s = {GroupElement{n, h, 0}, GroupElement{n, h, h}, GroupElement{n, 0, h}};
  return aux;
}

class CharacterSextuple {
 public:
  CharacterSextuple() = default;
  explicit CharacterSextuple(const std::array<Character, 6>& slots) : slots_(slots) {}

  static constexpr std::size_t slot(BranchPoint p, bool primed) noexcept {
    return 2 * index_of(p) + (primed ? 1 : 0);
  }

  const Character& at(BranchPoint p, bool primed) const noexcept { return slots_[slot(p, primed)]; }
  const Character& operator[](std::size_t i) const noexcept { return slots_[i]; }
  const std::array<Character, 6>& slots() const noexcept { return slots_; }

  bool all_distinct() const {
    auto sorted = slots_;
    std::sort(sorted.begin(), sorted.end());
    return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  }

  /// chi_p < chi'_p lexicographically in every pair.
  bool is_canonical() const {
    return std::all_of(kBranchPoints.begin(), kBranchPoints.end(),
                       [&](BranchPoint p) { return at(p, false) < at(p, true); });
  }

  CharacterSextuple canonicalized() const {
    auto s = slots_;
    for (BranchPoint p : kBranchPoints)
      if (s[slot(p, true)] < s[slot(p, false)]) std::swap(s[slot(p, true)], s[slot(p, false)]);
    return CharacterSextuple{s};
  }

  auto operator<=>(const CharacterSextuple&) const = default;

 private:
  std::array<Character, 6> slots_{};
};

/// {(2,1),(4,1)} at 0, {(1,3),(3,1)} at 1, {(1,2),(1,4)} at inf.
inline CharacterSextuple paper_sextuple(GroupModulus n) {
  return CharacterSextuple{{Character{n, 2, 1}, Character{n, 4, 1}, Character{n, 1, 3},
                            Character{n, 3, 1}, Character{n, 1, 2}, Character{n, 1, 4}}};
}

/// Residues mod 2 required in each slot: (0,1) at 0, (1,1) at 1, (1,0) at inf.
constexpr std::array<std::array<Int, 2>, 3> kSlotParity{{{0, 1}, {1, 1}, {1, 0}}};

inline bool has_slot_parity(const Character& chi, BranchPoint p) {
  const auto& want = kSlotParity[index_of(p)];
  return chi.alpha() % 2 == want[0] && chi.beta() % 2 == want[1];
}

struct ParityCheck {
  std::array<bool, 6> per_character{};
  bool holds = false;
};

inline ParityCheck check_parity(const CharacterSextuple& sextuple, GroupModulus n) {
  if (n.value() % 2 != 0) throw DomainError(Hypothesis::Even, "n must be even");
  ParityCheck out;
  for (BranchPoint p : kBranchPoints)
    for (bool primed : {false, true})
      out.per_character[CharacterSextuple::slot(p, primed)] =
          has_slot_parity(sextuple.at(p, primed), p);
  out.holds = std::all_of(out.per_character.begin(), out.per_character.end(),
                          [](bool b) { return b; });
  return out;
}

struct SeparationCheck {
  std::array<Int, 6> exponents{};  // chi(k_p) as exponents of eta
  std::array<bool, 3> per_pair{};
  bool holds = false;
};

inline SeparationCheck check_separation(const CharacterSextuple& sextuple, GroupModulus n) {
  const std::array<GroupElement, 3> k{GroupElement{n, 1, 0}, GroupElement{n, 1, 0},
                                      GroupElement{n, 0, 1}};
  SeparationCheck out;
  for (BranchPoint p : kBranchPoints) {
    const auto i = index_of(p);
    for (bool primed : {false, true})
      out.exponents[CharacterSextuple::slot(p, primed)] =
          char_eval(n, sextuple.at(p, primed), k[i]).exponent();
    out.per_pair[i] = out.exponents[2 * i] != out.exponents[2 * i + 1];
  }
  out.holds = std::all_of(out.per_pair.begin(), out.per_pair.end(), [](bool b) { return b; });
  return out;
}

/// H^0(omega_C)^chi != 0 for every chi in the sextuple.
inline bool check_canonical_nonvanishing(const CharacterSextuple& sextuple,
                                         const TriangleCoverData& cover) {
  return std::all_of(sextuple.slots().begin(), sextuple.slots().end(), [&](const Character& chi) {
    return h0_eigensheaf(canonical_eigendegree(cover, chi)) > 0;
  });
}

/// chi' = tA^{-1} chi; the chi-summand for the second factor is the
/// chi'-summand of the standard cover.
inline Character twisted_char(const Character& chi, GroupModulus n, const TwistMatrix& twist) {
  return apply_twist(n, twist.transpose_inverse(), chi);
}

struct BicanonicalCheck {
  std::array<Character, 6> images{};  // -chi' = tA^{-1}(-chi)
  std::array<Int, 6> degrees{};
  bool holds = false;
};

inline BicanonicalCheck check_bicanonical_nonvanishing(const CharacterSextuple& sextuple,
                                                       const TriangleCoverData& cover,
                                                       const TwistMatrix& twist) {
  const GroupModulus n = cover.modulus();
  BicanonicalCheck out;
  out.holds = true;
  for (std::size_t i = 0; i < 6; ++i) {
    out.images[i] = twisted_char(negate(n, sextuple[i]), n, twist);
    out.degrees[i] = bicanonical_eigendegree(cover, out.images[i]).value;
    out.holds = out.holds && h0_eigensheaf(EigensheafDegree{out.degrees[i]}) > 0;
  }
  return out;
}

/// Vanishing orders of the local section xi_chi at the point over (p, p):
/// lambda_p = 1 and mu_p = 0 exactly when s_p lies in ker chi.
struct LocalExponents {
  std::array<int, 3> lambda{};
  std::array<int, 3> mu{};
  auto operator<=>(const LocalExponents&) const = default;
};

inline LocalExponents local_exponents(const Character& chi, GroupModulus n) {
  const auto aux = auxiliary_elements(n);
  LocalExponents out;
  for (BranchPoint p : kBranchPoints) {
    const bool in_kernel = char_eval(n, chi, aux.stabilizer(p)).is_one();
    out.lambda[index_of(p)] = in_kernel ? 1 : 0;
    out.mu[index_of(p)] = in_kernel ? 0 : 1;
  }
  return out;
}

/// 6x6 matrix of ob* on the sections xi_chi. Each entry is zero or eta^e.
/// Rows 2i, 2i+1 are supported on columns 2i, 2i+1 only.
class ObstructionMatrix {
 public:
  using Entry = std::optional<RootOfUnityExponent>;
  using Entries = std::array<std::array<Entry, 6>, 6>;

  explicit ObstructionMatrix(const Entries& entries) : entries_(entries) {
    for (std::size_t r = 0; r < 6; ++r)
      for (std::size_t c = 0; c < 6; ++c)
        if (r / 2 != c / 2 && entries_[r][c])
          throw Error(ErrorKind::Precondition,
                      "obstruction matrix must be block-diagonal by node pair");
  }

  const Entry& operator()(std::size_t r, std::size_t c) const noexcept { return entries_[r][c]; }

 private:
  Entries entries_;
};

/// Row for chi in pair p is (1, chi(k_p)^{-1}) on the columns (nu_p, nu'_p):
/// the section reads x dx (x) (dy)^2 at q_p and chi(k_p)^{-1} times that at
/// q'_p = k_p^{-1} q_p.
inline ObstructionMatrix obstruction_matrix(const CharacterSextuple& sextuple, GroupModulus n) {
  if (!check_parity(sextuple, n).holds ||
      !check_canonical_nonvanishing(sextuple, TriangleCoverData::standard(n)))
    throw Error(ErrorKind::Precondition, "sections not available; conditions (1)/(3) failed");
  const auto aux = auxiliary_elements(n);
  ObstructionMatrix::Entries e{};
  for (BranchPoint p : kBranchPoints) {
    for (bool primed : {false, true}) {
      const std::size_t row = CharacterSextuple::slot(p, primed);
      const std::size_t col = 2 * index_of(p);
      const auto c = char_eval(n, sextuple.at(p, primed), aux.translation(p));
      e[row][col] = RootOfUnityExponent{n, 0};
      e[row][col + 1] = c.inverse();
    }
  }
  return ObstructionMatrix{e};
}

namespace detail {

/// Rank of a 2x2 matrix of monomials eta^e or zero. The determinant
/// eta^(a+d) - eta^(b+c) vanishes iff both products vanish or their
/// exponents agree.
inline Int monomial_block_rank(const ObstructionMatrix::Entry& x00,
                               const ObstructionMatrix::Entry& x01,
                               const ObstructionMatrix::Entry& x10,
                               const ObstructionMatrix::Entry& x11) {
  if (!x00 && !x01 && !x10 && !x11) return 0;
  const std::optional<RootOfUnityExponent> diag =
      (x00 && x11) ? std::optional{*x00 * *x11} : std::nullopt;
  const std::optional<RootOfUnityExponent> anti =
      (x01 && x10) ? std::optional{*x01 * *x10} : std::nullopt;
  const bool singular = (!diag && !anti) || (diag && anti && *diag == *anti);
  return singular ? 1 : 2;
}

}  // namespace detail

/// Exact rank over Q(eta), summed over the three diagonal blocks.
inline Int surjectivity_rank(const ObstructionMatrix& m) {
  Int rank = 0;
  for (std::size_t b = 0; b < 3; ++b) {
    const std::size_t i = 2 * b;
    rank += detail::monomial_block_rank(m(i, i), m(i, i + 1), m(i + 1, i), m(i + 1, i + 1));
  }
  return rank;
}

/// Images of -chi under tA^{-1} written in closed form in m, for
/// n = 3m - 1 and n = 3m + 1.
struct CaseTable {
  Int m = 0;
  bool minus_case = false;  // n = 3m - 1
  std::array<Int, 4> closed_matrix{};
  std::array<Character, 6> displayed{};  // sextuple slot order
  std::array<Character, 6> computed{};
  bool matrix_matches = false;
  bool images_match = false;
};

inline CaseTable case_table(Int n_value) {
  check_construction_domain(n_value, 8);
  const GroupModulus n{n_value};
  CaseTable t;
  t.minus_case = n_value % 3 == 2;
  const Int m = t.minus_case ? (n_value + 1) / 3 : (n_value - 1) / 3;
  t.m = m;
  auto ch = [&](Int a, Int b) { return Character{n, a, b}; };
  if (t.minus_case) {
    t.closed_matrix = {-m, -2 * m, 2 * m, m};
    t.displayed = {ch(m + 1, m - 2),         ch(2, n_value - 3),   // -(2,1), -(4,1)
                   ch(m + 2, m - 2),         ch(2 * m + 1, 2 * m - 3),  // -(1,3), -(3,1)
                   ch(2 * m + 1, 2 * m - 2), ch(3, n_value - 2)};  // -(1,2), -(1,4)
  } else {
    t.closed_matrix = {m, 2 * m, -2 * m, -m};
    t.displayed = {ch(2 * m + 2, 2 * m - 1), ch(2, n_value - 3),
                   ch(2 * m + 3, 2 * m - 1), ch(m + 2, m - 2),
                   ch(m + 2, m - 1),         ch(3, n_value - 2)};
  }
  const TwistMatrix closed{n, t.closed_matrix[0], t.closed_matrix[1], t.closed_matrix[2],
                           t.closed_matrix[3]};
  const TwistMatrix twist = TwistMatrix::standard(n);
  t.matrix_matches = closed == twist.transpose_inverse();
  const auto sextuple = paper_sextuple(n);
  t.images_match = true;
  for (std::size_t i = 0; i < 6; ++i) {
    const Character neg = negate(n, sextuple[i]);
    t.computed[i] = twisted_char(neg, n, twist);
    t.images_match = t.images_match && t.computed[i] == t.displayed[i] &&
                     apply_twist(n, closed, neg) == t.displayed[i];
  }
  return t;
}

inline bool case_table_check(Int n) {
  const auto t = case_table(n);
  return t.matrix_matches && t.images_match;
}

enum class Conclusion { RigidNotInfRigid, CriterionFailed };

inline std::string to_string(Conclusion c) {
  return c == Conclusion::RigidNotInfRigid ? "RigidNotInfRigid" : "CriterionFailed";
}

struct CitedFact {
  std::string claim;
  std::string where;
};

struct RigidityCertificate {
  Int n = 0;
  CharacterSextuple sextuple;
  struct Conditions {
    bool parity = false;
    bool separation = false;
    bool canonical = false;
    bool bicanonical = false;
  } conditions;
  std::array<Character, 6> twisted_images{};
  std::array<Int, 6> bicanonical_degrees{};
  std::array<LocalExponents, 6> local_exponents{};
  Int matrix_rank = 0;
  Int node_total = 0;
  Int h1_theta = 0;
  bool case_table = false;
  SurfaceInvariants invariants;
  Conclusion conclusion = Conclusion::CriterionFailed;
  std::string convention = "k_p";
  std::vector<CitedFact> cited_facts;
};

inline std::vector<CitedFact> cited_facts() {
  return {
      {"Def(C)^G is a reduced point since C is a triangle curve, so Def(Z)^G is a point",
       "equivariant deformations of Galois covers of P^1 branched in three points"},
      {"H^1(Theta_X) = 0",
       "Theta_X = (pi_* Theta_Z)^G as pi is unramified in codimension 1, and H^1(Theta_Z)^G = 0"},
      {"h^1(Theta_S) = dim T*_X, with dim T*_x = 1 for each node",
       "Burns-Wahl, Local contributions to global deformations of surfaces (1974)"},
      {"ob* surjective implies Def(S) = Def(Z)^G x R with R a fat point of embedding dimension "
       "dim T*_X",
       "Catanese, Everywhere nonreduced moduli spaces (1989), Corollary 1.20"},
      {"ob*_x is given at a node by (df_2/dz_1 - df_1/dz_2)(0,0)",
       "Kas, Ordinary double points and obstructed surfaces (1977), Theorem 5.2"},
      {"S_n is minimal and of general type", "product-quotient surface theory; not computed here"},
      {"obstruction vectors use chi(k_p)^{-1}, the factor produced by translating by (k_p, 0)",
       "convention k_p"},
  };
}

/// Runs the criterion on an arbitrary sextuple for the standard S_n.
inline RigidityCertificate certify(Int n_value, const CharacterSextuple& sextuple) {
  check_construction_domain(n_value, 8);
  const GroupModulus n{n_value};
  const auto input = ProductQuotientInput::standard(n_value);
  const auto nodes = singular_locus(input);

  RigidityCertificate cert;
  cert.n = n_value;
  cert.sextuple = sextuple;
  cert.invariants = invariants(input, nodes);
  cert.node_total = cert.invariants.node_total;
  cert.h1_theta = cert.invariants.h1_theta;
  if (cert.h1_theta != cert.node_total) inconsistency("h1(Theta) differs from the node count");

  const auto& cover = input.first_cover();
  cert.conditions.parity = check_parity(sextuple, n).holds;
  cert.conditions.separation = check_separation(sextuple, n).holds;
  cert.conditions.canonical = check_canonical_nonvanishing(sextuple, cover);
  const auto bic = check_bicanonical_nonvanishing(sextuple, cover, input.twist());
  cert.conditions.bicanonical = bic.holds;
  cert.twisted_images = bic.images;
  cert.bicanonical_degrees = bic.degrees;
  for (std::size_t i = 0; i < 6; ++i) cert.local_exponents[i] = local_exponents(sextuple[i], n);

  if (cert.conditions.parity && cert.conditions.canonical)
    cert.matrix_rank = surjectivity_rank(obstruction_matrix(sextuple, n));
  cert.case_table = case_table_check(n_value);

  const auto& c = cert.conditions;
  const bool passed = c.parity && c.separation && c.canonical && c.bicanonical &&
                      cert.matrix_rank == 6 && cert.node_total == 6;
  cert.conclusion = passed ? Conclusion::RigidNotInfRigid : Conclusion::CriterionFailed;
  cert.cited_facts = cited_facts();
  return cert;
}

inline RigidityCertificate verify_rigidity(Int n) {
  check_construction_domain(n, 8);
  auto cert = certify(n, paper_sextuple(GroupModulus{n}));
  if (!cert.case_table) cert.conclusion = Conclusion::CriterionFailed;
  return cert;
}

}  // namespace rigidpq
