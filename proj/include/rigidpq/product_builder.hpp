#pragma once

// Kunneth bookkeeping for products S_n x X and the (dimension, Kodaira
// dimension) pairs they realize.

#include <algorithm>
#include <charconv>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rigidpq/error.hpp"
#include "rigidpq/product_quotient.hpp"
#include "rigidpq/rigidity.hpp"
#include "rigidpq/triangle_cover.hpp"

namespace rigidpq {

/// Integer or -inf; -inf absorbs under addition.
class KodairaDimension {
 public:
  static KodairaDimension neg_infinity() { return KodairaDimension{}; }
  static KodairaDimension of(Int k) { return KodairaDimension{k}; }

  bool is_neg_infinity() const noexcept { return !value_; }
  Int value() const { return *value_; }

  KodairaDimension operator+(const KodairaDimension& o) const {
    if (!value_ || !o.value_) return neg_infinity();
    return of(*value_ + *o.value_);
  }

  bool operator==(const KodairaDimension&) const = default;

  std::string to_string() const { return value_ ? std::to_string(*value_) : "-inf"; }

 private:
  KodairaDimension() = default;
  explicit KodairaDimension(Int k) : value_(k) {}
  std::optional<Int> value_;
};

struct ManifoldSummary {
  std::string name;
  Int dim = 0;
  KodairaDimension kodaira = KodairaDimension::neg_infinity();
  Int h0_theta = 0;
  Int h1_theta = 0;
  Int h1_O = 0;
  bool rigid = false;
  bool inf_rigid = false;

  bool operator==(const ManifoldSummary&) const = default;
};

inline const ManifoldSummary& validated(const ManifoldSummary& s) {
  if (s.dim < 1) throw Error(ErrorKind::Precondition, "manifold dimension must be positive");
  if (s.h0_theta < 0 || s.h1_theta < 0 || s.h1_O < 0)
    throw Error(ErrorKind::Precondition, "cohomology dimensions must be non-negative");
  if (s.inf_rigid != (s.h1_theta == 0))
    throw Error(ErrorKind::Precondition, "inf_rigid must hold exactly when h1(Theta) = 0");
  if (s.inf_rigid && !s.rigid)
    throw Error(ErrorKind::Precondition, "an infinitesimally rigid manifold is rigid");
  return s;
}

/// S_n with h1(Theta) and rigidity taken from its certificate;
/// H^0(Theta) = H^1(O) = 0 since S_n is regular of general type.
inline ManifoldSummary surface_summary(Int n) {
  const auto cert = verify_rigidity(n);
  ManifoldSummary s;
  s.name = "S" + std::to_string(n);
  s.dim = 2;
  s.kodaira = KodairaDimension::of(2);
  s.h0_theta = 0;
  s.h1_theta = cert.h1_theta;
  s.h1_O = cert.invariants.q;
  s.rigid = cert.conclusion == Conclusion::RigidNotInfRigid;
  s.inf_rigid = s.h1_theta == 0;
  return validated(s);
}

/// Theta_{P^1} = O(2).
inline ManifoldSummary projective_line_summary() {
  ManifoldSummary s;
  s.name = "P1";
  s.dim = 1;
  s.kodaira = KodairaDimension::neg_infinity();
  s.h0_theta = h0_eigensheaf(EigensheafDegree{2});
  s.h1_theta = 0;
  s.h1_O = 0;
  s.rigid = true;
  s.inf_rigid = true;
  return validated(s);
}

inline std::vector<ManifoldSummary> builtin_summaries(std::optional<Int> n = std::nullopt) {
  return {surface_summary(n.value_or(8)), projective_line_summary()};
}

/// h1(Theta_X) + h0(Theta_X) h1(O_Y) + h1(O_X) h0(Theta_Y) + h1(Theta_Y).
inline Int kunneth_h1_theta(const ManifoldSummary& x, const ManifoldSummary& y) {
  return x.h1_theta + x.h0_theta * y.h1_O + x.h1_O * y.h0_theta + y.h1_theta;
}

inline ManifoldSummary product_summary(const ManifoldSummary& x, const ManifoldSummary& y) {
  if (x.h0_theta * y.h1_O != 0 || x.h1_O * y.h0_theta != 0)
    throw Error(ErrorKind::CrossTerm,
                "Kunneth cross term nonzero: rigidity propagation not covered by the product "
                "lemma hypothesis");
  ManifoldSummary s;
  s.name = x.name + " x " + y.name;
  s.dim = x.dim + y.dim;
  s.kodaira = x.kodaira + y.kodaira;
  s.h0_theta = x.h0_theta + y.h0_theta;
  s.h1_theta = kunneth_h1_theta(x, y);
  s.h1_O = x.h1_O + y.h1_O;
  s.rigid = x.rigid && y.rigid;
  s.inf_rigid = s.h1_theta == 0;
  return validated(s);
}

/// "S<n>" or "P1".
inline ManifoldSummary builtin_block(std::string_view token) {
  if (token == "P1") return projective_line_summary();
  if (token.size() >= 2 && token.front() == 'S') {
    Int n = 0;
    const auto* end = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(token.data() + 1, end, n);
    if (ec == std::errc{} && ptr == end) return surface_summary(n);
  }
  throw Error(ErrorKind::Domain, "unknown factor '" + std::string(token) + "'");
}

/// Left-associated product of comma-separated built-in blocks.
inline ManifoldSummary product_of(std::string_view spec) {
  std::optional<ManifoldSummary> acc;
  std::size_t start = 0;
  while (start <= spec.size()) {
    const std::size_t comma = std::min(spec.find(',', start), spec.size());
    const auto block = builtin_block(spec.substr(start, comma - start));
    acc = acc ? product_summary(*acc, block) : block;
    start = comma + 1;
  }
  return *acc;
}

struct CatalogEntry {
  Int d = 0;
  KodairaDimension kodaira = KodairaDimension::neg_infinity();
  std::vector<std::string> factors;  // empty when an external block is needed

  bool built_in() const noexcept { return !factors.empty(); }

  std::string witness() const {
    if (factors.empty()) return "external block required";
    std::string out;
    for (const auto& f : factors) out += (out.empty() ? "" : " x ") + f;
    return out;
  }
};

/// Pairs (d, kappa) with 3 <= d <= d_max realized by S_n x X for X rigid:
/// (3,-inf), (4,-inf), (4,4), and for d >= 5 every kappa except 0, 1, 3.
/// Built-in witnesses use only S_n and P^1, so they reach kappa = -inf and
/// kappa = d for even d.
inline std::vector<CatalogEntry> catalog(Int d_max) {
  std::vector<CatalogEntry> out;
  for (Int d = 3; d <= d_max; ++d) {
    std::vector<KodairaDimension> kappas{KodairaDimension::neg_infinity()};
    if (d == 4) kappas.push_back(KodairaDimension::of(4));
    if (d >= 5) {
      kappas.push_back(KodairaDimension::of(2));
      for (Int k = 4; k <= d; ++k) kappas.push_back(KodairaDimension::of(k));
    }
    for (const auto& kappa : kappas) {
      CatalogEntry e{d, kappa, {}};
      if (kappa.is_neg_infinity()) {
        e.factors.push_back("S8");
        for (Int i = 0; i < d - 2; ++i) e.factors.push_back("P1");
      } else if (kappa.value() == d && d % 2 == 0) {
        for (Int i = 0; i < d / 2; ++i) e.factors.push_back("S8");
      }
      out.push_back(std::move(e));
    }
  }
  return out;
}

}  // namespace rigidpq
