#pragma once

// Text, JSON and CSV renderings. JSON uses insertion-ordered objects so the
// output is byte-stable for fixed inputs.

#include <iomanip>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "rigidpq/product_builder.hpp"
#include "rigidpq/product_quotient.hpp"
#include "rigidpq/rigidity.hpp"
#include "rigidpq/triangle_cover.hpp"

namespace rigidpq::io {

using Json = nlohmann::ordered_json;

enum class Format { Text, Json, Csv };

inline Json pair_json(const Character& c) { return Json::array({c.alpha(), c.beta()}); }
inline Json pair_json(const GroupElement& g) { return Json::array({g.a(), g.b()}); }

inline Json kodaira_json(const KodairaDimension& k) {
  return k.is_neg_infinity() ? Json("-inf") : Json(k.value());
}

// Surface invariants and the singular locus.

inline Json invariants_json(Int n, const SurfaceInvariants& inv,
                            const std::vector<NodeRecord>& nodes) {
  Json j;
  j["n"] = n;
  j["K2"] = inv.K2;
  j["chiO"] = inv.chi_O;
  j["pg"] = inv.p_g;
  j["q"] = inv.q;
  j["euler"] = inv.euler;
  j["h1Theta"] = inv.h1_theta;
  j["nodes"] = Json::array();
  for (const auto& node : nodes) {
    Json r;
    r["p"] = std::string(label(node.p));
    r["q"] = std::string(label(node.q));
    r["stabilizer"] = pair_json(node.stabilizer_generator);
    r["count"] = node.count;
    j["nodes"].push_back(r);
  }
  return j;
}

inline std::string invariants_text(Int n, const SurfaceInvariants& inv,
                                   const std::vector<NodeRecord>& nodes) {
  std::ostringstream os;
  os << "n=" << n << " K2=" << inv.K2 << " chiO=" << inv.chi_O << " pg=" << inv.p_g
     << " q=" << inv.q << " euler=" << inv.euler << " h1Theta=" << inv.h1_theta << '\n';
  os << "genus of each factor: " << inv.genus_each_factor << '\n';
  os << "nodes: " << inv.node_total << '\n';
  for (const auto& node : nodes)
    os << "  over (" << label(node.p) << ',' << label(node.q) << "): " << node.count << " x "
       << node.type_tag << ", stabilizer " << node.stabilizer_generator << '\n';
  return os.str();
}

inline std::string invariants_csv(Int n, const SurfaceInvariants& inv) {
  std::ostringstream os;
  os << "n,K2,chiO,pg,q,euler,h1Theta\n"
     << n << ',' << inv.K2 << ',' << inv.chi_O << ',' << inv.p_g << ',' << inv.q << ','
     << inv.euler << ',' << inv.h1_theta << '\n';
  return os.str();
}

// Degree tables.

inline Json table_json(const DegreeTable& t) {
  Json j;
  j["n"] = t.n;
  j["power"] = t.power;
  j["degrees"] = t.degrees;
  return j;
}

/// Header row lists beta; each following row starts with alpha.
inline std::string table_csv(const DegreeTable& t) {
  std::ostringstream os;
  os << "alpha\\beta";
  for (Int b = 0; b < t.n; ++b) os << ',' << b;
  os << '\n';
  for (Int a = 0; a < t.n; ++a) {
    os << a;
    for (Int b = 0; b < t.n; ++b) os << ',' << t.degrees[a][b];
    os << '\n';
  }
  return os.str();
}

/// Full grid up to n = 24; above that the first 5 and last 3 indices, with
/// the middle range elided.
inline std::string table_text(const DegreeTable& t) {
  std::vector<Int> shown;
  for (Int i = 0; i < t.n; ++i)
    if (t.n <= 24 || i < 5 || i >= t.n - 3) shown.push_back(i);
  const int width = 5;
  std::ostringstream os;
  os << "degrees of the (alpha,beta) summands of p_* omega" << (t.power == 2 ? "^2" : "")
     << ", n=" << t.n << " (rows alpha, columns beta)\n";
  auto row = [&](auto cell, const std::string& head) {
    os << std::setw(width) << head;
    for (std::size_t k = 0; k < shown.size(); ++k) {
      if (k > 0 && shown[k] != shown[k - 1] + 1) os << std::setw(width) << "...";
      os << std::setw(width) << cell(shown[k]);
    }
    os << '\n';
  };
  row([](Int b) { return std::to_string(b); }, "");
  for (std::size_t k = 0; k < shown.size(); ++k) {
    if (k > 0 && shown[k] != shown[k - 1] + 1) os << std::setw(width) << "..." << '\n';
    const Int a = shown[k];
    row([&](Int b) { return std::to_string(t.degrees[a][b]); }, std::to_string(a));
  }
  return os.str();
}

// Rigidity certificate.

inline Json certificate_json(const RigidityCertificate& c) {
  Json j;
  j["n"] = c.n;
  j["sextuple"] = Json::array();
  for (const auto& chi : c.sextuple.slots()) j["sextuple"].push_back(pair_json(chi));
  j["conditions"] = {{"parity", c.conditions.parity},
                     {"separation", c.conditions.separation},
                     {"canonical", c.conditions.canonical},
                     {"bicanonical", c.conditions.bicanonical}};
  j["twistedImages"] = Json::array();
  for (const auto& chi : c.twisted_images) j["twistedImages"].push_back(pair_json(chi));
  j["bicanonicalDegrees"] = c.bicanonical_degrees;
  j["matrixRank"] = c.matrix_rank;
  j["nodes"] = c.node_total;
  j["h1Theta"] = c.h1_theta;
  j["conclusion"] = to_string(c.conclusion);
  j["convention"] = c.convention;
  j["citedFacts"] = Json::array();
  for (const auto& f : c.cited_facts) j["citedFacts"].push_back({{"claim", f.claim}, {"where", f.where}});
  j["caseTable"] = c.case_table;
  j["localExponents"] = Json::array();
  for (const auto& e : c.local_exponents) j["localExponents"].push_back({{"lambda", e.lambda}, {"mu", e.mu}});
  j["invariants"] = {{"K2", c.invariants.K2},       {"chiO", c.invariants.chi_O},
                     {"pg", c.invariants.p_g},       {"q", c.invariants.q},
                     {"euler", c.invariants.euler}};
  return j;
}

inline std::string certificate_text(const RigidityCertificate& c) {
  static const char* const kSlots[6] = {"chi_0", "chi'_0", "chi_1", "chi'_1", "chi_inf", "chi'_inf"};
  auto yes = [](bool b) { return b ? "yes" : "no"; };
  std::ostringstream os;
  os << "rigidity certificate for S_" << c.n << '\n';
  os << "  K2=" << c.invariants.K2 << " chiO=" << c.invariants.chi_O << " pg=" << c.invariants.p_g
     << " euler=" << c.invariants.euler << '\n';
  os << "  characters (chi, -chi' = tA^-1(-chi), bicanonical degree, lambda, mu):\n";
  for (std::size_t i = 0; i < 6; ++i) {
    const auto& e = c.local_exponents[i];
    os << "    " << std::left << std::setw(9) << kSlots[i] << std::right << c.sextuple[i] << "  "
       << c.twisted_images[i] << "  " << c.bicanonical_degrees[i] << "  (" << e.lambda[0] << ','
       << e.lambda[1] << ',' << e.lambda[2] << ")  (" << e.mu[0] << ',' << e.mu[1] << ','
       << e.mu[2] << ")\n";
  }
  os << "  parity: " << yes(c.conditions.parity) << '\n'
     << "  separation at k_p: " << yes(c.conditions.separation) << '\n'
     << "  canonical eigenspaces nonzero: " << yes(c.conditions.canonical) << '\n'
     << "  bicanonical eigenspaces nonzero: " << yes(c.conditions.bicanonical) << '\n'
     << "  congruence tables: " << yes(c.case_table) << '\n'
     << "  obstruction matrix rank: " << c.matrix_rank << '\n'
     << "  nodes: " << c.node_total << '\n'
     << "  h1(Theta): " << c.h1_theta << '\n'
     << "  convention: " << c.convention << '\n'
     << "  conclusion: " << to_string(c.conclusion) << '\n';
  os << "  cited facts:\n";
  for (const auto& f : c.cited_facts) os << "    - " << f.claim << " [" << f.where << "]\n";
  return os.str();
}

inline std::string certificate_csv(const RigidityCertificate& c) {
  auto b = [](bool v) { return v ? "true" : "false"; };
  std::ostringstream os;
  os << "key,value\n"
     << "n," << c.n << '\n'
     << "parity," << b(c.conditions.parity) << '\n'
     << "separation," << b(c.conditions.separation) << '\n'
     << "canonical," << b(c.conditions.canonical) << '\n'
     << "bicanonical," << b(c.conditions.bicanonical) << '\n'
     << "matrixRank," << c.matrix_rank << '\n'
     << "nodes," << c.node_total << '\n'
     << "h1Theta," << c.h1_theta << '\n'
     << "caseTable," << b(c.case_table) << '\n'
     << "conclusion," << to_string(c.conclusion) << '\n'
     << "convention," << c.convention << '\n';
  return os.str();
}

// Manifold summaries and the catalog.

inline Json summary_json(const ManifoldSummary& s) {
  Json j;
  j["name"] = s.name;
  j["dim"] = s.dim;
  j["kodaira"] = kodaira_json(s.kodaira);
  j["h0Theta"] = s.h0_theta;
  j["h1Theta"] = s.h1_theta;
  j["h1O"] = s.h1_O;
  j["rigid"] = s.rigid;
  j["infRigid"] = s.inf_rigid;
  return j;
}

inline std::string summary_text(const ManifoldSummary& s) {
  std::ostringstream os;
  os << s.name << ": dim=" << s.dim << " kodaira=" << s.kodaira.to_string()
     << " h0Theta=" << s.h0_theta << " h1Theta=" << s.h1_theta << " h1O=" << s.h1_O
     << " rigid=" << (s.rigid ? "yes" : "no") << " infRigid=" << (s.inf_rigid ? "yes" : "no")
     << '\n';
  return os.str();
}

inline std::string summary_csv(const ManifoldSummary& s) {
  std::ostringstream os;
  os << "name,dim,kodaira,h0Theta,h1Theta,h1O,rigid,infRigid\n"
     << s.name << ',' << s.dim << ',' << s.kodaira.to_string() << ',' << s.h0_theta << ','
     << s.h1_theta << ',' << s.h1_O << ',' << (s.rigid ? "true" : "false") << ','
     << (s.inf_rigid ? "true" : "false") << '\n';
  return os.str();
}

inline Json catalog_json(const std::vector<CatalogEntry>& rows) {
  Json j = Json::array();
  for (const auto& r : rows)
    j.push_back({{"d", r.d}, {"kodaira", kodaira_json(r.kodaira)}, {"witness", r.witness()}});
  return j;
}

inline std::string catalog_text(const std::vector<CatalogEntry>& rows) {
  std::ostringstream os;
  os << std::left << std::setw(4) << "d" << std::setw(9) << "kodaira" << "witness\n";
  for (const auto& r : rows)
    os << std::setw(4) << r.d << std::setw(9) << r.kodaira.to_string() << r.witness() << '\n';
  return os.str();
}

inline std::string catalog_csv(const std::vector<CatalogEntry>& rows) {
  std::ostringstream os;
  os << "d,kodaira,witness\n";
  for (const auto& r : rows) os << r.d << ',' << r.kodaira.to_string() << ',' << r.witness() << '\n';
  return os.str();
}

}  // namespace rigidpq::io
