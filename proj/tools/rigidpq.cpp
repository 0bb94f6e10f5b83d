// rigidpq: invariants, eigensheaf degree tables and rigidity certificates for
// the product-quotient surfaces S_n.
//
// Exit codes: 0 success, 1 internal inconsistency or failed criterion,
// 2 invalid input.

#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "rigidpq/rigidpq.hpp"

namespace {

using rigidpq::Int;
using rigidpq::io::Format;

constexpr int kExitOk = 0;
constexpr int kExitInconsistent = 1;
constexpr int kExitInvalid = 2;

void add_format(CLI::App* cmd, Format& format) {
  const std::map<std::string, Format> names{
      {"text", Format::Text}, {"json", Format::Json}, {"csv", Format::Csv}};
  cmd->add_option("--format", format, "Output format: text, json or csv")
      ->transform(CLI::CheckedTransformer(names, CLI::ignore_case));
}

int run_invariants(Int n, Format format) {
  const auto input = rigidpq::ProductQuotientInput::standard(n);
  const auto nodes = rigidpq::singular_locus(input);
  const auto inv = rigidpq::invariants(input, nodes);
  switch (format) {
    case Format::Json: std::cout << rigidpq::io::invariants_json(n, inv, nodes).dump(2) << '\n'; break;
    case Format::Csv: std::cout << rigidpq::io::invariants_csv(n, inv); break;
    case Format::Text: std::cout << rigidpq::io::invariants_text(n, inv, nodes); break;
  }
  return kExitOk;
}

int run_table(Int n, int power, Format format) {
  const auto table = rigidpq::eigendegree_table(
      rigidpq::TriangleCoverData::standard(rigidpq::GroupModulus{n}), power);
  switch (format) {
    case Format::Json: std::cout << rigidpq::io::table_json(table).dump() << '\n'; break;
    case Format::Csv: std::cout << rigidpq::io::table_csv(table); break;
    case Format::Text: std::cout << rigidpq::io::table_text(table); break;
  }
  return kExitOk;
}

int run_certify(Int n, bool search, unsigned jobs, Format format) {
  const auto cert = rigidpq::verify_rigidity(n);
  std::optional<rigidpq::SextupleSearch> oracle;
  std::optional<rigidpq::CharacterSextuple> first_hit;
  if (search) {
    oracle.emplace(n);
    const auto hits = oracle->enumerate(1, jobs);
    if (!hits.empty()) first_hit = hits.front();
  }
  const bool found = oracle && oracle->contains(cert.sextuple);

  switch (format) {
    case Format::Json: {
      auto j = rigidpq::io::certificate_json(cert);
      if (oracle) {
        rigidpq::io::Json s;
        s["solutions"] = oracle->size();
        s["firstSolution"] = rigidpq::io::Json::array();
        if (first_hit)
          for (const auto& chi : first_hit->slots())
            s["firstSolution"].push_back(rigidpq::io::pair_json(chi));
        s["knownSextupleFound"] = found;
        j["search"] = s;
      }
      std::cout << j.dump(2) << '\n';
      break;
    }
    case Format::Csv:
      std::cout << rigidpq::io::certificate_csv(cert);
      if (oracle)
        std::cout << "searchSolutions," << oracle->size() << '\n'
                  << "knownSextupleFound," << (found ? "true" : "false") << '\n';
      break;
    case Format::Text:
      std::cout << rigidpq::io::certificate_text(cert);
      if (oracle) {
        std::cout << "search: " << oracle->size() << " sextuples satisfy conditions (1)-(4)\n";
        if (first_hit) {
          std::cout << "first sextuple found:";
          for (const auto& chi : first_hit->slots()) std::cout << ' ' << chi;
          std::cout << '\n';
        }
        std::cout << "paper sextuple found by search: " << (found ? "true" : "false") << '\n';
      }
      break;
  }
  const bool ok = cert.conclusion == rigidpq::Conclusion::RigidNotInfRigid && (!search || found);
  return ok ? kExitOk : kExitInconsistent;
}

int run_product(const std::string& factors, Format format) {
  const auto s = rigidpq::product_of(factors);
  switch (format) {
    case Format::Json: std::cout << rigidpq::io::summary_json(s).dump(2) << '\n'; break;
    case Format::Csv: std::cout << rigidpq::io::summary_csv(s); break;
    case Format::Text: std::cout << rigidpq::io::summary_text(s); break;
  }
  return kExitOk;
}

int run_catalog(Int d_max, Format format) {
  const auto rows = rigidpq::catalog(d_max);
  switch (format) {
    case Format::Json: std::cout << rigidpq::io::catalog_json(rows).dump(2) << '\n'; break;
    case Format::Csv: std::cout << rigidpq::io::catalog_csv(rows); break;
    case Format::Text: std::cout << rigidpq::io::catalog_text(rows); break;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rigid but not infinitesimally rigid product-quotient surfaces"};
  app.require_subcommand(1);

  Int n = 0;
  int power = 1;
  bool search = false;
  unsigned jobs = 1;
  std::string factors;
  Int d_max = 6;
  Format format = Format::Text;

  auto* inv = app.add_subcommand("invariants", "Singular locus and invariants of S_n");
  inv->add_option("--n", n, "Even n >= 4, not divisible by 3")->required();
  add_format(inv, format);

  auto* table = app.add_subcommand("table", "Eigensheaf degree table of the triangle cover");
  table->add_option("--n", n, "Group modulus")->required();
  table->add_option("--power", power, "1 for omega, 2 for omega^2")
      ->required()
      ->check(CLI::IsMember({1, 2}));
  add_format(table, format);

  auto* certify = app.add_subcommand("certify", "Rigidity certificate for S_n");
  certify->add_option("--n", n, "Even n >= 8, not divisible by 3")->required();
  certify->add_flag("--search", search, "Also run the exhaustive sextuple search");
  certify->add_option("--jobs", jobs, "Worker threads for the search")
      ->check(CLI::Range(1u, 256u));
  add_format(certify, format);

  auto* product = app.add_subcommand("product", "Kunneth summary of a product of built-in blocks");
  product->add_option("--factors", factors, "Comma list of S<n> and P1, e.g. S8,P1,P1")
      ->required();
  add_format(product, format);

  auto* cat = app.add_subcommand("catalog", "(dimension, Kodaira dimension) witnesses");
  cat->add_option("--dmax", d_max, "Largest dimension")->required();
  add_format(cat, format);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitInvalid;
  }

  try {
    if (*inv) return run_invariants(n, format);
    if (*table) return run_table(n, power, format);
    if (*certify) return run_certify(n, search, jobs, format);
    if (*product) return run_product(factors, format);
    if (*cat) return run_catalog(d_max, format);
  } catch (const rigidpq::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.kind() == rigidpq::ErrorKind::Inconsistency ? kExitInconsistent : kExitInvalid;
  }
  return kExitInvalid;
}
