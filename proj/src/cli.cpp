#include "intspec/cli.hpp"

#include <algorithm>
#include <ostream>

#include "intspec/error.hpp"
#include "intspec/report.hpp"
#include "intspec/spectra.hpp"
#include "intspec/verify.hpp"

namespace intspec {

Poset load_poset(const RunConfig& c) {
  const int sources = int{c.partition.has_value()} + int{c.covers.has_value()} + int{c.box.has_value()};
  if (sources != 1) throw Error(ErrorKind::ParseError, "give exactly one of --partition, --covers, --box");
  if (c.partition) return Poset::from_partition(parse_partition(*c.partition));
  if (c.box) return Poset::from_chain_product(parse_box(*c.box));
  return load_poset_file(*c.covers);
}

namespace {

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

void print_legend(const PedestalMatrix& pm, std::ostream& out) {
  out << "legend:\n";
  for (const auto& e : legend(pm)) out << "  " << pad(e.label, 4) << " " << pad(e.mask.name(), pm.n() + 3) << "  " << e.monomial.to_string() << '\n';
}

int cmd_extensions(const RunConfig& c, std::ostream& out) {
  const Poset poset = load_poset(c);
  const ExtensionSet exts(poset, c.cap);
  if (c.format == "json") {
    out << extensions_json(poset, exts).dump(2) << '\n';
  } else if (c.format == "csv") {
    out << "index,ranks,order\n";
    for (std::size_t i = 0; i < exts.size(); ++i)
      out << i + 1 << ",\"" << ranks_string(exts[i]) << "\",\"" << order_string(poset, exts[i]) << "\"\n";
  } else {
    out << "linear extensions: " << exts.size() << '\n';
    for (std::size_t i = 0; i < exts.size(); ++i)
      out << pad(std::to_string(i + 1), 4) << ranks_string(exts[i]) << "  " << order_string(poset, exts[i]) << '\n';
  }
  return 0;
}

int cmd_matrix(const RunConfig& c, std::ostream& out) {
  if (c.view != "symbolic" && c.view != "monomial") throw Error(ErrorKind::ParseError, "--view must be symbolic or monomial");
  const bool mono = c.view == "monomial";
  const PedestalMatrix pm(load_poset(c), c.cap);
  if (c.format == "json") {
    out << matrix_json(pm, mono).dump(2) << '\n';
    return 0;
  }
  auto cell = [&](std::size_t p, std::size_t q) {
    if (c.format == "csv") return mono ? pm.monomial_entry(p, q).to_string() : pm.entry(p, q).bitstring();
    return mono ? pm.monomial_entry(p, q).to_string() : pm.entry(p, q).name();
  };
  if (c.format == "csv") {
    for (std::size_t p = 0; p < pm.dim(); ++p) {
      for (std::size_t q = 0; q < pm.dim(); ++q) out << (q ? "," : "") << cell(p, q);
      out << '\n';
    }
    return 0;
  }
  std::size_t width = 0;
  for (std::size_t p = 0; p < pm.dim(); ++p)
    for (std::size_t q = 0; q < pm.dim(); ++q) width = std::max(width, cell(p, q).size());
  out << (mono ? "monomial" : "symbolic") << " pedestal matrix, " << pm.dim() << " x " << pm.dim() << '\n';
  print_legend(pm, out);
  if (mono) out << "common factor: " << common_factor(pm).to_string() << '\n';
  out << "rows and columns:\n";
  for (std::size_t p = 0; p < pm.dim(); ++p)
    out << "  " << pad(std::to_string(p + 1), 4) << ranks_string(pm.extensions()[p]) << '\n';
  for (std::size_t p = 0; p < pm.dim(); ++p) {
    for (std::size_t q = 0; q < pm.dim(); ++q) out << (q ? "  " : "") << pad(cell(p, q), width);
    out << '\n';
  }
  return 0;
}

int cmd_eigen(const RunConfig& c, std::ostream& out) {
  const PedestalMatrix pm(load_poset(c), c.cap);
  const Spectrum sp = eigenvalues(pm);
  const auto leg = legend(pm);
  std::optional<JordanReport> jordan;
  if (c.jordan) jordan = jordan_probe(pm, sp, parse_specialization(*c.jordan));

  if (c.format == "json") {
    json j = {{"poset", poset_to_json(pm.poset())}, {"eigenvalues", eigenvalues_json(sp)}, {"legend", legend_json(pm)}};
    if (jordan) j["jordan"] = jordan_json(*jordan);
    out << j.dump(2) << '\n';
  } else if (c.format == "csv") {
    out << "multiplicity,form,legend_form\n";
    for (const auto& f : sp.forms) out << f.multiplicity << ",\"" << to_string(f.coeffs) << "\",\"" << legend_form(f.coeffs, leg) << "\"\n";
  } else {
    out << "eigenvalues: " << sp.forms.size() << " distinct, " << pm.dim() << " with multiplicity\n";
    for (const auto& f : sp.forms)
      out << "  (" << f.multiplicity << ")  " << to_string(f.coeffs) << "    = " << legend_form(f.coeffs, leg) << '\n';
    print_legend(pm, out);
    if (jordan) {
      out << "specialization: " << *c.jordan << '\n';
      out << "  characteristic polynomial factors as predicted: " << (jordan->factorization_verified ? "yes" : "no") << '\n';
      for (const auto& e : jordan->entries)
        out << "  " << pad(e.value.get_str(), 8) << " algebraic " << e.algebraic << ", geometric " << e.geometric << '\n';
      out << "  diagonalizable: " << (jordan->diagonalizable ? "yes" : "no") << '\n';
    }
  }
  return jordan && !jordan->factorization_verified ? 1 : 0;
}

int cmd_verify(const RunConfig& c, std::ostream& out) {
  const PedestalMatrix pm(load_poset(c), c.cap);
  VerifyOptions opt;
  opt.seed = c.seed;
  opt.draws = c.draws;
  opt.truncation = c.tmax;
  const VerifyReport rep = run_verification(pm, opt);
  if (c.format == "json") {
    out << verify_json(rep).dump(2) << '\n';
  } else if (c.format == "csv") {
    out << "check,passed,detail\n";
    for (const auto& r : rep.checks) out << '"' << r.name << "\"," << (r.passed ? "true" : "false") << ",\"" << r.detail << "\"\n";
  } else {
    for (const auto& r : rep.checks) out << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << '\n';
    out << (rep.passed ? "all checks passed" : "some checks failed") << '\n';
  }
  return rep.passed ? 0 : 1;
}

int cmd_genfun(const RunConfig& c, std::ostream& out) {
  const PedestalMatrix pm(load_poset(c), c.cap);
  const IdentityReport r = pedestal_identity_check(pm, c.tmax);
  std::string chain = "1/(";
  for (int l = 1; l <= pm.n(); ++l) chain += (l > 1 ? " " : "") + (l == 1 ? std::string("(1-t)") : "(1-t^" + std::to_string(l) + ")");
  chain += ")";
  const std::string pi = polynomial_string(r.pedestal_poly);
  const std::string factored = pi == "1" ? chain : "(" + pi + ") " + chain;

  if (c.format == "json") {
    json j = identity_json(pm.poset(), r);
    j["factored"] = factored;
    out << j.dump(2) << '\n';
  } else if (c.format == "csv") {
    out << "k,monotone,product\n";
    for (int k = 0; k <= r.truncation; ++k)
      out << k << ',' << r.monotone[static_cast<std::size_t>(k)].get_str() << ',' << r.product[static_cast<std::size_t>(k)].get_str() << '\n';
  } else {
    out << "pedestal polynomial: " << pi << '\n';
    out << "monotone series to t^" << r.truncation << ": " << r.monotone.to_string() << '\n';
    out << "factored: " << factored << '\n';
    out << "identity: " << (r.holds ? "holds" : "fails") << '\n';
    out << "row sum under a_eps -> t^(sum (n-k) eps(k)): " << polynomial_string(r.reversed_substitution)
        << (r.reversed_matches ? " (matches)" : " (differs)") << '\n';
    out << "row sum under a_eps -> t^(sum k eps(k)): " << polynomial_string(r.literal_substitution)
        << (r.literal_matches ? " (matches)" : " (differs)") << '\n';
    if (r.has_macmahon)
      out << "hook product " << hook_product_string(pm.poset()) << ": " << (r.macmahon_matches ? "matches" : "differs") << '\n';
  }
  return r.holds && (!r.has_macmahon || r.macmahon_matches) ? 0 : 1;
}

int cmd_count_posets(const RunConfig& c, std::ostream& out) {
  const auto count = count_posets(c.count_n);
  if (c.format == "json") {
    out << json{{"n", c.count_n}, {"count", count}}.dump(2) << '\n';
  } else {
    out << count << '\n';
  }
  return 0;
}

}  // namespace

int run(const RunConfig& c, std::ostream& out, std::ostream& err) {
  try {
    if (c.format != "text" && c.format != "json" && c.format != "csv")
      throw Error(ErrorKind::ParseError, "--format must be text, json or csv");
    if (c.command == "extensions") return cmd_extensions(c, out);
    if (c.command == "matrix") return cmd_matrix(c, out);
    if (c.command == "eigen") return cmd_eigen(c, out);
    if (c.command == "verify") return cmd_verify(c, out);
    if (c.command == "genfun") return cmd_genfun(c, out);
    if (c.command == "count-posets") return cmd_count_posets(c, out);
    throw Error(ErrorKind::ParseError, "unknown command '" + c.command + "'");
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace intspec
