#include "intspec/report.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "intspec/error.hpp"

namespace intspec {

Poset poset_from_json(const json& j, std::vector<std::string>* warnings) {
  if (!j.is_object()) throw Error(ErrorKind::ParseError, "poset JSON must be an object");
  if (!j.contains("names") || !j["names"].is_array()) throw Error(ErrorKind::ParseError, "missing \"names\" array");
  std::vector<std::string> names;
  for (const auto& n : j["names"]) {
    if (!n.is_string()) throw Error(ErrorKind::ParseError, "element names must be strings");
    names.push_back(n.get<std::string>());
  }
  std::vector<std::pair<std::string, std::string>> covers;
  if (j.contains("covers")) {
    if (!j["covers"].is_array()) throw Error(ErrorKind::ParseError, "\"covers\" must be an array");
    for (const auto& c : j["covers"]) {
      if (!c.is_array() || c.size() != 2 || !c[0].is_string() || !c[1].is_string())
        throw Error(ErrorKind::ParseError, "each cover must be a pair of names");
      covers.emplace_back(c[0].get<std::string>(), c[1].get<std::string>());
    }
  }
  return Poset::from_covers(std::move(names), covers, warnings);
}

Poset load_poset_file(const std::filesystem::path& path, std::vector<std::string>* warnings) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::ParseError, path.string() + ": " + e.what());
  }
  return poset_from_json(j, warnings);
}

json poset_to_json(const Poset& poset) {
  json covers = json::array();
  for (const auto& [a, b] : poset.covers())
    covers.push_back({poset.names()[static_cast<std::size_t>(a)], poset.names()[static_cast<std::size_t>(b)]});
  return {{"names", poset.names()}, {"covers", covers}};
}

std::string ranks_string(const LinearExtension& ext) {
  std::string s = "{";
  for (std::size_t e = 0; e < ext.rank.size(); ++e) {
    if (e) s += ",";
    s += std::to_string(ext.rank[e] + 1);
  }
  return s + "}";
}

std::string order_string(const Poset& poset, const LinearExtension& ext) {
  std::string s;
  for (std::size_t k = 0; k < ext.order.size(); ++k) {
    if (k) s += " < ";
    s += poset.names()[static_cast<std::size_t>(ext.order[k])];
  }
  return s;
}

json extensions_json(const Poset& poset, const ExtensionSet& exts) {
  json list = json::array();
  for (const auto& ext : exts.items()) {
    json order = json::array();
    for (int e : ext.order) order.push_back(poset.names()[static_cast<std::size_t>(e)]);
    json ranks = json::array();
    for (int r : ext.rank) ranks.push_back(r + 1);
    list.push_back({{"order", order}, {"ranks", ranks}});
  }
  return {{"poset", poset_to_json(poset)}, {"count", exts.size()}, {"extensions", list}};
}

json legend_json(const PedestalMatrix& pm) {
  json out = json::array();
  for (const auto& e : legend(pm))
    out.push_back({{"label", e.label}, {"mask", e.mask.bitstring()}, {"monomial", e.monomial.exponents}});
  return out;
}

MonomialVector common_factor(const PedestalMatrix& pm) {
  MonomialVector f;
  for (std::size_t i = 0; i < pm.masks().size(); ++i) {
    const MonomialVector m = monomial_of(pm.masks()[i]);
    if (i == 0) {
      f = m;
      continue;
    }
    for (std::size_t k = 0; k < f.exponents.size(); ++k) f.exponents[k] = std::min(f.exponents[k], m.exponents[k]);
  }
  return f;
}

json matrix_json(const PedestalMatrix& pm, bool monomial_view) {
  json rows = json::array();
  for (std::size_t p = 0; p < pm.dim(); ++p) {
    json row = json::array();
    for (std::size_t q = 0; q < pm.dim(); ++q) {
      if (monomial_view) {
        row.push_back(pm.monomial_entry(p, q).exponents);
      } else {
        row.push_back(pm.entry(p, q).bitstring());
      }
    }
    rows.push_back(std::move(row));
  }
  json ranks = json::array();
  for (const auto& ext : pm.extensions().items()) ranks.push_back(ranks_string(ext));
  json out = {{"poset", poset_to_json(pm.poset())},
              {"view", monomial_view ? "monomial" : "symbolic"},
              {"dim", pm.dim()},
              {"extensions", ranks},
              {"entries", rows},
              {"legend", legend_json(pm)}};
  if (monomial_view) out["common_factor"] = common_factor(pm).exponents;
  return out;
}

json linear_form_json(const LinearForm& form) {
  json out = json::object();
  for (const auto& [mask, c] : form) out[mask.bitstring()] = c;
  return out;
}

json eigenvalues_json(const Spectrum& spectrum) {
  json out = json::array();
  for (const auto& f : spectrum.forms) out.push_back({{"coeffs", linear_form_json(f.coeffs)}, {"multiplicity", f.multiplicity}});
  return out;
}

std::string legend_form(const LinearForm& form, const std::vector<LegendEntry>& legend) {
  std::string s;
  for (const auto& e : legend) {
    auto it = form.find(e.mask);
    if (it == form.end()) continue;
    const auto c = it->second;
    const auto mag = c < 0 ? -c : c;
    const std::string term = (mag == 1 ? "" : std::to_string(mag)) + e.label;
    if (s.empty()) {
      s = (c < 0 ? "-" : "") + term;
    } else {
      s += (c < 0 ? " - " : " + ") + term;
    }
  }
  return s.empty() ? "0" : s;
}

std::map<EpsilonMask, Rational> parse_specialization(const std::string& text) {
  std::map<EpsilonMask, Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw Error(ErrorKind::ParseError, "expected mask=value, got '" + item + "'");
    const EpsilonMask mask = EpsilonMask::parse(item.substr(0, eq));
    Rational v;
    if (v.set_str(item.substr(eq + 1), 10) != 0) throw Error(ErrorKind::ParseError, "bad value in '" + item + "'");
    v.canonicalize();
    out[mask] = v;
  }
  return out;
}

json jordan_json(const JordanReport& report) {
  json entries = json::array();
  for (const auto& e : report.entries)
    entries.push_back({{"value", e.value.get_str()}, {"algebraic", e.algebraic}, {"geometric", e.geometric}});
  return {{"eigenvalues", entries},
          {"factorization_verified", report.factorization_verified},
          {"diagonalizable", report.diagonalizable}};
}

json filter_json(const Poset& poset, const Filter& f) {
  json out = json::object();
  for (std::size_t e = 0; e < f.floors.size(); ++e) out[poset.names()[e]] = f.floors[e] + 1;
  return out;
}

json series_json(const TruncatedSeries& s) {
  json out = json::array();
  for (const auto& c : s.coefficients()) {
    if (c.fits_slong_p()) {
      out.push_back(c.get_si());
    } else {
      out.push_back(c.get_str());
    }
  }
  return out;
}

json identity_json(const Poset& poset, const IdentityReport& r) {
  json out = {{"poset", poset_to_json(poset)},
              {"truncation", r.truncation},
              {"pedestal_polynomial", r.pedestal_poly},
              {"pedestal_polynomial_text", polynomial_string(r.pedestal_poly)},
              {"monotone", series_json(r.monotone)},
              {"product", series_json(r.product)},
              {"holds", r.holds},
              {"row_sum_substitution",
               {{"sum_n_minus_k", {{"polynomial", r.reversed_substitution}, {"matches", r.reversed_matches}}},
                {"sum_k", {{"polynomial", r.literal_substitution}, {"matches", r.literal_matches}}}}}};
  if (r.has_macmahon) {
    out["hook_product"] = hook_product_string(poset);
    out["macmahon_matches"] = r.macmahon_matches;
  }
  return out;
}

json verify_json(const VerifyReport& report) {
  json checks = json::array();
  for (const auto& c : report.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return {{"passed", report.passed}, {"checks", checks}};
}

}  // namespace intspec
