#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"

#include "intspec/filters.hpp"
#include "intspec/genfun.hpp"
#include "intspec/pedestal.hpp"
#include "intspec/poset.hpp"
#include "intspec/spectra.hpp"
#include "intspec/verify.hpp"

namespace intspec {

using nlohmann::json;

/// {"names": [...], "covers": [[a, b], ...]}; ParseError on malformed input.
Poset poset_from_json(const json& j, std::vector<std::string>* warnings = nullptr);
Poset load_poset_file(const std::filesystem::path& path, std::vector<std::string>* warnings = nullptr);
json poset_to_json(const Poset& poset);

/// "{1,3,5,2,4}": 1-based ranks in element order.
std::string ranks_string(const LinearExtension& ext);
std::string order_string(const Poset& poset, const LinearExtension& ext);

json extensions_json(const Poset& poset, const ExtensionSet& exts);
json legend_json(const PedestalMatrix& pm);
json matrix_json(const PedestalMatrix& pm, bool monomial_view);
/// Componentwise minimum exponent over all entries of the monomial matrix.
MonomialVector common_factor(const PedestalMatrix& pm);

json linear_form_json(const LinearForm& form);
json eigenvalues_json(const Spectrum& spectrum);
/// The form rewritten in legend labels, e.g. "a1 - a3".
std::string legend_form(const LinearForm& form, const std::vector<LegendEntry>& legend);

/// "00=5,01=1,10=-2/3"
std::map<EpsilonMask, Rational> parse_specialization(const std::string& text);
json jordan_json(const JordanReport& report);

json filter_json(const Poset& poset, const Filter& f);
json series_json(const TruncatedSeries& s);
json identity_json(const Poset& poset, const IdentityReport& report);
json verify_json(const VerifyReport& report);

}  // namespace intspec
