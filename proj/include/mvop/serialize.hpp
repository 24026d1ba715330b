#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mvop/family.hpp"
#include "mvop/orthogonality.hpp"
#include "mvop/recurrence.hpp"
#include "mvop/verify.hpp"

// nlohmann::json is an implementation detail of the .cpp; callers get strings.
namespace mvop {

/// {"params", "label", "lambda", "mu", "F0", "coeffs"}; coeffs is u-power major.
std::string eigen_json(const Params& p, const EigenFunction& ef);
/// {"params", "wmax", "polynomials":[{"w", "coeffs":[row-major matrices]}]}
std::string family_json(const Params& p, const std::vector<PolynomialPackage>& packages);
/// {"params", "blocks":[{"w","A","B","C","three_term_residual"}]}
std::string recursion_json(const Params& p, const std::vector<RecursionBlocks>& blocks,
                           const std::vector<double>& residuals);
/// {"params","wmax","passed","checks":[...]}; the plural form wraps a list under "reports".
std::string report_json(const RunReport& report);
std::string reports_json(const std::vector<RunReport>& reports);
std::string params_json(const Params& p);
std::string gram_json(const Params& p, const GramResult& g);
std::string walk_json(const Params& p, std::uint64_t seed, const std::vector<WalkState>& path);

/// Parses and re-serializes a JSON document with the same formatting rules.
std::string json_roundtrip(const std::string& text);

std::string gram_csv(const GramResult& g);
std::string walk_csv(const std::vector<WalkState>& path);
std::string recursion_csv(const std::vector<RecursionBlocks>& blocks);
std::string eigen_csv(const EigenFunction& ef);
std::string family_csv(const std::vector<PolynomialPackage>& packages);
std::string reports_csv(const std::vector<RunReport>& reports);

/// Shortest decimal representation that parses back to the same double.
std::string format_double(double x);

}  // namespace mvop
