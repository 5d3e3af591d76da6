#pragma once

// Analysis reports and their JSON / text renderings. Schemas live in
// docs/schemas; every object carries "schema" with its name and version.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "polarsym/classify.hpp"
#include "polarsym/knop.hpp"
#include "polarsym/polar.hpp"
#include "polarsym/rep.hpp"
#include "polarsym/tables.hpp"

namespace polarsym {

using Json = nlohmann::ordered_json;

struct AnalysisReport {
    std::string input;
    RepSpec spec;
    std::vector<std::string> annotations;
    /// The input already gives every type 2 component its own torus.
    bool saturated = true;
    std::string policy;
    std::size_t steps = 0;
    TerminalDecomposition terminal;
    bool coisotropic = false;
    int rank = 0;
    std::optional<MomentImage> moment_image;    // set when coisotropic
    std::optional<bool> strong_orthogonal;      // set when coisotropic
    bool wmf = false;
    PolarityVerdict polarity;
};

/// Reduction, coisotropy and rank of `spec` itself; the polarity verdict is
/// computed for its saturation (see PolarityVerdict::saturated_input).
AnalysisReport analyze(const RepSpec& spec, const ChoicePolicy& policy = default_policy());

Json weight_json(const Weight& w);
Json algebra_json(const ReductiveAlgebra& alg);
Json terminal_json(const TerminalDecomposition& td, const RootSystemData& rsd);

Json to_json(const AnalysisReport& r);
std::string to_text(const AnalysisReport& r);

Json trace_json(const std::string& input, const ReductionResult& result, const ChoicePolicy& policy);
std::string trace_text(const ReductionResult& result, const ReductiveAlgebra& alg);

Json moment_json(const std::string& input, const MomentImage& mi, const std::vector<Rational>& coeffs,
                 const RationalVector& value);

Json orbit_json(const std::string& input, const OrbitSeparationResult& r, std::size_t samples, std::uint64_t seed);

Json to_json(const VerificationReport& r, const TableBudget& budget);

/// Every table row with its metadata and, for each swept instance, the
/// materialized highest weights.
Json tables_json(const TableBudget& budget);

}  // namespace polarsym
