#pragma once

// Checks on the moment image of a coisotropic representation: strong
// orthogonality, weight multiplicity freeness, the moment map on the Cartan
// subspace, Weyl-orbit separation on the moment image and the rank condition
// for sums.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "polarsym/exact.hpp"
#include "polarsym/knop.hpp"
#include "polarsym/lie.hpp"
#include "polarsym/rep.hpp"

namespace polarsym {

/// The span a* = <lambda_1, ..., lambda_r> of the toroidal weights.
struct MomentImage {
    std::vector<Weight> lambdas;
    ReductiveAlgebra algebra;

    std::size_t rank() const { return lambdas.size(); }
};

/// Toroidal weights of the terminal decomposition, repeated by multiplicity;
/// DependentBasis if they are not linearly independent (not coisotropic).
MomentImage moment_image(const TerminalDecomposition& td, const ReductiveAlgebra& algebra);
MomentImage moment_image(const RepSpec& spec, const ChoicePolicy& policy = default_policy());

/// lambda_i + alpha is never +-lambda_j for i != j and alpha a root.
bool strong_orthogonality_check(const MomentImage& mi, const RootSystemData& rsd);

/// Every weight of the representation has multiplicity one.
bool wmf_check(const RepSpec& spec);

/// sum_j a_j^2 lambda_j; LengthMismatch unless there is one coefficient per lambda.
RationalVector moment_on_cartan(const MomentImage& mi, std::span<const Rational> coeffs);

struct OrbitCounterexample {
    RationalVector xi;                             // coordinates in the lambda basis
    std::vector<RationalVector> weyl_intersection; // W.xi meet a*, same coordinates
    std::vector<RationalVector> gamma_orbit;
};

struct OrbitSeparationResult {
    bool verified = false;
    std::size_t samples_checked = 0;
    std::size_t resampled = 0;      // draws rejected for a nontrivial Gamma-stabilizer
    std::size_t gamma_order = 1;
    std::uint64_t weyl_order = 1;
    std::optional<OrbitCounterexample> counterexample;
};

/// Draws `samples` rational points xi of a* (numerators |n| <= 20,
/// denominators <= 7, seeded) and checks W.xi meet a* == Gamma.xi by brute
/// force over the Weyl group. GroupTooLarge above `group_cap`.
OrbitSeparationResult orbit_separation_check(const MomentImage& mi, RootSystemPtr rsd, std::size_t samples,
                                             std::uint64_t seed, std::uint64_t group_cap = kDefaultGroupCap);

enum class RankConditionStatus { Holds, Violated, Inconclusive };
std::string to_string(RankConditionStatus s);

struct RankConditionResult {
    RankConditionStatus status = RankConditionStatus::Inconclusive;
    std::vector<int> ranks;  // per part
    int combined_rank = 0;
    std::string note;
};

/// `sum` is one representation over the amalgamated algebra; `parts[i]` lists
/// the indices of its components forming summand i, flagged stable or not.
/// Without a stable summand the condition does not apply and the result is
/// Inconclusive (ranks are still reported).
RankConditionResult rank_condition_check(const RepSpec& sum, std::span<const std::vector<std::size_t>> parts,
                                         std::span<const bool> stable,
                                         const ChoicePolicy& policy = default_policy());

/// The sub-representation formed by the listed components, over the same algebra.
RepSpec sub_representation(const RepSpec& spec, std::span<const std::size_t> components);

}  // namespace polarsym
