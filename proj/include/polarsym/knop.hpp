#pragma once

// Knop reduction on (roots, weights) data: classification of weights,
// reduction steps, terminal decomposition, coisotropy and rank.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polarsym/lie.hpp"
#include "polarsym/rep.hpp"

namespace polarsym {

struct ReductionStep {
    Weight lambda;
    std::vector<Weight> P;  // roots with positive pairing against lambda
    std::vector<Weight> Q;  // lambda - alpha for alpha in P (a multiset)
    WeightMultiset removed; // Q + (-Q)
};

class ReductionState {
public:
    ReductionState() = default;
    /// Full root system of `rsd` and the given weights.
    ReductionState(RootSystemPtr rsd, WeightMultiset weights);
    explicit ReductionState(const RepSpec& spec);

    const RootSystemData& root_system() const { return *rsd_; }
    RootSystemPtr root_system_ptr() const { return rsd_; }
    /// Indices into root_system().roots() of the current roots, ascending.
    const std::vector<std::size_t>& roots() const { return roots_; }
    bool has_root(const Weight& w) const;
    const WeightMultiset& weights() const { return weights_; }
    const std::vector<ReductionStep>& trace() const { return trace_; }

private:
    friend ReductionState reduction_step(const ReductionState&, const Weight&);

    RootSystemPtr rsd_;
    std::vector<std::size_t> roots_;
    std::vector<bool> present_;  // per root of rsd_
    WeightMultiset weights_;
    std::vector<ReductionStep> trace_;
};

struct WeightClass {
    bool extremal = false;
    bool toroidal = false;
    bool singular = false;

    bool eligible() const { return extremal && !toroidal && !singular; }
};

/// Flags against the current roots and weights of `state`; WeightNotPresent if
/// lambda is not a weight of the state.
WeightClass classify_weight(const Weight& lambda, const ReductionState& state);

/// Distinct weights that are extremal but neither toroidal nor singular, ascending.
std::vector<Weight> eligible_weights(const ReductionState& state);

bool is_terminal(const ReductionState& state);

/// One step with the chosen weight. IneligibleWeight if lambda is not
/// extremal, or is toroidal or singular; InternalInconsistency if Q + (-Q) is
/// not contained in the weights or the remaining roots are not closed.
ReductionState reduction_step(const ReductionState& state, const Weight& lambda);

struct ChoicePolicy {
    enum class Kind {
        Lexicographic,  // lexicographically greatest eligible weight
        Highest,        // greatest <lambda | 2 rho^vee>, ties broken lexicographically
        Random,         // uniform, from a generator seeded with `seed`
    };
    Kind kind = Kind::Lexicographic;
    std::uint64_t seed = 0;

    static ChoicePolicy lexicographic() { return {Kind::Lexicographic, 0}; }
    static ChoicePolicy highest() { return {Kind::Highest, 0}; }
    static ChoicePolicy random(std::uint64_t seed) { return {Kind::Random, seed}; }

    std::string name() const;
};

ChoicePolicy default_policy();

struct ToroidalPair {
    Weight representative;  // lexicographically greater of lambda, -lambda
    int multiplicity = 1;
};

struct SingularBlock {
    Weight highest;              // greatest height, then lexicographically greatest
    int dimension = 0;           // dim V_i, Sp(V_i) acting
    std::vector<Weight> weights; // ascending
};

struct TerminalDecomposition {
    std::vector<ToroidalPair> toroidal_pairs;  // ascending by representative
    /// Multiplicity of the zero weight; toroidal but not part of any pair.
    int zero_multiplicity = 0;
    std::vector<SingularBlock> singular_blocks;
    std::vector<std::size_t> residual_roots;

    /// Representatives repeated according to multiplicity.
    std::vector<Weight> toroidal_weights() const;
};

/// Terminal decomposition of a terminal state; PreconditionViolated if not
/// terminal, InternalInconsistency if the blocks do not exhaust the weights.
TerminalDecomposition terminal_decomposition(const ReductionState& state);

struct ReductionResult {
    ReductionState final_state;
    TerminalDecomposition terminal;
    const std::vector<ReductionStep>& trace() const { return final_state.trace(); }
};

ReductionResult reduce_to_terminal(const ReductionState& start, const ChoicePolicy& policy = default_policy());
ReductionResult reduce_to_terminal(const RepSpec& spec, const ChoicePolicy& policy = default_policy());

struct CoisotropyResult {
    bool coisotropic = false;         // representatives with repetition are independent, no zero weight
    bool toroidal_basis_ok = false;   // distinct representatives are independent
};

CoisotropyResult coisotropy_test(const TerminalDecomposition& td);

/// Number of toroidal pairs, counted with multiplicity.
int rank(const TerminalDecomposition& td);
int rank(const RepSpec& spec, const ChoicePolicy& policy = default_policy());

}  // namespace polarsym
