#include "polarsym/knop.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "polarsym/errors.hpp"

namespace polarsym {

ReductionState::ReductionState(RootSystemPtr rsd, WeightMultiset weights)
    : rsd_(std::move(rsd)), weights_(std::move(weights)) {
    if (!weights_.empty() && static_cast<int>(weights_.coordinate_dim()) != rsd_->algebra().dimension())
        throw Error(ErrorCode::DimensionMismatch, "weights do not match " + rsd_->algebra().to_string());
    roots_.resize(rsd_->roots().size());
    for (std::size_t i = 0; i < roots_.size(); ++i) roots_[i] = i;
    present_.assign(roots_.size(), true);
}

ReductionState::ReductionState(const RepSpec& spec)
    : ReductionState(build_root_system(spec.algebra()), spec.weights()) {}

bool ReductionState::has_root(const Weight& w) const {
    auto idx = rsd_->find(w);
    return idx && present_[*idx];
}

WeightClass classify_weight(const Weight& lambda, const ReductionState& state) {
    const auto& ms = state.weights();
    if (!ms.contains(lambda))
        throw Error(ErrorCode::WeightNotPresent, lambda.to_string() + " is not a weight of the current state");
    WeightClass c;
    c.extremal = true;
    c.toroidal = true;
    for (auto i : state.roots()) {
        const Root& r = state.root_system().root(i);
        const auto p = pairing(lambda, r);
        if (p != 0) c.toroidal = false;
        if (p > 0 && ms.contains(lambda + r.weight)) c.extremal = false;
    }
    c.singular = c.extremal && state.has_root(2 * lambda) && ms.multiplicity(lambda) == 1;
    return c;
}

std::vector<Weight> eligible_weights(const ReductionState& state) {
    std::vector<Weight> out;
    for (const auto& [w, m] : state.weights())
        if (classify_weight(w, state).eligible()) out.push_back(w);
    return out;
}

bool is_terminal(const ReductionState& state) {
    for (const auto& [w, m] : state.weights())
        if (classify_weight(w, state).eligible()) return false;
    return true;
}

namespace {

// The remaining roots must form the root system of a reductive subalgebra.
void check_closed(const ReductionState& s) {
    const auto& rsd = s.root_system();
    for (auto i : s.roots()) {
        if (!s.has_root(rsd.root(rsd.negative_of(i)).weight))
            throw Error(ErrorCode::InternalInconsistency, "remaining roots are not closed under negation");
        for (auto j : s.roots()) {
            const Weight sum = rsd.root(i).weight + rsd.root(j).weight;
            if (rsd.find(sum) && !s.has_root(sum))
                throw Error(ErrorCode::InternalInconsistency, "remaining roots are not closed under addition");
        }
    }
}

}  // namespace

ReductionState reduction_step(const ReductionState& state, const Weight& lambda) {
    const auto cls = classify_weight(lambda, state);
    if (!cls.eligible()) {
        const char* why = !cls.extremal ? "not extremal" : cls.toroidal ? "toroidal" : "singular";
        throw Error(ErrorCode::IneligibleWeight, lambda.to_string() + " is " + why);
    }
    ReductionState next = state;
    ReductionStep step;
    step.lambda = lambda;
    step.removed = WeightMultiset(state.weights().coordinate_dim());
    const auto& rsd = state.root_system();
    for (auto i : state.roots()) {
        const Root& r = rsd.root(i);
        if (pairing(lambda, r) <= 0) continue;
        step.P.push_back(r.weight);
        step.Q.push_back(lambda - r.weight);
        next.present_[i] = false;
        next.present_[rsd.negative_of(i)] = false;
    }
    std::erase_if(next.roots_, [&](std::size_t i) { return !next.present_[i]; });
    for (const auto& q : step.Q) {
        step.removed.add(q);
        step.removed.add(-q);
    }
    for (const auto& [w, m] : step.removed) {
        if (!next.weights_.remove(w, m))
            throw Error(ErrorCode::InternalInconsistency,
                        "weight " + w.to_string() + " occurs fewer than " + std::to_string(m) + " times");
    }
    check_closed(next);
    next.trace_.push_back(std::move(step));
    return next;
}

std::string ChoicePolicy::name() const {
    switch (kind) {
        case Kind::Lexicographic: return "lexicographic";
        case Kind::Highest: return "highest";
        case Kind::Random: return "random(" + std::to_string(seed) + ")";
    }
    return "";
}

// Highest-first reduction keeps the toroidal weights on the boundary of the
// dominant chamber, which is where the tabulated Cartan subspaces live.
ChoicePolicy default_policy() {
    return ChoicePolicy::highest();
}

std::vector<Weight> TerminalDecomposition::toroidal_weights() const {
    std::vector<Weight> out;
    for (const auto& p : toroidal_pairs)
        for (int k = 0; k < p.multiplicity; ++k) out.push_back(p.representative);
    return out;
}

TerminalDecomposition terminal_decomposition(const ReductionState& state) {
    if (!is_terminal(state)) throw Error(ErrorCode::PreconditionViolated, "state is not terminal");
    const auto& rsd = state.root_system();
    TerminalDecomposition td;
    td.residual_roots = state.roots();
    WeightMultiset rest = state.weights();

    std::set<Weight> toroidal;
    for (const auto& [w, m] : state.weights()) {
        const auto c = classify_weight(w, state);
        if (!c.toroidal) continue;
        if (w.is_zero()) {
            td.zero_multiplicity = m;
        } else if (w > -w) {
            td.toroidal_pairs.push_back({w, m});
            if (state.weights().multiplicity(-w) != m)
                throw Error(ErrorCode::InternalInconsistency, "toroidal weight " + w.to_string() + " is unpaired");
        }
        toroidal.insert(w);
    }
    for (const auto& w : toroidal) rest.remove(w, state.weights().multiplicity(w));

    std::set<Weight> covered;
    for (const auto& [w, m] : state.weights()) {
        if (covered.count(w) || !classify_weight(w, state).singular) continue;
        // Orbit of w under the reflections of the remaining roots.
        std::set<Weight> orbit{w};
        std::vector<Weight> todo{w};
        while (!todo.empty()) {
            Weight x = todo.back();
            todo.pop_back();
            for (auto i : state.roots()) {
                Weight y = reflect(x, rsd.root(i));
                if (orbit.insert(y).second) todo.push_back(y);
            }
        }
        SingularBlock b;
        b.weights.assign(orbit.begin(), orbit.end());
        b.dimension = static_cast<int>(orbit.size());
        b.highest = *std::max_element(b.weights.begin(), b.weights.end(), [&](const Weight& x, const Weight& y) {
            const auto hx = rsd.height(x), hy = rsd.height(y);
            return hx != hy ? hx < hy : x < y;
        });
        for (const auto& x : orbit) {
            covered.insert(x);
            if (!rest.remove(x))
                throw Error(ErrorCode::InternalInconsistency, "singular blocks overlap at " + x.to_string());
        }
        td.singular_blocks.push_back(std::move(b));
    }
    if (!rest.empty())
        throw Error(ErrorCode::InternalInconsistency,
                    "terminal weights not covered by toroidal pairs and singular blocks, e.g. " +
                        rest.begin()->first.to_string());
    return td;
}

ReductionResult reduce_to_terminal(const ReductionState& start, const ChoicePolicy& policy) {
    std::mt19937_64 rng(policy.seed);
    ReductionState state = start;
    for (;;) {
        auto eligible = eligible_weights(state);
        if (eligible.empty()) break;
        std::size_t pick = eligible.size() - 1;
        switch (policy.kind) {
            case ChoicePolicy::Kind::Lexicographic:
                break;
            case ChoicePolicy::Kind::Highest: {
                const auto& rsd = state.root_system();
                for (std::size_t i = 0; i < eligible.size(); ++i)
                    if (rsd.height(eligible[i]) >= rsd.height(eligible[pick])) pick = i;
                break;
            }
            case ChoicePolicy::Kind::Random:
                pick = std::uniform_int_distribution<std::size_t>(0, eligible.size() - 1)(rng);
                break;
        }
        state = reduction_step(state, eligible[pick]);
    }
    auto td = terminal_decomposition(state);
    return {std::move(state), std::move(td)};
}

ReductionResult reduce_to_terminal(const RepSpec& spec, const ChoicePolicy& policy) {
    return reduce_to_terminal(ReductionState(spec), policy);
}

CoisotropyResult coisotropy_test(const TerminalDecomposition& td) {
    std::vector<Weight> distinct;
    for (const auto& p : td.toroidal_pairs) distinct.push_back(p.representative);
    CoisotropyResult r;
    r.toroidal_basis_ok = linearly_independent(distinct);
    // A zero toroidal weight is a trivial summand of the slice; it belongs to
    // the weight list of the criterion and makes it dependent.
    const auto all = td.toroidal_weights();
    r.coisotropic = r.toroidal_basis_ok && all.size() == distinct.size() && td.zero_multiplicity == 0;
    return r;
}

int rank(const TerminalDecomposition& td) {
    return static_cast<int>(td.toroidal_weights().size());
}

int rank(const RepSpec& spec, const ChoicePolicy& policy) {
    return rank(reduce_to_terminal(spec, policy).terminal);
}

}  // namespace polarsym
