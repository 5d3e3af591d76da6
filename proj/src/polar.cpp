#include "polarsym/polar.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "polarsym/errors.hpp"

namespace polarsym {

MomentImage moment_image(const TerminalDecomposition& td, const ReductiveAlgebra& algebra) {
    MomentImage mi{td.toroidal_weights(), algebra};
    if (!linearly_independent(mi.lambdas))
        throw Error(ErrorCode::DependentBasis, "toroidal weights are linearly dependent");
    return mi;
}

MomentImage moment_image(const RepSpec& spec, const ChoicePolicy& policy) {
    return moment_image(reduce_to_terminal(spec, policy).terminal, spec.algebra());
}

bool strong_orthogonality_check(const MomentImage& mi, const RootSystemData& rsd) {
    const auto& l = mi.lambdas;
    for (std::size_t i = 0; i < l.size(); ++i)
        for (std::size_t j = 0; j < l.size(); ++j) {
            if (i == j) continue;
            for (const auto& r : rsd.roots()) {
                const Weight s = l[i] + r.weight;
                if (s == l[j] || s == -l[j]) return false;
            }
        }
    return true;
}

bool wmf_check(const RepSpec& spec) {
    return spec.weights().max_multiplicity() <= 1;
}

RationalVector moment_on_cartan(const MomentImage& mi, std::span<const Rational> coeffs) {
    if (coeffs.size() != mi.lambdas.size())
        throw Error(ErrorCode::LengthMismatch, "expected " + std::to_string(mi.lambdas.size()) + " coefficients, got " +
                                                   std::to_string(coeffs.size()));
    RationalVector out(static_cast<std::size_t>(mi.algebra.dimension()));
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
        const Rational sq = coeffs[j] * coeffs[j];
        for (std::size_t k = 0; k < out.size(); ++k) out[k] += sq * mi.lambdas[j][k];
    }
    return out;
}

namespace {

using IntVec = std::vector<std::int64_t>;

RationalVector unscale(const IntVec& v, std::int64_t den) {
    RationalVector q;
    for (auto x : v) q.emplace_back(Rational(x) / den);
    return q;
}

}  // namespace

OrbitSeparationResult orbit_separation_check(const MomentImage& mi, RootSystemPtr rsd, std::size_t samples,
                                             std::uint64_t seed, std::uint64_t group_cap) {
    OrbitSeparationResult res;
    res.weyl_order = rsd->algebra().weyl_group_order();
    const std::size_t r = mi.rank();
    if (r == 0) {
        res.verified = true;
        return res;
    }
    const auto group = enumerate_weyl_group(rsd, group_cap);
    const auto gamma = subspace_normalizer_quotient(mi.lambdas, group);
    res.gamma_order = gamma.order();
    const SpanCoordinates span(mi.lambdas);
    const std::int64_t den = span.denominator();
    const std::size_t dim = static_cast<std::size_t>(rsd->algebra().dimension());

    // Gamma maps scaled to integers: den * M.
    std::vector<IntVec> gmaps;
    for (const auto& m : gamma.maps) {
        IntVec g(r * r);
        for (std::size_t k = 0; k < r * r; ++k) {
            const Rational s = m[k] * den;
            g[k] = static_cast<std::int64_t>(numerator(s));
        }
        gmaps.push_back(std::move(g));
    }

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(-20, 20), dnm(1, 7);
    IntVec x(dim), image(dim), coords(r);
    res.verified = true;
    while (res.samples_checked < samples) {
        // xi = sum_j (n_j / d_j) lambda_j, scaled by lcm(d_j) to integer coefficients c.
        std::vector<int> n(r), d(r);
        std::int64_t l = 1;
        for (std::size_t j = 0; j < r; ++j) {
            n[j] = num(rng);
            d[j] = dnm(rng);
            l = std::lcm(l, static_cast<std::int64_t>(d[j]));
        }
        IntVec c(r);
        for (std::size_t j = 0; j < r; ++j) c[j] = n[j] * (l / d[j]);

        // Gamma-orbit in coordinates scaled by den.
        std::set<IntVec> gamma_orbit;
        for (const auto& g : gmaps) {
            IntVec y(r, 0);
            for (std::size_t row = 0; row < r; ++row)
                for (std::size_t k = 0; k < r; ++k) y[row] += g[row * r + k] * c[k];
            gamma_orbit.insert(std::move(y));
        }
        if (gamma_orbit.size() != gmaps.size()) {
            ++res.resampled;
            if (res.resampled > 100 * samples + 100)
                throw Error(ErrorCode::InternalInconsistency, "could not draw a point with trivial Gamma-stabilizer");
            continue;
        }

        std::fill(x.begin(), x.end(), 0);
        for (std::size_t j = 0; j < r; ++j)
            for (std::size_t k = 0; k < dim; ++k) x[k] += c[j] * mi.lambdas[j][k];
        std::set<IntVec> weyl_meet;
        for (std::size_t i = 0; i < group.size(); ++i) {
            group.apply_inverse_into(i, x, image);
            if (!span.contains(image)) continue;
            span.scaled_coordinates(image, coords);
            weyl_meet.insert(coords);
        }
        ++res.samples_checked;
        if (weyl_meet != gamma_orbit) {
            res.verified = false;
            OrbitCounterexample ce;
            IntVec scaled_c(r);
            for (std::size_t j = 0; j < r; ++j) scaled_c[j] = c[j] * den;
            ce.xi = unscale(scaled_c, den * l);
            for (const auto& v : weyl_meet) ce.weyl_intersection.push_back(unscale(v, den * l));
            for (const auto& v : gamma_orbit) ce.gamma_orbit.push_back(unscale(v, den * l));
            res.counterexample = std::move(ce);
            break;
        }
    }
    return res;
}

std::string to_string(RankConditionStatus s) {
    switch (s) {
        case RankConditionStatus::Holds: return "holds";
        case RankConditionStatus::Violated: return "violated";
        case RankConditionStatus::Inconclusive: return "inconclusive";
    }
    return "";
}

RepSpec sub_representation(const RepSpec& spec, std::span<const std::size_t> components) {
    std::vector<Component> comps;
    for (auto i : components) {
        if (i >= spec.components().size())
            throw Error(ErrorCode::PreconditionViolated, "component index " + std::to_string(i) + " out of range");
        comps.push_back(spec.components()[i]);
    }
    return RepSpec(spec.algebra(), std::move(comps), spec.saturated());
}

RankConditionResult rank_condition_check(const RepSpec& sum, std::span<const std::vector<std::size_t>> parts,
                                         std::span<const bool> stable, const ChoicePolicy& policy) {
    if (parts.size() != stable.size())
        throw Error(ErrorCode::LengthMismatch, "one stability flag per part is required");
    RankConditionResult res;
    int total = 0;
    for (const auto& p : parts) {
        res.ranks.push_back(rank(sub_representation(sum, p), policy));
        total += res.ranks.back();
    }
    res.combined_rank = rank(sum, policy);
    if (std::none_of(stable.begin(), stable.end(), [](bool b) { return b; })) {
        res.status = RankConditionStatus::Inconclusive;
        res.note = "no stable summand; the rank condition does not apply";
        return res;
    }
    res.status = res.combined_rank == total ? RankConditionStatus::Holds : RankConditionStatus::Violated;
    return res;
}

}  // namespace polarsym
