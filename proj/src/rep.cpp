#include "polarsym/rep.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "polarsym/errors.hpp"

namespace polarsym {

// ---------------------------------------------------------------------------
// WeightMultiset

void WeightMultiset::add(const Weight& w, int multiplicity) {
    if (multiplicity < 0) throw Error(ErrorCode::PreconditionViolated, "negative multiplicity");
    if (multiplicity == 0) return;
    if (dim_ == 0 && entries_.empty()) dim_ = w.size();
    if (w.size() != dim_) throw Error(ErrorCode::DimensionMismatch, "weight " + w.to_string() + " has wrong length");
    entries_[w] += multiplicity;
}

bool WeightMultiset::remove(const Weight& w, int multiplicity) {
    auto it = entries_.find(w);
    if (it == entries_.end() || it->second < multiplicity) return multiplicity <= 0;
    it->second -= multiplicity;
    if (it->second == 0) entries_.erase(it);
    return true;
}

int WeightMultiset::multiplicity(const Weight& w) const {
    auto it = entries_.find(w);
    return it == entries_.end() ? 0 : it->second;
}

std::int64_t WeightMultiset::total() const {
    std::int64_t t = 0;
    for (const auto& [w, m] : entries_) t += m;
    return t;
}

int WeightMultiset::max_multiplicity() const {
    int best = 0;
    for (const auto& [w, m] : entries_) best = std::max(best, m);
    return best;
}

WeightMultiset WeightMultiset::padded(std::size_t extra) const {
    WeightMultiset out(dim_ + extra);
    for (const auto& [w, m] : entries_) {
        auto c = w.coords();
        c.resize(dim_ + extra, 0);
        out.entries_.emplace(Weight(std::move(c)), m);
    }
    return out;
}

WeightMultiset& WeightMultiset::operator+=(const WeightMultiset& o) {
    if (o.empty()) return *this;
    if (empty() && dim_ == 0) dim_ = o.dim_;
    if (o.dim_ != dim_) throw Error(ErrorCode::DimensionMismatch, "multisets live in different coordinate spaces");
    for (const auto& [w, m] : o.entries_) entries_[w] += m;
    return *this;
}

WeightMultiset dual(const WeightMultiset& ms) {
    WeightMultiset out(ms.coordinate_dim());
    for (const auto& [w, m] : ms) out.add(-w, m);
    return out;
}

namespace {

std::vector<bool> support(const WeightMultiset& ms) {
    std::vector<bool> s(ms.coordinate_dim(), false);
    for (const auto& [w, m] : ms)
        for (std::size_t i = 0; i < w.size(); ++i)
            if (w[i] != 0) s[i] = true;
    return s;
}

}  // namespace

WeightMultiset outer_tensor(const WeightMultiset& a, const WeightMultiset& b) {
    if (a.coordinate_dim() != b.coordinate_dim())
        throw Error(ErrorCode::DimensionMismatch, "outer tensor of multisets in different coordinate spaces");
    const auto sa = support(a), sb = support(b);
    for (std::size_t i = 0; i < sa.size(); ++i)
        if (sa[i] && sb[i])
            throw Error(ErrorCode::OverlappingBlocks, "both factors act on coordinate " + std::to_string(i));
    WeightMultiset out(a.coordinate_dim());
    for (const auto& [x, m] : a)
        for (const auto& [y, n] : b) out.add(x + y, m * n);
    return out;
}

Weight embed_weight(const Weight& w, const ReductiveAlgebra& from, const ReductiveAlgebra& to,
                    std::span<const int> factor_map, std::span<const int> torus_map) {
    if (static_cast<int>(w.size()) != from.dimension())
        throw Error(ErrorCode::DimensionMismatch, "weight does not belong to the source algebra");
    if (factor_map.size() != from.factors().size() || static_cast<int>(torus_map.size()) != from.torus_rank())
        throw Error(ErrorCode::DimensionMismatch, "embedding maps have the wrong length");
    Weight out(static_cast<std::size_t>(to.dimension()));
    for (std::size_t i = 0; i < factor_map.size(); ++i) {
        const int target = factor_map[i];
        if (target < 0 || target >= static_cast<int>(to.factors().size()) ||
            !(to.factors()[target] == from.factors()[i]))
            throw Error(ErrorCode::AlgebraMismatch, "factor map sends " + from.factors()[i].name() + " to a different factor");
        for (int k = 0; k < from.factors()[i].rank; ++k)
            out[to.factor_offset(target) + k] += w[from.factor_offset(i) + k];
    }
    for (std::size_t k = 0; k < torus_map.size(); ++k) {
        if (torus_map[k] < 0 || torus_map[k] >= to.torus_rank())
            throw Error(ErrorCode::AlgebraMismatch, "torus map out of range");
        out[to.torus_offset() + torus_map[k]] += w[from.torus_offset() + k];
    }
    return out;
}

namespace {

std::pair<std::vector<int>, std::vector<int>> product_maps(const ReductiveAlgebra& a, const ReductiveAlgebra& b,
                                                           bool second) {
    std::vector<int> f, t;
    const auto& src = second ? b : a;
    const int f0 = second ? static_cast<int>(a.factors().size()) : 0;
    const int t0 = second ? a.torus_rank() : 0;
    for (std::size_t i = 0; i < src.factors().size(); ++i) f.push_back(f0 + static_cast<int>(i));
    for (int k = 0; k < src.torus_rank(); ++k) t.push_back(t0 + k);
    return {f, t};
}

WeightMultiset embed_multiset(const WeightMultiset& ms, const ReductiveAlgebra& from, const ReductiveAlgebra& to,
                              std::span<const int> fmap, std::span<const int> tmap) {
    WeightMultiset out(static_cast<std::size_t>(to.dimension()));
    for (const auto& [w, m] : ms) out.add(embed_weight(w, from, to, fmap, tmap), m);
    return out;
}

}  // namespace

WeightMultiset outer_tensor(const WeightMultiset& a, const ReductiveAlgebra& alg_a, const WeightMultiset& b,
                            const ReductiveAlgebra& alg_b) {
    const auto prod = product(alg_a, alg_b);
    auto [fa, ta] = product_maps(alg_a, alg_b, false);
    auto [fb, tb] = product_maps(alg_a, alg_b, true);
    return outer_tensor(embed_multiset(a, alg_a, prod, fa, ta), embed_multiset(b, alg_b, prod, fb, tb));
}

bool is_weyl_invariant(const WeightMultiset& ms, const RootSystemData& rsd) {
    for (const auto& [w, m] : ms)
        for (auto s : rsd.simple_roots())
            if (ms.multiplicity(reflect(w, rsd.root(s))) != m) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Highest weight modules

bool is_dominant(const ReductiveAlgebra& algebra, const Weight& w) {
    if (static_cast<int>(w.size()) != algebra.dimension())
        throw Error(ErrorCode::DimensionMismatch, "weight " + w.to_string() + " does not match " + algebra.to_string());
    for (int i = 0; i < algebra.semisimple_rank(); ++i)
        if (w[i] < 0) return false;
    return true;
}

namespace {

void require_dominant(const ReductiveAlgebra& algebra, const Weight& w) {
    if (!is_dominant(algebra, w))
        throw Error(ErrorCode::NotDominant, w.to_string(algebra.torus_offset()) + " is not dominant for " + algebra.to_string());
}

Weight block(const Weight& w, int off, int len) {
    return Weight(std::vector<int>(w.begin() + off, w.begin() + off + len));
}

// Integer Gram matrix of the fundamental weights, scaled by a common
// denominator: (x, y) * scale = x^T gram y for fundamental coordinates x, y.
struct FundamentalForm {
    std::vector<std::vector<std::int64_t>> gram;

    std::int64_t operator()(const Weight& x, const Weight& y) const {
        std::int64_t s = 0;
        for (std::size_t i = 0; i < gram.size(); ++i) {
            if (x[i] == 0) continue;
            for (std::size_t j = 0; j < gram.size(); ++j) s += x[i] * gram[i][j] * y[j];
        }
        return s;
    }
};

// (omega_i, omega_k) = (A^{-1})_{ik} d_i.
FundamentalForm fundamental_form(const SimpleFactor& f) {
    const int n = f.rank;
    const auto a = cartan_matrix(f);
    const auto d = symmetrizer(f);
    std::vector<RationalVector> aug(n, RationalVector(2 * n, Rational(0)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug[i][j] = a[i][j];
        aug[i][n + i] = 1;
    }
    for (int c = 0; c < n; ++c) {
        int p = c;
        while (aug[p][c] == 0) ++p;
        std::swap(aug[p], aug[c]);
        const Rational inv = Rational(1) / aug[c][c];
        for (auto& x : aug[c]) x *= inv;
        for (int r = 0; r < n; ++r) {
            if (r == c || aug[r][c] == 0) continue;
            const Rational m = aug[r][c];
            for (int k = 0; k < 2 * n; ++k) aug[r][k] -= m * aug[c][k];
        }
    }
    BigInt l = 1;
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(aug[i][n + k]));
    FundamentalForm form;
    form.gram.assign(n, std::vector<std::int64_t>(n));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const Rational v = aug[i][n + k] * d[i] * Rational(l);
            form.gram[i][k] = static_cast<std::int64_t>(boost::multiprecision::numerator(v));
        }
    return form;
}

// Dominant weights and multiplicities of the irreducible module of a single
// simple factor (Freudenthal's recursion).
std::map<Weight, int> dominant_multiplicities(const SimpleFactor& f, const Weight& highest) {
    const ReductiveAlgebra alg({f}, 0);
    const RootSystemData rsd(alg);
    const FundamentalForm form = fundamental_form(f);
    const int n = f.rank;

    // Dominant weights below `highest`, by descending height.
    std::set<Weight> found{highest};
    std::vector<Weight> todo{highest};
    while (!todo.empty()) {
        Weight mu = todo.back();
        todo.pop_back();
        for (auto pi : rsd.positive_roots()) {
            Weight nu = mu - rsd.root(pi).weight;
            if (std::all_of(nu.begin(), nu.end(), [](int x) { return x >= 0; }) && found.insert(nu).second)
                todo.push_back(nu);
        }
    }
    std::vector<Weight> order(found.begin(), found.end());
    std::stable_sort(order.begin(), order.end(),
                     [&](const Weight& x, const Weight& y) { return rsd.height(x) > rsd.height(y); });

    Weight rho(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) rho[i] = 1;
    const Weight lr = highest + rho;
    const std::int64_t top = form(lr, lr);

    std::map<Weight, int> mult;
    auto lookup = [&](const Weight& w) {
        auto it = mult.find(dominant_conjugate(w, rsd));
        return it == mult.end() ? 0 : it->second;
    };
    for (const auto& mu : order) {
        if (mu == highest) {
            mult[mu] = 1;
            continue;
        }
        const Weight mr = mu + rho;
        const std::int64_t coeff = top - form(mr, mr);
        std::int64_t rhs = 0;
        for (auto pi : rsd.positive_roots()) {
            const Weight& alpha = rsd.root(pi).weight;
            Weight nu = mu + alpha;
            for (;;) {
                const int m = lookup(nu);
                if (m == 0) break;
                rhs += 2 * static_cast<std::int64_t>(m) * form(nu, alpha);
                nu += alpha;
            }
        }
        if (coeff <= 0 || rhs % coeff != 0)
            throw Error(ErrorCode::InternalInconsistency, "Freudenthal recursion produced a non-integral multiplicity");
        const auto m = rhs / coeff;
        if (m > 0) mult[mu] = static_cast<int>(m);
    }
    return mult;
}

WeightMultiset factor_weights(const SimpleFactor& f, const Weight& highest) {
    const RootSystemData rsd(ReductiveAlgebra({f}, 0));
    WeightMultiset out(static_cast<std::size_t>(f.rank));
    for (const auto& [mu, m] : dominant_multiplicities(f, highest))
        for (const auto& w : weyl_orbit(mu, rsd)) out.add(w, m);
    return out;
}

}  // namespace

WeightMultiset irrep_weights(const ReductiveAlgebra& algebra, const Weight& highest) {
    require_dominant(algebra, highest);
    // Start from the torus block and tensor in one factor at a time.
    WeightMultiset acc(static_cast<std::size_t>(algebra.dimension()));
    {
        Weight t(static_cast<std::size_t>(algebra.dimension()));
        for (int k = algebra.torus_offset(); k < algebra.dimension(); ++k) t[k] = highest[k];
        acc.add(t);
    }
    for (std::size_t i = 0; i < algebra.factors().size(); ++i) {
        const auto& f = algebra.factors()[i];
        const int off = algebra.factor_offset(i);
        const auto local = factor_weights(f, block(highest, off, f.rank));
        WeightMultiset next(static_cast<std::size_t>(algebra.dimension()));
        for (const auto& [x, m] : acc)
            for (const auto& [y, n] : local) {
                Weight z = x;
                for (int k = 0; k < f.rank; ++k) z[off + k] = y[k];
                next.add(z, m * n);
            }
        acc = std::move(next);
    }
    const BigInt expected = weyl_dimension(algebra, highest);
    if (BigInt(acc.total()) != expected)
        throw Error(ErrorCode::InternalInconsistency,
                    "weight count " + std::to_string(acc.total()) + " differs from Weyl dimension " + expected.str());
    return acc;
}

BigInt weyl_dimension(const ReductiveAlgebra& algebra, const Weight& highest) {
    require_dominant(algebra, highest);
    const auto rsd = build_root_system(algebra);
    BigInt num = 1, den = 1;
    for (auto pi : rsd->positive_roots()) {
        const auto& cor = rsd->root(pi).coroot;
        std::int64_t a = 0, b = 0;
        for (int i = 0; i < algebra.semisimple_rank(); ++i) {
            a += static_cast<std::int64_t>(highest[i] + 1) * cor[i];
            b += cor[i];
        }
        num *= a;
        den *= b;
    }
    if (num % den != 0) throw Error(ErrorCode::InternalInconsistency, "Weyl dimension formula is not integral");
    return num / den;
}

std::string to_string(FsType t) {
    switch (t) {
        case FsType::Symplectic: return "symplectic";
        case FsType::Orthogonal: return "orthogonal";
        case FsType::None: return "none";
    }
    return "none";
}

Weight dual_highest_weight(const ReductiveAlgebra& algebra, const Weight& highest) {
    require_dominant(algebra, highest);
    return dominant_conjugate(-highest, *build_root_system(algebra));
}

FsType fs_classification(const ReductiveAlgebra& algebra, const Weight& highest) {
    require_dominant(algebra, highest);
    for (int k = algebra.torus_offset(); k < algebra.dimension(); ++k)
        if (highest[k] != 0) return FsType::None;
    const auto rsd = build_root_system(algebra);
    // Self-dual iff -lambda lies in the Weyl orbit of lambda, i.e. has the same
    // dominant representative.
    if (dominant_conjugate(-highest, *rsd) != highest) return FsType::None;
    return rsd->height(highest) % 2 != 0 ? FsType::Symplectic : FsType::Orthogonal;
}

// ---------------------------------------------------------------------------
// Components

namespace {

Weight semisimple_part(const ReductiveAlgebra& algebra, const Weight& w) {
    Weight out = w;
    for (int k = algebra.torus_offset(); k < algebra.dimension(); ++k) out[k] = 0;
    return out;
}

}  // namespace

Component make_type1(const ReductiveAlgebra& algebra, const Weight& highest) {
    const auto fs = fs_classification(algebra, highest);
    if (fs != FsType::Symplectic)
        throw Error(ErrorCode::PreconditionViolated, "module " + highest.to_string(algebra.torus_offset()) +
                                                         " is " + to_string(fs) + ", not symplectic");
    return Component{ComponentKind::Type1, highest, irrep_weights(algebra, highest), false};
}

Component make_dual_pair(const ReductiveAlgebra& algebra, const Weight& u_highest) {
    auto u = irrep_weights(algebra, u_highest);
    const bool symplectic = fs_classification(algebra, semisimple_part(algebra, u_highest)) == FsType::Symplectic;
    return Component{ComponentKind::Type2, u_highest, u + dual(u), symplectic};
}

Type2Construction make_type2(const ReductiveAlgebra& algebra, const Weight& u_highest, bool allow_symplectic_u) {
    require_dominant(algebra, u_highest);
    const bool symplectic = fs_classification(algebra, semisimple_part(algebra, u_highest)) == FsType::Symplectic;
    if (symplectic && !allow_symplectic_u)
        throw Error(ErrorCode::PreconditionViolated,
                    "U = " + u_highest.to_string(algebra.torus_offset()) + " is symplectic; T(U) is then U + U");
    auto ext = algebra.with_extra_torus(1);
    auto c = u_highest.coords();
    c.push_back(1);
    Weight hw(std::move(c));
    auto comp = make_dual_pair(ext, hw);
    comp.symplectic_u = symplectic;
    return {ext, comp};
}

// ---------------------------------------------------------------------------
// RepSpec

RepSpec::RepSpec(ReductiveAlgebra algebra, std::vector<Component> components, bool saturated)
    : algebra_(std::move(algebra)), components_(std::move(components)), saturated_(saturated) {
    const auto dim = static_cast<std::size_t>(algebra_.dimension());
    for (const auto& c : components_) {
        if (c.highest_weight.size() != dim || (!c.weights.empty() && c.weights.coordinate_dim() != dim))
            throw Error(ErrorCode::DimensionMismatch, "component does not live over " + algebra_.to_string());
    }
}

WeightMultiset RepSpec::weights() const {
    WeightMultiset out(static_cast<std::size_t>(algebra_.dimension()));
    for (const auto& c : components_) out += c.weights;
    return out;
}

std::int64_t RepSpec::dimension() const {
    std::int64_t d = 0;
    for (const auto& c : components_) d += c.weights.total();
    return d;
}

RepSpec RepSpec::with_extra_torus(int extra) const {
    std::vector<Component> comps;
    for (const auto& c : components_) {
        auto hw = c.highest_weight.coords();
        hw.resize(hw.size() + extra, 0);
        comps.push_back(Component{c.kind, Weight(std::move(hw)), c.weights.padded(extra), c.symplectic_u});
    }
    return RepSpec(algebra_.with_extra_torus(extra), std::move(comps), saturated_);
}

bool has_exclusive_torus(const RepSpec& spec, std::size_t component) {
    const auto& alg = spec.algebra();
    for (int k = alg.torus_offset(); k < alg.dimension(); ++k) {
        bool mine = false, others = false;
        for (std::size_t i = 0; i < spec.components().size(); ++i) {
            bool acts = false;
            for (const auto& [w, m] : spec.components()[i].weights)
                if (w[k] != 0) {
                    acts = true;
                    break;
                }
            (i == component ? mine : others) |= acts;
        }
        if (mine && !others) return true;
    }
    return false;
}

namespace {

bool every_type2_has_exclusive_torus(const RepSpec& spec) {
    for (std::size_t i = 0; i < spec.components().size(); ++i)
        if (spec.components()[i].kind == ComponentKind::Type2 && !has_exclusive_torus(spec, i)) return false;
    return true;
}

}  // namespace

RepSpec direct_sum(std::span<const RepSpec> specs) {
    if (specs.empty()) return RepSpec();
    std::vector<Component> comps;
    bool saturated = true;
    for (const auto& s : specs) {
        if (!(s.algebra() == specs[0].algebra()))
            throw Error(ErrorCode::AlgebraMismatch,
                        "cannot add representations of " + s.algebra().to_string() + " and " + specs[0].algebra().to_string());
        comps.insert(comps.end(), s.components().begin(), s.components().end());
        saturated = saturated && s.saturated();
    }
    RepSpec out(specs[0].algebra(), std::move(comps), false);
    out.set_saturated(saturated && every_type2_has_exclusive_torus(out));
    return out;
}

RepSpec direct_sum(const RepSpec& a, const RepSpec& b) {
    const RepSpec both[] = {a, b};
    return direct_sum(both);
}

RepSpec embed(const RepSpec& spec, const ReductiveAlgebra& to, std::span<const int> factor_map,
              std::span<const int> torus_map) {
    std::vector<Component> comps;
    for (const auto& c : spec.components()) {
        comps.push_back(Component{c.kind, embed_weight(c.highest_weight, spec.algebra(), to, factor_map, torus_map),
                                  embed_multiset(c.weights, spec.algebra(), to, factor_map, torus_map),
                                  c.symplectic_u});
    }
    return RepSpec(to, std::move(comps), false);
}

RepSpec outer_product(const RepSpec& a, const RepSpec& b) {
    const auto prod = product(a.algebra(), b.algebra());
    auto [fa, ta] = product_maps(a.algebra(), b.algebra(), false);
    auto [fb, tb] = product_maps(a.algebra(), b.algebra(), true);
    auto out = direct_sum(embed(a, prod, fa, ta), embed(b, prod, fb, tb));
    out.set_saturated(a.saturated() && b.saturated());
    return out;
}

RepSpec saturate(const RepSpec& spec) {
    std::vector<std::size_t> missing;
    for (std::size_t i = 0; i < spec.components().size(); ++i)
        if (spec.components()[i].kind == ComponentKind::Type2 && !has_exclusive_torus(spec, i)) missing.push_back(i);
    const int base = spec.algebra().dimension();
    RepSpec widened = spec.with_extra_torus(static_cast<int>(missing.size()));
    auto comps = widened.components();
    for (std::size_t j = 0; j < missing.size(); ++j) {
        auto& c = comps[missing[j]];
        const std::size_t coord = base + j;
        // Split V = U + U* using the weights of U, then tag U with +1 and U* with -1.
        const auto& orig = spec.components()[missing[j]];
        const auto u = irrep_weights(spec.algebra(), orig.highest_weight);
        if (u + dual(u) != orig.weights)
            throw Error(ErrorCode::InternalInconsistency, "type 2 component is not U + U*");
        WeightMultiset w(static_cast<std::size_t>(widened.algebra().dimension()));
        for (const auto& [x, m] : u.padded(missing.size())) {
            Weight y = x;
            y[coord] = 1;
            w.add(y, m);
            w.add(-y, m);
        }
        c.weights = std::move(w);
        c.highest_weight[coord] = 1;
    }
    return RepSpec(widened.algebra(), std::move(comps), true);
}

}  // namespace polarsym
