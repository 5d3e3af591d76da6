#include "polarsym/lie.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_set>

#include "polarsym/errors.hpp"

namespace polarsym {

std::string_view error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::IllegalRank: return "IllegalRank";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::OrbitCapExceeded: return "OrbitCapExceeded";
        case ErrorCode::GroupTooLarge: return "GroupTooLarge";
        case ErrorCode::DependentBasis: return "DependentBasis";
        case ErrorCode::NotDominant: return "NotDominant";
        case ErrorCode::OverlappingBlocks: return "OverlappingBlocks";
        case ErrorCode::AlgebraMismatch: return "AlgebraMismatch";
        case ErrorCode::WeightNotPresent: return "WeightNotPresent";
        case ErrorCode::IneligibleWeight: return "IneligibleWeight";
        case ErrorCode::InternalInconsistency: return "InternalInconsistency";
        case ErrorCode::LengthMismatch: return "LengthMismatch";
        case ErrorCode::ConditionViolated: return "ConditionViolated";
        case ErrorCode::PreconditionViolated: return "PreconditionViolated";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::SemanticError: return "SemanticError";
    }
    return "Error";
}

// ---------------------------------------------------------------------------
// Simple factors

char family_letter(Family f) {
    return "ABCDEFG"[static_cast<int>(f)];
}

SimpleFactor SimpleFactor::make(Family family, int rank) {
    bool ok = false;
    switch (family) {
        case Family::A: ok = rank >= 1; break;
        case Family::B: ok = rank >= 2; break;
        case Family::C: ok = rank >= 2; break;
        case Family::D: ok = rank >= 3; break;
        case Family::E: ok = rank >= 6 && rank <= 8; break;
        case Family::F: ok = rank == 4; break;
        case Family::G: ok = rank == 2; break;
    }
    if (!ok) {
        throw Error(ErrorCode::IllegalRank,
                    std::string(1, family_letter(family)) + std::to_string(rank) + " is not a simple type");
    }
    return SimpleFactor{family, rank};
}

std::string SimpleFactor::name() const {
    return std::string(1, family_letter(family)) + std::to_string(rank);
}

IntMatrix gram_matrix(const SimpleFactor& f) {
    const int n = f.rank;
    IntMatrix g(n, std::vector<int>(n, 0));
    auto link = [&](int i, int j, int v) { g[i][j] = g[j][i] = v; };
    switch (f.family) {
        case Family::A:
            for (int i = 0; i < n; ++i) g[i][i] = 2;
            for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -1);
            break;
        case Family::B:
            // alpha_1..alpha_{n-1} long, alpha_n short
            for (int i = 0; i < n - 1; ++i) g[i][i] = 4;
            g[n - 1][n - 1] = 2;
            for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -2);
            break;
        case Family::C:
            // alpha_1..alpha_{n-1} short, alpha_n long
            for (int i = 0; i < n - 1; ++i) g[i][i] = 2;
            g[n - 1][n - 1] = 4;
            for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1);
            link(n - 2, n - 1, -2);
            break;
        case Family::D:
            for (int i = 0; i < n; ++i) g[i][i] = 2;
            for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1);
            link(n - 3, n - 1, -1);
            break;
        case Family::E:
            // Bourbaki: 1-3-4-5-6(-7-8), 2 attached to 4
            for (int i = 0; i < n; ++i) g[i][i] = 2;
            link(0, 2, -1);
            link(1, 3, -1);
            for (int i = 2; i + 1 < n; ++i) link(i, i + 1, -1);
            break;
        case Family::F:
            g[0][0] = g[1][1] = 4;
            g[2][2] = g[3][3] = 2;
            link(0, 1, -2);
            link(1, 2, -2);
            link(2, 3, -1);
            break;
        case Family::G:
            g[0][0] = 2;
            g[1][1] = 6;
            link(0, 1, -3);
            break;
    }
    return g;
}

std::vector<int> symmetrizer(const SimpleFactor& f) {
    auto g = gram_matrix(f);
    std::vector<int> d(f.rank);
    for (int i = 0; i < f.rank; ++i) d[i] = g[i][i] / 2;
    return d;
}

IntMatrix cartan_matrix(const SimpleFactor& f) {
    auto g = gram_matrix(f);
    IntMatrix a(f.rank, std::vector<int>(f.rank));
    for (int i = 0; i < f.rank; ++i)
        for (int j = 0; j < f.rank; ++j) a[i][j] = 2 * g[i][j] / g[i][i];
    return a;
}

std::vector<std::vector<int>> diagram_automorphisms(const SimpleFactor& f) {
    const int n = f.rank;
    std::vector<int> id(n);
    std::iota(id.begin(), id.end(), 0);
    std::vector<std::vector<int>> out{id};
    if (f.family == Family::A && n >= 2) {
        std::vector<int> rev(id.rbegin(), id.rend());
        out.push_back(rev);
    } else if (f.family == Family::D && n == 4) {
        // triality permutes the outer nodes 0, 2, 3
        std::vector<int> outer{0, 2, 3};
        std::sort(outer.begin(), outer.end());
        while (std::next_permutation(outer.begin(), outer.end())) {
            std::vector<int> p = id;
            p[0] = outer[0];
            p[2] = outer[1];
            p[3] = outer[2];
            out.push_back(p);
        }
    } else if (f.family == Family::D) {
        std::vector<int> p = id;
        std::swap(p[n - 2], p[n - 1]);
        out.push_back(p);
    } else if (f.family == Family::E && n == 6) {
        out.push_back({5, 1, 4, 3, 2, 0});
    }
    return out;
}

std::uint64_t weyl_group_order(const SimpleFactor& f) {
    auto fact = [](int n) {
        std::uint64_t r = 1;
        for (int i = 2; i <= n; ++i) r *= static_cast<std::uint64_t>(i);
        return r;
    };
    const int n = f.rank;
    switch (f.family) {
        case Family::A: return fact(n + 1);
        case Family::B:
        case Family::C: return (std::uint64_t{1} << n) * fact(n);
        case Family::D: return (std::uint64_t{1} << (n - 1)) * fact(n);
        case Family::E: return n == 6 ? 51840ULL : n == 7 ? 2903040ULL : 696729600ULL;
        case Family::F: return 1152;
        case Family::G: return 12;
    }
    return 1;
}

// ---------------------------------------------------------------------------
// Reductive algebras

ReductiveAlgebra::ReductiveAlgebra(std::vector<SimpleFactor> factors, int torus_rank)
    : factors_(std::move(factors)), torus_rank_(torus_rank) {
    if (torus_rank_ < 0) throw Error(ErrorCode::IllegalRank, "negative torus rank");
    for (const auto& f : factors_) {
        SimpleFactor::make(f.family, f.rank);
        offsets_.push_back(semisimple_rank_);
        semisimple_rank_ += f.rank;
    }
}

std::size_t ReductiveAlgebra::factor_of_coordinate(int coord) const {
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (coord >= offsets_[i] && coord < offsets_[i] + factors_[i].rank) return i;
    }
    throw Error(ErrorCode::DimensionMismatch, "coordinate " + std::to_string(coord) + " is not semisimple");
}

ReductiveAlgebra ReductiveAlgebra::with_extra_torus(int extra) const {
    return ReductiveAlgebra(factors_, torus_rank_ + extra);
}

std::uint64_t ReductiveAlgebra::weyl_group_order() const {
    std::uint64_t order = 1;
    for (const auto& f : factors_) {
        std::uint64_t o = polarsym::weyl_group_order(f);
        if (order > std::numeric_limits<std::uint64_t>::max() / o) return std::numeric_limits<std::uint64_t>::max();
        order *= o;
    }
    return order;
}

std::string ReductiveAlgebra::to_string() const {
    std::string s;
    for (const auto& f : factors_) {
        if (!s.empty()) s += " + ";
        s += f.name();
    }
    if (torus_rank_ > 0) {
        if (!s.empty()) s += " + ";
        s += "t" + std::to_string(torus_rank_);
    }
    return s.empty() ? "0" : s;
}

ReductiveAlgebra product(const ReductiveAlgebra& a, const ReductiveAlgebra& b) {
    auto factors = a.factors();
    factors.insert(factors.end(), b.factors().begin(), b.factors().end());
    return ReductiveAlgebra(std::move(factors), a.torus_rank() + b.torus_rank());
}

// ---------------------------------------------------------------------------
// Weights

bool Weight::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](int x) { return x == 0; });
}

Weight Weight::operator-() const {
    Weight r(*this);
    for (auto& x : r.c_) x = -x;
    return r;
}

Weight& Weight::operator+=(const Weight& o) {
    if (o.size() != size()) throw Error(ErrorCode::DimensionMismatch, "weight lengths differ");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

Weight& Weight::operator-=(const Weight& o) {
    if (o.size() != size()) throw Error(ErrorCode::DimensionMismatch, "weight lengths differ");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

Weight operator*(int k, Weight a) {
    for (auto& x : a.c_) x *= k;
    return a;
}

std::string Weight::to_string(int torus_offset) const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i > 0) os << (static_cast<int>(i) == torus_offset ? '|' : ',');
        os << c_[i];
    }
    if (torus_offset == 0 && !c_.empty()) {
        return "(|" + os.str().substr(1) + ")";
    }
    os << ')';
    return os.str();
}

std::size_t WeightHash::operator()(const Weight& w) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (int x : w) {
        h ^= static_cast<std::size_t>(static_cast<unsigned>(x)) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

// ---------------------------------------------------------------------------
// Root systems

namespace {

struct LocalRoot {
    std::vector<int> fund;
    std::vector<int> simple;
};

std::vector<LocalRoot> local_roots(const SimpleFactor& f) {
    const int n = f.rank;
    const auto a = cartan_matrix(f);
    std::vector<LocalRoot> out;
    std::set<std::vector<int>> seen;
    std::deque<LocalRoot> queue;
    for (int j = 0; j < n; ++j) {
        LocalRoot r;
        r.fund.resize(n);
        r.simple.assign(n, 0);
        for (int i = 0; i < n; ++i) r.fund[i] = a[i][j];
        r.simple[j] = 1;
        seen.insert(r.fund);
        queue.push_back(r);
    }
    while (!queue.empty()) {
        LocalRoot r = queue.front();
        queue.pop_front();
        for (int i = 0; i < n; ++i) {
            const int p = r.fund[i];
            if (p == 0) continue;
            LocalRoot s = r;
            for (int k = 0; k < n; ++k) s.fund[k] -= p * a[k][i];
            s.simple[i] -= p;
            if (seen.insert(s.fund).second) queue.push_back(s);
        }
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace

RootSystemData::RootSystemData(ReductiveAlgebra algebra) : algebra_(std::move(algebra)) {
    const int dim = algebra_.dimension();
    two_rho_.assign(dim, 0);
    simple_.assign(algebra_.semisimple_rank(), 0);
    for (std::size_t fi = 0; fi < algebra_.factors().size(); ++fi) {
        const auto& f = algebra_.factors()[fi];
        const int off = algebra_.factor_offset(fi);
        const auto g = gram_matrix(f);
        auto locals = local_roots(f);
        auto height = [](const LocalRoot& r) { return std::accumulate(r.simple.begin(), r.simple.end(), 0); };
        std::sort(locals.begin(), locals.end(), [&](const LocalRoot& x, const LocalRoot& y) {
            const int hx = height(x), hy = height(y);
            const bool px = hx > 0, py = hy > 0;
            if (px != py) return px;
            if (px) return hx != hy ? hx < hy : x.simple > y.simple;
            return hx != hy ? hx > hy : x.simple < y.simple;
        });
        for (const auto& lr : locals) {
            Root r;
            r.weight = Weight(static_cast<std::size_t>(dim));
            r.coroot.assign(dim, 0);
            r.simple_coords.assign(dim, 0);
            r.factor = fi;
            long norm2 = 0;
            for (int i = 0; i < f.rank; ++i)
                for (int j = 0; j < f.rank; ++j) norm2 += static_cast<long>(lr.simple[i]) * lr.simple[j] * g[i][j];
            for (int i = 0; i < f.rank; ++i) {
                r.weight[off + i] = lr.fund[i];
                r.simple_coords[off + i] = lr.simple[i];
                const long num = static_cast<long>(lr.simple[i]) * g[i][i];
                if (num % norm2 != 0) throw Error(ErrorCode::InternalInconsistency, "non-integral coroot");
                r.coroot[off + i] = static_cast<int>(num / norm2);
            }
            r.positive = height(lr) > 0;
            const std::size_t idx = roots_.size();
            if (r.positive) {
                positive_.push_back(idx);
                for (int i = 0; i < dim; ++i) two_rho_[i] += r.coroot[i];
                if (height(lr) == 1) {
                    for (int i = 0; i < f.rank; ++i)
                        if (lr.simple[i] == 1) simple_[off + i] = idx;
                }
            }
            index_.emplace(r.weight, idx);
            roots_.push_back(std::move(r));
        }
    }
    negative_.resize(roots_.size());
    for (std::size_t i = 0; i < roots_.size(); ++i) negative_[i] = *find(-roots_[i].weight);
}

std::optional<std::size_t> RootSystemData::find(const Weight& w) const {
    auto it = index_.find(w);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::int64_t RootSystemData::height(const Weight& w) const {
    if (static_cast<int>(w.size()) != algebra_.dimension())
        throw Error(ErrorCode::DimensionMismatch, "weight length does not match algebra");
    std::int64_t h = 0;
    for (std::size_t i = 0; i < w.size(); ++i) h += two_rho_[i] * w[i];
    return h;
}

RootSystemPtr build_root_system(const ReductiveAlgebra& algebra) {
    return std::make_shared<const RootSystemData>(algebra);
}

std::int64_t pairing(const Weight& w, const Root& r) {
    if (w.size() != r.coroot.size()) throw Error(ErrorCode::DimensionMismatch, "weight and root live in different algebras");
    std::int64_t p = 0;
    for (std::size_t i = 0; i < w.size(); ++i) p += static_cast<std::int64_t>(w[i]) * r.coroot[i];
    return p;
}

Weight reflect(const Weight& w, const Root& r) {
    const auto p = pairing(w, r);
    Weight out = w;
    for (std::size_t i = 0; i < w.size(); ++i) out[i] -= static_cast<int>(p) * r.weight[i];
    return out;
}

std::vector<Weight> weyl_orbit(const Weight& w, const RootSystemData& rsd, std::size_t cap) {
    if (static_cast<int>(w.size()) != rsd.algebra().dimension())
        throw Error(ErrorCode::DimensionMismatch, "weight length does not match algebra");
    std::unordered_set<Weight, WeightHash> seen{w};
    std::vector<Weight> frontier{w};
    const int ss = rsd.algebra().semisimple_rank();
    while (!frontier.empty()) {
        std::vector<Weight> next;
        for (const auto& x : frontier) {
            for (int j = 0; j < ss; ++j) {
                if (x[j] == 0) continue;
                Weight y = x;
                const auto& alpha = rsd.root(rsd.simple_roots()[j]).weight;
                for (std::size_t i = 0; i < y.size(); ++i) y[i] -= x[j] * alpha[i];
                if (seen.insert(y).second) {
                    if (seen.size() > cap)
                        throw Error(ErrorCode::OrbitCapExceeded, "orbit exceeds " + std::to_string(cap) + " elements");
                    next.push_back(std::move(y));
                }
            }
        }
        frontier = std::move(next);
    }
    std::vector<Weight> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    return out;
}

Weight dominant_conjugate(const Weight& w, const RootSystemData& rsd) {
    Weight x = w;
    const int ss = rsd.algebra().semisimple_rank();
    for (;;) {
        int j = 0;
        while (j < ss && x[j] >= 0) ++j;
        if (j == ss) return x;
        const auto& alpha = rsd.root(rsd.simple_roots()[j]).weight;
        const int p = x[j];
        for (std::size_t i = 0; i < x.size(); ++i) x[i] -= p * alpha[i];
    }
}

// ---------------------------------------------------------------------------
// Weyl groups

WeylGroup::WeylGroup(RootSystemPtr rsd, std::vector<std::uint16_t> perms)
    : rsd_(std::move(rsd)), n_roots_(rsd_->roots().size()), perms_(std::move(perms)) {
    if (n_roots_ == 0) perms_.clear();
}

std::vector<std::uint16_t> WeylGroup::key(std::span<const std::uint16_t> perm) const {
    std::vector<std::uint16_t> k;
    k.reserve(rsd_->simple_roots().size());
    for (auto s : rsd_->simple_roots()) k.push_back(perm[s]);
    return k;
}

std::optional<std::size_t> WeylGroup::find(std::span<const std::uint16_t> perm) const {
    if (n_roots_ == 0) return perm.empty() ? std::optional<std::size_t>(0) : std::nullopt;
    if (perm.size() != n_roots_) return std::nullopt;
    const auto k = key(perm);
    const auto& simple = rsd_->simple_roots();
    for (std::size_t i = 0; i < size(); ++i) {
        auto p = permutation(i);
        bool same = true;
        for (std::size_t j = 0; j < simple.size() && same; ++j) same = p[simple[j]] == k[j];
        if (same) return i;
    }
    return std::nullopt;
}

std::vector<std::uint16_t> WeylGroup::compose(std::size_t i, std::size_t j) const {
    std::vector<std::uint16_t> out(n_roots_);
    auto a = permutation(i), b = permutation(j);
    for (std::size_t k = 0; k < n_roots_; ++k) out[k] = a[b[k]];
    return out;
}

void WeylGroup::apply_inverse_into(std::size_t i, std::span<const std::int64_t> x, std::span<std::int64_t> out) const {
    const auto& alg = rsd_->algebra();
    const int ss = alg.semisimple_rank();
    for (int j = ss; j < alg.dimension(); ++j) out[j] = x[j];
    if (n_roots_ == 0) {
        for (int j = 0; j < ss; ++j) out[j] = x[j];
        return;
    }
    auto perm = permutation(i);
    const auto& simple = rsd_->simple_roots();
    for (int j = 0; j < ss; ++j) {
        const Root& r = rsd_->root(perm[simple[j]]);
        const int off = alg.factor_offset(r.factor);
        const int len = alg.factors()[r.factor].rank;
        std::int64_t s = 0;
        for (int k = off; k < off + len; ++k) s += x[k] * r.coroot[k];
        out[j] = s;
    }
}

Weight WeylGroup::apply_inverse(std::size_t i, const Weight& x) const {
    std::vector<std::int64_t> in(x.begin(), x.end()), out(x.size());
    apply_inverse_into(i, in, out);
    std::vector<int> c(out.begin(), out.end());
    return Weight(std::move(c));
}

Weight WeylGroup::apply(std::size_t i, const Weight& x) const {
    if (n_roots_ == 0) return x;
    auto perm = permutation(i);
    std::vector<std::uint16_t> inv(n_roots_);
    for (std::size_t k = 0; k < n_roots_; ++k) inv[perm[k]] = static_cast<std::uint16_t>(k);
    const auto& alg = rsd_->algebra();
    Weight out = x;
    for (int j = 0; j < alg.semisimple_rank(); ++j) {
        const Root& r = rsd_->root(inv[rsd_->simple_roots()[j]]);
        std::int64_t sum = 0;
        for (std::size_t k = 0; k < x.size(); ++k) sum += static_cast<std::int64_t>(x[k]) * r.coroot[k];
        out[j] = static_cast<int>(sum);
    }
    return out;
}

WeylGroup enumerate_weyl_group(RootSystemPtr rsd, std::uint64_t cap) {
    const std::uint64_t order = rsd->algebra().weyl_group_order();
    if (order > cap) {
        throw Error(ErrorCode::GroupTooLarge,
                    "Weyl group of " + rsd->algebra().to_string() + " has order " + std::to_string(order) +
                        " > cap " + std::to_string(cap));
    }
    const std::size_t n = rsd->roots().size();
    if (n == 0) return WeylGroup(rsd, {});
    if (n > std::numeric_limits<std::uint16_t>::max())
        throw Error(ErrorCode::GroupTooLarge, "root system too large for permutation storage");

    std::vector<std::vector<std::uint16_t>> reflections;
    for (auto s : rsd->simple_roots()) {
        std::vector<std::uint16_t> p(n);
        for (std::size_t k = 0; k < n; ++k)
            p[k] = static_cast<std::uint16_t>(*rsd->find(reflect(rsd->root(k).weight, rsd->root(s))));
        reflections.push_back(std::move(p));
    }

    std::vector<std::uint16_t> perms;
    perms.reserve(order * n);
    std::unordered_set<std::string> seen;
    seen.reserve(order * 2);
    auto key_of = [&](const std::uint16_t* p) {
        std::string k;
        k.reserve(rsd->simple_roots().size() * 2);
        for (auto s : rsd->simple_roots()) {
            k.push_back(static_cast<char>(p[s] & 0xff));
            k.push_back(static_cast<char>(p[s] >> 8));
        }
        return k;
    };
    for (std::size_t k = 0; k < n; ++k) perms.push_back(static_cast<std::uint16_t>(k));
    seen.insert(key_of(perms.data()));
    std::vector<std::uint16_t> next(n);
    for (std::size_t head = 0; head * n < perms.size(); ++head) {
        for (const auto& s : reflections) {
            const std::uint16_t* g = perms.data() + head * n;
            for (std::size_t k = 0; k < n; ++k) next[k] = s[g[k]];
            if (seen.insert(key_of(next.data())).second) {
                if (seen.size() > cap)
                    throw Error(ErrorCode::GroupTooLarge, "Weyl group exceeds cap " + std::to_string(cap));
                perms.insert(perms.end(), next.begin(), next.end());
            }
        }
    }
    return WeylGroup(rsd, std::move(perms));
}

// ---------------------------------------------------------------------------
// Gamma

NormalizerQuotient subspace_normalizer_quotient(std::span<const Weight> basis, const WeylGroup& group) {
    NormalizerQuotient out;
    out.dim = basis.size();
    if (basis.empty()) {
        out.maps.push_back({});
        out.normalizer_size = group.size();
        return out;
    }
    SpanCoordinates span(basis);
    const std::size_t r = basis.size();
    const std::size_t dim = basis[0].size();
    std::vector<std::vector<std::int64_t>> b64;
    for (const auto& b : basis) b64.emplace_back(b.begin(), b.end());

    std::set<std::vector<std::int64_t>> maps;
    std::vector<std::int64_t> image(dim), coords(r), matrix(r * r);
    for (std::size_t i = 0; i < group.size(); ++i) {
        bool inside = true;
        for (std::size_t k = 0; k < r && inside; ++k) {
            group.apply_inverse_into(i, b64[k], image);
            if (!span.contains(image)) {
                inside = false;
                break;
            }
            span.scaled_coordinates(image, coords);
            for (std::size_t row = 0; row < r; ++row) matrix[row * r + k] = coords[row];
        }
        if (!inside) continue;
        ++out.normalizer_size;
        maps.insert(matrix);
    }
    std::vector<std::int64_t> identity(r * r, 0);
    for (std::size_t k = 0; k < r; ++k) identity[k * r + k] = span.denominator();
    auto to_rational = [&](const std::vector<std::int64_t>& m) {
        RationalVector q;
        q.reserve(m.size());
        for (auto x : m) q.emplace_back(Rational(x) / span.denominator());
        return q;
    };
    out.maps.push_back(to_rational(identity));
    for (const auto& m : maps)
        if (m != identity) out.maps.push_back(to_rational(m));
    return out;
}

NormalizerQuotient subspace_normalizer_quotient(std::span<const Weight> basis, RootSystemPtr rsd, std::uint64_t cap) {
    auto group = enumerate_weyl_group(std::move(rsd), cap);
    return subspace_normalizer_quotient(basis, group);
}

}  // namespace polarsym
