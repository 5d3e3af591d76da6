#include <doctest.h>

#include <functional>
#include <random>

#include "polarsym/errors.hpp"
#include "polarsym/rep.hpp"

using namespace polarsym;

namespace {

ReductiveAlgebra simple(Family f, int rank, int torus = 0) {
    return ReductiveAlgebra({SimpleFactor::make(f, rank)}, torus);
}

Weight fund(std::size_t dim, std::size_t i, int c = 1) {
    Weight w(dim);
    w[i] = c;
    return w;
}

// Weights of the standard module of sl_n: e_1 = w_1, e_i = w_i - w_{i-1}, e_n = -w_{n-1}.
std::vector<Weight> sl_std(int n) {
    std::vector<Weight> e;
    for (int i = 0; i < n; ++i) {
        Weight w(static_cast<std::size_t>(n - 1));
        if (i < n - 1) w[i] += 1;
        if (i > 0) w[i - 1] -= 1;
        e.push_back(w);
    }
    return e;
}

// Weights of wedge^k / sym^k of the standard sl_n module by subset enumeration.
WeightMultiset oracle_power(int n, int k, bool symmetric) {
    const auto e = sl_std(n);
    WeightMultiset out(static_cast<std::size_t>(n - 1));
    std::function<void(int, int, Weight)> rec = [&](int pos, int start, Weight acc) {
        if (pos == k) {
            out.add(acc);
            return;
        }
        for (int i = start; i < n; ++i) rec(pos + 1, symmetric ? i : i + 1, acc + e[i]);
    };
    rec(0, 0, Weight(static_cast<std::size_t>(n - 1)));
    return out;
}

Weight highest_root(const RootSystemData& rsd) {
    Weight best;
    std::int64_t h = -1;
    for (auto i : rsd.positive_roots())
        if (rsd.height(rsd.root(i).weight) > h) h = rsd.height(rsd.root(i).weight), best = rsd.root(i).weight;
    return best;
}

const std::vector<SimpleFactor> kSample = {
    {Family::A, 1}, {Family::A, 2}, {Family::A, 4}, {Family::B, 2}, {Family::B, 3}, {Family::C, 2},
    {Family::C, 3}, {Family::D, 4}, {Family::G, 2}, {Family::F, 4}, {Family::E, 6},
};

}  // namespace

TEST_CASE("sl2 weight strings") {
    const auto a1 = simple(Family::A, 1);
    for (int n = 0; n <= 7; ++n) {
        auto ms = irrep_weights(a1, Weight{n});
        WeightMultiset oracle(1);
        for (int k = n; k >= -n; k -= 2) oracle.add(Weight{k});
        CHECK(ms == oracle);
        CHECK(weyl_dimension(a1, Weight{n}) == n + 1);
        CHECK(fs_classification(a1, Weight{n}) == (n % 2 ? FsType::Symplectic : FsType::Orthogonal));
    }
}

TEST_CASE("table dimensions") {
    CHECK(irrep_weights(simple(Family::E, 7), fund(7, 6)).total() == 56);
    CHECK(irrep_weights(simple(Family::B, 6), fund(6, 5)).total() == 64);
    CHECK(irrep_weights(simple(Family::B, 5), fund(5, 4)).total() == 32);
    CHECK(irrep_weights(simple(Family::D, 6), fund(6, 5)).total() == 32);
    CHECK(irrep_weights(simple(Family::D, 5), fund(5, 4)).total() == 16);
    CHECK(irrep_weights(simple(Family::G, 2), fund(2, 0)).total() == 7);
    CHECK(irrep_weights(simple(Family::E, 6), fund(6, 0)).total() == 27);
    CHECK(weyl_dimension(simple(Family::A, 5), fund(5, 2)) == 20);
    CHECK(weyl_dimension(simple(Family::C, 3), fund(3, 2)) == 14);
    CHECK(weyl_dimension(simple(Family::E, 6), Weight(6)) == 1);
    CHECK(weyl_dimension(ReductiveAlgebra({}, 1), Weight{5}) == 1);
}

TEST_CASE("exterior and symmetric powers of sl_n agree with subset enumeration") {
    for (int n = 2; n <= 6; ++n) {
        const auto alg = simple(Family::A, n - 1);
        for (int k = 1; k < n; ++k) {
            CAPTURE(n);
            CAPTURE(k);
            CHECK(irrep_weights(alg, fund(n - 1, k - 1)) == oracle_power(n, k, false));
        }
        for (int k = 1; k <= 4; ++k) CHECK(irrep_weights(alg, fund(n - 1, 0, k)) == oracle_power(n, k, true));
    }
}

TEST_CASE("adjoint modules: roots plus rank copies of zero") {
    for (const auto& f : kSample) {
        CAPTURE(f.name());
        const ReductiveAlgebra alg({f}, 0);
        auto rsd = build_root_system(alg);
        WeightMultiset oracle(static_cast<std::size_t>(f.rank));
        for (const auto& r : rsd->roots()) oracle.add(r.weight);
        oracle.add(Weight(static_cast<std::size_t>(f.rank)), f.rank);
        CHECK(irrep_weights(alg, highest_root(*rsd)) == oracle);
    }
}

TEST_CASE("spin modules are multiplicity free with 2^n weights") {
    for (int n = 2; n <= 6; ++n) {
        auto ms = irrep_weights(simple(Family::B, n), fund(n, n - 1));
        CHECK(ms.total() == (1 << n));
        CHECK(ms.max_multiplicity() == 1);
    }
}

TEST_CASE("random highest weights: Weyl invariance, dimension, duality") {
    std::mt19937_64 rng(3);
    for (const auto& f : kSample) {
        if (f.family == Family::E || f.family == Family::F) continue;
        const ReductiveAlgebra alg({f}, 1);
        auto rsd = build_root_system(alg);
        for (int trial = 0; trial < 4; ++trial) {
            Weight hw(static_cast<std::size_t>(alg.dimension()));
            for (int i = 0; i < f.rank; ++i) hw[i] = static_cast<int>(rng() % 3);
            hw[f.rank] = static_cast<int>(rng() % 5) - 2;
            CAPTURE(hw.to_string());
            auto ms = irrep_weights(alg, hw);
            CHECK(is_weyl_invariant(ms, *rsd));
            CHECK(BigInt(ms.total()) == weyl_dimension(alg, hw));
            CHECK(irrep_weights(alg, dual_highest_weight(alg, hw)) == dual(ms));
            if (hw[f.rank] == 0 && fs_classification(alg, hw) != FsType::None) CHECK(dual(ms) == ms);
        }
    }
}

TEST_CASE("Frobenius-Schur classification") {
    for (int m = 2; m <= 5; ++m) CHECK(fs_classification(simple(Family::C, m), fund(m, 0)) == FsType::Symplectic);
    CHECK(fs_classification(simple(Family::B, 3), fund(3, 2)) == FsType::Orthogonal);
    CHECK(fs_classification(simple(Family::A, 5), fund(5, 2)) == FsType::Symplectic);
    CHECK(fs_classification(simple(Family::A, 2), fund(2, 0)) == FsType::None);
    CHECK(fs_classification(simple(Family::E, 6), fund(6, 0)) == FsType::None);
    CHECK(fs_classification(simple(Family::E, 7), fund(7, 6)) == FsType::Symplectic);
    CHECK(fs_classification(simple(Family::A, 1, 1), Weight{1, 1}) == FsType::None);
    CHECK(dual_highest_weight(simple(Family::A, 2), fund(2, 0)) == fund(2, 1));
    CHECK_THROWS_AS(fs_classification(simple(Family::A, 1), Weight{-1}), Error);
}

TEST_CASE("multiset operations") {
    const auto a1 = simple(Family::A, 1);
    auto s3 = irrep_weights(a1, Weight{3});
    CHECK(dual(dual(s3)) == s3);
    CHECK(dual(s3) == s3);

    WeightMultiset ms(1);
    ms.add(Weight{1}, 2);
    CHECK(ms.remove(Weight{1}));
    CHECK(ms.multiplicity(Weight{1}) == 1);
    CHECK_FALSE(ms.remove(Weight{1}, 2));
    CHECK(ms.multiplicity(Weight{1}) == 1);
    CHECK_THROWS_AS(ms.add(Weight{1, 2}), Error);
}

TEST_CASE("outer tensors") {
    const auto so3 = simple(Family::A, 1);  // so3 std = A1, 2 omega
    const auto sp4 = simple(Family::C, 2);
    auto t = outer_tensor(irrep_weights(so3, Weight{2}), so3, irrep_weights(sp4, Weight{1, 0}), sp4);
    CHECK(t.total() == 12);

    const auto sl2 = simple(Family::A, 1);
    const auto spin7 = simple(Family::B, 3);
    auto u = outer_tensor(irrep_weights(sl2, Weight{1}), sl2, irrep_weights(spin7, Weight{0, 0, 1}), spin7);
    CHECK(u.total() == 16);
    const auto prod = product(sl2, spin7);
    CHECK(u == irrep_weights(prod, Weight{1, 0, 0, 1}));

    // same-space form and its unit
    WeightMultiset unit(4);
    unit.add(Weight(4));
    CHECK(outer_tensor(u, unit) == u);
    CHECK_THROWS_AS(outer_tensor(u, u), Error);

    // commutativity up to reordering the blocks
    auto v = outer_tensor(irrep_weights(spin7, Weight{0, 0, 1}), spin7, irrep_weights(sl2, Weight{1}), sl2);
    WeightMultiset swapped(4);
    for (const auto& [w, m] : v) swapped.add(Weight{w[3], w[0], w[1], w[2]}, m);
    CHECK(swapped == u);
}

TEST_CASE("type 1 and type 2 components") {
    auto sp6 = make_type1(simple(Family::C, 3), fund(3, 2));
    CHECK(sp6.weights.total() == 14);
    CHECK(dual(sp6.weights) == sp6.weights);
    CHECK_THROWS_AS(make_type1(simple(Family::B, 3), fund(3, 2)), Error);

    const auto sl2 = simple(Family::A, 1);
    CHECK_THROWS_AS(make_type2(sl2, Weight{1}), Error);
    auto t = make_type2(sl2, Weight{1}, true);
    WeightMultiset expected(2);
    for (int a : {1, -1})
        for (int b : {1, -1}) expected.add(Weight{a, b});
    CHECK(t.component.weights == expected);
    CHECK(t.component.symplectic_u);
    CHECK(t.algebra.torus_rank() == 1);

    CHECK(make_type2(simple(Family::E, 6), fund(6, 0)).component.weights.total() == 54);
    auto gl4 = make_type2(simple(Family::A, 3), fund(3, 1));
    CHECK(gl4.component.weights.total() == 12);
    CHECK_FALSE(gl4.component.symplectic_u);
}

TEST_CASE("direct sums") {
    const auto a1 = simple(Family::A, 1);
    RepSpec s3(a1, {make_type1(a1, Weight{3})});
    RepSpec zero(a1, {});
    CHECK(direct_sum(s3, zero).weights() == s3.weights());
    auto twice = direct_sum(s3, s3);
    for (const auto& [w, m] : twice.weights()) CHECK(m == 2);
    CHECK(twice.dimension() == 8);
    RepSpec other(simple(Family::A, 2), {});
    CHECK_THROWS_AS(direct_sum(s3, other), Error);
}

TEST_CASE("saturation") {
    // (SL_n, C^n + C^n*) gains one torus coordinate.
    for (int n = 2; n <= 4; ++n) {
        const auto alg = simple(Family::A, n - 1);
        RepSpec spec(alg, {make_dual_pair(alg, fund(n - 1, 0))});
        auto sat = saturate(spec);
        CHECK(sat.saturated());
        CHECK(sat.algebra().torus_rank() == 1);
        auto gl = make_type2(alg, fund(n - 1, 0), true);
        CHECK(sat.weights() == gl.component.weights);
        CHECK(saturate(sat) == sat);
    }
    // Two type 2 components over the same group need two coordinates.
    const auto a2 = simple(Family::A, 2);
    RepSpec two(a2, {make_dual_pair(a2, fund(2, 0)), make_dual_pair(a2, Weight{2, 0})});
    auto sat = saturate(two);
    CHECK(sat.algebra().torus_rank() == 2);
    CHECK(has_exclusive_torus(sat, 0));
    CHECK(has_exclusive_torus(sat, 1));
    CHECK(saturate(sat) == sat);

    // Type 1 components are untouched, already-saturated type 2 ones too.
    auto t = make_type2(a2, fund(2, 0));
    RepSpec mixed(t.algebra, {t.component});
    CHECK(saturate(mixed).algebra() == t.algebra);
}

TEST_CASE("outer products") {
    const auto a1 = simple(Family::A, 1);
    RepSpec s3(a1, {make_type1(a1, Weight{3})});
    auto t = make_type2(simple(Family::A, 2), fund(2, 0));
    RepSpec gl3(t.algebra, {t.component});
    auto prod = outer_product(s3, gl3);
    CHECK(prod.algebra().dimension() == 4);
    CHECK(prod.dimension() == 4 + 6);
    CHECK(prod.components()[1].highest_weight == Weight{0, 1, 0, 1});
}
