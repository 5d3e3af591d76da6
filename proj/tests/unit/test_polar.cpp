#include <doctest.h>

#include <chrono>
#include <random>
#include <set>

#include "polarsym/classify.hpp"
#include "polarsym/errors.hpp"
#include "polarsym/polar.hpp"
#include "polarsym/tables.hpp"

using namespace polarsym;

namespace {

ReductiveAlgebra alg(std::vector<SimpleFactor> f, int torus = 0) {
    return ReductiveAlgebra(std::move(f), torus);
}

Weight fund(std::size_t dim, std::size_t i, int c = 1) {
    Weight w(dim);
    w[i] = c;
    return w;
}

RepSpec type1(const ReductiveAlgebra& a, const Weight& hw) {
    return RepSpec(a, {make_type1(a, hw)}, true);
}

RepSpec type2(const ReductiveAlgebra& a, const Weight& hw, bool allow = false) {
    auto t = make_type2(a, hw, allow);
    return RepSpec(t.algebra, {t.component}, true);
}

RepSpec t_e6() {
    return type2(alg({{Family::E, 6}}), fund(6, 0));
}

// Roots as the nonzero weights of the adjoint module (Freudenthal), independent
// of the root enumeration.
std::set<Weight> adjoint_roots(const ReductiveAlgebra& a, const Weight& highest_root) {
    std::set<Weight> out;
    for (const auto& [w, m] : irrep_weights(a, highest_root))
        if (!w.is_zero()) out.insert(w);
    return out;
}

Rational random_rational(std::mt19937_64& rng) {
    return Rational(static_cast<int>(rng() % 41) - 20, static_cast<int>(rng() % 9) + 1);
}

}  // namespace

TEST_CASE("moment image of T(e6) spans the tabulated Cartan subspace") {
    const auto spec = t_e6();
    const auto mi = moment_image(spec);
    REQUIRE(mi.rank() == 3);
    const std::vector<Weight> expected{Weight{1, 0, 0, 0, 0, 0, 1}, Weight{0, 0, 0, 0, 0, -1, 1},
                                       Weight{-1, 0, 0, 0, 0, 1, 1}};
    CHECK(same_span(mi.lambdas, expected));
    CHECK(strong_orthogonality_check(mi, *build_root_system(spec.algebra())));
    // The tabulated basis itself is strongly orthogonal.
    CHECK(strong_orthogonality_check(MomentImage{expected, spec.algebra()}, *build_root_system(spec.algebra())));
}

TEST_CASE("strong orthogonality of Spin13 against the adjoint-module oracle") {
    const auto b6 = alg({{Family::B, 6}});
    const auto mi = moment_image(type1(b6, fund(6, 5)));
    REQUIRE(mi.rank() == 2);
    // Highest root of B6 is w2.
    const auto roots = adjoint_roots(b6, fund(6, 1));
    CHECK(roots.size() == 72);
    bool oracle = true;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            if (i != j) oracle = oracle && !roots.count(mi.lambdas[j] - mi.lambdas[i]) && !roots.count(-mi.lambdas[j] - mi.lambdas[i]);
    CHECK(oracle);
    CHECK(strong_orthogonality_check(mi, *build_root_system(b6)) == oracle);

    // Rank one is vacuous; a pair differing by a root fails, in either order.
    const auto a2 = alg({{Family::A, 2}});
    const auto rsd = build_root_system(a2);
    CHECK(strong_orthogonality_check(MomentImage{{Weight{1, 0}}, a2}, *rsd));
    const MomentImage bad{{Weight{1, 0}, Weight{-1, 1}}, a2};  // e1 and e2
    CHECK_FALSE(strong_orthogonality_check(bad, *rsd));
    CHECK_FALSE(strong_orthogonality_check(MomentImage{{bad.lambdas[1], bad.lambdas[0]}, a2}, *rsd));
}

TEST_CASE("moment image requires independent toroidal weights") {
    const auto a1 = alg({{Family::A, 1}});
    const auto s3 = type1(a1, Weight{3});
    CHECK_THROWS_AS(moment_image(direct_sum(s3, s3)), Error);
    const auto mi = moment_image(s3);
    REQUIRE(mi.rank() == 1);
    CHECK(mi.lambdas[0] == Weight{3});
    CHECK(moment_image(type1(alg({{Family::C, 3}}), fund(3, 0))).rank() == 0);
}

TEST_CASE("weight multiplicity freeness") {
    const auto a1 = alg({{Family::A, 1}});
    const auto s3 = type1(a1, Weight{3});
    CHECK(wmf_check(s3));
    CHECK_FALSE(wmf_check(direct_sum(s3, s3)));
    CHECK_FALSE(wmf_check(type1(alg({{Family::C, 3}}), fund(3, 1, 1) + fund(3, 0))));
}

TEST_CASE("moment map on the Cartan subspace") {
    const auto a = alg({{Family::A, 2}});
    const MomentImage mi{{Weight{1, 0}, Weight{0, 1}}, a};
    const RationalVector zero{0, 0};
    const Rational z[] = {0, 0};
    CHECK(moment_on_cartan(mi, z) == zero);
    const Rational a12[] = {1, 2};
    CHECK(moment_on_cartan(mi, a12) == RationalVector{1, 4});
    const Rational one[] = {1};
    CHECK(moment_on_cartan(MomentImage{{Weight{3, -1}}, a}, one) == RationalVector{3, -1});
    try {
        moment_on_cartan(mi, one);
        FAIL("expected LengthMismatch");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::LengthMismatch);
    }
}

TEST_CASE("properties: moment map is even in each coefficient and quadratic") {
    std::mt19937_64 rng(11);
    for (const auto& spec : {t_e6(), type1(alg({{Family::B, 6}}), fund(6, 5)),
                             type2(alg({{Family::A, 3}}), Weight{2, 0, 0})}) {
        const auto mi = moment_image(spec);
        const std::size_t r = mi.rank();
        for (int trial = 0; trial < 10; ++trial) {
            RationalVector a(r);
            for (auto& x : a) x = random_rational(rng);
            const auto base = moment_on_cartan(mi, a);
            for (std::size_t mask = 0; mask < (std::size_t{1} << r); ++mask) {
                RationalVector b = a;
                for (std::size_t j = 0; j < r; ++j)
                    if (mask >> j & 1) b[j] = -b[j];
                CHECK(moment_on_cartan(mi, b) == base);
            }
            const Rational t = random_rational(rng);
            RationalVector ta = a;
            for (auto& x : ta) x *= t;
            auto scaled = base;
            for (auto& x : scaled) x *= t * t;
            CHECK(moment_on_cartan(mi, ta) == scaled);
        }
    }
}

TEST_CASE("orbit separation") {
    // Rank zero: vacuous.
    const auto sp4 = type1(alg({{Family::C, 2}}), Weight{1, 0});
    CHECK(orbit_separation_check(moment_image(sp4), build_root_system(sp4.algebra()), 5, 1).verified);

    // T(sl2): brute force over the two Weyl group elements by hand.
    const auto gl2 = type2(alg({{Family::A, 1}}), Weight{1}, true);
    const auto mi = moment_image(gl2);
    REQUIRE(mi.rank() == 1);
    const auto rsd = build_root_system(gl2.algebra());
    const Weight l = mi.lambdas[0];
    // The reflection moves the sl2 part and fixes the torus part, so s(l) is
    // off the line through l and Gamma is trivial.
    const Weight sl = reflect(l, rsd->root(rsd->simple_roots()[0]));
    CHECK(linearly_independent(std::vector<Weight>{l, sl}));
    const auto res = orbit_separation_check(mi, rsd, 10, 7);
    CHECK(res.verified);
    CHECK(res.gamma_order == 1);
    CHECK(res.samples_checked == 10);

    const auto t0 = std::chrono::steady_clock::now();
    const auto e6 = t_e6();
    const auto big = orbit_separation_check(moment_image(e6), build_root_system(e6.algebra()), 25, 2024);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    CHECK(big.verified);
    CHECK(big.samples_checked == 25);
    CHECK(big.weyl_order == 51840);
    CHECK(big.gamma_order > 1);
    CHECK(secs < 600);

    CHECK_THROWS_AS(orbit_separation_check(moment_image(e6), build_root_system(e6.algebra()), 1, 1, 1000), Error);
}

TEST_CASE("rank condition") {
    // sp_4 (x) S^2 sl2 linked with T(sl2) over sl2.
    const auto s13 = instantiate(find_entry("S.13"), {{"m", 2}});
    const auto s10 = instantiate(find_entry("S.10"), {});
    const auto linked = link_sl2(s13, 1, s10, 0);
    const std::vector<std::vector<std::size_t>> parts{{0}, {1}};
    const bool stable[] = {false, true};
    const auto rc = rank_condition_check(linked, parts, stable);
    CHECK(rc.ranks == std::vector<int>{1, 1});
    CHECK(rc.combined_rank == 3);
    CHECK(rc.status == RankConditionStatus::Violated);

    // Without a stable part the condition does not apply.
    const bool unstable[] = {false, false};
    CHECK(rank_condition_check(linked, parts, unstable).status == RankConditionStatus::Inconclusive);

    // Outer products always satisfy it.
    const auto prod = outer_product(type1(alg({{Family::A, 1}}), Weight{3}), t_e6());
    const bool st[] = {true, true};
    const auto ok = rank_condition_check(prod, parts, st);
    CHECK(ok.status == RankConditionStatus::Holds);
    CHECK(ok.combined_rank == 4);
}

TEST_CASE("connected blocks") {
    const auto s13 = instantiate(find_entry("S.13"), {{"m", 2}});
    const auto s10 = instantiate(find_entry("S.10"), {});
    CHECK(connected_blocks(link_sl2(s13, 1, s10, 0)) == std::vector<std::vector<std::size_t>>{{0, 1}});
    CHECK(connected_blocks(outer_product(s13, s10)) == std::vector<std::vector<std::size_t>>{{0}, {1}});
}

TEST_CASE("polarity verdicts") {
    auto sp6 = classify_polarity(type1(alg({{Family::C, 3}}), fund(3, 2)));
    CHECK(sp6.status == PolarityStatus::Polar);
    REQUIRE(sp6.matches.size() == 1);
    CHECK(sp6.matches[0].key == "A10");

    auto prod = outer_product(instantiate(find_entry("B4"), {{"n", 2}}), instantiate(find_entry("B7"), {}));
    auto v = classify_polarity(prod);
    CHECK(v.status == PolarityStatus::Polar);
    CHECK(v.matches.size() == 2);
    CHECK(v.saturated_input);

    // so3 (x) sp_2m + sp_2m linked over sp_2m.
    for (int m = 2; m <= 3; ++m) {
        const auto a = alg({{Family::A, 1}, {Family::C, m}});
        Weight l1(1 + m), v2(1 + m);
        l1[0] = 2;
        l1[1] = 1;
        v2[1] = 1;
        const auto linked = classify_polarity(RepSpec(a, {make_type1(a, l1), make_type1(a, v2)}));
        CHECK(linked.status == PolarityStatus::NotPolar);
    }

    // sp_2m (x) so5 + sp4 over so5 = sp4, with so5 written as B2.
    const auto b = alg({{Family::C, 3}, {Family::B, 2}});
    const auto so5_link = classify_polarity(RepSpec(b, {make_type1(b, Weight{1, 0, 0, 1, 0}),
                                                       make_type1(b, Weight{0, 0, 0, 0, 1})}));
    CHECK(so5_link.status == PolarityStatus::NotPolar);

    const auto s13 = instantiate(find_entry("S.13"), {{"m", 2}});
    const auto s10 = instantiate(find_entry("S.10"), {});
    const auto sl2link = classify_polarity(link_sl2(s13, 1, s10, 0));
    CHECK(sl2link.status == PolarityStatus::NotPolar);
    CHECK(sl2link.evidence.find("rank condition") != std::string::npos);

    const auto s3 = type1(alg({{Family::A, 1}}), Weight{3});
    CHECK(classify_polarity(direct_sum(s3, s3)).status == PolarityStatus::NotCoisotropic);
    CHECK(classify_polarity(direct_sum(s3, s3)).not_polar());

    // Indecomposable but not in the tables: sl2 on S^5.
    CHECK(classify_polarity(type1(alg({{Family::A, 1}}), Weight{5})).not_polar());
}

TEST_CASE("polarity: equivalences used by the matcher") {
    // SL_3 on C^3 + C^3* is matched after saturation.
    const auto a2 = alg({{Family::A, 2}});
    const RepSpec sl3(a2, {make_dual_pair(a2, fund(2, 0))});
    const auto v = classify_polarity(sl3);
    CHECK(v.status == PolarityStatus::Polar);
    CHECK_FALSE(v.saturated_input);
    CHECK(v.matches.at(0).key == "B4");

    // Dual U, low-rank coincidences and triality.
    CHECK(classify_polarity(type2(alg({{Family::E, 6}}), fund(6, 5))).matches.at(0).key == "B10");
    CHECK(classify_polarity(type2(alg({{Family::A, 3}}), fund(3, 1))).status == PolarityStatus::Polar);
    CHECK(classify_polarity(type2(alg({{Family::D, 3}}), fund(3, 0))).status == PolarityStatus::Polar);
    CHECK(classify_polarity(type1(alg({{Family::B, 2}}), fund(2, 1))).matches.at(0).key == "A2");
    CHECK(classify_polarity(type2(alg({{Family::D, 4}}), fund(4, 3))).matches.at(0).key == "B6");
    CHECK(classify_polarity(type1(alg({{Family::A, 5}}), fund(5, 2))).matches.at(0).key == "A9");

    // Saturation is idempotent for the verdict.
    const auto once = classify_polarity(saturate(sl3));
    const auto twice = classify_polarity(saturate(saturate(sl3)));
    CHECK(once.status == twice.status);
    CHECK(once.evidence == twice.evidence);
}
