#include <doctest.h>

#include <random>
#include <set>

#include "polarsym/errors.hpp"
#include "polarsym/lie.hpp"

using namespace polarsym;

namespace {

ReductiveAlgebra simple(Family f, int rank, int torus = 0) {
    return ReductiveAlgebra({SimpleFactor::make(f, rank)}, torus);
}

// Closure of the simple roots under simple reflections, computed in
// simple-root coordinates straight from the Cartan matrix.
std::set<std::vector<int>> oracle_roots(const SimpleFactor& f) {
    const auto a = cartan_matrix(f);
    const int n = f.rank;
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> todo;
    for (int j = 0; j < n; ++j) {
        std::vector<int> e(n, 0);
        e[j] = 1;
        seen.insert(e);
        todo.push_back(e);
    }
    while (!todo.empty()) {
        auto r = todo.back();
        todo.pop_back();
        for (int i = 0; i < n; ++i) {
            // <r | alpha_i^vee> = sum_j r_j A[i][j]
            int p = 0;
            for (int j = 0; j < n; ++j) p += r[j] * a[i][j];
            auto s = r;
            s[i] -= p;
            if (seen.insert(s).second) todo.push_back(s);
        }
    }
    return seen;
}

Weight random_weight(std::mt19937_64& rng, std::size_t dim, int bound) {
    std::uniform_int_distribution<int> d(-bound, bound);
    Weight w(dim);
    for (std::size_t i = 0; i < dim; ++i) w[i] = d(rng);
    return w;
}

const std::vector<SimpleFactor> kSample = {
    {Family::A, 1}, {Family::A, 3}, {Family::B, 2}, {Family::B, 4}, {Family::C, 3},
    {Family::D, 4}, {Family::D, 5}, {Family::E, 6}, {Family::E, 7}, {Family::F, 4}, {Family::G, 2},
};

}  // namespace

TEST_CASE("illegal ranks are refused") {
    CHECK_THROWS_AS(SimpleFactor::make(Family::B, 1), Error);
    CHECK_THROWS_AS(SimpleFactor::make(Family::D, 2), Error);
    CHECK_THROWS_AS(SimpleFactor::make(Family::E, 5), Error);
    CHECK_THROWS_AS(SimpleFactor::make(Family::G, 3), Error);
    try {
        SimpleFactor::make(Family::C, 1);
        FAIL("expected IllegalRank");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::IllegalRank);
    }
}

TEST_CASE("low rank root systems") {
    auto a1 = build_root_system(simple(Family::A, 1));
    CHECK(a1->roots().size() == 2);
    CHECK(a1->positive_roots().size() == 1);
    CHECK(a1->root(a1->positive_roots()[0]).weight == Weight{2});

    auto torus = build_root_system(ReductiveAlgebra({}, 1));
    CHECK(torus->roots().empty());
    CHECK(torus->algebra().dimension() == 1);
}

TEST_CASE("root counts agree with an independent closure") {
    for (const auto& f : kSample) {
        CAPTURE(f.name());
        auto rsd = build_root_system(ReductiveAlgebra({f}, 0));
        const auto oracle = oracle_roots(f);
        REQUIRE(rsd->roots().size() == oracle.size());
        std::set<std::vector<int>> mine;
        for (const auto& r : rsd->roots()) mine.insert(r.simple_coords);
        CHECK(mine == oracle);
    }
    CHECK(build_root_system(simple(Family::E, 6))->roots().size() == 72);
}

TEST_CASE("Bourbaki conventions in low rank") {
    // A[i][j] = <alpha_j | alpha_i^vee>. B2: alpha_1 long; C2, G2: alpha_1 short.
    auto b2 = cartan_matrix({Family::B, 2});
    CHECK(b2 == IntMatrix{{2, -1}, {-2, 2}});
    auto c2 = cartan_matrix({Family::C, 2});
    CHECK(c2 == IntMatrix{{2, -2}, {-1, 2}});
    auto g2 = cartan_matrix({Family::G, 2});
    CHECK(g2 == IntMatrix{{2, -3}, {-1, 2}});
    // E6: node 2 hangs off node 4.
    auto e6 = cartan_matrix({Family::E, 6});
    CHECK(e6[1][3] == -1);
    CHECK(e6[0][2] == -1);
    CHECK(e6[0][1] == 0);
}

TEST_CASE("root system invariants") {
    for (const auto& f : kSample) {
        CAPTURE(f.name());
        auto rsd = build_root_system(ReductiveAlgebra({f}, 1));
        const auto& roots = rsd->roots();
        CHECK(rsd->positive_roots().size() * 2 == roots.size());
        std::vector<std::int64_t> two_rho(rsd->algebra().dimension(), 0);
        for (auto i : rsd->positive_roots()) {
            for (int c : roots[i].simple_coords) CHECK(c >= 0);
            for (std::size_t k = 0; k < two_rho.size(); ++k) two_rho[k] += roots[i].coroot[k];
        }
        CHECK(two_rho == rsd->two_rho_covector());
        for (const auto& r : roots) {
            CHECK(r.weight[rsd->algebra().torus_offset()] == 0);
            CHECK(pairing(r.weight, r) == 2);
            CHECK(rsd->find(-r.weight).has_value());
        }
        for (auto s : rsd->simple_roots()) {
            for (const auto& r : roots) CHECK(rsd->find(reflect(r.weight, rsd->root(s))).has_value());
        }
    }
}

TEST_CASE("pairing and reflection") {
    auto a1 = build_root_system(simple(Family::A, 1));
    const Root& alpha = a1->root(a1->positive_roots()[0]);
    CHECK(pairing(Weight{3}, alpha) == 3);
    CHECK(reflect(Weight{3}, alpha) == Weight{-3});
    CHECK_THROWS_AS(pairing(Weight{1, 0}, alpha), Error);

    // E7: omega_7 against the highest root is its alpha_7 coefficient (simply laced).
    const SimpleFactor e7{Family::E, 7};
    auto oracle = oracle_roots(e7);
    std::vector<int> highest;
    int best = -1;
    for (const auto& r : oracle) {
        int h = 0;
        for (int c : r) h += c;
        if (h > best) best = h, highest = r;
    }
    auto rsd = build_root_system(ReductiveAlgebra({e7}, 0));
    Weight w7(7);
    w7[6] = 1;
    bool found = false;
    for (const auto& r : rsd->roots()) {
        if (r.simple_coords == highest) {
            CHECK(pairing(w7, r) == highest[6]);
            CHECK(pairing(w7, r) == 1);
            found = true;
        }
    }
    CHECK(found);

    // eta is fixed by every reflection.
    auto e6t = build_root_system(simple(Family::E, 6, 1));
    Weight eta(7);
    eta[6] = 1;
    for (const auto& r : e6t->roots()) CHECK(reflect(eta, r) == eta);
}

TEST_CASE("pairing is bilinear, reflections are involutions") {
    std::mt19937_64 rng(7);
    for (const auto& f : kSample) {
        auto rsd = build_root_system(ReductiveAlgebra({f}, 1));
        const std::size_t dim = rsd->algebra().dimension();
        for (int trial = 0; trial < 20; ++trial) {
            Weight x = random_weight(rng, dim, 5), y = random_weight(rng, dim, 5);
            const Root& r = rsd->root(rng() % rsd->roots().size());
            const Root& neg = rsd->root(rsd->negative_of(&r - rsd->roots().data()));
            CHECK(pairing(x + y, r) == pairing(x, r) + pairing(y, r));
            CHECK(pairing(3 * x, r) == 3 * pairing(x, r));
            CHECK(pairing(x, neg) == -pairing(x, r));
            CHECK(reflect(reflect(x, r), r) == x);
        }
    }
}

TEST_CASE("Weyl orbits") {
    auto a1 = build_root_system(simple(Family::A, 1));
    CHECK(weyl_orbit(Weight{0}, *a1).size() == 1);
    CHECK(weyl_orbit(Weight{1}, *a1) == std::vector<Weight>{Weight{-1}, Weight{1}});

    auto e6 = build_root_system(simple(Family::E, 6));
    Weight w1(6);
    w1[0] = 1;
    auto orbit = weyl_orbit(w1, *e6);
    CHECK(orbit.size() == 27);
    std::set<Weight> s(orbit.begin(), orbit.end());
    for (const auto& x : orbit)
        for (const auto& r : e6->roots()) CHECK(s.count(reflect(x, r)) == 1);

    CHECK_THROWS_AS(weyl_orbit(Weight{1, 1, 1, 1, 1, 1}, *e6, 1000), Error);
    CHECK(dominant_conjugate(-w1, *e6) == Weight{0, 0, 0, 0, 0, 1});
}

TEST_CASE("Weyl group enumeration") {
    auto a1 = build_root_system(simple(Family::A, 1));
    CHECK(enumerate_weyl_group(a1).size() == 2);

    auto a2 = build_root_system(simple(Family::A, 2));
    auto w = enumerate_weyl_group(a2);
    REQUIRE(w.size() == 6);
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = 0; j < w.size(); ++j) CHECK(w.find(w.compose(i, j)).has_value());

    // w^{-1} via apply_inverse agrees with apply.
    std::mt19937_64 rng(11);
    for (std::size_t i = 0; i < w.size(); ++i) {
        Weight x = random_weight(rng, 2, 4);
        CHECK(w.apply_inverse(i, w.apply(i, x)) == x);
    }

    auto e6 = build_root_system(simple(Family::E, 6));
    CHECK(enumerate_weyl_group(e6).size() == 51840);

    auto e8 = build_root_system(simple(Family::E, 8));
    CHECK_THROWS_AS(enumerate_weyl_group(e8), Error);

    auto torus = build_root_system(ReductiveAlgebra({}, 2));
    CHECK(enumerate_weyl_group(torus).size() == 1);
}

TEST_CASE("normalizer quotient") {
    auto a1 = build_root_system(simple(Family::A, 1));
    std::vector<Weight> empty;
    CHECK(subspace_normalizer_quotient(empty, a1).order() == 1);

    std::vector<Weight> basis{Weight{1}};
    auto gamma = subspace_normalizer_quotient(basis, a1);
    REQUIRE(gamma.order() == 2);
    CHECK(gamma.maps[0] == RationalVector{Rational(1)});
    CHECK(gamma.maps[1] == RationalVector{Rational(-1)});

    std::vector<Weight> dependent{Weight{1}, Weight{2}};
    CHECK_THROWS_AS(subspace_normalizer_quotient(dependent, a1), Error);

    // In A2, rho is the highest root; its reflection acts by -1 on the line.
    auto a2 = build_root_system(simple(Family::A, 2));
    std::vector<Weight> rho{Weight{1, 1}};
    CHECK(subspace_normalizer_quotient(rho, a2).order() == 2);
}
