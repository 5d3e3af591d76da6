#include <doctest.h>

#include <random>

#include "polarsym/classify.hpp"
#include "polarsym/dsl.hpp"
#include "polarsym/errors.hpp"

using namespace polarsym;

namespace {

ErrorCode code_of(std::string_view text, bool allow = false) {
    try {
        parse_spec(text, allow);
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("accepted: " << text);
    return ErrorCode::InternalInconsistency;
}

std::size_t parse_position(std::string_view text) {
    try {
        parse_spec(text);
    } catch (const ParseError& e) {
        return e.position();
    }
    FAIL("no parse error: " << text);
    return 0;
}

RepSpec spec_of(std::string_view text) { return parse_spec(text).spec; }

bool saturation_flag(const RepSpec& s) {
    for (std::size_t c = 0; c < s.components().size(); ++c)
        if (s.components()[c].kind == ComponentKind::Type2 && !has_exclusive_torus(s, c)) return false;
    return true;
}

// Random small representation: a few simple factors, up to two torus
// coordinates, one to three components with coefficients in {0, 1, 2}.
RepSpec random_spec(std::mt19937_64& rng) {
    const std::vector<SimpleFactor> pool{{Family::A, 1}, {Family::A, 2}, {Family::A, 3}, {Family::B, 2},
                                         {Family::B, 3}, {Family::C, 2}, {Family::C, 3}, {Family::D, 4},
                                         {Family::G, 2}};
    std::uniform_int_distribution<int> nf(1, 2), nt(0, 2), nc(1, 3), coin(0, 1), coef(0, 2);
    std::vector<SimpleFactor> factors;
    const int k = nf(rng);
    for (int i = 0; i < k; ++i) factors.push_back(pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)]);
    const ReductiveAlgebra alg(factors, nt(rng));
    std::vector<Component> comps;
    const int want = nc(rng);
    while (static_cast<int>(comps.size()) < want) {
        Weight hw(static_cast<std::size_t>(alg.dimension()));
        int total = 0;
        for (int i = 0; i < alg.semisimple_rank(); ++i) {
            hw[static_cast<std::size_t>(i)] = total < 2 && coin(rng) ? 1 : 0;
            total += hw[static_cast<std::size_t>(i)];
        }
        for (int t = 0; t < alg.torus_rank(); ++t) hw[static_cast<std::size_t>(alg.torus_offset() + t)] = coef(rng) - 1;
        if (hw.is_zero()) continue;
        const auto fs = fs_classification(alg, hw);
        if (fs == FsType::Symplectic) {
            comps.push_back(make_type1(alg, hw));
        } else {
            comps.push_back(make_dual_pair(alg, hw));
        }
    }
    RepSpec s(alg, comps);
    s.set_saturated(saturation_flag(s));
    return s;
}

}  // namespace

TEST_CASE("parse examples") {
    const auto a = spec_of("Sp(6): irrep(0,0,1)");
    REQUIRE(a.components().size() == 1);
    CHECK(a.components()[0].kind == ComponentKind::Type1);
    CHECK(a.dimension() == 14);

    const auto b = spec_of("GL(4): T(wedge(2,std))");
    REQUIRE(b.components().size() == 1);
    CHECK(b.components()[0].kind == ComponentKind::Type2);
    CHECK(b.dimension() == 12);
    CHECK(b.algebra().torus_rank() == 1);
    CHECK(b.components()[0].highest_weight == Weight{0, 1, 0, 2});
    CHECK(b.saturated());

    CHECK(code_of("SL(2) x Spin(7): T(std*spin)") == ErrorCode::SemanticError);
    CHECK(spec_of("SL(2) x Spin(7): std*spin").dimension() == 16);
    const auto lenient = parse_spec("SL(2) x Spin(7): T(std*spin)", true);
    CHECK(lenient.annotations.size() == 1);
    CHECK(lenient.spec.components()[0].symplectic_u);
    CHECK(lenient.spec.algebra().torus_rank() == 1);
    CHECK(lenient.spec.dimension() == 32);
}

TEST_CASE("group factors") {
    CHECK(spec_of("SO(3): std + std").algebra().factors() == std::vector<SimpleFactor>{{Family::A, 1}});
    CHECK(spec_of("SO(3): std + std").dimension() == 6);
    CHECK(spec_of("SO(4) x Sp(2): std*std").dimension() == 8);
    CHECK(spec_of("Spin(6): spin+ + spin-").dimension() == 8);
    CHECK(spec_of("Spin(8): spin+ + dual(spin+)").dimension() == 16);
    CHECK(spec_of("Spin(4) x SL(2): spin+*std + spin+*std").dimension() == 8);
    CHECK(spec_of("Spin(3) x SO(5): spin*std").dimension() == 10);
    CHECK(spec_of("Spin(11): spin").dimension() == 32);
    CHECK(spec_of("Spin(12): spin+").dimension() == 32);
    CHECK(spec_of("E7: std").dimension() == 56);
    CHECK(spec_of("E6: T(std)").dimension() == 54);
    CHECK(spec_of("G2 x Sp(2): std*std").dimension() == 14);
    CHECK(spec_of("F4: std + std").dimension() == 52);
    CHECK(spec_of("SL(2): sym(3,std)").dimension() == 4);
    CHECK(spec_of("Sp(4): sym(2,std) + sym(2,std)").dimension() == 20);
    CHECK(spec_of("Cx: std + irrep(-1)").dimension() == 2);
    CHECK(spec_of("SO(7): wedge(2,std) + wedge(2,std)").dimension() == 42);

    // GL(n): the centre acts by the degree of each piece.
    const auto gl = spec_of("GL(3): sym(2,std) + dual(sym(2,std))");
    CHECK(gl.components()[0].highest_weight == Weight{2, 0, 2});
    CHECK(gl.dimension() == 12);
    CHECK(spec_of("GL(3): irrep(1,1) + dual(irrep(1,1))").components()[0].highest_weight == Weight{1, 1, 3});
    CHECK(spec_of("GL(2): wedge(2,std) + dual(wedge(2,std))").dimension() == 2);

    // Factor order and torus coordinates follow the text.
    const auto mixed = spec_of("Cx x SL(3) x GL(2): std*std*std + dual(std*std*std)");
    CHECK(mixed.algebra().factors() == std::vector<SimpleFactor>{{Family::A, 2}, {Family::A, 1}});
    CHECK(mixed.components()[0].highest_weight == Weight{1, 0, 1, 1, 1});
}

TEST_CASE("pairing and saturation") {
    const auto p = spec_of("SL(3) x Cx: std*std + std*triv + dual(std*std) + dual(std*triv)");
    REQUIRE(p.components().size() == 2);
    CHECK(p.components()[0].highest_weight == Weight{1, 0, 1});
    CHECK(p.components()[1].highest_weight == Weight{1, 0, 0});
    CHECK_FALSE(p.saturated());  // the second pair has no torus of its own

    const auto t = spec_of("SL(3): T(std) + T(std)");
    CHECK(t.algebra().torus_rank() == 2);
    CHECK(t.saturated());

    // Symplectic atoms are type 1 even when repeated.
    const auto s = spec_of("Sp(4): std + std");
    CHECK(s.components().size() == 2);
    CHECK(s.components()[1].kind == ComponentKind::Type1);
}

TEST_CASE("semantic errors") {
    CHECK(code_of("SL(3): std") == ErrorCode::SemanticError);              // no dual partner
    CHECK(code_of("SL(3): std + std") == ErrorCode::SemanticError);        // partner is not the dual
    CHECK(code_of("SL(2): triv") == ErrorCode::SemanticError);             // trivial summand
    CHECK(code_of("SL(2) x SL(2): std*std + triv*triv") == ErrorCode::SemanticError);
    CHECK(code_of("SL(4): spin") == ErrorCode::SemanticError);
    CHECK(code_of("SO(7): spin") == ErrorCode::SemanticError);             // needs Spin(7)
    CHECK(code_of("Spin(8): spin") == ErrorCode::SemanticError);           // ambiguous
    CHECK(code_of("Sp(4): wedge(2,std)") == ErrorCode::SemanticError);
    CHECK(code_of("SL(3): wedge(3,std)") == ErrorCode::SemanticError);
    CHECK(code_of("SL(3): irrep(1)") == ErrorCode::SemanticError);
    CHECK(code_of("SL(3): irrep(-1,0) + irrep(0,1)") == ErrorCode::SemanticError);
    CHECK(code_of("SL(1): std") == ErrorCode::SemanticError);
    CHECK(code_of("Sp(5): std") == ErrorCode::SemanticError);
    CHECK(code_of("SO(2): std") == ErrorCode::SemanticError);
}

TEST_CASE("parse errors carry positions") {
    CHECK(code_of("SL(2) std") == ErrorCode::ParseError);
    CHECK(parse_position("SL(2) std") == 6);
    CHECK(parse_position("XY(2): std") == 0);
    CHECK(parse_position("SL(2): foo") == 7);
    CHECK(parse_position("SL(2) x SL(2): std") == 18);         // missing second piece
    CHECK(parse_position("SL(2): std*std") == 10);             // one piece too many
    CHECK(parse_position("SL(2): std +") == 12);
    CHECK(parse_position("SL(2): T(std") == 12);
    CHECK(parse_position("SL(a): std") == 3);
    CHECK(parse_position("") == 0);
}

TEST_CASE("print examples") {
    CHECK(print_spec(spec_of("Sp(6): irrep(0,0,1)")) == "Sp(6): irrep(0,0,1)");
    CHECK(print_spec(spec_of("GL(4): T(wedge(2,std))")) == "SL(4) x Cx: irrep(0,1,0)*irrep(2) + dual(irrep(0,1,0)*irrep(2))");
    CHECK(print_spec(spec_of("SO(7) x Sp(2): std*std")) == "Spin(7) x SL(2): irrep(1,0,0)*irrep(1)");
}

TEST_CASE("parse after print is the identity (property)") {
    std::mt19937_64 rng(20261016);
    for (int i = 0; i < 300; ++i) {
        const auto s = random_spec(rng);
        const auto text = print_spec(s);
        CAPTURE(text);
        const auto back = parse_spec(text);
        CHECK(back.annotations.empty());
        CHECK(back.spec == s);
        CHECK(print_spec(back.spec) == text);
    }
}

TEST_CASE("spec-level examples classify as stated") {
    const auto s3 = classify_polarity(spec_of("SL(2): sym(3,std)"));
    CHECK(s3.status == PolarityStatus::Polar);
    CHECK(rank(spec_of("SL(2): sym(3,std)")) == 1);
    CHECK(classify_polarity(spec_of("SL(2): sym(3,std) + sym(3,std)")).status == PolarityStatus::NotCoisotropic);
}
