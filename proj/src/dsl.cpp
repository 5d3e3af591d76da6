#include "polarsym/dsl.hpp"

#include <cctype>
#include <optional>
#include <sstream>

#include "polarsym/errors.hpp"
#include "polarsym/tables.hpp"

namespace polarsym {

namespace {

// One group factor of the input: zero or more simple factors plus at most one
// torus coordinate (GL and Cx).
struct GroupFactor {
    std::string name;  // as written, for diagnostics
    enum class Kind { SL, GL, SO, Spin, Sp, Exceptional, Cx } kind;
    int n = 0;  // the n of SL(n)/GL(n)/SO(n)/Spin(n), the m of Sp(2m)
    std::vector<SimpleFactor> factors;
    Weight std_highest;  // over `factors`
    bool has_torus = false;
};

int ss_rank(const GroupFactor& g) {
    int r = 0;
    for (const auto& f : g.factors) r += f.rank;
    return r;
}

struct Piece {
    Weight ss;   // over the factor's simple factors
    int degree = 0;  // torus weight (GL, Cx)
};

class Parser {
public:
    Parser(std::string_view text, bool allow_symplectic_t) : s_(text), allow_symplectic_t_(allow_symplectic_t) {}

    ParsedSpec run() {
        parse_groups();
        expect(':', "':' after the group");
        build_algebra();
        parse_rep();
        skip_ws();
        if (pos_ != s_.size()) fail("'+' or end of input", "unexpected trailing text");
        return assemble();
    }

private:
    struct Term {
        enum class Kind { Plain, Dual, T } kind;
        Weight hw;  // over the declared algebra
        std::size_t pos;
    };

    std::string_view s_;
    bool allow_symplectic_t_;
    std::size_t pos_ = 0;
    std::vector<GroupFactor> groups_;
    ReductiveAlgebra declared_;
    std::vector<int> ss_offset_;  // per group, offset of its semisimple block
    std::vector<int> torus_index_;  // per group, its torus coordinate or -1
    std::vector<Term> terms_;
    std::vector<std::string> annotations_;

    [[noreturn]] void fail(const std::string& expected, const std::string& message) const {
        throw ParseError(pos_, expected, message);
    }
    [[noreturn]] void semantic(std::size_t at, const std::string& message) const {
        throw Error(ErrorCode::SemanticError, message + " at position " + std::to_string(at));
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool peek(char c) {
        skip_ws();
        return pos_ < s_.size() && s_[pos_] == c;
    }
    bool accept(char c) {
        if (!peek(c)) return false;
        ++pos_;
        return true;
    }
    void expect(char c, const std::string& expected) {
        if (!accept(c)) fail(expected, pos_ < s_.size() ? "unexpected character" : "unexpected end of input");
    }

    std::string identifier() {
        skip_ws();
        const auto start = pos_;
        while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        return std::string(s_.substr(start, pos_ - start));
    }

    int integer(const std::string& expected) {
        skip_ws();
        const auto start = pos_;
        if (pos_ < s_.size() && s_[pos_] == '-') ++pos_;
        const auto digits = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == digits || pos_ - digits > 6) {
            pos_ = start;
            fail(expected, "expected an integer");
        }
        return std::stoi(std::string(s_.substr(start, pos_ - start)));
    }

    // ---- groups ----

    void parse_groups() {
        do {
            groups_.push_back(parse_factor());
        } while (accept_separator());
    }

    bool accept_separator() {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == 'x') {
            ++pos_;
            return true;
        }
        return false;
    }

    GroupFactor parse_factor() {
        const auto start = pos_;
        const auto name = identifier();
        using K = GroupFactor::Kind;
        auto sized = [&](K kind) {
            expect('(', "'('");
            const int n = integer("a size");
            expect(')', "')'");
            GroupFactor g{name + "(" + std::to_string(n) + ")", kind, n, {}, {}, false};
            return g;
        };
        GroupFactor g;
        if (name == "SL" || name == "GL") {
            g = sized(name == "SL" ? K::SL : K::GL);
            if (g.n < (g.kind == K::SL ? 2 : 1)) semantic(start, g.name + " needs n >= " + (g.kind == K::SL ? "2" : "1"));
            const auto m = sl_standard(g.n);
            g.factors = m.factors;
            g.std_highest = m.highest;
            g.has_torus = g.kind == K::GL;
        } else if (name == "SO" || name == "Spin") {
            g = sized(name == "SO" ? K::SO : K::Spin);
            if (g.n < 3) semantic(start, g.name + " needs n >= 3");
            const auto m = so_standard(g.n);
            g.factors = m.factors;
            g.std_highest = m.highest;
        } else if (name == "Sp") {
            g = sized(K::Sp);
            if (g.n < 2 || g.n % 2) semantic(start, g.name + " needs an even size >= 2");
            g.n /= 2;
            const auto m = sp_standard(g.n);
            g.factors = m.factors;
            g.std_highest = m.highest;
        } else if (name == "Cx") {
            g = GroupFactor{"Cx", K::Cx, 1, {}, Weight{}, true};
        } else if (name == "G2" || name == "F4" || name == "E6" || name == "E7" || name == "E8") {
            const Family fam = name[0] == 'G' ? Family::G : name[0] == 'F' ? Family::F : Family::E;
            const int r = name[1] - '0';
            g = GroupFactor{name, K::Exceptional, r, {SimpleFactor::make(fam, r)}, Weight(static_cast<std::size_t>(r)), false};
            // Smallest module: G2, E6 on node 1; F4 on node 4; E7, E8 on the last node.
            const int node = (name == "G2" || name == "E6") ? 0 : r - 1;
            g.std_highest[static_cast<std::size_t>(node)] = 1;
        } else {
            pos_ = start;
            fail("GL(n), SL(n), SO(n), Spin(n), Sp(2m), G2, F4, E6, E7, E8 or Cx", "unknown group factor");
        }
        return g;
    }

    void build_algebra() {
        std::vector<SimpleFactor> factors;
        int torus = 0;
        for (const auto& g : groups_) {
            factors.insert(factors.end(), g.factors.begin(), g.factors.end());
            torus_index_.push_back(g.has_torus ? torus++ : -1);
        }
        declared_ = ReductiveAlgebra(factors, torus);
        int off = 0;
        for (const auto& g : groups_) {
            ss_offset_.push_back(off);
            off += ss_rank(g);
        }
    }

    // ---- pieces ----

    Piece parse_piece(const GroupFactor& g) {
        using K = GroupFactor::Kind;
        const auto start = pos_;
        const auto name = identifier();
        const int r = ss_rank(g);
        Piece p{Weight(static_cast<std::size_t>(r)), 0};
        if (name == "triv") return p;
        if (name == "std") {
            if (g.kind == K::Cx) {
                p.degree = 1;
                return p;
            }
            p.ss = g.std_highest;
            p.degree = g.kind == K::GL ? 1 : 0;
            return p;
        }
        if (name == "spin") {
            char sign = 0;
            if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-') && g.kind == K::Spin && g.n % 2 == 0) sign = s_[pos_++];
            return spin_piece(g, sign, start);
        }
        if (name == "wedge" || name == "sym") {
            expect('(', "'('");
            const int k = integer("a power");
            expect(',', "','");
            if (identifier() != "std") fail("'std'", "only powers of the standard module are supported");
            expect(')', "')'");
            return power_piece(g, name == "wedge", k, start);
        }
        if (name == "irrep") {
            expect('(', "'('");
            std::vector<int> c;
            if (!peek(')')) {
                do {
                    c.push_back(integer("a coefficient"));
                } while (accept(','));
            }
            expect(')', "')'");
            if (g.kind == K::Cx) {
                if (c.size() != 1) semantic(start, "a Cx piece irrep(k) takes one weight");
                p.degree = c[0];
                return p;
            }
            if (c.size() != static_cast<std::size_t>(r))
                semantic(start, g.name + " expects " + std::to_string(r) + " irrep coefficients, got " +
                                    std::to_string(c.size()));
            for (int x : c)
                if (x < 0) semantic(start, "irrep coefficients must be non-negative (a dominant weight)");
            p.ss = Weight(c);
            if (g.kind == K::GL)
                for (int i = 0; i < r; ++i) p.degree += (i + 1) * c[static_cast<std::size_t>(i)];
            return p;
        }
        pos_ = start;
        fail("std, spin, spin+, spin-, wedge(k,std), sym(k,std), irrep(...) or triv", "unknown piece");
    }

    Piece spin_piece(const GroupFactor& g, char sign, std::size_t at) {
        if (g.kind != GroupFactor::Kind::Spin) semantic(at, "spin modules need a Spin(n) factor, not " + g.name);
        Piece p{Weight(static_cast<std::size_t>(ss_rank(g))), 0};
        const int n = g.n;
        if (n % 2) {
            if (sign) semantic(at, "Spin(" + std::to_string(n) + ") has a single spin module; write spin");
            // Spin(3) = SL(2), Spin(5) and up: B_r with the spin node last.
            p.ss[p.ss.size() - 1] = 1;
            return p;
        }
        // Spin(4) = SL(2) x SL(2), Spin(6) = D3 with spin nodes 1, 2, D_r with spin nodes r-2, r-1.
        if (!sign) semantic(at, "Spin(" + std::to_string(n) + ") has two spin modules; write spin+ or spin-");
        if (n == 4) {
            p.ss[sign == '+' ? 0 : 1] = 1;
        } else {
            p.ss[p.ss.size() - (sign == '+' ? 1 : 2)] = 1;
        }
        return p;
    }

    Piece power_piece(const GroupFactor& g, bool wedge, int k, std::size_t at) {
        using K = GroupFactor::Kind;
        const int r = ss_rank(g);
        Piece p{Weight(static_cast<std::size_t>(r)), 0};
        if (k < 1) semantic(at, "powers start at 1");
        if (k == 1) {
            p.ss = g.std_highest;
            p.degree = g.kind == K::GL ? 1 : 0;
            if (g.kind == K::Cx) p.degree = 1;
            return p;
        }
        if (g.kind == K::SL || g.kind == K::GL) {
            if (wedge) {
                const int top = g.kind == K::GL ? g.n : g.n - 1;
                if (k > top) semantic(at, "wedge(" + std::to_string(k) + ",std) of " + g.name + " is trivial or zero");
                if (k < g.n) p.ss[static_cast<std::size_t>(k - 1)] = 1;
            } else {
                p.ss[0] = k;
            }
            p.degree = g.kind == K::GL ? k : 0;
            return p;
        }
        if (g.kind == K::Sp && !wedge) {
            p.ss[0] = k;
            return p;
        }
        if (g.kind == K::Cx && !wedge) {
            p.degree = k;
            return p;
        }
        if ((g.kind == K::SO || g.kind == K::Spin) && wedge && g.n >= 5 && g.n != 6) {
            // B_r: wedge^k = fundamental k for k <= r-1; D_r: for k <= r-2.
            const int limit = g.n % 2 ? r - 1 : r - 2;
            if (k <= limit) {
                p.ss[static_cast<std::size_t>(k - 1)] = 1;
                return p;
            }
        }
        semantic(at, std::string(wedge ? "wedge" : "sym") + "(" + std::to_string(k) + ",std) of " + g.name +
                         " is not supported; write it with irrep(...)");
    }

    // ---- rep ----

    Weight parse_atom() {
        Weight hw(static_cast<std::size_t>(declared_.dimension()));
        for (std::size_t i = 0; i < groups_.size(); ++i) {
            if (i > 0) expect('*', "'*' and a piece for " + groups_[i].name);
            const auto piece = parse_piece(groups_[i]);
            for (std::size_t k = 0; k < piece.ss.size(); ++k) hw[static_cast<std::size_t>(ss_offset_[i]) + k] = piece.ss[k];
            if (torus_index_[i] >= 0) hw[static_cast<std::size_t>(declared_.torus_offset() + torus_index_[i])] = piece.degree;
        }
        if (peek('*')) fail("'+', ')' or end of input", "more pieces than group factors");
        return hw;
    }

    void parse_rep() {
        do {
            skip_ws();
            const auto start = pos_;
            const auto save = pos_;
            const auto word = identifier();
            Term::Kind kind = Term::Kind::Plain;
            if ((word == "T" || word == "dual") && peek('(')) {
                expect('(', "'('");
                kind = word == "T" ? Term::Kind::T : Term::Kind::Dual;
            } else {
                pos_ = save;
            }
            Weight hw = parse_atom();
            if (kind != Term::Kind::Plain) expect(')', "')'");
            if (hw.is_zero()) semantic(start, "trivial summand; the representation must have no trivial components");
            if (kind == Term::Kind::Dual) hw = dual_highest_weight(declared_, hw);
            terms_.push_back({kind, hw, start});
        } while (accept('+'));
    }

    bool torus_zero(const Weight& hw) const {
        for (int t = 0; t < declared_.torus_rank(); ++t)
            if (hw[static_cast<std::size_t>(declared_.torus_offset() + t)] != 0) return false;
        return true;
    }

    FsType fs(const Weight& hw) const {
        return torus_zero(hw) ? fs_classification(declared_, hw) : FsType::None;
    }

    ParsedSpec assemble() {
        // T(U) with U free of torus gets a fresh torus coordinate.
        int fresh = 0;
        for (const auto& t : terms_)
            if (t.kind == Term::Kind::T && torus_zero(t.hw)) ++fresh;
        const ReductiveAlgebra alg = declared_.with_extra_torus(fresh);
        auto lift = [&](const Weight& w) {
            auto c = w.coords();
            c.resize(static_cast<std::size_t>(alg.dimension()), 0);
            return Weight(std::move(c));
        };

        std::vector<Component> comps;
        std::vector<bool> used(terms_.size(), false);
        int next_fresh = 0;
        for (std::size_t i = 0; i < terms_.size(); ++i) {
            if (used[i]) continue;
            const auto& t = terms_[i];
            used[i] = true;
            if (t.kind == Term::Kind::T) {
                Weight hw = lift(t.hw);
                if (fs(t.hw) == FsType::Symplectic) {
                    const std::string msg = "T(U) with a symplectic U (" + t.hw.to_string(declared_.torus_offset()) +
                                            ") is U + U with a torus; the module U alone is symplectic and is written "
                                            "without T(...)";
                    if (!allow_symplectic_t_) semantic(t.pos, msg);
                    annotations_.push_back(msg);
                }
                if (torus_zero(t.hw)) hw[static_cast<std::size_t>(declared_.dimension() + next_fresh++)] = 1;
                comps.push_back(make_dual_pair(alg, hw));
                continue;
            }
            const FsType type = fs(t.hw);
            if (type == FsType::Symplectic) {
                comps.push_back(make_type1(alg, lift(t.hw)));
                continue;
            }
            const Weight want = dual_highest_weight(declared_, t.hw);
            std::size_t j = i + 1;
            while (j < terms_.size() && (used[j] || terms_[j].kind == Term::Kind::T || terms_[j].hw != want)) ++j;
            if (j == terms_.size())
                semantic(t.pos, "summand " + t.hw.to_string(declared_.torus_offset()) +
                                    " is not symplectic and has no dual partner; add dual(...) or write T(...)");
            used[j] = true;
            comps.push_back(make_dual_pair(alg, lift(t.hw)));
        }

        RepSpec spec(alg, std::move(comps));
        bool saturated = true;
        for (std::size_t c = 0; c < spec.components().size(); ++c)
            if (spec.components()[c].kind == ComponentKind::Type2 && !has_exclusive_torus(spec, c)) saturated = false;
        spec.set_saturated(saturated);
        return {std::move(spec), std::move(annotations_)};
    }
};

std::string factor_text(const SimpleFactor& f) {
    switch (f.family) {
        case Family::A: return "SL(" + std::to_string(f.rank + 1) + ")";
        case Family::B: return "Spin(" + std::to_string(2 * f.rank + 1) + ")";
        case Family::C: return "Sp(" + std::to_string(2 * f.rank) + ")";
        case Family::D: return "Spin(" + std::to_string(2 * f.rank) + ")";
        default: return f.name();
    }
}

std::string atom_text(const ReductiveAlgebra& alg, const Weight& hw) {
    std::ostringstream out;
    bool first = true;
    for (std::size_t f = 0; f < alg.factors().size(); ++f) {
        out << (first ? "" : "*") << "irrep(";
        first = false;
        for (int k = 0; k < alg.factors()[f].rank; ++k)
            out << (k ? "," : "") << hw[static_cast<std::size_t>(alg.factor_offset(f) + k)];
        out << ")";
    }
    for (int t = 0; t < alg.torus_rank(); ++t) {
        const int w = hw[static_cast<std::size_t>(alg.torus_offset() + t)];
        out << (first ? "" : "*");
        first = false;
        if (w == 0) out << "triv";
        else out << "irrep(" << w << ")";
    }
    return out.str();
}

}  // namespace

ParsedSpec parse_spec(std::string_view text, bool allow_symplectic_t) {
    return Parser(text, allow_symplectic_t).run();
}

std::string print_spec(const RepSpec& spec) {
    const auto& alg = spec.algebra();
    std::string out;
    for (const auto& f : alg.factors()) out += (out.empty() ? "" : " x ") + factor_text(f);
    for (int t = 0; t < alg.torus_rank(); ++t) out += std::string(out.empty() ? "" : " x ") + "Cx";
    out += ": ";
    bool first = true;
    for (const auto& c : spec.components()) {
        if (!first) out += " + ";
        first = false;
        const auto u = atom_text(alg, c.highest_weight);
        out += u;
        if (c.kind == ComponentKind::Type2) out += " + dual(" + u + ")";
    }
    return out;
}

}  // namespace polarsym
