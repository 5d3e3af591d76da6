#include "polarsym/exact.hpp"

#include <charconv>
#include <limits>
#include <numeric>

#include "polarsym/errors.hpp"

namespace polarsym {

std::size_t matrix_rank(std::vector<std::vector<BigInt>> m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t rank = 0;
    BigInt prev = 1;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pivot], m[rank]);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            for (std::size_t c = col + 1; c < cols; ++c) {
                m[r][c] = (m[rank][col] * m[r][c] - m[r][col] * m[rank][c]) / prev;
            }
            m[r][col] = 0;
        }
        prev = m[rank][col];
        ++rank;
    }
    return rank;
}

namespace {

std::vector<std::vector<BigInt>> to_rows(std::span<const Weight> vectors) {
    std::vector<std::vector<BigInt>> rows;
    rows.reserve(vectors.size());
    for (const auto& v : vectors) rows.emplace_back(v.begin(), v.end());
    return rows;
}

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(std::vector<RationalVector>& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        const Rational inv = Rational(1) / m[r][c];
        for (auto& x : m[r]) x *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            const Rational f = m[i][c];
            for (std::size_t k = 0; k < cols; ++k) m[i][k] -= f * m[r][k];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::int64_t to_int64(const BigInt& x) {
    if (x > std::numeric_limits<std::int64_t>::max() || x < std::numeric_limits<std::int64_t>::min())
        throw Error(ErrorCode::InternalInconsistency, "integer overflow in span coordinates");
    return static_cast<std::int64_t>(x);
}

// Scales a rational vector to a primitive integer vector.
std::vector<std::int64_t> primitive(const RationalVector& v) {
    BigInt l = 1;
    for (const auto& q : v) l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(q));
    std::vector<BigInt> ints;
    BigInt g = 0;
    for (const auto& q : v) {
        BigInt x = boost::multiprecision::numerator(q) * (l / boost::multiprecision::denominator(q));
        g = boost::multiprecision::gcd(g, x);
        ints.push_back(x);
    }
    std::vector<std::int64_t> out;
    for (auto& x : ints) out.push_back(to_int64(g == 0 ? x : x / g));
    return out;
}

}  // namespace

std::size_t rank_of(std::span<const Weight> vectors) {
    return matrix_rank(to_rows(vectors));
}

bool linearly_independent(std::span<const Weight> vectors) {
    return rank_of(vectors) == vectors.size();
}

bool same_span(std::span<const Weight> a, std::span<const Weight> b) {
    std::vector<Weight> both(a.begin(), a.end());
    both.insert(both.end(), b.begin(), b.end());
    const std::size_t ra = rank_of(a), rb = rank_of(b), rab = rank_of(both);
    return ra == rb && rb == rab;
}

SpanCoordinates::SpanCoordinates(std::span<const Weight> basis) : basis_(basis.begin(), basis.end()) {
    if (basis_.empty()) return;
    ambient_ = basis_[0].size();
    for (const auto& b : basis_)
        if (b.size() != ambient_) throw Error(ErrorCode::DimensionMismatch, "basis vectors of different lengths");
    if (!linearly_independent(basis_)) throw Error(ErrorCode::DependentBasis, "basis is linearly dependent");
    const std::size_t r = basis_.size();

    // Annihilator: null space of the r x n matrix whose rows are the basis.
    std::vector<RationalVector> rows;
    for (const auto& b : basis_) rows.emplace_back(b.begin(), b.end());
    auto pivots = rref(rows);
    std::vector<bool> is_pivot(ambient_, false);
    for (auto p : pivots) is_pivot[p] = true;
    for (std::size_t free = 0; free < ambient_; ++free) {
        if (is_pivot[free]) continue;
        RationalVector y(ambient_, Rational(0));
        y[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) y[pivots[i]] = -rows[i][free];
        annihilator_.push_back(primitive(y));
    }

    // Left inverse through the pivot coordinates: for v in the span,
    // v restricted to the pivot coordinates equals S c with S = B[pivots].
    std::vector<RationalVector> aug(r, RationalVector(2 * r, Rational(0)));
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t k = 0; k < r; ++k) aug[i][k] = basis_[k][pivots[i]];
        aug[i][r + i] = 1;
    }
    rref(aug);
    BigInt l = 1;
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t k = 0; k < r; ++k) l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(aug[i][r + k]));
    den_ = to_int64(l);
    left_inverse_.assign(r, std::vector<std::int64_t>(ambient_, 0));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t k = 0; k < r; ++k) {
            const Rational scaled = aug[i][r + k] * Rational(l);
            left_inverse_[i][pivots[k]] = to_int64(boost::multiprecision::numerator(scaled));
        }
}

bool SpanCoordinates::contains(std::span<const std::int64_t> v) const {
    if (v.size() != ambient_) return false;
    for (const auto& y : annihilator_) {
        std::int64_t s = 0;
        for (std::size_t i = 0; i < ambient_; ++i) s += y[i] * v[i];
        if (s != 0) return false;
    }
    return true;
}

bool SpanCoordinates::contains(const Weight& w) const {
    std::vector<std::int64_t> v(w.begin(), w.end());
    return contains(v);
}

void SpanCoordinates::scaled_coordinates(std::span<const std::int64_t> v, std::span<std::int64_t> out) const {
    for (std::size_t i = 0; i < left_inverse_.size(); ++i) {
        std::int64_t s = 0;
        for (std::size_t k = 0; k < ambient_; ++k) s += left_inverse_[i][k] * v[k];
        out[i] = s;
    }
}

RationalVector SpanCoordinates::coordinates(const Weight& w) const {
    if (!contains(w)) throw Error(ErrorCode::PreconditionViolated, "vector " + w.to_string() + " is not in the span");
    std::vector<std::int64_t> v(w.begin(), w.end()), c(dim());
    scaled_coordinates(v, c);
    RationalVector out;
    for (auto x : c) out.emplace_back(Rational(x) / den_);
    return out;
}

Rational parse_rational(std::string_view text) {
    auto parse_int = [&](std::string_view s) {
        if (!s.empty() && s.front() == '+') s.remove_prefix(1);
        long long v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
            throw Error(ErrorCode::ParseError, "not a rational number: '" + std::string(text) + "'");
        return v;
    };
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    const long long num = parse_int(text.substr(0, slash));
    const long long den = parse_int(text.substr(slash + 1));
    if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
    return Rational(num) / Rational(den);
}

std::string to_string(const Rational& q) {
    return q.str();
}

}  // namespace polarsym
