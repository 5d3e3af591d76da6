#pragma once

// Exact linear algebra over Q for the small dense systems that show up in
// weight computations (independence tests, spans, coordinates in a subspace).

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "polarsym/weight.hpp"

namespace polarsym {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using RationalVector = std::vector<Rational>;

/// Rank by fraction-free (Bareiss) elimination.
std::size_t matrix_rank(std::vector<std::vector<BigInt>> rows);

std::size_t rank_of(std::span<const Weight> vectors);
bool linearly_independent(std::span<const Weight> vectors);
/// span(a) == span(b) over Q.
bool same_span(std::span<const Weight> a, std::span<const Weight> b);

/// Membership and coordinates for the Q-span of an independent family of
/// integer vectors. Both are answered in integer arithmetic: an integer
/// annihilator for membership and a scaled left inverse for coordinates.
class SpanCoordinates {
public:
    SpanCoordinates() = default;
    /// Throws DependentBasis if the family is not linearly independent.
    explicit SpanCoordinates(std::span<const Weight> basis);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<Weight>& basis() const { return basis_; }

    bool contains(std::span<const std::int64_t> v) const;
    bool contains(const Weight& w) const;

    /// Coordinates of v in the basis; throws PreconditionViolated if v is not in the span.
    RationalVector coordinates(const Weight& w) const;

    /// out = denominator() * coordinates(v), assuming contains(v).
    void scaled_coordinates(std::span<const std::int64_t> v, std::span<std::int64_t> out) const;
    std::int64_t denominator() const { return den_; }

    const std::vector<std::vector<std::int64_t>>& annihilator() const { return annihilator_; }

private:
    std::size_t ambient_ = 0;
    std::vector<Weight> basis_;
    std::vector<std::vector<std::int64_t>> annihilator_;
    std::vector<std::vector<std::int64_t>> left_inverse_;  // dim x ambient, scaled by den_
    std::int64_t den_ = 1;
};

/// Parses "3", "-2/5".
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

}  // namespace polarsym
