#pragma once

// Root systems of reductive Lie algebras (products of simple factors plus a
// central torus) in exact integer coordinates.
//
// Coordinates: a weight is an integer vector with one block of
// fundamental-weight coordinates per simple factor followed by one block of
// torus coordinates. Coroots are stored as simple-coroot coefficient vectors,
// so <lambda | alpha^vee> is a plain dot product.
//
// Simple roots and fundamental weights follow Bourbaki's numbering for every
// family (see cartan_matrix and the table in README.md).

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "polarsym/exact.hpp"
#include "polarsym/weight.hpp"

namespace polarsym {

enum class Family { A, B, C, D, E, F, G };

char family_letter(Family f);

struct SimpleFactor {
    Family family = Family::A;
    int rank = 1;

    /// Validates the (family, rank) combination; throws IllegalRank.
    static SimpleFactor make(Family family, int rank);

    std::string name() const;  // "A5", "E6", ...

    auto operator<=>(const SimpleFactor&) const = default;
};

using IntMatrix = std::vector<std::vector<int>>;

/// Symmetrized Gram matrix of the simple roots, normalized so the shortest
/// simple root has squared length 2.
IntMatrix gram_matrix(const SimpleFactor& f);

/// A[i][j] = <alpha_j | alpha_i^vee>: column j holds the fundamental-weight
/// coordinates of the simple root alpha_j.
IntMatrix cartan_matrix(const SimpleFactor& f);

/// d_i = (alpha_i, alpha_i) / 2.
std::vector<int> symmetrizer(const SimpleFactor& f);

/// Node permutations realizing the Dynkin diagram automorphisms (identity
/// first).
std::vector<std::vector<int>> diagram_automorphisms(const SimpleFactor& f);

/// Closed-form Weyl group order.
std::uint64_t weyl_group_order(const SimpleFactor& f);

class ReductiveAlgebra {
public:
    ReductiveAlgebra() = default;
    ReductiveAlgebra(std::vector<SimpleFactor> factors, int torus_rank);

    const std::vector<SimpleFactor>& factors() const { return factors_; }
    int torus_rank() const { return torus_rank_; }
    int semisimple_rank() const { return semisimple_rank_; }
    int dimension() const { return semisimple_rank_ + torus_rank_; }
    int factor_offset(std::size_t i) const { return offsets_.at(i); }
    int torus_offset() const { return semisimple_rank_; }

    /// Index of the simple factor owning semisimple coordinate `coord`.
    std::size_t factor_of_coordinate(int coord) const;

    ReductiveAlgebra with_extra_torus(int extra) const;

    std::uint64_t weyl_group_order() const;

    std::string to_string() const;

    bool operator==(const ReductiveAlgebra& o) const {
        return factors_ == o.factors_ && torus_rank_ == o.torus_rank_;
    }

private:
    std::vector<SimpleFactor> factors_;
    int torus_rank_ = 0;
    int semisimple_rank_ = 0;
    std::vector<int> offsets_;
};

/// Factors of `a` then factors of `b`; torus of `a` then torus of `b`.
ReductiveAlgebra product(const ReductiveAlgebra& a, const ReductiveAlgebra& b);

struct Root {
    Weight weight;                  // fundamental-weight coordinates (torus block zero)
    std::vector<int> coroot;        // simple-coroot coefficients, full length
    std::vector<int> simple_coords; // simple-root coefficients, full length
    std::size_t factor = 0;
    bool positive = false;
};

class RootSystemData {
public:
    explicit RootSystemData(ReductiveAlgebra algebra);

    const ReductiveAlgebra& algebra() const { return algebra_; }
    const std::vector<Root>& roots() const { return roots_; }
    const Root& root(std::size_t i) const { return roots_[i]; }
    const std::vector<std::size_t>& positive_roots() const { return positive_; }
    /// simple_roots()[j] is the index of the simple root for semisimple coordinate j.
    const std::vector<std::size_t>& simple_roots() const { return simple_; }
    /// Sum of positive coroots, as simple-coroot coefficients (full length).
    const std::vector<std::int64_t>& two_rho_covector() const { return two_rho_; }
    std::optional<std::size_t> find(const Weight& w) const;
    std::size_t negative_of(std::size_t i) const { return negative_[i]; }

    /// <w | 2 rho^vee>.
    std::int64_t height(const Weight& w) const;

private:
    ReductiveAlgebra algebra_;
    std::vector<Root> roots_;
    std::vector<std::size_t> positive_;
    std::vector<std::size_t> simple_;
    std::vector<std::size_t> negative_;
    std::vector<std::int64_t> two_rho_;
    std::unordered_map<Weight, std::size_t, WeightHash> index_;
};

using RootSystemPtr = std::shared_ptr<const RootSystemData>;

RootSystemPtr build_root_system(const ReductiveAlgebra& algebra);

std::int64_t pairing(const Weight& w, const Root& r);
Weight reflect(const Weight& w, const Root& r);

inline constexpr std::size_t kDefaultOrbitCap = 10'000'000;
inline constexpr std::uint64_t kDefaultGroupCap = 1'000'000;

/// Closure of {w} under the simple reflections, sorted ascending.
std::vector<Weight> weyl_orbit(const Weight& w, const RootSystemData& rsd,
                               std::size_t cap = kDefaultOrbitCap);

/// The element of the Weyl orbit of `w` lying in the dominant chamber.
Weight dominant_conjugate(const Weight& w, const RootSystemData& rsd);

/// Weyl group elements stored as permutations of the root list of `rsd`.
class WeylGroup {
public:
    WeylGroup(RootSystemPtr rsd, std::vector<std::uint16_t> perms);

    std::size_t size() const { return n_roots_ == 0 ? 1 : perms_.size() / n_roots_; }
    const RootSystemData& root_system() const { return *rsd_; }
    std::span<const std::uint16_t> permutation(std::size_t i) const {
        return {perms_.data() + i * n_roots_, n_roots_};
    }

    /// w_i applied to x.
    Weight apply(std::size_t i, const Weight& x) const;
    /// w_i^{-1} applied to x; cheaper than apply(): reads the images of the
    /// simple roots directly.
    Weight apply_inverse(std::size_t i, const Weight& x) const;
    void apply_inverse_into(std::size_t i, std::span<const std::int64_t> x,
                            std::span<std::int64_t> out) const;

    /// Composition (w_i o w_j) as a permutation.
    std::vector<std::uint16_t> compose(std::size_t i, std::size_t j) const;
    /// Index of the element with this permutation (linear scan).
    std::optional<std::size_t> find(std::span<const std::uint16_t> perm) const;

private:
    std::vector<std::uint16_t> key(std::span<const std::uint16_t> perm) const;

    RootSystemPtr rsd_;
    std::size_t n_roots_ = 0;
    std::vector<std::uint16_t> perms_;
};

WeylGroup enumerate_weyl_group(RootSystemPtr rsd, std::uint64_t cap = kDefaultGroupCap);

/// The group Gamma = N_W(a) / Z_W(a) for a = span(basis), as the distinct
/// linear maps induced on a. Each map is r x r row-major in basis
/// coordinates; column k is the image of basis[k]. The identity comes first.
struct NormalizerQuotient {
    std::size_t dim = 0;
    std::vector<RationalVector> maps;
    std::size_t normalizer_size = 0;

    std::size_t order() const { return maps.size(); }
};

NormalizerQuotient subspace_normalizer_quotient(std::span<const Weight> basis,
                                                const WeylGroup& group);
NormalizerQuotient subspace_normalizer_quotient(std::span<const Weight> basis,
                                                RootSystemPtr rsd,
                                                std::uint64_t cap = kDefaultGroupCap);

}  // namespace polarsym
