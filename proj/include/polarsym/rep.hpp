#pragma once

// Weight multisets of symplectic representations and the type 1 / type 2
// component model.

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "polarsym/exact.hpp"
#include "polarsym/lie.hpp"

namespace polarsym {

class WeightMultiset {
public:
    using Map = std::map<Weight, int>;

    WeightMultiset() = default;
    explicit WeightMultiset(std::size_t coordinate_dim) : dim_(coordinate_dim) {}

    std::size_t coordinate_dim() const { return dim_; }
    const Map& entries() const { return entries_; }
    auto begin() const { return entries_.begin(); }
    auto end() const { return entries_.end(); }

    void add(const Weight& w, int multiplicity = 1);
    /// Removes `multiplicity` copies; returns false (and changes nothing) if
    /// fewer are present.
    bool remove(const Weight& w, int multiplicity = 1);
    int multiplicity(const Weight& w) const;
    bool contains(const Weight& w) const { return multiplicity(w) > 0; }

    std::int64_t total() const;
    std::size_t distinct() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }
    int max_multiplicity() const;

    /// Pads every weight with `extra` zero coordinates at the end.
    WeightMultiset padded(std::size_t extra) const;

    WeightMultiset& operator+=(const WeightMultiset& o);
    friend WeightMultiset operator+(WeightMultiset a, const WeightMultiset& b) { return a += b; }
    bool operator==(const WeightMultiset&) const = default;

private:
    std::size_t dim_ = 0;
    Map entries_;
};

WeightMultiset dual(const WeightMultiset& ms);

/// All sums l1 + l2 with multiplicities multiplied. Both multisets live in the
/// same coordinate space and must be supported on disjoint coordinates
/// (OverlappingBlocks otherwise).
WeightMultiset outer_tensor(const WeightMultiset& a, const WeightMultiset& b);

/// Outer tensor of modules over two algebras, as a module over product(alg_a, alg_b).
WeightMultiset outer_tensor(const WeightMultiset& a, const ReductiveAlgebra& alg_a,
                            const WeightMultiset& b, const ReductiveAlgebra& alg_b);

/// Moves a weight of `from` into the coordinates of `to`: factor i of `from`
/// lands on factor factor_map[i] of `to`, torus coordinate k on torus
/// coordinate torus_map[k]. Unmapped coordinates of `to` are zero.
Weight embed_weight(const Weight& w, const ReductiveAlgebra& from, const ReductiveAlgebra& to,
                    std::span<const int> factor_map, std::span<const int> torus_map);

bool is_weyl_invariant(const WeightMultiset& ms, const RootSystemData& rsd);

/// Weights of the irreducible module with the given highest weight
/// (Freudenthal's recursion per simple factor, torus block copied).
WeightMultiset irrep_weights(const ReductiveAlgebra& algebra, const Weight& highest);

/// Weyl dimension formula.
BigInt weyl_dimension(const ReductiveAlgebra& algebra, const Weight& highest);

enum class FsType { Symplectic, Orthogonal, None };
std::string to_string(FsType t);

/// Self-dual modules are symplectic iff <lambda | 2 rho^vee> is odd; a nonzero
/// torus character always gives None.
FsType fs_classification(const ReductiveAlgebra& algebra, const Weight& highest);

/// Highest weight of the dual module, -w0(lambda).
Weight dual_highest_weight(const ReductiveAlgebra& algebra, const Weight& highest);

bool is_dominant(const ReductiveAlgebra& algebra, const Weight& w);

enum class ComponentKind { Type1, Type2 };

struct Component {
    ComponentKind kind = ComponentKind::Type1;
    /// Type 1: highest weight of V. Type 2: highest weight of U, V = U + U*.
    Weight highest_weight;
    WeightMultiset weights;
    /// Type 2 built from a U that is itself symplectic (U + U* = U + U).
    bool symplectic_u = false;

    bool operator==(const Component&) const = default;
};

/// Type 1 component; PreconditionViolated unless the module is symplectic.
Component make_type1(const ReductiveAlgebra& algebra, const Weight& highest);

/// U + U* with no extra torus.
Component make_dual_pair(const ReductiveAlgebra& algebra, const Weight& u_highest);

struct Type2Construction {
    ReductiveAlgebra algebra;  // input algebra plus one torus coordinate
    Component component;
};

/// T(U): extends the algebra by one torus coordinate acting by +1 on U and -1
/// on U*. A symplectic U is refused unless allowed explicitly.
Type2Construction make_type2(const ReductiveAlgebra& algebra, const Weight& u_highest,
                             bool allow_symplectic_u = false);

class RepSpec {
public:
    RepSpec() = default;
    RepSpec(ReductiveAlgebra algebra, std::vector<Component> components, bool saturated = false);

    const ReductiveAlgebra& algebra() const { return algebra_; }
    const std::vector<Component>& components() const { return components_; }
    bool saturated() const { return saturated_; }
    void set_saturated(bool s) { saturated_ = s; }

    WeightMultiset weights() const;
    std::int64_t dimension() const;

    /// Same representation over the algebra with `extra` more torus coordinates (acting trivially).
    RepSpec with_extra_torus(int extra) const;

    bool operator==(const RepSpec&) const = default;

private:
    ReductiveAlgebra algebra_;
    std::vector<Component> components_;
    bool saturated_ = false;
};

RepSpec direct_sum(std::span<const RepSpec> specs);
RepSpec direct_sum(const RepSpec& a, const RepSpec& b);

/// Re-expresses `spec` over a larger algebra (see embed_weight).
RepSpec embed(const RepSpec& spec, const ReductiveAlgebra& to, std::span<const int> factor_map,
              std::span<const int> torus_map);

/// Outer product of representations of two groups: a module over product(a, b)
/// whose components are those of a and of b acting on separate factors.
RepSpec outer_product(const RepSpec& a, const RepSpec& b);

/// Gives every type 2 component an exclusive torus coordinate.
RepSpec saturate(const RepSpec& spec);

/// True iff the component has a torus coordinate on which no other component acts.
bool has_exclusive_torus(const RepSpec& spec, std::size_t component);

}  // namespace polarsym
