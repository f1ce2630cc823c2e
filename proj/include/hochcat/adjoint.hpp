#pragma once

#include "hochcat/finite_category.hpp"

#include <span>
#include <vector>

namespace hochcat {

/// A morphism a → b of the adjoint category: the commuting square
/// g∘a = b∘g with a ∈ End(s(g)) and b ∈ End(t(g)).
struct AdjointSquare {
    MorphismId a;
    MorphismId g;
    MorphismId b;
    friend constexpr auto operator<=>(const AdjointSquare&, const AdjointSquare&) = default;
};

/// The adjoint category of C together with the square decorating each of
/// its morphisms.
///
/// Objects are the endomorphisms of C in index order (named after them).
/// Morphisms are enumerated lexicographically by (g, a, b), so for a poset
/// the morphism order agrees with the order in C. Composition pastes
/// squares: (b, f, c) ∘ (a, g, b) = (a, f∘g, c).
class AdjointCategory {
public:
    const FiniteCategory& category() const { return category_; }

    /// The endomorphism of C that an adjoint object stands for.
    MorphismId endomorphism(ObjectId object) const { return endos_[object.index]; }
    /// The adjoint object of an endomorphism of C.
    ObjectId object_of(MorphismId endo) const;
    const AdjointSquare& square(MorphismId morphism) const { return squares_[morphism.index]; }
    std::optional<MorphismId> find(const AdjointSquare& square) const;

private:
    friend AdjointCategory adjoint_category(const FiniteCategory& cat);

    FiniteCategory category_;
    std::vector<MorphismId> endos_;
    std::vector<std::int32_t> object_of_endo_; // indexed by C-morphism, -1 for non-endomorphisms
    std::vector<AdjointSquare> squares_; // sorted by (g, a, b)
};

AdjointCategory adjoint_category(const FiniteCategory& cat);

/// Whether (a, g, b) ↦ g, a ↦ s(a) is an isomorphism F^ad(C) → C. True
/// exactly when every endomorphism monoid is trivial, e.g. for posets.
bool bottom_functor_is_isomorphism(const FiniteCategory& cat, const AdjointCategory& fad);

/// The monoid isomorphism φ_g : End(s(g)) → End(t(g)) defined by
/// g∘a = φ_g(a)∘g, with its inverse.
class Conjugation {
public:
    MorphismId along() const { return along_; }
    std::span<const MorphismId> domain() const { return domain_; }
    /// image()[i] = φ_g(domain()[i])
    std::span<const MorphismId> image() const { return image_; }

    MorphismId apply(MorphismId a) const;
    MorphismId inverse(MorphismId b) const;

private:
    friend Conjugation conjugation_iso(const FiniteCategory& cat, MorphismId g);

    MorphismId along_;
    std::vector<MorphismId> domain_;
    std::vector<MorphismId> image_;
};

/// Throws HypothesisViolated unless cat is deterministic and cancellative.
Conjugation conjugation_iso(const FiniteCategory& cat, MorphismId g);

/// A commuting strip of squares g_i∘a_i = a_{i+1}∘g_i over a composable
/// bottom chain (g_0, ..., g_{m-1}); verticals has m + 1 entries.
struct Ladder {
    std::vector<MorphismId> bottom;
    std::vector<MorphismId> verticals;

    std::size_t degree() const { return bottom.size(); }
    friend bool operator==(const Ladder&, const Ladder&) = default;
};

/// Completes (chain, a_0) to the unique ladder on a right deterministic,
/// right cancellative category. Holds a reference to the category.
class LadderBuilder {
public:
    /// Throws HypothesisViolated if cat is not right deterministic and right cancellative.
    explicit LadderBuilder(const FiniteCategory& cat);

    const FiniteCategory& category() const { return *cat_; }

    /// The unique b ∈ End(t(g)) with g∘a = b∘g.
    MorphismId push(MorphismId g, MorphismId a) const
    {
        return push_[g.index][endo_position_[a.index]];
    }

    /// Throws ArgumentError(NonComposableChain) on a broken chain and
    /// ArgumentError(NotAnEndomorphism) if a0 is not an endomorphism of the
    /// chain's first object. An empty chain yields the degree-0 ladder (a0).
    Ladder build(std::span<const MorphismId> chain, MorphismId a0) const;

private:
    const FiniteCategory* cat_;
    std::vector<std::uint32_t> endo_position_;      // position of an endomorphism inside its End(x)
    std::vector<std::vector<MorphismId>> push_;     // push_[g][position of a]
};

Ladder ladder_from_chain(const FiniteCategory& cat, std::span<const MorphismId> chain, MorphismId a0);

} // namespace hochcat
