#pragma once

#include "hochcat/comparison.hpp"

namespace hochcat {

/// Pairs (x1, x2) with Hom(x1, x2) nonempty, plus a zero. The product is
/// (x1, x2)(x3, x4) = (x1, x4) if x2 = x3 and zero otherwise.
class GradingSemigroup {
public:
    explicit GradingSemigroup(const FiniteCategory& cat);

    /// Nonzero elements in lexicographic order; the zero is index size() - 1.
    std::size_t size() const { return elements_.size() + 1; }
    std::size_t zero() const { return elements_.size(); }
    const std::vector<std::pair<ObjectId, ObjectId>>& elements() const { return elements_; }
    std::size_t product(std::size_t i, std::size_t j) const { return table_[i * size() + j]; }
    /// The component of a morphism: (s(f), t(f)).
    std::size_t grade(MorphismId f) const { return grade_[f.index]; }

private:
    std::vector<std::pair<ObjectId, ObjectId>> elements_;
    std::vector<std::size_t> table_;
    std::vector<std::size_t> grade_;
};

inline GradingSemigroup grading_semigroup(const FiniteCategory& cat) { return GradingSemigroup(cat); }

/// Rows: one equation per (f, g, w), the coefficient of w in D(fg) - D(f)g - fD(g),
/// over all pairs f, g. Columns: relative degree-1 coordinates.
IntegerMatrix derivation_equations(const FiniteCategory& cat, const ComplexLimits& limits = {});

/// Rows: T(η∘ζ) - T(η) - T(ζ) per composable pair. Columns: morphisms of d.
IntegerMatrix character_equations(const FiniteCategory& d);

/// Graded derivations of kC in relative degree-1 coordinates.
template <ExactField F>
Subspace<F> graded_derivation_space(const FiniteCategory& cat, const F& field, const ComplexLimits& limits = {})
{
    return kernel_basis(Matrix<F>::from_integer(field, derivation_equations(cat, limits)));
}

/// Characters of d, as functions on its morphisms.
template <ExactField F>
Subspace<F> character_space(const FiniteCategory& d, const F& field)
{
    return kernel_basis(Matrix<F>::from_integer(field, character_equations(d)));
}

template <ExactField F>
bool vanishes_on_identities(const FiniteCategory& d, const SparseVector<F>& character)
{
    for (const auto& e : character)
        if (d.is_identity(MorphismId{static_cast<std::uint32_t>(e.index)}))
            return false;
    return true;
}

template <ExactField F>
struct BijectionReport {
    std::size_t dim_derivations = 0;
    std::size_t dim_characters = 0;
    Matrix<F> restricted;             // T on derivations, in character coordinates
    bool lands_in_characters = false; // T(Der) ⊂ Char
    bool x_lands_in_derivations = false;
    bool x_inverts = false;           // X(T(D)) = D on every basis derivation
    bool bijection = false;

    bool verified() const { return lands_in_characters && x_lands_in_derivations && x_inverts && bijection; }
};

/// Throws HypothesisViolated unless rr-transitive, deterministic and cancellative.
template <ExactField F>
BijectionReport<F> bijection_report(const ComparisonContext& ctx, const F& field);

} // namespace hochcat
