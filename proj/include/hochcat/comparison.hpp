#pragma once

#include "hochcat/adjoint.hpp"
#include "hochcat/hochschild.hpp"
#include "hochcat/nerve.hpp"
#include "hochcat/predicates.hpp"

namespace hochcat {

/// A category together with its adjoint category and its structural flags.
struct ComparisonContext {
    FiniteCategory cat;
    AdjointCategory fad;
    HypothesisFlags flags;
    ComplexLimits limits;

    static ComparisonContext make(FiniteCategory cat, ComplexLimits limits = {});

    bool deterministic_cancellative() const { return flags.deterministic() && flags.cancellative(); }
    bool iso_hypotheses() const { return deterministic_cancellative() && flags.rr_transitive.holds; }
};

/// T^m : C^m(kC) → C^m(NF^ad). The row of an F^ad chain with bottom
/// (g_0, ..., g_{m-1}) and first vertical a_0 has a single 1, in the column
/// of e_{(g_{m-1}, ..., g_0), g_{m-1}∘..∘g_0∘a_0}. Defined for every category.
IntegerMatrix t_map_integer(const ComparisonContext& ctx, std::size_t m);

/// T^m restricted to relative cochains (columns in relative basis order).
IntegerMatrix t_map_relative_integer(const ComparisonContext& ctx, std::size_t m);

/// X^m : C^m(NF^ad) → C^m(kC), assembled from ladders over the chains of C.
/// Throws HypothesisViolated unless C is right deterministic and right cancellative.
IntegerMatrix x_map_integer(const ComparisonContext& ctx, std::size_t m);

template <ExactField F>
Matrix<F> t_map_matrix(const ComparisonContext& ctx, const F& field, std::size_t m)
{
    return Matrix<F>::from_integer(field, t_map_integer(ctx, m));
}

template <ExactField F>
Matrix<F> x_map_matrix(const ComparisonContext& ctx, const F& field, std::size_t m)
{
    return Matrix<F>::from_integer(field, x_map_integer(ctx, m));
}

/// α^m = (-1)^{m+1} δ^m on the nerve of d.
template <ExactField F>
struct SignedDifferential {
    std::size_t degree = 0;
    Matrix<F> matrix;
};

template <ExactField F>
SignedDifferential<F> signed_differential(const FiniteCategory& d, const F& field, std::size_t m,
                                          const ComplexLimits& limits = {})
{
    const auto sign = m % 2 == 1 ? field.one() : field.neg(field.one());
    return {m, simplicial_coboundary_matrix(d, field, m, limits).scaled(sign)};
}

struct IdentityCheck {
    bool holds = false;
    std::optional<std::pair<std::size_t, std::size_t>> first_difference;
};

/// T^{m+1}∂^m = (-1)^{m+1} δ^m T^m. Throws HypothesisViolated(cancellative).
template <ExactField F>
IdentityCheck verify_t_chain_identity(const ComparisonContext& ctx, const F& field, std::size_t m);

/// X^{m+1}δ^m = (-1)^{m+1} ∂^m X^m. Throws HypothesisViolated unless deterministic and cancellative.
template <ExactField F>
IdentityCheck verify_x_chain_identity(const ComparisonContext& ctx, const F& field, std::size_t m);

/// T^m X^m = 1. Throws HypothesisViolated unless right deterministic and cancellative.
template <ExactField F>
IdentityCheck verify_section(const ComparisonContext& ctx, const F& field, std::size_t m);

struct TwoSidedCheck {
    bool image_relative = false; // every column of X^m is a relative cochain
    bool left_inverse = false;   // X^m Ť^m = 1 on relative cochains
    bool right_inverse = false;  // Ť^m X^m = 1 on simplicial cochains

    bool holds() const { return image_relative && left_inverse && right_inverse; }
};

/// Throws HypothesisViolated unless rr-transitive, deterministic and cancellative.
template <ExactField F>
TwoSidedCheck verify_two_sided_on_relative(const ComparisonContext& ctx, const F& field, std::size_t m);

enum class ComplexSource { Full, Relative };
enum class Tier { Surjective, Isomorphism };

template <ExactField F>
struct DegreeComparison {
    std::size_t m = 0;
    std::optional<std::size_t> dim_hh; // full complex, when it was the source
    std::size_t dim_rel = 0;
    std::size_t dim_fad = 0;
    InducedMap<F> induced;
    bool surjective = false;
    bool iso = false;
};

template <ExactField F>
struct ComparisonReport {
    ComplexSource source = ComplexSource::Full;
    Tier tier = Tier::Surjective;
    std::vector<DegreeComparison<F>> degrees;

    /// Every degree satisfies the claim of the tier.
    bool verified() const
    {
        for (const auto& d : degrees)
            if (tier == Tier::Isomorphism ? !d.iso : !d.surjective)
                return false;
        return true;
    }
};

/// Induced maps in cohomology, degrees 0..max_m, through the full or the
/// relative complex. Throws HypothesisViolated unless deterministic and
/// cancellative; DimensionCapExceeded from the source complex.
template <ExactField F>
ComparisonReport<F> comparison_report(const ComparisonContext& ctx, const F& field, std::size_t max_m,
                                   ComplexSource source = ComplexSource::Full);

} // namespace hochcat
