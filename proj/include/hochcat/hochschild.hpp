#pragma once

#include "hochcat/finite_category.hpp"
#include "hochcat/linalg.hpp"

#include <map>

namespace hochcat {

inline constexpr std::size_t kDefaultBasisCap = 2'000'000;

/// Upper bound on the size of any cochain basis the library will build.
struct ComplexLimits {
    std::size_t cap = kDefaultBasisCap;

    /// Default cap, overridden by the HOCHCAT_CAP environment variable.
    static ComplexLimits from_environment();
};

/* Full Hochschild cochains.
 *
 * C^m(kC) has basis e_{(a_1..a_m), h}: the cochain sending a_1⊗..⊗a_m to h
 * and every other basis tuple to 0. Tuples range over all of Mor(C)^m. The
 * index is mixed radix with a_1 most significant and h last, so the index
 * order is lexicographic in (a_1, ..., a_m, h).
 */

/// |Mor|^(m+1). Throws DimensionCapExceeded above the cap.
std::size_t full_cochain_dim(const FiniteCategory& cat, std::size_t m, const ComplexLimits& limits = {});

std::uint64_t encode_cochain_index(std::size_t n_morphisms, std::span<const MorphismId> tuple, MorphismId h);

struct CochainKey {
    std::vector<MorphismId> tuple; // (a_1, ..., a_m)
    MorphismId output;
    friend bool operator==(const CochainKey&, const CochainKey&) = default;
};

CochainKey decode_cochain_index(std::size_t n_morphisms, std::size_t m, std::uint64_t index);

/// The integer matrix of ∂^m : C^m(kC) → C^{m+1}(kC) (rows index C^{m+1}).
IntegerMatrix hochschild_differential_integer(const FiniteCategory& cat, std::size_t m,
                                              const ComplexLimits& limits = {});

template <ExactField F>
Matrix<F> hochschild_differential_matrix(const FiniteCategory& cat, const F& field, std::size_t m,
                                         const ComplexLimits& limits = {})
{
    return Matrix<F>::from_integer(field, hochschild_differential_integer(cat, m, limits));
}

/* kC^id-relative cochains.
 *
 * For m ≥ 1 the basis is e_{(a_1..a_m), h} with a_1∘..∘a_m composable and
 * h ∈ Hom(s(a_m), t(a_1)). For m = 0 it is the span of the endomorphisms,
 * the kC^id-centralizer inside kC. Elements are listed by their full index,
 * which is increasing.
 */
struct RelativeBasis {
    std::size_t degree = 0;
    std::size_t n_morphisms = 0;
    std::vector<std::uint64_t> full_index;

    std::size_t size() const { return full_index.size(); }
    CochainKey key(std::size_t i) const { return decode_cochain_index(n_morphisms, degree, full_index[i]); }
    std::optional<std::size_t> position(std::uint64_t index) const;
};

/// Throws DimensionCapExceeded if the basis is larger than the cap.
RelativeBasis relative_basis(const FiniteCategory& cat, std::size_t m, const ComplexLimits& limits = {});

/// ∂^m restricted to relative cochains, built column by column without
/// forming the full matrix. Throws LinalgError(NotASubcomplex) if some
/// relative cochain has a non-relative coboundary.
IntegerMatrix relative_differential_integer(const FiniteCategory& cat, std::size_t m,
                                            const ComplexLimits& limits = {});

template <ExactField F>
Matrix<F> relative_differential_matrix(const FiniteCategory& cat, const F& field, std::size_t m,
                                       const ComplexLimits& limits = {})
{
    return Matrix<F>::from_integer(field, relative_differential_integer(cat, m, limits));
}

/// Cohomology dimensions of a cochain complex given by d[m] : C^m → C^{m+1}.
/// Uses dim H^m = dim C^m - rank d^m - rank d^{m-1} after checking that
/// consecutive differentials compose to zero (LinalgError(NotASubspace)
/// otherwise, since im d^{m-1} would not lie in ker d^m).
template <ExactField F>
std::vector<std::size_t> cohomology_dims(const std::vector<Matrix<F>>& d, Engine engine = Engine::Automatic)
{
    std::vector<std::size_t> ranks;
    for (const auto& m : d)
        ranks.push_back(rank(m, engine));
    std::vector<std::size_t> out;
    for (std::size_t m = 0; m < d.size(); ++m) {
        if (m > 0 && !product(d[m], d[m - 1]).is_zero())
            throw LinalgError("NotASubspace", "d^m d^(m-1) != 0 in degree " + std::to_string(m),
                              {{"m", std::to_string(m)}});
        out.push_back(d[m].cols() - ranks[m] - (m > 0 ? ranks[m - 1] : 0));
    }
    return out;
}

/// HH^0..HH^max_m of kC from the full complex.
template <ExactField F>
std::vector<std::size_t> hochschild_cohomology_dims(const FiniteCategory& cat, const F& field, std::size_t max_m,
                                                    const ComplexLimits& limits = {})
{
    std::vector<Matrix<F>> d;
    for (std::size_t m = 0; m <= max_m; ++m)
        d.push_back(hochschild_differential_matrix(cat, field, m, limits));
    return cohomology_dims(d);
}

/// Cohomology of the relative subcomplex, degrees 0..max_m.
template <ExactField F>
std::vector<std::size_t> relative_cohomology_dims(const FiniteCategory& cat, const F& field, std::size_t max_m,
                                                  const ComplexLimits& limits = {})
{
    std::vector<Matrix<F>> d;
    for (std::size_t m = 0; m <= max_m; ++m)
        d.push_back(relative_differential_matrix(cat, field, m, limits));
    return cohomology_dims(d);
}

/// An element of kC.
template <ExactField F>
struct AlgebraElement {
    std::map<MorphismId, typename F::Element> coefficients; // no zeros

    static AlgebraElement basis(const F& field, MorphismId f) { return {{{f, field.one()}}}; }

    void add(const F& field, MorphismId f, const typename F::Element& c)
    {
        auto [it, inserted] = coefficients.try_emplace(f, c);
        if (!inserted)
            it->second = field.add(it->second, c);
        if (field.is_zero(it->second))
            coefficients.erase(it);
    }
    friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;
};

/// u·v in kC: the bilinear extension of g·f = g∘f (zero when not composable).
template <ExactField F>
AlgebraElement<F> multiply(const FiniteCategory& cat, const F& field, const AlgebraElement<F>& u,
                           const AlgebraElement<F>& v)
{
    AlgebraElement<F> out;
    for (const auto& [g, x] : u.coefficients)
        for (const auto& [f, y] : v.coefficients)
            if (auto h = cat.compose(g, f))
                out.add(field, *h, field.mul(x, y));
    return out;
}

/// A degree-m Hochschild cochain, stored by coefficients f^h_{a_1..a_m} in
/// full-index coordinates.
template <ExactField F>
struct HochschildCochain {
    std::size_t degree = 0;
    SparseVector<F> coefficients;

    /// f(a_1⊗..⊗a_m).
    AlgebraElement<F> evaluate(const FiniteCategory& cat, const F& field, std::span<const MorphismId> tuple) const
    {
        const auto n = cat.n_morphisms();
        const auto base = encode_cochain_index(n, tuple, MorphismId{0});
        AlgebraElement<F> out;
        auto it = std::lower_bound(coefficients.begin(), coefficients.end(), base,
                                   [](const Entry<F>& e, std::uint64_t k) { return e.index < k; });
        for (; it != coefficients.end() && it->index < base + n; ++it)
            out.add(field, MorphismId{static_cast<std::uint32_t>(it->index - base)}, it->value);
        return out;
    }
};

/// The separability idempotent e = Σ_x 1_x ⊗ 1_x of kC^id, checked by
/// expansion in kC^id ⊗ (kC^id)^op.
struct SeparabilityReport {
    bool idempotent = false;     // e·e = e
    bool multiplies_to_one = false; // Σ u_i v_i = 1
    bool balanced = false;       // (r⊗1)e = (1⊗r)e for r = id_x

    bool holds() const { return idempotent && multiplies_to_one && balanced; }
};

SeparabilityReport separability_report(const FiniteCategory& cat);
inline bool separability_check(const FiniteCategory& cat) { return separability_report(cat).holds(); }

} // namespace hochcat
