#pragma once

#include "hochcat/finite_category.hpp"
#include "hochcat/hochschild.hpp"
#include "hochcat/linalg.hpp"

namespace hochcat {

/// A composable chain x_0 → x_1 → ... → x_m listed source-to-target:
/// steps[i] : x_i → x_{i+1}. A 0-chain is just its object.
struct NerveChain {
    ObjectId start;
    std::vector<MorphismId> steps;

    std::size_t degree() const { return steps.size(); }
    friend bool operator==(const NerveChain&, const NerveChain&) = default;
};

/// The m-chains of cat in lexicographic order (objects for m = 0,
/// morphism indices of (g_0, ..., g_{m-1}) otherwise), with index lookup.
class NerveLevel {
public:
    /// Throws DimensionCapExceeded if there are more chains than the cap.
    NerveLevel(const FiniteCategory& cat, std::size_t m, const ComplexLimits& limits = {});

    std::size_t degree() const { return degree_; }
    std::size_t size() const { return chains_.size(); }
    const NerveChain& operator[](std::size_t i) const { return chains_[i]; }
    const std::vector<NerveChain>& chains() const { return chains_; }
    std::optional<std::size_t> index_of(const NerveChain& chain) const;

private:
    std::uint64_t code(const NerveChain& chain) const;

    std::size_t degree_;
    std::size_t n_morphisms_;
    std::vector<NerveChain> chains_;
    std::vector<std::uint64_t> codes_; // increasing
};

std::vector<NerveChain> nerve_chains(const FiniteCategory& cat, std::size_t m, const ComplexLimits& limits = {});

/// d_i of a degree-m chain: drops g_0 (i = 0), replaces g_{i-1}, g_i by
/// g_i∘g_{i-1} (0 < i < m), or drops g_{m-1} (i = m). On 1-chains d_0 is
/// the target and d_1 the source. Throws ArgumentError(IndexOutOfRange).
NerveChain face(const FiniteCategory& cat, const NerveChain& chain, std::size_t i);

/// δ^m : C^m(NC) → C^{m+1}(NC), δ^m(f)(σ) = Σ_i (-1)^i f(d_i σ).
IntegerMatrix simplicial_coboundary_integer(const FiniteCategory& cat, std::size_t m,
                                            const ComplexLimits& limits = {});

template <ExactField F>
Matrix<F> simplicial_coboundary_matrix(const FiniteCategory& cat, const F& field, std::size_t m,
                                       const ComplexLimits& limits = {})
{
    return Matrix<F>::from_integer(field, simplicial_coboundary_integer(cat, m, limits));
}

template <ExactField F>
std::vector<std::size_t> simplicial_cohomology_dims(const FiniteCategory& cat, const F& field, std::size_t max_m,
                                                    const ComplexLimits& limits = {})
{
    std::vector<Matrix<F>> d;
    for (std::size_t m = 0; m <= max_m; ++m)
        d.push_back(simplicial_coboundary_matrix(cat, field, m, limits));
    return cohomology_dims(d);
}

/// A scalar function on the m-chains, by chain index.
template <ExactField F>
struct SimplicialCochain {
    std::size_t degree = 0;
    std::vector<typename F::Element> values;
};

/// δf evaluated face by face (no matrix).
template <ExactField F>
SimplicialCochain<F> coboundary(const FiniteCategory& cat, const F& field, const SimplicialCochain<F>& f,
                                const ComplexLimits& limits = {})
{
    const NerveLevel lower(cat, f.degree, limits);
    const NerveLevel upper(cat, f.degree + 1, limits);
    SimplicialCochain<F> out{f.degree + 1, std::vector<typename F::Element>(upper.size(), field.zero())};
    for (std::size_t s = 0; s < upper.size(); ++s)
        for (std::size_t i = 0; i <= f.degree + 1; ++i) {
            const auto& v = f.values[*lower.index_of(face(cat, upper[s], i))];
            out.values[s] = i % 2 == 0 ? field.add(out.values[s], v) : field.sub(out.values[s], v);
        }
    return out;
}

} // namespace hochcat
