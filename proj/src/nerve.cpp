#include "hochcat/nerve.hpp"

#include "hochcat/errors.hpp"

#include <fmt/core.h>

namespace hochcat {

NerveLevel::NerveLevel(const FiniteCategory& cat, std::size_t m, const ComplexLimits& limits)
    : degree_(m), n_morphisms_(cat.n_morphisms())
{
    if (m == 0) {
        for (auto x : cat.objects())
            chains_.push_back({x, {}});
    } else {
        std::vector<std::vector<MorphismId>> leaving(cat.n_objects());
        for (auto f : cat.morphisms())
            leaving[cat.source(f).index].push_back(f);
        const auto all = cat.morphisms();
        std::vector<MorphismId> steps(m);
        auto extend = [&](auto&& self, std::size_t i) -> void {
            if (i == m) {
                chains_.push_back({cat.source(steps[0]), steps});
                if (chains_.size() > limits.cap)
                    throw DimensionCapExceeded(m, chains_.size(), limits.cap);
                return;
            }
            const auto& next = i == 0 ? all : leaving[cat.target(steps[i - 1]).index];
            for (auto g : next) {
                steps[i] = g;
                self(self, i + 1);
            }
        };
        extend(extend, 0);
    }
    codes_.reserve(chains_.size());
    for (const auto& c : chains_)
        codes_.push_back(code(c));
}

std::uint64_t NerveLevel::code(const NerveChain& chain) const
{
    if (chain.steps.empty())
        return chain.start.index;
    std::uint64_t c = 0;
    for (auto g : chain.steps)
        c = c * n_morphisms_ + g.index;
    return c;
}

std::optional<std::size_t> NerveLevel::index_of(const NerveChain& chain) const
{
    if (chain.degree() != degree_)
        return std::nullopt;
    const auto c = code(chain);
    auto it = std::lower_bound(codes_.begin(), codes_.end(), c);
    if (it == codes_.end() || *it != c)
        return std::nullopt;
    const auto i = static_cast<std::size_t>(it - codes_.begin());
    if (chains_[i] != chain)
        return std::nullopt;
    return i;
}

std::vector<NerveChain> nerve_chains(const FiniteCategory& cat, std::size_t m, const ComplexLimits& limits)
{
    return NerveLevel(cat, m, limits).chains();
}

NerveChain face(const FiniteCategory& cat, const NerveChain& chain, std::size_t i)
{
    const auto m = chain.degree();
    if (m == 0 || i > m)
        throw ArgumentError("IndexOutOfRange", fmt::format("face {} of a {}-chain", i, m),
                            {{"i", std::to_string(i)}, {"m", std::to_string(m)}});
    const auto& g = chain.steps;
    if (m == 1)
        return {i == 0 ? cat.target(g[0]) : cat.source(g[0]), {}};
    if (i == 0)
        return {cat.source(g[1]), {g.begin() + 1, g.end()}};
    if (i == m)
        return {chain.start, {g.begin(), g.end() - 1}};
    NerveChain out{chain.start, {}};
    out.steps.reserve(m - 1);
    for (std::size_t k = 0; k < m; ++k) {
        if (k == i - 1) {
            out.steps.push_back(*cat.compose(g[i], g[i - 1]));
            ++k;
        } else {
            out.steps.push_back(g[k]);
        }
    }
    return out;
}

IntegerMatrix simplicial_coboundary_integer(const FiniteCategory& cat, std::size_t m, const ComplexLimits& limits)
{
    const NerveLevel lower(cat, m, limits);
    const NerveLevel upper(cat, m + 1, limits);
    IntegerMatrix out{upper.size(), lower.size(), {}};
    for (std::size_t s = 0; s < upper.size(); ++s)
        for (std::size_t i = 0; i <= m + 1; ++i)
            out.add(s, *lower.index_of(face(cat, upper[s], i)), i % 2 == 0 ? 1 : -1);
    return out;
}

} // namespace hochcat
