#include "hochcat/predicates.hpp"

#include <fmt/core.h>

namespace hochcat {

namespace {

PredicateReport failure(std::string clause, std::vector<MorphismId> morphisms, std::string rendering)
{
    return {false, Witness{std::move(clause), std::move(morphisms), std::move(rendering)}};
}

} // namespace

PredicateReport is_left_cancellative(const FiniteCategory& cat)
{
    for (auto g : cat.morphisms())
        for (auto h : cat.morphisms()) {
            auto gh = cat.compose(g, h);
            if (!gh)
                continue;
            for (auto f : cat.morphisms()) {
                if (f == h)
                    continue;
                auto gf = cat.compose(g, f);
                if (gf && *gf == *gh) {
                    const auto& G = cat.morphism_name(g);
                    return failure("left-cancellative: g∘h = g∘f with h ≠ f", {g, h, f},
                                   fmt::format("{0}∘{1} = {0}∘{2} = {3} but {1} ≠ {2}", G, cat.morphism_name(h),
                                               cat.morphism_name(f), cat.morphism_name(*gh)));
                }
            }
        }
    return {};
}

PredicateReport is_right_cancellative(const FiniteCategory& cat)
{
    for (auto g : cat.morphisms())
        for (auto h : cat.morphisms()) {
            auto hg = cat.compose(h, g);
            if (!hg)
                continue;
            for (auto f : cat.morphisms()) {
                if (f == h)
                    continue;
                auto fg = cat.compose(f, g);
                if (fg && *fg == *hg) {
                    const auto& G = cat.morphism_name(g);
                    return failure("right-cancellative: h∘g = f∘g with h ≠ f", {g, h, f},
                                   fmt::format("{1}∘{0} = {2}∘{0} = {3} but {1} ≠ {2}", G, cat.morphism_name(h),
                                               cat.morphism_name(f), cat.morphism_name(*hg)));
                }
            }
        }
    return {};
}

PredicateReport is_left_deterministic(const FiniteCategory& cat)
{
    for (auto g : cat.morphisms())
        for (auto b : cat.endomorphisms(cat.target(g))) {
            const auto bg = cat.compose(b, g);
            bool found = false;
            for (auto a : cat.endomorphisms(cat.source(g)))
                if (cat.compose(g, a) == bg) {
                    found = true;
                    break;
                }
            if (!found)
                return failure("left-deterministic: no a ∈ End(s(g)) with g∘a = b∘g", {g, b},
                               fmt::format("no a with {0}∘a = {1}∘{0}", cat.morphism_name(g), cat.morphism_name(b)));
        }
    return {};
}

PredicateReport is_right_deterministic(const FiniteCategory& cat)
{
    for (auto g : cat.morphisms())
        for (auto a : cat.endomorphisms(cat.source(g))) {
            const auto ga = cat.compose(g, a);
            bool found = false;
            for (auto b : cat.endomorphisms(cat.target(g)))
                if (cat.compose(b, g) == ga) {
                    found = true;
                    break;
                }
            if (!found)
                return failure("right-deterministic: no b ∈ End(t(g)) with g∘a = b∘g", {g, a},
                               fmt::format("no b with {0}∘{1} = b∘{0}", cat.morphism_name(g), cat.morphism_name(a)));
        }
    return {};
}

namespace {

// Number of a ∈ End(s(g)) with g∘a = f, for parallel g, f.
std::size_t count_factors(const FiniteCategory& cat, MorphismId g, MorphismId f)
{
    std::size_t count = 0;
    for (auto a : cat.endomorphisms(cat.source(g)))
        if (cat.compose(g, a) == f)
            ++count;
    return count;
}

} // namespace

PredicateReport is_rr_transitive(const FiniteCategory& cat)
{
    for (auto g : cat.morphisms())
        for (auto f : cat.hom(cat.source(g), cat.target(g)))
            if (count_factors(cat, g, f) == 0)
                return failure("rr-transitive: no a ∈ End(s(g)) with g∘a = f", {g, f},
                               fmt::format("no a with {}∘a = {}", cat.morphism_name(g), cat.morphism_name(f)));
    return {};
}

PredicateReport has_unique_hom_factorization(const FiniteCategory& cat)
{
    for (auto g : cat.morphisms())
        for (auto f : cat.hom(cat.source(g), cat.target(g))) {
            const auto count = count_factors(cat, g, f);
            if (count != 1)
                return failure("unique-factorization: g∘a = f must have exactly one solution a ∈ End(s(g))", {g, f},
                               fmt::format("{}∘a = {} has {} solutions", cat.morphism_name(g), cat.morphism_name(f),
                                           count));
        }
    return {};
}

PredicateReport has_unique_right_square_completion(const FiniteCategory& cat)
{
    for (auto a : cat.all_endomorphisms()) {
        const auto x1 = cat.source(a);
        for (auto g : cat.morphisms()) {
            if (cat.source(g) != x1)
                continue;
            const auto ga = cat.compose(g, a);
            for (auto f : cat.hom(x1, cat.target(g))) {
                std::size_t count = 0;
                for (auto b : cat.endomorphisms(cat.target(g)))
                    if (cat.compose(b, f) == ga)
                        ++count;
                if (count != 1)
                    return failure("right square completion: g∘a = b∘f must have exactly one solution b", {a, g, f},
                                   fmt::format("{}∘{} = b∘{} has {} solutions", cat.morphism_name(g),
                                               cat.morphism_name(a), cat.morphism_name(f), count));
            }
        }
    }
    return {};
}

PredicateReport has_unique_left_square_completion(const FiniteCategory& cat)
{
    for (auto b : cat.all_endomorphisms()) {
        const auto x2 = cat.source(b);
        for (auto g : cat.morphisms()) {
            if (cat.target(g) != x2)
                continue;
            for (auto f : cat.hom(cat.source(g), x2)) {
                const auto bf = cat.compose(b, f);
                std::size_t count = 0;
                for (auto a : cat.endomorphisms(cat.source(g)))
                    if (cat.compose(g, a) == bf)
                        ++count;
                if (count != 1)
                    return failure("left square completion: g∘a = b∘f must have exactly one solution a", {b, g, f},
                                   fmt::format("{}∘a = {}∘{} has {} solutions", cat.morphism_name(g),
                                               cat.morphism_name(b), cat.morphism_name(f), count));
            }
        }
    }
    return {};
}

HypothesisFlags check_hypotheses(const FiniteCategory& cat)
{
    return {is_left_cancellative(cat), is_right_cancellative(cat), is_left_deterministic(cat),
            is_right_deterministic(cat), is_rr_transitive(cat), has_unique_hom_factorization(cat)};
}

} // namespace hochcat
