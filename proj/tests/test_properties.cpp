#include "hochcat/comparison.hpp"
#include "hochcat/derivations.hpp"
#include "support.hpp"

#include <doctest.h>

#include <random>

using namespace hochcat;

namespace {

void check_category(const FiniteCategory& c, std::size_t max_m)
{
    const auto ctx = ComparisonContext::make(c);
    REQUIRE(ctx.iso_hypotheses());
    for (long long p : {0LL, 2LL, 3LL}) {
        CAPTURE(p);
        const auto spec = p == 0 ? FieldSpec::rationals() : FieldSpec::prime(static_cast<std::uint64_t>(p));
        with_field(spec, [&](const auto& f) {
            const auto r = comparison_report(ctx, f, max_m, ComplexSource::Relative);
            CHECK(r.tier == Tier::Isomorphism);
            CHECK(r.verified());
            const auto nerve = oracle::nerve_dims(ctx.fad.category(), std::min<std::size_t>(max_m, 1), p);
            for (std::size_t m = 0; m < nerve.size(); ++m)
                CHECK(r.degrees[m].dim_fad == nerve[m]);
            const auto b = bijection_report(ctx, f);
            CHECK(b.verified());
            CHECK(b.dim_derivations == oracle::derivation_dim(c, p));
            return 0;
        });
    }
}

} // namespace

TEST_CASE("random posets")
{
    std::mt19937 rng(20261016);
    for (int trial = 0; trial < 12; ++trial) {
        const auto c = support::random_poset(rng, 2 + static_cast<std::size_t>(trial % 4), 0.5);
        CAPTURE(trial);
        const auto ctx = ComparisonContext::make(c);
        CHECK(ctx.flags.all());
        CHECK(bottom_functor_is_isomorphism(c, ctx.fad));
        // For a poset the relative complex is the nerve itself.
        const auto hh = oracle::hochschild_dims(c, 2, 2);
        CHECK(hh == oracle::nerve_dims(c, 2, 2));
        check_category(c, 2);
    }
}

TEST_CASE("abelian groups")
{
    for (auto [a, b] : std::vector<std::pair<std::size_t, std::size_t>>{{1, 2}, {2, 2}, {1, 3}, {2, 3}, {1, 4}}) {
        CAPTURE(a);
        CAPTURE(b);
        const auto c = support::product_group(a, b);
        check_category(c, 2);
        // H^0 of F^ad counts conjugacy classes, which is |G| for abelian G.
        const auto ctx = ComparisonContext::make(c);
        CHECK(simplicial_cohomology_dims(ctx.fad.category(), RationalField{}, 0)[0] == a * b);
    }
}

TEST_CASE("connected groupoids")
{
    for (auto [k, n] : std::vector<std::pair<std::size_t, std::size_t>>{{2, 1}, {2, 2}, {3, 1}, {2, 3}}) {
        CAPTURE(k);
        CAPTURE(n);
        const auto c = support::cyclic_groupoid(k, n);
        check_category(c, 2);
        // Morita invariance: same as the vertex group.
        const auto g = ComparisonContext::make(support::product_group(1, n));
        const auto ctx = ComparisonContext::make(c);
        const auto here = relative_cohomology_dims(c, PrimeField(2), 2);
        const auto there = relative_cohomology_dims(g.cat, PrimeField(2), 2);
        CHECK(here == there);
    }
}
