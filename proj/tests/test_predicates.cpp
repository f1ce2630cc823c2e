#include "hochcat/predicates.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace hochcat;

namespace {

std::vector<std::string> names(const FiniteCategory& c, const PredicateReport& r)
{
    std::vector<std::string> out;
    if (r.witness)
        for (auto f : r.witness->morphisms)
            out.push_back(c.morphism_name(f));
    return out;
}

} // namespace

TEST_CASE("groups, posets and ex6 satisfy every hypothesis")
{
    for (const char* name : {"c2", "cn:3", "cn:4", "cn:5", "cn:6", "s3", "chain:2", "chain:3", "chain:4", "diamond",
                             "ex6", "triv", "a2"}) {
        CAPTURE(name);
        const auto flags = check_hypotheses(builtin(name));
        for (const auto& [label, report] : flags.labelled()) {
            CAPTURE(label);
            CHECK(report->holds);
            CHECK_FALSE(report->witness);
        }
        CHECK(flags.all());
    }
    CHECK(check_hypotheses(support::cyclic_groupoid(3, 2)).all());
    CHECK(check_hypotheses(support::product_group(2, 3)).all());
}

TEST_CASE("idempotent monoid witnesses")
{
    const auto c = support::idempotent_monoid();
    const auto lc = is_left_cancellative(c);
    CHECK_FALSE(lc.holds);
    CHECK(names(c, lc) == std::vector<std::string>{"z", "id", "z"});
    CHECK_FALSE(is_right_cancellative(c).holds);
    CHECK(is_left_deterministic(c).holds);
    CHECK(is_right_deterministic(c).holds);
    const auto rr = is_rr_transitive(c);
    CHECK_FALSE(rr.holds);
    CHECK(names(c, rr) == std::vector<std::string>{"z", "id"});
    CHECK_FALSE(has_unique_hom_factorization(c).holds);
    CHECK(lc.witness->rendering.find("z") != std::string::npos);
}

TEST_CASE("kronecker category is deterministic and cancellative but not rr-transitive")
{
    const auto flags = check_hypotheses(support::kronecker());
    CHECK(flags.cancellative());
    CHECK(flags.deterministic());
    CHECK_FALSE(flags.rr_transitive.holds);
    CHECK_FALSE(flags.unique_factorization.holds);
}

TEST_CASE("swap categories separate the two determinism conditions")
{
    const auto src = support::swap_source();
    const auto a = check_hypotheses(src);
    CHECK(a.cancellative());
    CHECK(a.left_deterministic.holds);
    CHECK_FALSE(a.right_deterministic.holds);
    CHECK(names(src, a.right_deterministic) == std::vector<std::string>{"f", "t"});
    CHECK(a.rr_transitive.holds);

    const auto tgt = support::swap_target();
    const auto b = check_hypotheses(tgt);
    CHECK(b.cancellative());
    CHECK(b.right_deterministic.holds);
    CHECK_FALSE(b.left_deterministic.holds);
    CHECK(names(tgt, b.left_deterministic) == std::vector<std::string>{"f", "t"});
    CHECK_FALSE(b.rr_transitive.holds);
}

TEST_CASE("square completion is unique exactly when expected")
{
    for (const char* name : {"ex6", "s3", "diamond"}) {
        const auto c = builtin(name);
        CHECK(has_unique_right_square_completion(c).holds);
        CHECK(has_unique_left_square_completion(c).holds);
    }
    CHECK_FALSE(has_unique_right_square_completion(support::idempotent_monoid()).holds);
}

TEST_CASE("empty hom sets are vacuous for rr-transitivity")
{
    // a2 has Hom(x2, x1) empty
    CHECK(is_rr_transitive(builtin("a2")).holds);
}
