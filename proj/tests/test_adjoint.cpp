#include "hochcat/adjoint.hpp"
#include "hochcat/category_text.hpp"
#include "hochcat/errors.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace hochcat;

namespace {

// Commuting squares (a, g, b) counted directly.
std::size_t count_squares(const FiniteCategory& c)
{
    std::size_t n = 0;
    for (auto g : c.morphisms())
        for (auto a : c.endomorphisms(c.source(g)))
            for (auto b : c.endomorphisms(c.target(g)))
                n += c.compose(g, a) == c.compose(b, g);
    return n;
}

} // namespace

TEST_CASE("adjoint category of C2")
{
    const auto fad = adjoint_category(builtin("c2"));
    CHECK(fad.category().n_objects() == 2);
    CHECK(fad.category().n_morphisms() == 4);
    // no morphisms between the two conjugacy classes
    CHECK(fad.category().hom(ObjectId{0}, ObjectId{1}).empty());
}

TEST_CASE("adjoint morphisms are exactly the commuting squares")
{
    for (const auto& [name, c] : support::good_fixtures()) {
        CAPTURE(name);
        const auto fad = adjoint_category(c);
        const auto& d = fad.category();
        CHECK(d.n_objects() == c.all_endomorphisms().size());
        CHECK(d.n_morphisms() == count_squares(c));
        for (auto eta : d.morphisms()) {
            const auto& s = fad.square(eta);
            CHECK(c.compose(s.g, s.a) == c.compose(s.b, s.g));
            CHECK(fad.endomorphism(d.source(eta)) == s.a);
            CHECK(fad.endomorphism(d.target(eta)) == s.b);
            CHECK(fad.find(s) == eta);
        }
        // pasting squares
        for (auto eta : d.morphisms())
            for (auto zeta : d.morphisms())
                if (auto c2 = d.compose(eta, zeta))
                    CHECK(fad.square(*c2).g == c.compose(fad.square(eta).g, fad.square(zeta).g));
    }
}

TEST_CASE("find rejects non-squares")
{
    const auto c = builtin("ex6");
    const auto fad = adjoint_category(c);
    auto m = [&](const char* n) { return *c.find_morphism(n); };
    CHECK(fad.find({m("a"), m("phi"), m("b")}));
    CHECK_FALSE(fad.find({m("a"), m("phi"), m("id2")}));
    CHECK_THROWS_AS(fad.object_of(m("phi")), ArgumentError);
}

TEST_CASE("adjoint of a poset is the poset")
{
    for (const char* name : {"a2", "chain:2", "chain:3", "chain:4", "diamond", "triv"}) {
        CAPTURE(name);
        const auto c = builtin(name);
        CHECK(bottom_functor_is_isomorphism(c, adjoint_category(c)));
    }
    CHECK_FALSE(bottom_functor_is_isomorphism(builtin("c2"), adjoint_category(builtin("c2"))));
}

TEST_CASE("adjoint text output of C2")
{
    const auto text = format_category(adjoint_category(builtin("c2")).category());
    CHECK(text.find("object e") != std::string::npos);
    CHECK(text.find("object t") != std::string::npos);
    CHECK(text.find("(t,t,t)") != std::string::npos);
}

TEST_CASE("conjugation along a morphism")
{
    const auto c = builtin("ex6");
    auto m = [&](const char* n) { return *c.find_morphism(n); };
    const auto phi = conjugation_iso(c, m("phi"));
    CHECK(phi.apply(m("a")) == m("b"));
    CHECK(phi.apply(m("id1")) == m("id2"));
    CHECK(phi.inverse(m("b")) == m("a"));
    CHECK(phi.domain().size() == 2);
    CHECK_THROWS_AS(conjugation_iso(support::idempotent_monoid(), MorphismId{1}), HypothesisViolated);

    const auto s3 = builtin("s3");
    const auto by_s = conjugation_iso(s3, *s3.find_morphism("s"));
    CHECK(by_s.apply(*s3.find_morphism("r")) == *s3.find_morphism("r^2"));
}

TEST_CASE("ladders")
{
    const auto c = builtin("ex6");
    auto m = [&](const char* n) { return *c.find_morphism(n); };
    const std::vector<MorphismId> chain{m("a"), m("phi"), m("b")};
    const auto ladder = ladder_from_chain(c, chain, m("a"));
    CHECK(ladder.degree() == 3);
    CHECK(ladder.verticals == std::vector<MorphismId>{m("a"), m("a"), m("b"), m("b")});
    for (std::size_t i = 0; i < 3; ++i)
        CHECK(c.compose(chain[i], ladder.verticals[i]) == c.compose(ladder.verticals[i + 1], chain[i]));

    const LadderBuilder builder(c);
    CHECK(builder.build({}, m("b")).verticals == std::vector<MorphismId>{m("b")});
    const std::vector<MorphismId> broken{m("phi"), m("a")};
    CHECK_THROWS_AS(builder.build(broken, m("a")), ArgumentError);
    CHECK_THROWS_AS(builder.build(chain, m("b")), ArgumentError);
    CHECK_THROWS_AS(builder.build(chain, m("phi")), ArgumentError);
    CHECK_THROWS_AS(LadderBuilder(support::idempotent_monoid()), HypothesisViolated);
    CHECK_THROWS_AS(LadderBuilder(support::swap_source()), HypothesisViolated);
}
