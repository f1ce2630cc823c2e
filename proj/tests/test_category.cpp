#include "hochcat/category_text.hpp"
#include "hochcat/errors.hpp"
#include "hochcat/fixtures.hpp"
#include "support.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>

using namespace hochcat;

namespace {

std::string kind_of(std::string_view text)
{
    try {
        validate_category(parse_category_text(text));
    } catch (const Error& e) {
        return e.kind();
    }
    return "";
}

} // namespace

TEST_CASE("builtin fixtures have the expected shape")
{
    struct Shape {
        const char* name;
        std::size_t objects, morphisms;
    };
    for (const auto& s : {Shape{"triv", 1, 1}, Shape{"a2", 2, 3}, Shape{"c2", 1, 2}, Shape{"ex6", 2, 6},
                          Shape{"diamond", 4, 9}, Shape{"s3", 1, 6}, Shape{"cn:5", 1, 5}, Shape{"chain:4", 4, 10}}) {
        CAPTURE(s.name);
        const auto c = builtin(s.name);
        CHECK(c.n_objects() == s.objects);
        CHECK(c.n_morphisms() == s.morphisms);
        CHECK(is_builtin(s.name));
    }
    CHECK_FALSE(is_builtin("cn:0"));
    CHECK_FALSE(is_builtin("chain:65"));
    CHECK_THROWS_AS(builtin("nope"), FixtureError);
}

TEST_CASE("A2 composition")
{
    const auto c = builtin("a2");
    const auto g = *c.find_morphism("g");
    const auto id1 = *c.find_morphism("id1");
    const auto id2 = *c.find_morphism("id2");
    CHECK(c.compose(g, id1) == g);
    CHECK(c.compose(id2, g) == g);
    CHECK_FALSE(c.compose(g, g));
    CHECK_FALSE(c.compose(id1, g));
    CHECK(c.hom(c.source(g), c.target(g)).size() == 1);
    CHECK(c.hom(c.target(g), c.source(g)).empty());
}

TEST_CASE("cyclic group naming and composition")
{
    const auto c = builtin("cn:4");
    CHECK(c.morphism_name(MorphismId{0}) == "e");
    CHECK(c.morphism_name(MorphismId{1}) == "r");
    CHECK(c.morphism_name(MorphismId{3}) == "r^3");
    CHECK(c.compose(MorphismId{3}, MorphismId{2}) == MorphismId{1});
    const std::vector<MorphismId> chain{MorphismId{1}, MorphismId{1}, MorphismId{1}};
    CHECK(c.compose_chain(chain) == MorphismId{3});
}

TEST_CASE("ex6 composition table")
{
    const auto c = builtin("ex6");
    auto m = [&](const char* n) { return *c.find_morphism(n); };
    CHECK(c.compose(m("a"), m("a")) == m("id1"));
    CHECK(c.compose(m("b"), m("b")) == m("id2"));
    CHECK(c.compose(m("phi"), m("a")) == m("psi"));
    CHECK(c.compose(m("psi"), m("a")) == m("phi"));
    CHECK(c.compose(m("b"), m("phi")) == m("psi"));
    CHECK(c.compose(m("b"), m("psi")) == m("phi"));
    CHECK(c.hom(c.target(m("phi")), c.source(m("phi"))).empty());
}

TEST_CASE("text format round trip")
{
    for (const char* name : {"triv", "a2", "c2", "ex6", "diamond", "s3", "chain:3"}) {
        CAPTURE(name);
        const auto c = builtin(name);
        const auto text = format_category(c);
        CHECK(validate_category(parse_category_text(text)) == c);
        CHECK(format_category(validate_category(parse_category_text(text))) == text);
    }
}

TEST_CASE("parsing with comments and identity compositions omitted")
{
    const auto c = validate_category(parse_category_text(R"(
# a two-element group
object x
morphism e : x -> x identity   # the unit
morphism t : x -> x
compose t t = e
)"));
    CHECK(c.n_morphisms() == 2);
    CHECK(c.compose(MorphismId{1}, MorphismId{1}) == MorphismId{0});
    CHECK(c.compose(MorphismId{0}, MorphismId{1}) == MorphismId{1});
}

TEST_CASE("parse errors carry the line")
{
    try {
        parse_category_text("object x\nmorphism f x -> x\n");
        FAIL("expected a parse error");
    } catch (const CategoryError& e) {
        CHECK(e.kind() == "ParseError");
        REQUIRE_FALSE(e.fields().empty());
        CHECK(e.fields()[0] == Error::Field{"line", "2"});
    }
    CHECK(kind_of("frobnicate x\n") == "ParseError");
}

TEST_CASE("validation errors")
{
    CHECK(kind_of("object x\nmorphism f : x -> x\n") == "MissingIdentity");
    CHECK(kind_of("object x\nmorphism e : x -> x identity\nmorphism d : x -> x identity\n") == "DuplicateIdentity");
    CHECK(kind_of("object x\nobject x\n") == "DuplicateName");
    CHECK(kind_of("object x\nmorphism e : x -> y identity\n") == "UnknownObject");
    CHECK(kind_of("object x\nobject y\nmorphism e : x -> y identity\n") == "IdentityNotEndomorphism");
    CHECK(kind_of("object x\nmorphism e : x -> x identity\ncompose e q = e\n") == "UnknownMorphism");
    CHECK(kind_of("object x\nobject y\nmorphism i : x -> x identity\nmorphism j : y -> y identity\n"
                  "morphism f : x -> y\ncompose f f = f\n") == "IllTypedComposite");
    CHECK(kind_of("object x\nmorphism e : x -> x identity\nmorphism t : x -> x\ncompose t t = e\ncompose t t = t\n") ==
          "ConflictingComposite");
    CHECK(kind_of("object x\nmorphism e : x -> x identity\nmorphism t : x -> x\ncompose e t = e\n") ==
          "IdentityLawFailure");
    CHECK(kind_of("object x\nmorphism e : x -> x identity\nmorphism t : x -> x\n") == "MissingComposite");
    // t∘(t∘u) = t∘e = t but (t∘t)∘u = u∘u = u
    CHECK(kind_of("object x\nmorphism e : x -> x identity\nmorphism t : x -> x\nmorphism u : x -> x\n"
                  "compose t t = u\ncompose t u = e\ncompose u t = t\ncompose u u = u\n") == "AssociativityFailure");
}

TEST_CASE("missing composite names both factors")
{
    try {
        validate_category(parse_category_text("object x\nmorphism e : x -> x identity\nmorphism t : x -> x\n"));
        FAIL("expected MissingComposite");
    } catch (const CategoryError& e) {
        CHECK(e.kind() == "MissingComposite");
        CHECK(e.fields() == std::vector<Error::Field>{{"g", "t"}, {"f", "t"}});
    }
}

TEST_CASE("loading files")
{
    const auto path = std::filesystem::temp_directory_path() / "hochcat_test_c2.cat";
    {
        std::ofstream out(path);
        out << format_category(builtin("c2"));
    }
    CHECK(load_category_file(path.string()) == builtin("c2"));
    std::filesystem::remove(path);
    CHECK_THROWS_AS(load_category_file("/nonexistent/file.cat"), CategoryError);
}

TEST_CASE("group and poset constructors reject bad input")
{
    CHECK_THROWS_AS(group_from_table({{0, 1}, {1, 1}}), FixtureError);
    CHECK_THROWS_AS(group_from_table({}), FixtureError);
    CHECK_THROWS_AS(poset_from_relation({{true, true}, {true, true}}), FixtureError);
    CHECK_THROWS_AS(poset_from_relation({{false}}), FixtureError);
    CHECK_THROWS_AS(poset_from_relation({{true, true, false}, {false, true, true}, {false, false, true}}),
                    FixtureError);
}

TEST_CASE("poset naming")
{
    const auto c = builtin("chain:3");
    CHECK(c.morphism_name(MorphismId{0}) == "id1");
    CHECK(c.find_morphism("x1<x3"));
    const auto named = poset_from_relation({{true, true}, {false, true}}, {"a", "b"});
    CHECK(named.find_morphism("id_a"));
    CHECK(named.find_morphism("a<b"));
}

TEST_CASE("groupoid helper builds a valid category")
{
    const auto g = support::cyclic_groupoid(3, 2);
    CHECK(g.n_objects() == 3);
    CHECK(g.n_morphisms() == 18);
    CHECK(support::product_group(2, 2).n_morphisms() == 4);
}
