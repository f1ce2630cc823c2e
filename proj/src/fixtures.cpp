#include "hochcat/fixtures.hpp"

#include "hochcat/errors.hpp"

#include <fmt/core.h>

#include <algorithm>
#include <array>
#include <charconv>
#include <optional>

namespace hochcat {

namespace {

[[noreturn]] void not_a_group(const std::string& why)
{
    throw FixtureError("NotAGroup", "table is not a group table: " + why);
}

std::optional<std::size_t> parse_suffix(std::string_view name, std::string_view prefix)
{
    if (name.substr(0, prefix.size()) != prefix)
        return std::nullopt;
    const auto digits = name.substr(prefix.size());
    std::size_t k = 0;
    auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
    if (ec != std::errc() || end != digits.data() + digits.size() || digits.empty())
        return std::nullopt;
    return k;
}

FiniteCategory cyclic(std::size_t k)
{
    std::vector<std::vector<std::size_t>> table(k, std::vector<std::size_t>(k));
    std::vector<std::string> names;
    for (std::size_t i = 0; i < k; ++i) {
        names.push_back(i == 0 ? "e" : i == 1 ? "r" : fmt::format("r^{}", i));
        for (std::size_t j = 0; j < k; ++j)
            table[i][j] = (i + j) % k;
    }
    return group_from_table(table, names);
}

FiniteCategory symmetric3()
{
    using Perm = std::array<int, 3>;
    // e, r, r^2, s, s∘r, s∘r^2 with r = (0 1 2), s = (1 2); images of 0, 1, 2.
    const Perm r{1, 2, 0}, s{0, 2, 1}, e{0, 1, 2};
    auto after = [](const Perm& g, const Perm& f) { return Perm{g[f[0]], g[f[1]], g[f[2]]}; };
    const std::vector<Perm> elems{e, r, after(r, r), s, after(s, r), after(s, after(r, r))};
    std::vector<std::vector<std::size_t>> table(6, std::vector<std::size_t>(6));
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j)
            table[i][j] = static_cast<std::size_t>(
                std::find(elems.begin(), elems.end(), after(elems[i], elems[j])) - elems.begin());
    return group_from_table(table, {"e", "r", "r^2", "s", "sr", "sr^2"});
}

FiniteCategory total_order(std::size_t k)
{
    std::vector<std::vector<bool>> rel(k, std::vector<bool>(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i; j < k; ++j)
            rel[i][j] = true;
    return poset_from_relation(rel);
}

FiniteCategory diamond()
{
    // x1 < x2 < x4 and x1 < x3 < x4
    std::vector<std::vector<bool>> rel(4, std::vector<bool>(4));
    for (std::size_t i = 0; i < 4; ++i)
        rel[i][i] = true;
    rel[0][1] = rel[0][2] = rel[0][3] = rel[1][3] = rel[2][3] = true;
    return poset_from_relation(rel);
}

FiniteCategory example6()
{
    RawCategory raw;
    raw.objects = {"x1", "x2"};
    raw.morphisms = {{"id1", "x1", "x1", true}, {"a", "x1", "x1", false},  {"id2", "x2", "x2", true},
                     {"b", "x2", "x2", false},  {"phi", "x1", "x2", false}, {"psi", "x1", "x2", false}};
    raw.composites = {{"a", "a", "id1"},   {"b", "b", "id2"},   {"phi", "a", "psi"},
                      {"psi", "a", "phi"}, {"b", "phi", "psi"}, {"b", "psi", "phi"}};
    return validate_category(raw);
}

FiniteCategory a2()
{
    RawCategory raw;
    raw.objects = {"x1", "x2"};
    raw.morphisms = {{"id1", "x1", "x1", true}, {"id2", "x2", "x2", true}, {"g", "x1", "x2", false}};
    return validate_category(raw);
}

} // namespace

FiniteCategory group_from_table(const std::vector<std::vector<std::size_t>>& table, std::vector<std::string> names)
{
    const std::size_t n = table.size();
    if (n == 0)
        not_a_group("empty table");
    for (const auto& row : table) {
        if (row.size() != n)
            not_a_group("table is not square");
        for (auto v : row)
            if (v >= n)
                not_a_group("entry out of range");
    }
    std::optional<std::size_t> unit;
    for (std::size_t i = 0; i < n && !unit; ++i) {
        bool ok = true;
        for (std::size_t j = 0; j < n && ok; ++j)
            ok = table[i][j] == j && table[j][i] == j;
        if (ok)
            unit = i;
    }
    if (!unit)
        not_a_group("no identity element");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (table[table[i][j]][k] != table[i][table[j][k]])
                    not_a_group(fmt::format("associativity fails at ({}, {}, {})", i, j, k));
    for (std::size_t i = 0; i < n; ++i)
        if (std::none_of(table[i].begin(), table[i].end(), [&](std::size_t v) { return v == *unit; }))
            not_a_group(fmt::format("element {} has no inverse", i));

    if (names.empty())
        for (std::size_t i = 0; i < n; ++i)
            names.push_back(fmt::format("g{}", i));
    if (names.size() != n)
        throw FixtureError("NotAGroup", "wrong number of element names");

    RawCategory raw;
    raw.objects = {"*"};
    for (std::size_t i = 0; i < n; ++i)
        raw.morphisms.push_back({names[i], "*", "*", i == *unit});
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != *unit && j != *unit)
                raw.composites.push_back({names[i], names[j], names[table[i][j]]});
    return validate_category(raw);
}

FiniteCategory poset_from_relation(const std::vector<std::vector<bool>>& relation, std::vector<std::string> names)
{
    const std::size_t n = relation.size();
    auto fail = [](const std::string& why) {
        throw FixtureError("NotAPartialOrder", "relation is not a partial order: " + why);
    };
    for (const auto& row : relation)
        if (row.size() != n)
            fail("matrix is not square");
    for (std::size_t x = 0; x < n; ++x) {
        if (!relation[x][x])
            fail(fmt::format("not reflexive at {}", x));
        for (std::size_t y = 0; y < n; ++y) {
            if (x != y && relation[x][y] && relation[y][x])
                fail(fmt::format("not antisymmetric at ({}, {})", x, y));
            for (std::size_t z = 0; z < n; ++z)
                if (relation[x][y] && relation[y][z] && !relation[x][z])
                    fail(fmt::format("not transitive at ({}, {}, {})", x, y, z));
        }
    }
    if (names.empty())
        for (std::size_t i = 0; i < n; ++i)
            names.push_back(fmt::format("x{}", i + 1));
    if (names.size() != n)
        fail("wrong number of object names");

    RawCategory raw;
    raw.objects = names;
    std::vector<std::vector<std::string>> arrow(n, std::vector<std::string>(n));
    for (std::size_t x = 0; x < n; ++x) {
        arrow[x][x] = names[x].size() > 1 && names[x][0] == 'x' ? "id" + names[x].substr(1) : "id_" + names[x];
        raw.morphisms.push_back({arrow[x][x], names[x], names[x], true});
    }
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            if (x != y && relation[x][y]) {
                arrow[x][y] = names[x] + "<" + names[y];
                raw.morphisms.push_back({arrow[x][y], names[x], names[y], false});
            }
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z)
                if (x != y && y != z && relation[x][y] && relation[y][z])
                    raw.composites.push_back({arrow[y][z], arrow[x][y], arrow[x][z]});
    return validate_category(raw);
}

FiniteCategory builtin(std::string_view name)
{
    if (name == "triv") {
        RawCategory raw;
        raw.objects = {"x"};
        raw.morphisms = {{"id", "x", "x", true}};
        return validate_category(raw);
    }
    if (name == "a2")
        return a2();
    if (name == "c2") {
        return group_from_table({{0, 1}, {1, 0}}, {"e", "t"});
    }
    if (name == "ex6")
        return example6();
    if (name == "diamond")
        return diamond();
    if (name == "s3")
        return symmetric3();
    if (auto k = parse_suffix(name, "cn:"); k && *k >= 1 && *k <= 64)
        return cyclic(*k);
    if (auto k = parse_suffix(name, "chain:"); k && *k >= 1 && *k <= 64)
        return total_order(*k);
    throw FixtureError("UnknownFixture", fmt::format("unknown builtin category '{}'", name), {{"name", std::string(name)}});
}

bool is_builtin(std::string_view name)
{
    if (name == "triv" || name == "a2" || name == "c2" || name == "ex6" || name == "diamond" || name == "s3")
        return true;
    for (std::string_view prefix : {"cn:", "chain:"})
        if (auto k = parse_suffix(name, prefix); k && *k >= 1 && *k <= 64)
            return true;
    return false;
}

} // namespace hochcat
