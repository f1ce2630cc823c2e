#pragma once

#include "hochcat/fixtures.hpp"
#include "hochcat/matrix.hpp"
#include "oracle.hpp"

#include <fmt/core.h>

#include <random>
#include <string>
#include <vector>

namespace support {

using namespace hochcat;

inline oracle::Dense to_dense(const IntegerMatrix& m)
{
    auto d = oracle::zeros(m.rows, m.cols);
    for (const auto& e : m.entries)
        d[e.row][e.col] += e.value;
    return d;
}

/// The one-object monoid {id, z} with z∘z = z.
inline FiniteCategory idempotent_monoid()
{
    RawCategory raw;
    raw.objects = {"x"};
    raw.morphisms = {{"id", "x", "x", true}, {"z", "x", "x", false}};
    raw.composites = {{"z", "z", "z"}};
    return validate_category(raw);
}

/// Two parallel arrows f, g : x → y and nothing else.
inline FiniteCategory kronecker()
{
    RawCategory raw;
    raw.objects = {"x", "y"};
    raw.morphisms = {{"idx", "x", "x", true}, {"idy", "y", "y", true}, {"f", "x", "y", false}, {"g", "x", "y", false}};
    return validate_category(raw);
}

/// End(x) = {e, t} with t² = e, trivial End(y), and f, g : x → y swapped
/// by precomposition with t. Cancellative and rr-transitive, not right deterministic.
inline FiniteCategory swap_source()
{
    RawCategory raw;
    raw.objects = {"x", "y"};
    raw.morphisms = {{"e", "x", "x", true}, {"t", "x", "x", false}, {"idy", "y", "y", true},
                     {"f", "x", "y", false}, {"g", "x", "y", false}};
    raw.composites = {{"t", "t", "e"}, {"f", "t", "g"}, {"g", "t", "f"}};
    return validate_category(raw);
}

/// Trivial End(x), End(y) = {e, t}, and f, g : x → y swapped by t.
/// Cancellative and right deterministic, not left deterministic.
inline FiniteCategory swap_target()
{
    RawCategory raw;
    raw.objects = {"x", "y"};
    raw.morphisms = {{"idx", "x", "x", true}, {"e", "y", "y", true}, {"t", "y", "y", false},
                     {"f", "x", "y", false}, {"g", "x", "y", false}};
    raw.composites = {{"t", "t", "e"}, {"t", "f", "g"}, {"t", "g", "f"}};
    return validate_category(raw);
}

/// Z_a × Z_b as a one-object category.
inline FiniteCategory product_group(std::size_t a, std::size_t b)
{
    const auto n = a * b;
    std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            table[i][j] = ((i / b + j / b) % a) * b + (i % b + j % b) % b;
    return group_from_table(table);
}

/// The connected groupoid on k objects with vertex group Z_n: morphisms
/// (x, r, y) for r in Z_n, composing by addition.
inline FiniteCategory cyclic_groupoid(std::size_t k, std::size_t n)
{
    RawCategory raw;
    auto name = [](std::size_t x, std::size_t r, std::size_t y) { return fmt::format("{}_{}_{}", x, r, y); };
    for (std::size_t x = 0; x < k; ++x)
        raw.objects.push_back(fmt::format("o{}", x));
    for (std::size_t x = 0; x < k; ++x)
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t y = 0; y < k; ++y)
                raw.morphisms.push_back({name(x, r, y), raw.objects[x], raw.objects[y], x == y && r == 0});
    for (std::size_t x = 0; x < k; ++x)
        for (std::size_t y = 0; y < k; ++y)
            for (std::size_t z = 0; z < k; ++z)
                for (std::size_t r = 0; r < n; ++r)
                    for (std::size_t s = 0; s < n; ++s)
                        raw.composites.push_back({name(y, s, z), name(x, r, y), name(x, (r + s) % n, z)});
    return validate_category(raw);
}

/// A random partial order on k points: a random DAG over a shuffled order,
/// closed transitively.
inline FiniteCategory random_poset(std::mt19937& rng, std::size_t k, double density)
{
    std::vector<std::size_t> perm(k);
    for (std::size_t i = 0; i < k; ++i)
        perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::bernoulli_distribution edge(density);
    std::vector<std::vector<bool>> rel(k, std::vector<bool>(k, false));
    for (std::size_t i = 0; i < k; ++i) {
        rel[perm[i]][perm[i]] = true;
        for (std::size_t j = i + 1; j < k; ++j)
            if (edge(rng))
                rel[perm[i]][perm[j]] = true;
    }
    for (std::size_t m = 0; m < k; ++m)
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                if (rel[i][m] && rel[m][j])
                    rel[i][j] = true;
    return poset_from_relation(rel);
}

/// Fixtures on which every structural hypothesis holds.
inline std::vector<std::pair<std::string, FiniteCategory>> good_fixtures()
{
    std::vector<std::pair<std::string, FiniteCategory>> out;
    for (const char* name : {"triv", "a2", "c2", "ex6", "diamond", "s3", "cn:3", "chain:3"})
        out.emplace_back(name, builtin(name));
    out.emplace_back("groupoid(2,2)", cyclic_groupoid(2, 2));
    return out;
}

inline std::vector<long long> test_primes() { return {2, 3, 5}; }

} // namespace support
