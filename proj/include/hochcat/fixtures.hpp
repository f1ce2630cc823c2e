#pragma once

#include "hochcat/finite_category.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace hochcat {

/// One-object category of a finite group. table[i][j] is the index of
/// element i composed after element j. Morphisms keep the element order;
/// names default to g0, g1, ... Throws FixtureError(NotAGroup).
FiniteCategory group_from_table(const std::vector<std::vector<std::size_t>>& table,
                                std::vector<std::string> names = {});

/// Poset category: relation[x][y] true means one morphism x → y (x ≤ y).
/// Objects are named x1..xn unless names are given; identities id1..idn
/// come first, then the arrows x<y in lexicographic (x, y) order.
/// Throws FixtureError(NotAPartialOrder).
FiniteCategory poset_from_relation(const std::vector<std::vector<bool>>& relation,
                                   std::vector<std::string> names = {});

/// Built-in categories: triv, a2, c2, ex6, diamond, s3, cn:<k>, chain:<k>.
/// Throws FixtureError(UnknownFixture).
FiniteCategory builtin(std::string_view name);

/// Whether builtin(name) would succeed.
bool is_builtin(std::string_view name);

} // namespace hochcat
