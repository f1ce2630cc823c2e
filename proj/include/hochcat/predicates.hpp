#pragma once

#include "hochcat/finite_category.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hochcat {

/// Counterexample to a structural predicate: the morphisms of the violated
/// diagram, in the order named by `clause`.
struct Witness {
    std::string clause;
    std::vector<MorphismId> morphisms;
    std::string rendering;
};

struct PredicateReport {
    bool holds = true;
    std::optional<Witness> witness; // present iff !holds

    explicit operator bool() const { return holds; }
};

// All checkers are exhaustive and report the lexicographically first
// counterexample (in morphism indices, in the order of Witness::morphisms).

/// g∘h = g∘f implies h = f. Witness (g, h, f).
PredicateReport is_left_cancellative(const FiniteCategory& cat);
/// h∘g = f∘g implies h = f. Witness (g, h, f).
PredicateReport is_right_cancellative(const FiniteCategory& cat);
/// Every g: x1→x2 and b ∈ End(x2) admit a ∈ End(x1) with g∘a = b∘g. Witness (g, b).
PredicateReport is_left_deterministic(const FiniteCategory& cat);
/// Every g: x1→x2 and a ∈ End(x1) admit b ∈ End(x2) with g∘a = b∘g. Witness (g, a).
PredicateReport is_right_deterministic(const FiniteCategory& cat);
/// End(x1) acts transitively on every Hom(x1, x2) by precomposition;
/// vacuous on empty Hom sets. Witness (g, f): no a with g∘a = f.
PredicateReport is_rr_transitive(const FiniteCategory& cat);
/// For all parallel g, f there is exactly one a ∈ End(s(g)) with g∘a = f,
/// i.e. Hom(x1, x2) = g∘End(x1) with unique factors. Witness (g, f).
PredicateReport has_unique_hom_factorization(const FiniteCategory& cat);

/// For all a ∈ End(x1) and parallel g, f: x1→x2 there is exactly one
/// b ∈ End(x2) with g∘a = b∘f. Witness (a, g, f).
PredicateReport has_unique_right_square_completion(const FiniteCategory& cat);
/// For all b ∈ End(x2) and parallel g, f: x1→x2 there is exactly one
/// a ∈ End(x1) with g∘a = b∘f. Witness (b, g, f).
PredicateReport has_unique_left_square_completion(const FiniteCategory& cat);

/// The six structural predicates, evaluated once.
struct HypothesisFlags {
    PredicateReport left_cancellative;
    PredicateReport right_cancellative;
    PredicateReport left_deterministic;
    PredicateReport right_deterministic;
    PredicateReport rr_transitive;
    PredicateReport unique_factorization;

    bool cancellative() const { return left_cancellative.holds && right_cancellative.holds; }
    bool deterministic() const { return left_deterministic.holds && right_deterministic.holds; }
    bool all() const { return cancellative() && deterministic() && rr_transitive.holds && unique_factorization.holds; }

    std::array<std::pair<std::string_view, const PredicateReport*>, 6> labelled() const
    {
        return {{{"left_cancellative", &left_cancellative},
                 {"right_cancellative", &right_cancellative},
                 {"left_deterministic", &left_deterministic},
                 {"right_deterministic", &right_deterministic},
                 {"rr_transitive", &rr_transitive},
                 {"unique_factorization", &unique_factorization}}};
    }
};

HypothesisFlags check_hypotheses(const FiniteCategory& cat);

} // namespace hochcat
