#include "hochcat/adjoint.hpp"

#include "hochcat/errors.hpp"
#include "hochcat/predicates.hpp"

#include <fmt/core.h>

#include <algorithm>
#include <tuple>

namespace hochcat {

namespace {

std::string square_name(const FiniteCategory& cat, const AdjointSquare& s)
{
    return fmt::format("({},{},{})", cat.morphism_name(s.a), cat.morphism_name(s.g), cat.morphism_name(s.b));
}

} // namespace

ObjectId AdjointCategory::object_of(MorphismId endo) const
{
    const auto idx = object_of_endo_.at(endo.index);
    if (idx < 0)
        throw ArgumentError("NotAnEndomorphism", "adjoint objects are endomorphisms only");
    return ObjectId{static_cast<std::uint32_t>(idx)};
}

std::optional<MorphismId> AdjointCategory::find(const AdjointSquare& square) const
{
    auto key = [](const AdjointSquare& s) { return std::tuple(s.g, s.a, s.b); };
    auto it = std::lower_bound(squares_.begin(), squares_.end(), key(square),
                               [&](const AdjointSquare& s, const auto& k) { return key(s) < k; });
    if (it == squares_.end() || key(*it) != key(square))
        return std::nullopt;
    return MorphismId{static_cast<std::uint32_t>(it - squares_.begin())};
}

AdjointCategory adjoint_category(const FiniteCategory& cat)
{
    AdjointCategory fad;
    fad.object_of_endo_.assign(cat.n_morphisms(), -1);
    RawCategory raw;
    for (auto e : cat.all_endomorphisms()) {
        fad.object_of_endo_[e.index] = static_cast<std::int32_t>(fad.endos_.size());
        fad.endos_.push_back(e);
        raw.objects.push_back(cat.morphism_name(e));
    }

    for (auto g : cat.morphisms())
        for (auto a : cat.endomorphisms(cat.source(g))) {
            const auto ga = cat.compose(g, a);
            for (auto b : cat.endomorphisms(cat.target(g)))
                if (cat.compose(b, g) == ga) {
                    const AdjointSquare s{a, g, b};
                    fad.squares_.push_back(s);
                    raw.morphisms.push_back({square_name(cat, s), cat.morphism_name(a), cat.morphism_name(b),
                                             cat.is_identity(g) && a == b});
                }
        }

    for (const auto& outer : fad.squares_)
        for (const auto& inner : fad.squares_) {
            if (inner.b != outer.a)
                continue;
            const AdjointSquare pasted{inner.a, *cat.compose(outer.g, inner.g), outer.b};
            raw.composites.push_back(
                {square_name(cat, outer), square_name(cat, inner), square_name(cat, pasted)});
        }

    fad.category_ = validate_category(raw);
    return fad;
}

bool bottom_functor_is_isomorphism(const FiniteCategory& cat, const AdjointCategory& fad)
{
    const auto& d = fad.category();
    if (d.n_objects() != cat.n_objects() || d.n_morphisms() != cat.n_morphisms())
        return false;
    // Objects: the endomorphism a ↦ s(a); morphisms: the square ↦ its bottom.
    std::vector<bool> hit_object(cat.n_objects(), false), hit_morphism(cat.n_morphisms(), false);
    for (auto x : d.objects())
        hit_object[cat.source(fad.endomorphism(x)).index] = true;
    for (auto eta : d.morphisms()) {
        const auto& s = fad.square(eta);
        hit_morphism[s.g.index] = true;
        if (cat.source(fad.endomorphism(d.source(eta))) != cat.source(s.g) ||
            cat.source(fad.endomorphism(d.target(eta))) != cat.target(s.g))
            return false;
    }
    if (std::find(hit_object.begin(), hit_object.end(), false) != hit_object.end() ||
        std::find(hit_morphism.begin(), hit_morphism.end(), false) != hit_morphism.end())
        return false;
    for (auto eta : d.morphisms())
        for (auto zeta : d.morphisms())
            if (auto c = d.compose(eta, zeta))
                if (fad.square(*c).g != *cat.compose(fad.square(eta).g, fad.square(zeta).g))
                    return false;
    return true;
}

MorphismId Conjugation::apply(MorphismId a) const
{
    auto it = std::find(domain_.begin(), domain_.end(), a);
    if (it == domain_.end())
        throw ArgumentError("NotAnEndomorphism", "argument is not in End(s(g))");
    return image_[static_cast<std::size_t>(it - domain_.begin())];
}

MorphismId Conjugation::inverse(MorphismId b) const
{
    auto it = std::find(image_.begin(), image_.end(), b);
    if (it == image_.end())
        throw ArgumentError("NotAnEndomorphism", "argument is not in End(t(g))");
    return domain_[static_cast<std::size_t>(it - image_.begin())];
}

Conjugation conjugation_iso(const FiniteCategory& cat, MorphismId g)
{
    const auto flags = check_hypotheses(cat);
    if (!flags.deterministic())
        throw HypothesisViolated("deterministic", "conjugation_iso");
    if (!flags.cancellative())
        throw HypothesisViolated("cancellative", "conjugation_iso");

    Conjugation phi;
    phi.along_ = g;
    for (auto a : cat.endomorphisms(cat.source(g))) {
        const auto ga = cat.compose(g, a);
        for (auto b : cat.endomorphisms(cat.target(g)))
            if (cat.compose(b, g) == ga) {
                phi.domain_.push_back(a);
                phi.image_.push_back(b);
                break;
            }
    }
    return phi;
}

LadderBuilder::LadderBuilder(const FiniteCategory& cat) : cat_(&cat)
{
    if (!is_right_deterministic(cat))
        throw HypothesisViolated("right-deterministic", "ladder completion");
    if (!is_right_cancellative(cat))
        throw HypothesisViolated("right-cancellative", "ladder completion");

    endo_position_.assign(cat.n_morphisms(), 0);
    for (auto x : cat.objects()) {
        auto ends = cat.endomorphisms(x);
        for (std::size_t i = 0; i < ends.size(); ++i)
            endo_position_[ends[i].index] = static_cast<std::uint32_t>(i);
    }
    push_.resize(cat.n_morphisms());
    for (auto g : cat.morphisms()) {
        auto& row = push_[g.index];
        for (auto a : cat.endomorphisms(cat.source(g))) {
            const auto ga = cat.compose(g, a);
            for (auto b : cat.endomorphisms(cat.target(g)))
                if (cat.compose(b, g) == ga) {
                    row.push_back(b);
                    break;
                }
        }
    }
}

Ladder LadderBuilder::build(std::span<const MorphismId> chain, MorphismId a0) const
{
    const auto& cat = *cat_;
    if (!cat.is_endomorphism(a0))
        throw ArgumentError("NotAnEndomorphism", "a0 must be an endomorphism");
    if (!chain.empty() && cat.source(chain.front()) != cat.source(a0))
        throw ArgumentError("NotAnEndomorphism", "a0 must be an endomorphism of the chain's first object");
    Ladder ladder;
    ladder.bottom.assign(chain.begin(), chain.end());
    ladder.verticals.reserve(chain.size() + 1);
    ladder.verticals.push_back(a0);
    for (std::size_t i = 0; i < chain.size(); ++i) {
        if (i > 0 && !cat.composable(chain[i], chain[i - 1]))
            throw ArgumentError("NonComposableChain",
                                fmt::format("chain breaks between positions {} and {}", i - 1, i),
                                {{"position", std::to_string(i)}});
        ladder.verticals.push_back(push(chain[i], ladder.verticals.back()));
    }
    return ladder;
}

Ladder ladder_from_chain(const FiniteCategory& cat, std::span<const MorphismId> chain, MorphismId a0)
{
    return LadderBuilder(cat).build(chain, a0);
}

} // namespace hochcat
