#include "hochcat/finite_category.hpp"

#include "hochcat/errors.hpp"

#include <fmt/core.h>

#include <algorithm>
#include <unordered_map>

namespace hochcat {

std::optional<MorphismId> FiniteCategory::compose_chain(std::span<const MorphismId> chain) const
{
    if (chain.empty())
        return std::nullopt;
    MorphismId acc = chain.front();
    for (std::size_t i = 1; i < chain.size(); ++i) {
        auto next = compose(chain[i], acc);
        if (!next)
            return std::nullopt;
        acc = *next;
    }
    return acc;
}

std::optional<ObjectId> FiniteCategory::find_object(std::string_view name) const
{
    for (std::size_t i = 0; i < object_names_.size(); ++i)
        if (object_names_[i] == name)
            return ObjectId{static_cast<std::uint32_t>(i)};
    return std::nullopt;
}

std::optional<MorphismId> FiniteCategory::find_morphism(std::string_view name) const
{
    for (std::size_t i = 0; i < morphisms_.size(); ++i)
        if (morphisms_[i].name == name)
            return MorphismId{static_cast<std::uint32_t>(i)};
    return std::nullopt;
}

std::vector<ObjectId> FiniteCategory::objects() const
{
    std::vector<ObjectId> out(n_objects());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = ObjectId{static_cast<std::uint32_t>(i)};
    return out;
}

std::vector<MorphismId> FiniteCategory::morphisms() const
{
    std::vector<MorphismId> out(n_morphisms());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = MorphismId{static_cast<std::uint32_t>(i)};
    return out;
}

namespace {

[[noreturn]] void fail(const char* kind, const std::string& message, std::vector<Error::Field> fields)
{
    throw CategoryError(kind, message, std::move(fields));
}

} // namespace

FiniteCategory validate_category(const RawCategory& raw)
{
    FiniteCategory cat;

    std::unordered_map<std::string, std::uint32_t> object_index;
    for (const auto& name : raw.objects) {
        if (!object_index.emplace(name, static_cast<std::uint32_t>(object_index.size())).second)
            fail("DuplicateName", fmt::format("object '{}' declared twice", name), {{"name", name}});
        cat.object_names_.push_back(name);
    }
    const std::size_t n_obj = raw.objects.size();

    std::unordered_map<std::string, std::uint32_t> morphism_index;
    std::vector<std::int32_t> identity_of(n_obj, -1);
    for (const auto& m : raw.morphisms) {
        if (!morphism_index.emplace(m.name, static_cast<std::uint32_t>(morphism_index.size())).second)
            fail("DuplicateName", fmt::format("morphism '{}' declared twice", m.name), {{"name", m.name}});
        auto src = object_index.find(m.source);
        auto tgt = object_index.find(m.target);
        if (src == object_index.end() || tgt == object_index.end()) {
            const auto& missing = src == object_index.end() ? m.source : m.target;
            fail("UnknownObject", fmt::format("morphism '{}' refers to unknown object '{}'", m.name, missing),
                 {{"morphism", m.name}, {"object", missing}});
        }
        const std::uint32_t id = static_cast<std::uint32_t>(cat.morphisms_.size());
        cat.morphisms_.push_back({m.name, ObjectId{src->second}, ObjectId{tgt->second}});
        if (m.identity) {
            if (src->second != tgt->second)
                fail("IdentityNotEndomorphism", fmt::format("identity '{}' is not an endomorphism", m.name),
                     {{"morphism", m.name}});
            if (identity_of[src->second] >= 0)
                fail("DuplicateIdentity", fmt::format("object '{}' has two identities", m.source),
                     {{"object", m.source}});
            identity_of[src->second] = static_cast<std::int32_t>(id);
        }
    }
    for (std::size_t x = 0; x < n_obj; ++x) {
        if (identity_of[x] < 0)
            fail("MissingIdentity", fmt::format("object '{}' has no identity morphism", raw.objects[x]),
                 {{"object", raw.objects[x]}});
        cat.identities_.push_back(MorphismId{static_cast<std::uint32_t>(identity_of[x])});
    }

    const std::size_t n = cat.morphisms_.size();
    cat.table_.assign(n * n, -1);
    auto name_of = [&](std::size_t i) -> const std::string& { return cat.morphisms_[i].name; };
    auto lookup = [&](const std::string& name, const RawComposite& c) {
        auto it = morphism_index.find(name);
        if (it == morphism_index.end())
            fail("UnknownMorphism", fmt::format("compose {} {} = {}: unknown morphism '{}'", c.g, c.f, c.h, name),
                 {{"morphism", name}});
        return it->second;
    };

    for (const auto& c : raw.composites) {
        const auto g = lookup(c.g, c), f = lookup(c.f, c), h = lookup(c.h, c);
        const auto& G = cat.morphisms_[g];
        const auto& F = cat.morphisms_[f];
        const auto& H = cat.morphisms_[h];
        if (G.source != F.target || H.source != F.source || H.target != G.target)
            fail("IllTypedComposite", fmt::format("compose {} {} = {} is ill-typed", c.g, c.f, c.h),
                 {{"g", c.g}, {"f", c.f}, {"h", c.h}});
        auto& slot = cat.table_[g * n + f];
        if (slot >= 0 && static_cast<std::uint32_t>(slot) != h)
            fail("ConflictingComposite",
                 fmt::format("compose {} {} given as both {} and {}", c.g, c.f, name_of(slot), c.h),
                 {{"g", c.g}, {"f", c.f}});
        const bool g_id = cat.identities_[G.source.index].index == g;
        const bool f_id = cat.identities_[F.source.index].index == f;
        if ((g_id && h != f) || (f_id && h != g))
            fail("IdentityLawFailure", fmt::format("compose {} {} = {} violates the identity law", c.g, c.f, c.h),
                 {{"g", c.g}, {"f", c.f}, {"h", c.h}});
        slot = static_cast<std::int32_t>(h);
    }

    // Identity compositions may be omitted from the description.
    for (std::size_t f = 0; f < n; ++f) {
        const auto& F = cat.morphisms_[f];
        cat.table_[cat.identities_[F.target.index].index * n + f] = static_cast<std::int32_t>(f);
        cat.table_[f * n + cat.identities_[F.source.index].index] = static_cast<std::int32_t>(f);
    }

    for (std::size_t g = 0; g < n; ++g)
        for (std::size_t f = 0; f < n; ++f)
            if (cat.morphisms_[g].source == cat.morphisms_[f].target && cat.table_[g * n + f] < 0)
                fail("MissingComposite", fmt::format("no composite given for {} ∘ {}", name_of(g), name_of(f)),
                     {{"g", name_of(g)}, {"f", name_of(f)}});

    for (std::size_t h = 0; h < n; ++h)
        for (std::size_t g = 0; g < n; ++g) {
            const auto hg = cat.table_[h * n + g];
            if (hg < 0)
                continue;
            for (std::size_t f = 0; f < n; ++f) {
                const auto gf = cat.table_[g * n + f];
                if (gf < 0)
                    continue;
                if (cat.table_[h * n + gf] != cat.table_[hg * n + f])
                    fail("AssociativityFailure",
                         fmt::format("({} ∘ {}) ∘ {} != {} ∘ ({} ∘ {})", name_of(h), name_of(g), name_of(f),
                                     name_of(h), name_of(g), name_of(f)),
                         {{"h", name_of(h)}, {"g", name_of(g)}, {"f", name_of(f)}});
            }
        }

    cat.homs_.assign(n_obj * n_obj, {});
    for (std::size_t f = 0; f < n; ++f) {
        const auto& F = cat.morphisms_[f];
        const MorphismId id{static_cast<std::uint32_t>(f)};
        cat.homs_[F.source.index * n_obj + F.target.index].push_back(id);
        if (F.source == F.target)
            cat.all_endos_.push_back(id);
    }
    return cat;
}

RawCategory to_raw(const FiniteCategory& cat)
{
    RawCategory raw;
    for (auto x : cat.objects())
        raw.objects.push_back(cat.object_name(x));
    for (auto f : cat.morphisms())
        raw.morphisms.push_back({cat.morphism_name(f), cat.object_name(cat.source(f)),
                                 cat.object_name(cat.target(f)), cat.is_identity(f)});
    for (auto g : cat.morphisms()) {
        if (cat.is_identity(g))
            continue;
        for (auto f : cat.morphisms()) {
            if (cat.is_identity(f))
                continue;
            if (auto h = cat.compose(g, f))
                raw.composites.push_back({cat.morphism_name(g), cat.morphism_name(f), cat.morphism_name(*h)});
        }
    }
    return raw;
}

} // namespace hochcat
