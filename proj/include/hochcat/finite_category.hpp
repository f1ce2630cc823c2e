#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hochcat {

struct ObjectId {
    std::uint32_t index = 0;
    friend constexpr auto operator<=>(ObjectId, ObjectId) = default;
};

struct MorphismId {
    std::uint32_t index = 0;
    friend constexpr auto operator<=>(MorphismId, MorphismId) = default;
};

/* Unchecked category description, as read from a file or produced by a fixture. */

struct RawMorphism {
    std::string name;
    std::string source;
    std::string target;
    bool identity = false;
};

/// The entry `g ∘ f = h`.
struct RawComposite {
    std::string g;
    std::string f;
    std::string h;
};

struct RawCategory {
    std::vector<std::string> objects;
    std::vector<RawMorphism> morphisms;
    std::vector<RawComposite> composites;
};

/// A validated finite category.
///
/// Objects and morphisms are numbered densely in declaration order and the
/// numbering never changes; every basis downstream is enumerated
/// lexicographically in these indices. Instances are immutable.
class FiniteCategory {
public:
    std::size_t n_objects() const { return object_names_.size(); }
    std::size_t n_morphisms() const { return morphisms_.size(); }

    ObjectId source(MorphismId f) const { return morphisms_[f.index].source; }
    ObjectId target(MorphismId f) const { return morphisms_[f.index].target; }
    MorphismId identity(ObjectId x) const { return identities_[x.index]; }
    bool is_identity(MorphismId f) const { return identities_[source(f).index] == f; }
    bool is_endomorphism(MorphismId f) const { return source(f) == target(f); }

    bool composable(MorphismId g, MorphismId f) const { return source(g) == target(f); }

    /// g ∘ f, or nothing when source(g) != target(f).
    std::optional<MorphismId> compose(MorphismId g, MorphismId f) const
    {
        const std::int32_t h = table_[g.index * n_morphisms() + f.index];
        if (h < 0)
            return std::nullopt;
        return MorphismId{static_cast<std::uint32_t>(h)};
    }

    /// Composite of a chain listed source-to-target: chain[k-1] ∘ ... ∘ chain[0].
    /// Returns nothing if some consecutive pair is not composable.
    std::optional<MorphismId> compose_chain(std::span<const MorphismId> chain) const;

    std::span<const MorphismId> hom(ObjectId x, ObjectId y) const
    {
        return homs_[x.index * n_objects() + y.index];
    }
    std::span<const MorphismId> endomorphisms(ObjectId x) const { return hom(x, x); }
    /// Every endomorphism of the category, in index order.
    std::span<const MorphismId> all_endomorphisms() const { return all_endos_; }

    const std::string& object_name(ObjectId x) const { return object_names_[x.index]; }
    const std::string& morphism_name(MorphismId f) const { return morphisms_[f.index].name; }
    std::optional<ObjectId> find_object(std::string_view name) const;
    std::optional<MorphismId> find_morphism(std::string_view name) const;

    std::vector<ObjectId> objects() const;
    std::vector<MorphismId> morphisms() const;

    friend bool operator==(const FiniteCategory&, const FiniteCategory&) = default;

private:
    friend FiniteCategory validate_category(const RawCategory& raw);

    struct MorphismData {
        std::string name;
        ObjectId source;
        ObjectId target;
        friend bool operator==(const MorphismData&, const MorphismData&) = default;
    };

    std::vector<std::string> object_names_;
    std::vector<MorphismData> morphisms_;
    std::vector<MorphismId> identities_;
    std::vector<std::int32_t> table_; // n_morphisms^2, -1 where undefined
    std::vector<std::vector<MorphismId>> homs_;
    std::vector<MorphismId> all_endos_;
};

/// Checks the category axioms and fills in identity compositions.
///
/// Throws CategoryError with kind MissingIdentity, DuplicateIdentity,
/// DuplicateName, UnknownObject, UnknownMorphism, IdentityNotEndomorphism,
/// IllTypedComposite, ConflictingComposite, IdentityLawFailure,
/// MissingComposite or AssociativityFailure. Errors are reported for the
/// lexicographically first offending entry.
FiniteCategory validate_category(const RawCategory& raw);

/// Inverse of validate_category: a description listing every composable
/// pair whose members are both non-identities.
RawCategory to_raw(const FiniteCategory& cat);

} // namespace hochcat
