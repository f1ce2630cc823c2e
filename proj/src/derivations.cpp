#include "hochcat/derivations.hpp"

#include "hochcat/errors.hpp"

namespace hochcat {

GradingSemigroup::GradingSemigroup(const FiniteCategory& cat)
{
    const auto n = cat.n_objects();
    std::vector<std::size_t> position(n * n, 0);
    for (auto x : cat.objects())
        for (auto y : cat.objects())
            if (!cat.hom(x, y).empty()) {
                position[x.index * n + y.index] = elements_.size();
                elements_.emplace_back(x, y);
            }
    const auto z = zero();
    table_.assign(size() * size(), z);
    for (std::size_t i = 0; i < elements_.size(); ++i)
        for (std::size_t j = 0; j < elements_.size(); ++j)
            if (elements_[i].second == elements_[j].first) {
                const auto [x1, x2] = elements_[i];
                const auto x4 = elements_[j].second;
                // Hom(x1, x2) and Hom(x2, x4) nonempty, so Hom(x1, x4) is too.
                table_[i * size() + j] = position[x1.index * n + x4.index];
            }
    for (auto f : cat.morphisms())
        grade_.push_back(position[cat.source(f).index * n + cat.target(f).index]);
}

IntegerMatrix derivation_equations(const FiniteCategory& cat, const ComplexLimits& limits)
{
    const auto basis = relative_basis(cat, 1, limits);
    const auto n = cat.n_morphisms();
    // Unknown c_{a,h} sits at column position(a n + h).
    auto column = [&](MorphismId a, MorphismId h) { return *basis.position(a.index * n + h.index); };

    IntegerMatrix out{n * n * n, basis.size(), {}};
    for (auto f : cat.morphisms())
        for (auto g : cat.morphisms()) {
            const auto base = (f.index * n + g.index) * n;
            if (auto fg = cat.compose(f, g))
                for (auto h : cat.hom(cat.source(*fg), cat.target(*fg)))
                    out.add(base + h.index, column(*fg, h), 1);
            for (auto h : cat.hom(cat.source(f), cat.target(f)))
                if (auto w = cat.compose(h, g))
                    out.add(base + w->index, column(f, h), -1);
            for (auto h : cat.hom(cat.source(g), cat.target(g)))
                if (auto w = cat.compose(f, h))
                    out.add(base + w->index, column(g, h), -1);
        }
    return out;
}

IntegerMatrix character_equations(const FiniteCategory& d)
{
    IntegerMatrix out{0, d.n_morphisms(), {}};
    for (auto eta : d.morphisms())
        for (auto zeta : d.morphisms())
            if (auto c = d.compose(eta, zeta)) {
                out.add(out.rows, c->index, 1);
                out.add(out.rows, eta.index, -1);
                out.add(out.rows, zeta.index, -1);
                ++out.rows;
            }
    return out;
}

template <ExactField F>
BijectionReport<F> bijection_report(const ComparisonContext& ctx, const F& field)
{
    if (!ctx.flags.rr_transitive.holds)
        throw HypothesisViolated("rr-transitive", "derivation/character bijection");
    if (!ctx.flags.deterministic())
        throw HypothesisViolated("deterministic", "derivation/character bijection");
    if (!ctx.flags.cancellative())
        throw HypothesisViolated("cancellative", "derivation/character bijection");

    const auto& fad = ctx.fad.category();
    const auto der = graded_derivation_space(ctx.cat, field, ctx.limits);
    const auto chr = character_space(fad, field);
    // 1-chains of the nerve are the morphisms of F^ad, in index order.
    const auto t = Matrix<F>::from_integer(field, t_map_relative_integer(ctx, 1));
    const auto x_full = x_map_matrix(ctx, field, 1);
    const auto basis = relative_basis(ctx.cat, 1, ctx.limits);
    std::vector<std::size_t> keep(basis.full_index.begin(), basis.full_index.end());
    const auto x = x_full.select_rows(keep);

    BijectionReport<F> report{der.dim(), chr.dim(), Matrix<F>(field, chr.dim(), der.dim())};

    report.lands_in_characters = true;
    report.x_inverts = true;
    std::vector<SparseVector<F>> columns;
    for (const auto& v : der.basis()) {
        const auto image = t.apply(v);
        auto coords = chr.coordinates(image);
        if (!coords) {
            report.lands_in_characters = false;
            break;
        }
        SparseVector<F> col;
        for (std::size_t i = 0; i < coords->size(); ++i)
            if (!field.is_zero((*coords)[i]))
                col.push_back({i, (*coords)[i]});
        columns.push_back(std::move(col));
        if (x.apply(image) != v)
            report.x_inverts = false;
    }
    report.x_lands_in_derivations = true;
    for (const auto& c : chr.basis())
        if (!der.contains(x.apply(c)))
            report.x_lands_in_derivations = false;

    if (report.lands_in_characters) {
        report.restricted = Matrix<F>::from_rows(field, chr.dim(), columns).transpose();
        report.bijection = der.dim() == chr.dim() && rank(report.restricted) == der.dim();
    }
    return report;
}

template BijectionReport<PrimeField> bijection_report<PrimeField>(const ComparisonContext&, const PrimeField&);
template BijectionReport<RationalField> bijection_report<RationalField>(const ComparisonContext&,
                                                                      const RationalField&);

} // namespace hochcat
