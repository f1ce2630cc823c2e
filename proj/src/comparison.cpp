#include "hochcat/comparison.hpp"

#include "hochcat/errors.hpp"

namespace hochcat {

ComparisonContext ComparisonContext::make(FiniteCategory cat, ComplexLimits limits)
{
    auto fad = adjoint_category(cat);
    auto flags = check_hypotheses(cat);
    return {std::move(cat), std::move(fad), std::move(flags), limits};
}

namespace {

/// Full cochain index read by T on each F^ad m-chain.
std::vector<std::uint64_t> t_targets(const ComparisonContext& ctx, std::size_t m)
{
    const auto& cat = ctx.cat;
    const auto& fad = ctx.fad;
    const NerveLevel level(fad.category(), m, ctx.limits);
    std::vector<std::uint64_t> out;
    out.reserve(level.size());
    std::vector<MorphismId> reversed(m);
    for (const auto& sigma : level.chains()) {
        if (m == 0) {
            out.push_back(fad.endomorphism(sigma.start).index);
            continue;
        }
        MorphismId h = fad.square(sigma.steps[0]).a; // a_0
        for (std::size_t i = 0; i < m; ++i) {
            const auto g = fad.square(sigma.steps[i]).g;
            reversed[m - 1 - i] = g;
            h = *cat.compose(g, h);
        }
        out.push_back(encode_cochain_index(cat.n_morphisms(), reversed, h));
    }
    return out;
}

void require(bool ok, const char* predicate, const char* operation)
{
    if (!ok)
        throw HypothesisViolated(predicate, operation);
}

template <ExactField F>
IdentityCheck compare(const Matrix<F>& lhs, const Matrix<F>& rhs)
{
    auto diff = first_difference(lhs, rhs);
    return {!diff.has_value(), diff};
}

template <ExactField F>
typename F::Element sign(const F& field, std::size_t m)
{
    return (m + 1) % 2 == 0 ? field.one() : field.neg(field.one());
}

template <ExactField F>
Matrix<F> relative_rows(const ComparisonContext& ctx, const Matrix<F>& x, std::size_t m, bool& all_relative)
{
    const auto basis = relative_basis(ctx.cat, m, ctx.limits);
    std::vector<std::size_t> keep;
    keep.reserve(basis.size());
    for (auto idx : basis.full_index)
        keep.push_back(static_cast<std::size_t>(idx));
    all_relative = true;
    std::vector<bool> relative(x.rows(), false);
    for (auto k : keep)
        relative[k] = true;
    for (std::size_t r = 0; r < x.rows(); ++r)
        if (!relative[r] && !x.row(r).empty())
            all_relative = false;
    return x.select_rows(keep);
}

} // namespace

IntegerMatrix t_map_integer(const ComparisonContext& ctx, std::size_t m)
{
    const auto targets = t_targets(ctx, m);
    IntegerMatrix out{targets.size(), full_cochain_dim(ctx.cat, m, ctx.limits), {}};
    for (std::size_t r = 0; r < targets.size(); ++r)
        out.add(r, static_cast<std::size_t>(targets[r]), 1);
    return out;
}

IntegerMatrix t_map_relative_integer(const ComparisonContext& ctx, std::size_t m)
{
    const auto targets = t_targets(ctx, m);
    const auto basis = relative_basis(ctx.cat, m, ctx.limits);
    IntegerMatrix out{targets.size(), basis.size(), {}};
    for (std::size_t r = 0; r < targets.size(); ++r) {
        const auto c = basis.position(targets[r]);
        if (!c)
            throw LinalgError("NotASubcomplex", "T reads a coefficient outside the relative cochains",
                              {{"m", std::to_string(m)}, {"row", std::to_string(r)}});
        out.add(r, *c, 1);
    }
    return out;
}

IntegerMatrix x_map_integer(const ComparisonContext& ctx, std::size_t m)
{
    const auto& cat = ctx.cat;
    const auto& fad = ctx.fad;
    const LadderBuilder builder(cat); // checks right deterministic / right cancellative
    const NerveLevel fad_level(fad.category(), m, ctx.limits);

    IntegerMatrix out{full_cochain_dim(cat, m, ctx.limits), fad_level.size(), {}};
    if (m == 0) {
        for (auto a0 : cat.all_endomorphisms())
            out.add(a0.index, *fad_level.index_of({fad.object_of(a0), {}}), 1);
        return out;
    }

    const NerveLevel base(cat, m, ctx.limits);
    std::vector<MorphismId> reversed(m);
    NerveChain sigma;
    for (const auto& chain : base.chains()) {
        const auto composite = *cat.compose_chain(chain.steps);
        for (std::size_t i = 0; i < m; ++i)
            reversed[m - 1 - i] = chain.steps[i];
        for (auto a0 : cat.endomorphisms(chain.start)) {
            const auto ladder = builder.build(chain.steps, a0);
            sigma.start = fad.object_of(a0);
            sigma.steps.clear();
            for (std::size_t i = 0; i < m; ++i)
                sigma.steps.push_back(*fad.find({ladder.verticals[i], ladder.bottom[i], ladder.verticals[i + 1]}));
            const auto row = encode_cochain_index(cat.n_morphisms(), reversed, *cat.compose(composite, a0));
            out.add(static_cast<std::size_t>(row), *fad_level.index_of(sigma), 1);
        }
    }
    return out;
}

template <ExactField F>
IdentityCheck verify_t_chain_identity(const ComparisonContext& ctx, const F& field, std::size_t m)
{
    require(ctx.flags.cancellative(), "cancellative", "T chain identity");
    const auto lhs = product(t_map_matrix(ctx, field, m + 1), hochschild_differential_matrix(ctx.cat, field, m, ctx.limits));
    const auto rhs = product(simplicial_coboundary_matrix(ctx.fad.category(), field, m, ctx.limits),
                             t_map_matrix(ctx, field, m))
                         .scaled(sign(field, m));
    return compare(lhs, rhs);
}

template <ExactField F>
IdentityCheck verify_x_chain_identity(const ComparisonContext& ctx, const F& field, std::size_t m)
{
    require(ctx.flags.deterministic(), "deterministic", "X chain identity");
    require(ctx.flags.cancellative(), "cancellative", "X chain identity");
    const auto lhs = product(x_map_matrix(ctx, field, m + 1),
                             simplicial_coboundary_matrix(ctx.fad.category(), field, m, ctx.limits));
    const auto rhs =
        product(hochschild_differential_matrix(ctx.cat, field, m, ctx.limits), x_map_matrix(ctx, field, m))
            .scaled(sign(field, m));
    return compare(lhs, rhs);
}

template <ExactField F>
IdentityCheck verify_section(const ComparisonContext& ctx, const F& field, std::size_t m)
{
    require(ctx.flags.right_deterministic.holds, "right-deterministic", "section T X = 1");
    require(ctx.flags.cancellative(), "cancellative", "section T X = 1");
    const auto tx = product(t_map_matrix(ctx, field, m), x_map_matrix(ctx, field, m));
    return compare(tx, Matrix<F>::identity(field, tx.rows()));
}

template <ExactField F>
TwoSidedCheck verify_two_sided_on_relative(const ComparisonContext& ctx, const F& field, std::size_t m)
{
    require(ctx.flags.rr_transitive.holds, "rr-transitive", "two-sided relative inverse");
    require(ctx.flags.deterministic(), "deterministic", "two-sided relative inverse");
    require(ctx.flags.cancellative(), "cancellative", "two-sided relative inverse");

    TwoSidedCheck check;
    const auto x_rel = relative_rows(ctx, x_map_matrix(ctx, field, m), m, check.image_relative);
    const auto t_rel = Matrix<F>::from_integer(field, t_map_relative_integer(ctx, m));
    if (x_rel.cols() == t_rel.rows() && x_rel.rows() == t_rel.cols()) {
        const auto left = product(x_rel, t_rel);
        const auto right = product(t_rel, x_rel);
        check.left_inverse = left == Matrix<F>::identity(field, left.rows());
        check.right_inverse = right == Matrix<F>::identity(field, right.rows());
    }
    return check;
}

template <ExactField F>
ComparisonReport<F> comparison_report(const ComparisonContext& ctx, const F& field, std::size_t max_m,
                                   ComplexSource source)
{
    require(ctx.flags.deterministic(), "deterministic", "the cohomology comparison");
    require(ctx.flags.cancellative(), "cancellative", "the cohomology comparison");

    ComparisonReport<F> report;
    report.source = source;
    report.tier = ctx.flags.rr_transitive.holds ? Tier::Isomorphism : Tier::Surjective;

    const auto& fad = ctx.fad.category();
    auto src_differential = [&](std::size_t m) {
        return source == ComplexSource::Full ? hochschild_differential_matrix(ctx.cat, field, m, ctx.limits)
                                             : relative_differential_matrix(ctx.cat, field, m, ctx.limits);
    };
    const auto rel_dims = source == ComplexSource::Relative
                              ? std::vector<std::size_t>{}
                              : relative_cohomology_dims(ctx.cat, field, max_m, ctx.limits);

    std::optional<Matrix<F>> src_prev, dst_prev;
    for (std::size_t m = 0; m <= max_m; ++m) {
        auto src_d = src_differential(m);
        auto dst_d = simplicial_coboundary_matrix(fad, field, m, ctx.limits);
        const auto zs = kernel_basis(src_d);
        const auto zd = kernel_basis(dst_d);
        const auto bs = src_prev ? image_basis(*src_prev) : Subspace<F>(field, src_d.cols());
        const auto bd = dst_prev ? image_basis(*dst_prev) : Subspace<F>(field, dst_d.cols());
        const auto t = source == ComplexSource::Full ? t_map_matrix(ctx, field, m)
                                                     : Matrix<F>::from_integer(field, t_map_relative_integer(ctx, m));

        DegreeComparison<F> row{m, std::nullopt, 0, quotient_dim(zd, bd), induced_quotient_map(t, zs, bs, zd, bd)};
        const auto dim_src = quotient_dim(zs, bs);
        if (source == ComplexSource::Full) {
            row.dim_hh = dim_src;
            row.dim_rel = rel_dims[m];
        } else {
            row.dim_rel = dim_src;
        }
        row.surjective = row.induced.rank == row.dim_fad;
        row.iso = row.induced.invertible;
        report.degrees.push_back(std::move(row));
        src_prev = std::move(src_d);
        dst_prev = std::move(dst_d);
    }
    return report;
}

#define HOCHCAT_INSTANTIATE(F)                                                                                  \
    template IdentityCheck verify_t_chain_identity<F>(const ComparisonContext&, const F&, std::size_t);       \
    template IdentityCheck verify_x_chain_identity<F>(const ComparisonContext&, const F&, std::size_t);       \
    template IdentityCheck verify_section<F>(const ComparisonContext&, const F&, std::size_t);                \
    template TwoSidedCheck verify_two_sided_on_relative<F>(const ComparisonContext&, const F&, std::size_t);  \
    template ComparisonReport<F> comparison_report<F>(const ComparisonContext&, const F&, std::size_t, ComplexSource);

HOCHCAT_INSTANTIATE(PrimeField)
HOCHCAT_INSTANTIATE(RationalField)

#undef HOCHCAT_INSTANTIATE

} // namespace hochcat
