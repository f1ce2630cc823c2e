#include "hochcat/hochschild.hpp"

#include "hochcat/errors.hpp"

#include <fmt/core.h>

#include <cstdlib>
#include <limits>

namespace hochcat {

ComplexLimits ComplexLimits::from_environment()
{
    ComplexLimits limits;
    if (const char* env = std::getenv("HOCHCAT_CAP"); env && *env) {
        char* end = nullptr;
        const auto v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0)
            limits.cap = static_cast<std::size_t>(v);
    }
    return limits;
}

namespace {

// n^k, saturating at the maximum of uint64.
std::uint64_t power(std::uint64_t n, std::size_t k)
{
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < k; ++i) {
        if (n != 0 && r > std::numeric_limits<std::uint64_t>::max() / n)
            return std::numeric_limits<std::uint64_t>::max();
        r *= n;
    }
    return r;
}

std::vector<std::vector<std::pair<MorphismId, MorphismId>>> factorizations(const FiniteCategory& cat)
{
    std::vector<std::vector<std::pair<MorphismId, MorphismId>>> out(cat.n_morphisms());
    for (auto u : cat.morphisms())
        for (auto v : cat.morphisms())
            if (auto a = cat.compose(u, v))
                out[a->index].emplace_back(u, v);
    return out;
}

/// Emits the integer column of ∂^m for the basis cochain e_{(a_1..a_m), h},
/// as (row index in C^{m+1}, coefficient) pairs, possibly with repeats.
class ColumnBuilder {
public:
    ColumnBuilder(const FiniteCategory& cat, std::size_t m)
        : cat_(cat), m_(m), n_(cat.n_morphisms()), tuples_(power(n_, m)), factors_(factorizations(cat))
    {
    }

    void column(std::uint64_t tuple_index, MorphismId h, std::vector<std::pair<std::uint64_t, std::int64_t>>& out)
    {
        out.clear();
        const auto key = decode_cochain_index(n_, m_, tuple_index * n_);
        const auto& a = key.tuple;

        // b_1 · f(b_2, ..., b_{m+1})
        for (auto g1 : cat_.morphisms())
            if (auto gh = cat_.compose(g1, h))
                out.emplace_back((g1.index * tuples_ + tuple_index) * n_ + gh->index, 1);

        // Σ_j (-1)^j f(.., b_j b_{j+1}, ..)
        std::vector<MorphismId> wide(m_ + 1);
        for (std::size_t j = 0; j < m_; ++j) {
            const std::int64_t sign = (j + 1) % 2 == 0 ? 1 : -1;
            for (const auto& [u, v] : factors_[a[j].index]) {
                std::copy(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(j), wide.begin());
                wide[j] = u;
                wide[j + 1] = v;
                std::copy(a.begin() + static_cast<std::ptrdiff_t>(j) + 1, a.end(),
                          wide.begin() + static_cast<std::ptrdiff_t>(j) + 2);
                out.emplace_back(encode_cochain_index(n_, wide, h), sign);
            }
        }

        // (-1)^{m+1} f(b_1, ..., b_m) · b_{m+1}
        const std::int64_t last = (m_ + 1) % 2 == 0 ? 1 : -1;
        for (auto g : cat_.morphisms())
            if (auto hg = cat_.compose(h, g))
                out.emplace_back((tuple_index * n_ + g.index) * n_ + hg->index, last);
    }

private:
    const FiniteCategory& cat_;
    std::size_t m_;
    std::uint64_t n_;
    std::uint64_t tuples_;
    std::vector<std::vector<std::pair<MorphismId, MorphismId>>> factors_;
};

void check_cap(std::size_t degree, std::uint64_t required, const ComplexLimits& limits)
{
    if (required > limits.cap)
        throw DimensionCapExceeded(degree, static_cast<std::size_t>(std::min<std::uint64_t>(
                                               required, std::numeric_limits<std::size_t>::max())),
                                   limits.cap);
}

} // namespace

std::size_t full_cochain_dim(const FiniteCategory& cat, std::size_t m, const ComplexLimits& limits)
{
    const auto d = power(cat.n_morphisms(), m + 1);
    check_cap(m, d, limits);
    return static_cast<std::size_t>(d);
}

std::uint64_t encode_cochain_index(std::size_t n_morphisms, std::span<const MorphismId> tuple, MorphismId h)
{
    std::uint64_t index = 0;
    for (auto a : tuple)
        index = index * n_morphisms + a.index;
    return index * n_morphisms + h.index;
}

CochainKey decode_cochain_index(std::size_t n_morphisms, std::size_t m, std::uint64_t index)
{
    CochainKey key{std::vector<MorphismId>(m), MorphismId{static_cast<std::uint32_t>(index % n_morphisms)}};
    index /= n_morphisms;
    for (std::size_t i = m; i-- > 0;) {
        key.tuple[i] = MorphismId{static_cast<std::uint32_t>(index % n_morphisms)};
        index /= n_morphisms;
    }
    return key;
}

IntegerMatrix hochschild_differential_integer(const FiniteCategory& cat, std::size_t m, const ComplexLimits& limits)
{
    const auto cols = full_cochain_dim(cat, m, limits);
    const auto rows = full_cochain_dim(cat, m + 1, limits);
    const auto n = cat.n_morphisms();

    IntegerMatrix out{rows, cols, {}};
    ColumnBuilder builder(cat, m);
    std::vector<std::pair<std::uint64_t, std::int64_t>> column;
    for (std::size_t c = 0; c < cols; ++c) {
        builder.column(c / n, MorphismId{static_cast<std::uint32_t>(c % n)}, column);
        for (const auto& [r, v] : column)
            out.add(static_cast<std::size_t>(r), c, v);
    }
    return out;
}

std::optional<std::size_t> RelativeBasis::position(std::uint64_t index) const
{
    auto it = std::lower_bound(full_index.begin(), full_index.end(), index);
    if (it == full_index.end() || *it != index)
        return std::nullopt;
    return static_cast<std::size_t>(it - full_index.begin());
}

RelativeBasis relative_basis(const FiniteCategory& cat, std::size_t m, const ComplexLimits& limits)
{
    RelativeBasis basis{m, cat.n_morphisms(), {}};
    const auto n = cat.n_morphisms();
    if (m == 0) {
        for (auto e : cat.all_endomorphisms())
            basis.full_index.push_back(e.index);
        check_cap(m, basis.size(), limits);
        return basis;
    }
    if (power(n, m + 1) == std::numeric_limits<std::uint64_t>::max())
        check_cap(m, std::numeric_limits<std::uint64_t>::max(), limits);

    // Depth-first over a_1, a_2, ... with s(a_i) = t(a_{i+1}); lexicographic.
    std::vector<MorphismId> tuple(m);
    auto extend = [&](auto&& self, std::size_t i) -> void {
        if (i == m) {
            for (auto h : cat.hom(cat.source(tuple[m - 1]), cat.target(tuple[0]))) {
                basis.full_index.push_back(encode_cochain_index(n, tuple, h));
                if (basis.full_index.size() > limits.cap)
                    check_cap(m, basis.full_index.size(), limits);
            }
            return;
        }
        for (auto a : cat.morphisms()) {
            if (i > 0 && cat.source(tuple[i - 1]) != cat.target(a))
                continue;
            tuple[i] = a;
            self(self, i + 1);
        }
    };
    extend(extend, 0);
    return basis;
}

IntegerMatrix relative_differential_integer(const FiniteCategory& cat, std::size_t m, const ComplexLimits& limits)
{
    const auto src = relative_basis(cat, m, limits);
    const auto dst = relative_basis(cat, m + 1, limits);
    const auto n = cat.n_morphisms();

    IntegerMatrix out{dst.size(), src.size(), {}};
    ColumnBuilder builder(cat, m);
    std::vector<std::pair<std::uint64_t, std::int64_t>> column;
    for (std::size_t c = 0; c < src.size(); ++c) {
        const auto index = src.full_index[c];
        builder.column(index / n, MorphismId{static_cast<std::uint32_t>(index % n)}, column);
        std::sort(column.begin(), column.end());
        for (std::size_t i = 0; i < column.size();) {
            std::size_t j = i;
            std::int64_t sum = 0;
            while (j < column.size() && column[j].first == column[i].first)
                sum += column[j++].second;
            if (sum != 0) {
                const auto row = dst.position(column[i].first);
                if (!row)
                    throw LinalgError("NotASubcomplex",
                                      fmt::format("relative cochain {} of degree {} has a non-relative coboundary",
                                                  c, m),
                                      {{"m", std::to_string(m)}, {"column", std::to_string(c)}});
                out.add(*row, c, sum);
            }
            i = j;
        }
    }
    return out;
}

SeparabilityReport separability_report(const FiniteCategory& cat)
{
    // Elements of kC^id ⊗ (kC^id)^op as maps (u, v) ↦ coefficient.
    using Tensor = std::map<std::pair<std::uint32_t, std::uint32_t>, std::int64_t>;
    auto clean = [](Tensor t) {
        std::erase_if(t, [](const auto& kv) { return kv.second == 0; });
        return t;
    };
    // (a⊗b)(c⊗d) = ac ⊗ db, the second factor multiplying in the opposite order.
    auto mul = [&](const Tensor& x, const Tensor& y) {
        Tensor out;
        for (const auto& [ab, p] : x)
            for (const auto& [cd, q] : y) {
                const auto ac = cat.compose(MorphismId{ab.first}, MorphismId{cd.first});
                const auto db = cat.compose(MorphismId{cd.second}, MorphismId{ab.second});
                if (ac && db)
                    out[{ac->index, db->index}] += p * q;
            }
        return clean(out);
    };

    Tensor e;
    std::map<std::uint32_t, std::int64_t> unit;
    for (auto x : cat.objects()) {
        const auto id = cat.identity(x).index;
        e[{id, id}] = 1;
        unit[id] = 1;
    }

    SeparabilityReport report;
    report.idempotent = mul(e, e) == e;

    std::map<std::uint32_t, std::int64_t> product;
    for (const auto& [uv, c] : e)
        if (auto w = cat.compose(MorphismId{uv.first}, MorphismId{uv.second}))
            product[w->index] += c;
    std::erase_if(product, [](const auto& kv) { return kv.second == 0; });
    report.multiplies_to_one = product == unit;

    report.balanced = true;
    for (auto x : cat.objects()) {
        const auto r = cat.identity(x).index;
        Tensor r_left, r_right;
        for (const auto& [u, c] : unit) {
            r_left[{r, u}] = c;
            r_right[{u, r}] = c;
        }
        if (mul(r_left, e) != mul(r_right, e))
            report.balanced = false;
    }
    return report;
}

} // namespace hochcat
