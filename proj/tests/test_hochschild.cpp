#include "hochcat/adjoint.hpp"
#include "hochcat/errors.hpp"
#include "hochcat/hochschild.hpp"
#include "hochcat/nerve.hpp"
#include "support.hpp"

#include <doctest.h>

#include <cstdlib>

using namespace hochcat;

namespace {

template <class F>
void check_square_zero(const FiniteCategory& c, const F& field, std::size_t max_m)
{
    for (std::size_t m = 0; m + 1 <= max_m; ++m) {
        const auto lower = hochschild_differential_matrix(c, field, m);
        const auto upper = hochschild_differential_matrix(c, field, m + 1);
        CHECK(product(upper, lower).is_zero());
        const auto rl = relative_differential_matrix(c, field, m);
        const auto ru = relative_differential_matrix(c, field, m + 1);
        CHECK(product(ru, rl).is_zero());
    }
}

} // namespace

TEST_CASE("degree-0 differential of A2")
{
    const auto c = builtin("a2");
    const auto d = hochschild_differential_integer(c, 0);
    CHECK(d.rows == 9);
    CHECK(d.cols == 3);
    const auto dense = support::to_dense(d);
    CHECK(oracle::rank(dense, 0) == 2);
    CHECK(rank(hochschild_differential_matrix(c, RationalField{}, 0)) == 2);
}

TEST_CASE("degree-0 differential of C2 vanishes")
{
    const auto c = builtin("c2");
    for (long long p : {0LL, 2LL, 3LL, 5LL}) {
        const auto d = with_field(p == 0 ? FieldSpec::rationals() : FieldSpec::prime(static_cast<std::uint64_t>(p)),
                                  [&](const auto& f) {
                                      const auto m = hochschild_differential_matrix(c, f, 0);
                                      CHECK(m.rows() == 4);
                                      CHECK(m.cols() == 2);
                                      return m.is_zero();
                                  });
        CHECK(d);
    }
}

TEST_CASE("bar differential matches the row-wise reference")
{
    for (const auto& [name, c] : support::good_fixtures()) {
        CAPTURE(name);
        for (std::size_t m = 0; m <= 2; ++m) {
            CAPTURE(m);
            CHECK(support::to_dense(hochschild_differential_integer(c, m)) == oracle::hochschild(c, m));
        }
    }
    const auto mon = support::idempotent_monoid();
    for (std::size_t m = 0; m <= 2; ++m)
        CHECK(support::to_dense(hochschild_differential_integer(mon, m)) == oracle::hochschild(mon, m));
}

TEST_CASE("differentials square to zero")
{
    for (const auto& [name, c] : support::good_fixtures()) {
        CAPTURE(name);
        check_square_zero(c, PrimeField(2), 3);
        check_square_zero(c, PrimeField(3), 3);
        check_square_zero(c, RationalField{}, 3);
    }
    check_square_zero(support::idempotent_monoid(), PrimeField(5), 3);
    check_square_zero(support::kronecker(), RationalField{}, 3);
}

TEST_CASE("cohomology dimensions agree with the reference")
{
    struct Case {
        const char* name;
        long long p;
        std::size_t max_m;
    };
    for (const auto& k : {Case{"a2", 0, 3}, Case{"c2", 2, 3}, Case{"c2", 3, 3}, Case{"c2", 0, 3}, Case{"ex6", 2, 2},
                          Case{"ex6", 3, 2}, Case{"ex6", 0, 1}, Case{"s3", 3, 1}, Case{"diamond", 0, 2}}) {
        CAPTURE(k.name);
        CAPTURE(k.p);
        const auto c = builtin(k.name);
        const auto expected = oracle::hochschild_dims(c, k.max_m, k.p);
        const auto spec = k.p == 0 ? FieldSpec::rationals() : FieldSpec::prime(static_cast<std::uint64_t>(k.p));
        CHECK(with_field(spec, [&](const auto& f) { return hochschild_cohomology_dims(c, f, k.max_m); }) == expected);
    }
}

TEST_CASE("frozen small dimension tables")
{
    CHECK(hochschild_cohomology_dims(builtin("a2"), RationalField{}, 3) == std::vector<std::size_t>{1, 0, 0, 0});
    CHECK(hochschild_cohomology_dims(builtin("c2"), PrimeField(2), 3) == std::vector<std::size_t>{2, 2, 2, 2});
    CHECK(hochschild_cohomology_dims(builtin("c2"), PrimeField(3), 3) == std::vector<std::size_t>{2, 0, 0, 0});
    CHECK(hochschild_cohomology_dims(builtin("c2"), RationalField{}, 3) == std::vector<std::size_t>{2, 0, 0, 0});
    CHECK(relative_cohomology_dims(builtin("a2"), RationalField{}, 3) == std::vector<std::size_t>{1, 0, 0, 0});
    CHECK(relative_cohomology_dims(builtin("c2"), PrimeField(2), 3) == std::vector<std::size_t>{2, 2, 2, 2});
}

TEST_CASE("relative basis: endpoint matching and composable tuples")
{
    for (const auto& [name, c] : support::good_fixtures()) {
        CAPTURE(name);
        for (std::size_t m = 0; m <= 3; ++m) {
            const auto basis = relative_basis(c, m);
            for (std::size_t i = 0; i < basis.size(); ++i) {
                const auto key = basis.key(i);
                if (m == 0) {
                    CHECK(c.is_endomorphism(key.output));
                    continue;
                }
                for (std::size_t j = 0; j + 1 < m; ++j)
                    CHECK(c.source(key.tuple[j]) == c.target(key.tuple[j + 1]));
                CHECK(c.source(key.output) == c.source(key.tuple[m - 1]));
                CHECK(c.target(key.output) == c.target(key.tuple[0]));
                if (i > 0)
                    CHECK(basis.full_index[i - 1] < basis.full_index[i]);
            }
        }
    }
}

TEST_CASE("relative basis size equals the number of adjoint chains")
{
    for (const auto& [name, c] : support::good_fixtures()) {
        CAPTURE(name);
        const auto fad = adjoint_category(c);
        for (std::size_t m = 0; m <= 3; ++m)
            CHECK(relative_basis(c, m).size() == oracle::chains(fad.category(), m).size());
    }
}

TEST_CASE("relative differential is the restriction of the full one")
{
    for (const auto& [name, c] : support::good_fixtures()) {
        CAPTURE(name);
        for (std::size_t m = 0; m <= 2; ++m) {
            const auto full = support::to_dense(hochschild_differential_integer(c, m));
            const auto rel = support::to_dense(relative_differential_integer(c, m));
            const auto src = relative_basis(c, m), dst = relative_basis(c, m + 1);
            for (std::size_t j = 0; j < src.size(); ++j) {
                std::vector<long long> column(full.size());
                for (std::size_t r = 0; r < full.size(); ++r)
                    column[r] = full[r][src.full_index[j]];
                for (std::size_t i = 0; i < dst.size(); ++i) {
                    CHECK(rel[i][j] == column[dst.full_index[i]]);
                    column[dst.full_index[i]] = 0;
                }
                // nothing leaks outside the relative cochains
                CHECK(std::all_of(column.begin(), column.end(), [](long long v) { return v == 0; }));
            }
        }
    }
}

TEST_CASE("all of kC is not closed under the degree-0 differential")
{
    // ∂^0(g) has the component id2 ⊗ g, which is not relative.
    const auto c = builtin("a2");
    const auto full = support::to_dense(hochschild_differential_integer(c, 0));
    const auto g = c.find_morphism("g")->index;
    const auto id2 = c.find_morphism("id2")->index;
    CHECK(full[id2 * 3 + g][g] != 0);
    CHECK_FALSE(relative_basis(c, 1).position(id2 * 3 + g));
}

TEST_CASE("basis cap")
{
    const auto c = builtin("ex6");
    CHECK_THROWS_AS(full_cochain_dim(c, 3, ComplexLimits{1000}), DimensionCapExceeded);
    CHECK(full_cochain_dim(c, 2, ComplexLimits{1000}) == 216);
    CHECK_THROWS_AS(hochschild_differential_integer(c, 2, ComplexLimits{1000}), DimensionCapExceeded);
    CHECK_NOTHROW(relative_differential_integer(c, 3, ComplexLimits{1000}));
    try {
        full_cochain_dim(c, 3, ComplexLimits{1000});
    } catch (const DimensionCapExceeded& e) {
        CHECK(e.fields()[0] == Error::Field{"m", "3"});
        CHECK(e.fields()[1] == Error::Field{"required", "1296"});
    }

    setenv("HOCHCAT_CAP", "77", 1);
    CHECK(ComplexLimits::from_environment().cap == 77);
    setenv("HOCHCAT_CAP", "junk", 1);
    CHECK(ComplexLimits::from_environment().cap == kDefaultBasisCap);
    unsetenv("HOCHCAT_CAP");
    CHECK(ComplexLimits::from_environment().cap == kDefaultBasisCap);
}

TEST_CASE("cochain index encoding")
{
    const std::vector<MorphismId> t{MorphismId{2}, MorphismId{0}};
    const auto idx = encode_cochain_index(3, t, MorphismId{1});
    CHECK(idx == (2 * 3 + 0) * 3 + 1);
    const auto key = decode_cochain_index(3, 2, idx);
    CHECK(key.tuple == t);
    CHECK(key.output == MorphismId{1});
}

TEST_CASE("cochain evaluation and the algebra product")
{
    const RationalField q;
    const auto c = builtin("c2");
    // f(t) = e + 2t, f(e) = 0
    HochschildCochain<RationalField> f{1, {{1 * 2 + 0, q.one()}, {1 * 2 + 1, q.from_int(2)}}};
    const std::vector<MorphismId> at_t{MorphismId{1}};
    const auto v = f.evaluate(c, q, at_t);
    CHECK(v.coefficients.at(MorphismId{0}) == 1);
    CHECK(v.coefficients.at(MorphismId{1}) == 2);
    const std::vector<MorphismId> at_e{MorphismId{0}};
    CHECK(f.evaluate(c, q, at_e).coefficients.empty());

    const auto t = AlgebraElement<RationalField>::basis(q, MorphismId{1});
    const auto tt = multiply(c, q, t, t);
    CHECK(tt == AlgebraElement<RationalField>::basis(q, MorphismId{0}));
    const auto a2 = builtin("a2");
    const auto g = AlgebraElement<RationalField>::basis(q, *a2.find_morphism("g"));
    CHECK(multiply(a2, q, g, g).coefficients.empty());
}

TEST_CASE("identity idempotent is separable")
{
    for (const auto& [name, c] : support::good_fixtures()) {
        CAPTURE(name);
        const auto r = separability_report(c);
        CHECK(r.idempotent);
        CHECK(r.multiplies_to_one);
        CHECK(r.balanced);
        CHECK(separability_check(c));
    }
    CHECK(separability_check(support::idempotent_monoid()));
}
