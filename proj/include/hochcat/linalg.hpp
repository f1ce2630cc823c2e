#pragma once

#include "hochcat/matrix.hpp"

#include <numeric>
#include <queue>

namespace hochcat {

enum class Engine { Automatic, Dense, Sparse };

/// Reduced row echelon form: rows[i] has a leading 1 at pivots[i],
/// pivots strictly increasing, and every pivot column is zero elsewhere.
template <ExactField F>
struct Echelon {
    std::size_t cols = 0;
    std::vector<SparseVector<F>> rows;
    std::vector<std::size_t> pivots;

    std::size_t rank() const { return pivots.size(); }
};

namespace detail {

template <ExactField F>
SparseVector<F> normalized(const F& field, SparseVector<F> row)
{
    const auto inv = field.inv(row.front().value);
    for (auto& e : row)
        e.value = field.mul(inv, e.value);
    return row;
}

/// Forward phase of sparse elimination. Returns echelon rows (leading 1)
/// indexed by their pivot column in pivot_of.
template <ExactField F>
std::vector<SparseVector<F>> sparse_forward(const Matrix<F>& m, std::vector<std::ptrdiff_t>& pivot_of)
{
    const F& field = m.field();
    pivot_of.assign(m.cols(), -1);
    std::vector<SparseVector<F>> pivots;

    // Static Markowitz-style ordering: sparsest rows enter first.
    std::vector<std::size_t> order(m.rows());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return m.row(a).size() < m.row(b).size(); });

    std::vector<typename F::Element> value(m.cols(), field.zero());
    std::vector<bool> queued(m.cols(), false);
    std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> heap;
    std::vector<std::size_t> touched;

    auto touch = [&](std::size_t c) {
        if (!queued[c]) {
            queued[c] = true;
            heap.push(c);
            touched.push_back(c);
        }
    };
    auto reset = [&] {
        for (auto c : touched) {
            value[c] = field.zero();
            queued[c] = false;
        }
        touched.clear();
        heap = {};
    };

    for (auto r : order) {
        for (const auto& e : m.row(r)) {
            value[e.index] = e.value;
            touch(e.index);
        }
        while (!heap.empty()) {
            const auto c = heap.top();
            heap.pop();
            if (field.is_zero(value[c]))
                continue;
            if (pivot_of[c] < 0) {
                // New pivot: collect what is left of the row.
                SparseVector<F> row{{c, value[c]}};
                while (!heap.empty()) {
                    const auto k = heap.top();
                    heap.pop();
                    if (!field.is_zero(value[k]))
                        row.push_back({k, value[k]});
                }
                pivot_of[c] = static_cast<std::ptrdiff_t>(pivots.size());
                pivots.push_back(normalized(field, std::move(row)));
                break;
            }
            const auto factor = value[c];
            for (const auto& e : pivots[static_cast<std::size_t>(pivot_of[c])]) {
                touch(e.index);
                value[e.index] = field.sub_mul(value[e.index], factor, e.value);
            }
        }
        reset();
    }
    return pivots;
}

} // namespace detail

/// Gauss-Jordan elimination on a dense copy. Pivot search takes the lowest
/// row index in the lowest remaining column.
template <ExactField F>
Echelon<F> rref_dense(const Matrix<F>& m)
{
    const F& field = m.field();
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<typename F::Element> a(rows * cols, field.zero());
    for (std::size_t r = 0; r < rows; ++r)
        for (const auto& e : m.row(r))
            a[r * cols + e.index] = e.value;

    Echelon<F> out;
    out.cols = cols;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t p = rank;
        while (p < rows && field.is_zero(a[p * cols + c]))
            ++p;
        if (p == rows)
            continue;
        if (p != rank)
            std::swap_ranges(a.begin() + p * cols, a.begin() + (p + 1) * cols, a.begin() + rank * cols);
        const auto inv = field.inv(a[rank * cols + c]);
        for (std::size_t j = c; j < cols; ++j)
            a[rank * cols + j] = field.mul(inv, a[rank * cols + j]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || field.is_zero(a[r * cols + c]))
                continue;
            const auto factor = a[r * cols + c];
            for (std::size_t j = c; j < cols; ++j)
                if (!field.is_zero(a[rank * cols + j]))
                    a[r * cols + j] = field.sub_mul(a[r * cols + j], factor, a[rank * cols + j]);
        }
        out.pivots.push_back(c);
        ++rank;
    }
    for (std::size_t r = 0; r < rank; ++r) {
        SparseVector<F> row;
        for (std::size_t j = out.pivots[r]; j < cols; ++j)
            if (!field.is_zero(a[r * cols + j]))
                row.push_back({j, a[r * cols + j]});
        out.rows.push_back(std::move(row));
    }
    return out;
}

/// Sparse elimination followed by back-substitution. Produces the same
/// (unique) reduced echelon form as rref_dense.
template <ExactField F>
Echelon<F> rref_sparse(const Matrix<F>& m)
{
    const F& field = m.field();
    std::vector<std::ptrdiff_t> pivot_of;
    auto rows = detail::sparse_forward(m, pivot_of);

    std::vector<std::size_t> pivot_cols;
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (pivot_of[c] >= 0)
            pivot_cols.push_back(c);

    // Back-substitution from the last pivot: rows with larger pivots are
    // already reduced, so subtracting them never reintroduces pivot entries.
    Accumulator<F> acc(field, m.cols());
    for (auto it = pivot_cols.rbegin(); it != pivot_cols.rend(); ++it) {
        auto& row = rows[static_cast<std::size_t>(pivot_of[*it])];
        bool dirty = false;
        for (const auto& e : row)
            if (e.index != *it && pivot_of[e.index] >= 0) {
                dirty = true;
                break;
            }
        if (!dirty)
            continue;
        const SparseVector<F> original = row;
        for (const auto& e : original)
            acc.add(e.index, e.value);
        for (const auto& e : original)
            if (e.index != *it && pivot_of[e.index] >= 0)
                acc.axpy(field.neg(e.value), rows[static_cast<std::size_t>(pivot_of[e.index])]);
        row = acc.extract();
    }

    Echelon<F> out;
    out.cols = m.cols();
    for (auto c : pivot_cols) {
        out.pivots.push_back(c);
        out.rows.push_back(std::move(rows[static_cast<std::size_t>(pivot_of[c])]));
    }
    return out;
}

template <ExactField F>
Echelon<F> rref(const Matrix<F>& m, Engine engine = Engine::Automatic)
{
    if (engine == Engine::Automatic)
        engine = m.representation() == Representation::Sparse ? Engine::Sparse : Engine::Dense;
    return engine == Engine::Sparse ? rref_sparse(m) : rref_dense(m);
}

template <ExactField F>
std::size_t rank(const Matrix<F>& m, Engine engine = Engine::Automatic)
{
    if (engine == Engine::Automatic)
        engine = m.representation() == Representation::Sparse ? Engine::Sparse : Engine::Dense;
    if (engine == Engine::Dense)
        return rref_dense(m).rank();
    std::vector<std::ptrdiff_t> pivot_of;
    return detail::sparse_forward(m, pivot_of).size();
}

/// A subspace of F^ambient_dim held by its reduced echelon basis.
template <ExactField F>
class Subspace {
public:
    using Element = typename F::Element;

    Subspace(const F& field, std::size_t ambient) : field_(field), ambient_(ambient) {}
    Subspace(const F& field, Echelon<F> echelon)
        : field_(field), ambient_(echelon.cols), basis_(std::move(echelon.rows)), pivots_(std::move(echelon.pivots))
    {
    }

    /// Span of arbitrary vectors.
    static Subspace span(const F& field, std::size_t ambient, const std::vector<SparseVector<F>>& vectors,
                         Engine engine = Engine::Automatic)
    {
        return Subspace(field, rref(Matrix<F>::from_rows(field, ambient, vectors), engine));
    }

    static Subspace whole(const F& field, std::size_t ambient)
    {
        return Subspace(field, rref(Matrix<F>::identity(field, ambient)));
    }

    const F& field() const { return field_; }
    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<SparseVector<F>>& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    /// Basis vectors as the rows of a matrix.
    Matrix<F> basis_matrix() const { return Matrix<F>::from_rows(field_, ambient_, basis_); }

    /// Coordinates of v in the echelon basis, or nothing if v is not in the span.
    std::optional<std::vector<Element>> coordinates(const SparseVector<F>& v) const
    {
        std::vector<Element> coords(dim(), field_.zero());
        // In reduced form the coefficient of basis_[i] is v at pivots_[i].
        std::size_t k = 0;
        for (const auto& e : v) {
            while (k < pivots_.size() && pivots_[k] < e.index)
                ++k;
            if (k < pivots_.size() && pivots_[k] == e.index)
                coords[k] = e.value;
        }
        Accumulator<F> acc(field_, ambient_);
        for (const auto& e : v)
            acc.add(e.index, e.value);
        for (std::size_t i = 0; i < coords.size(); ++i)
            if (!field_.is_zero(coords[i]))
                acc.axpy(field_.neg(coords[i]), basis_[i]);
        if (!acc.extract().empty())
            return std::nullopt;
        return coords;
    }

    bool contains(const SparseVector<F>& v) const { return coordinates(v).has_value(); }

    bool contains(const Subspace& other) const
    {
        for (const auto& v : other.basis_)
            if (!contains(v))
                return false;
        return true;
    }

    friend bool operator==(const Subspace& a, const Subspace& b)
    {
        return a.ambient_ == b.ambient_ && a.pivots_ == b.pivots_ && a.basis_ == b.basis_;
    }

private:
    F field_;
    std::size_t ambient_;
    std::vector<SparseVector<F>> basis_;
    std::vector<std::size_t> pivots_;
};

/// Null space of m (a subspace of F^cols), in reduced echelon form.
template <ExactField F>
Subspace<F> kernel_basis(const Matrix<F>& m, Engine engine = Engine::Automatic)
{
    const F& field = m.field();
    const std::size_t n = m.cols();
    // With columns reversed, every free-column kernel vector has its leading
    // entry (in the original order) at the free column itself, so the
    // standard kernel basis is already reduced.
    const auto e = rref(m.reverse_columns(), engine);
    std::vector<bool> is_pivot(n, false);
    for (auto p : e.pivots)
        is_pivot[p] = true;
    std::vector<std::ptrdiff_t> slot(n, -1);
    std::vector<SparseVector<F>> vectors;
    for (std::size_t j = 0; j < n; ++j)
        if (!is_pivot[j]) {
            slot[j] = static_cast<std::ptrdiff_t>(vectors.size());
            vectors.push_back({{n - 1 - j, field.one()}});
        }
    for (std::size_t r = 0; r < e.rows.size(); ++r)
        for (const auto& x : e.rows[r])
            if (x.index != e.pivots[r])
                vectors[static_cast<std::size_t>(slot[x.index])].push_back({n - 1 - e.pivots[r], field.neg(x.value)});

    Echelon<F> out;
    out.cols = n;
    std::vector<std::size_t> order(vectors.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return vectors[a].front().index < vectors[b].front().index; });
    for (auto i : order) {
        auto& v = vectors[i];
        std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.index < y.index; });
        out.pivots.push_back(v.front().index);
        out.rows.push_back(std::move(v));
    }
    return Subspace<F>(field, std::move(out));
}

/// Column space of m (a subspace of F^rows).
template <ExactField F>
Subspace<F> image_basis(const Matrix<F>& m, Engine engine = Engine::Automatic)
{
    return Subspace<F>(m.field(), rref(m.transpose(), engine));
}

/// dim Z - dim B. Throws LinalgError(NotASubspace) unless B ⊆ Z.
template <ExactField F>
std::size_t quotient_dim(const Subspace<F>& z, const Subspace<F>& b)
{
    if (z.ambient_dim() != b.ambient_dim() || !z.contains(b))
        throw LinalgError("NotASubspace", "quotient Z/B with B not contained in Z");
    return z.dim() - b.dim();
}

template <ExactField F>
struct InducedMap {
    Matrix<F> matrix; // dim(Zd/Bd) x dim(Zs/Bs)
    std::size_t rank = 0;
    bool invertible = false;
};

namespace detail {

/// Complement data for a quotient Z/B: which Z-basis vectors represent a
/// basis of the quotient, and the reduced echelon form of B in Z-coordinates.
template <ExactField F>
struct QuotientFrame {
    Echelon<F> b_in_z;
    std::vector<std::size_t> representatives;
};

template <ExactField F>
QuotientFrame<F> quotient_frame(const Subspace<F>& z, const Subspace<F>& b)
{
    const F& field = z.field();
    std::vector<SparseVector<F>> rows;
    for (const auto& v : b.basis()) {
        auto c = z.coordinates(v);
        if (!c)
            throw LinalgError("NotASubspace", "quotient Z/B with B not contained in Z");
        SparseVector<F> row;
        for (std::size_t i = 0; i < c->size(); ++i)
            if (!field.is_zero((*c)[i]))
                row.push_back({i, (*c)[i]});
        rows.push_back(std::move(row));
    }
    QuotientFrame<F> frame{rref(Matrix<F>::from_rows(field, z.dim(), rows)), {}};
    std::vector<bool> is_pivot(z.dim(), false);
    for (auto p : frame.b_in_z.pivots)
        is_pivot[p] = true;
    for (std::size_t i = 0; i < z.dim(); ++i)
        if (!is_pivot[i])
            frame.representatives.push_back(i);
    return frame;
}

} // namespace detail

/// Matrix of the map Zs/Bs → Zd/Bd induced by t, in the quotient bases
/// spanned by the non-pivot echelon vectors of each Z. Throws
/// LinalgError(NotChainCompatible) unless t(Zs) ⊆ Zd and t(Bs) ⊆ Bd.
template <ExactField F>
InducedMap<F> induced_quotient_map(const Matrix<F>& t, const Subspace<F>& zs, const Subspace<F>& bs,
                                   const Subspace<F>& zd, const Subspace<F>& bd)
{
    const F& field = t.field();
    if (t.cols() != zs.ambient_dim() || t.rows() != zd.ambient_dim())
        throw LinalgError("ShapeMismatch", "induced map: T does not match the ambient spaces");
    for (const auto& v : zs.basis())
        if (!zd.contains(t.apply(v)))
            throw LinalgError("NotChainCompatible", "T does not map cocycles to cocycles");
    for (const auto& v : bs.basis())
        if (!bd.contains(t.apply(v)))
            throw LinalgError("NotChainCompatible", "T does not map coboundaries to coboundaries");

    const auto src = detail::quotient_frame(zs, bs);
    const auto dst = detail::quotient_frame(zd, bd);
    std::vector<std::ptrdiff_t> dst_position(zd.dim(), -1);
    for (std::size_t i = 0; i < dst.representatives.size(); ++i)
        dst_position[dst.representatives[i]] = static_cast<std::ptrdiff_t>(i);

    std::vector<SparseVector<F>> columns;
    for (auto j : src.representatives) {
        auto coords = *zd.coordinates(t.apply(zs.basis()[j]));
        // Reduce modulo B: the echelon rows have zeros at all other pivots.
        const auto& e = dst.b_in_z;
        for (std::size_t r = 0; r < e.rows.size(); ++r) {
            const auto c = coords[e.pivots[r]];
            if (field.is_zero(c))
                continue;
            for (const auto& x : e.rows[r])
                coords[x.index] = field.sub_mul(coords[x.index], c, x.value);
        }
        SparseVector<F> col;
        for (std::size_t i = 0; i < coords.size(); ++i)
            if (dst_position[i] >= 0 && !field.is_zero(coords[i]))
                col.push_back({static_cast<std::size_t>(dst_position[i]), coords[i]});
        columns.push_back(std::move(col));
    }
    auto matrix = Matrix<F>::from_rows(field, dst.representatives.size(), columns).transpose();
    const auto r = rank(matrix);
    const bool square = matrix.rows() == matrix.cols();
    return {std::move(matrix), r, square && r == matrix.rows()};
}

} // namespace hochcat
