#pragma once

#include "hochcat/field.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace hochcat {

/// One integer entry of a structural matrix; duplicates are summed on lifting.
struct IntegerEntry {
    std::size_t row;
    std::size_t col;
    std::int64_t value;
};

/// Field-independent assembly target. Every structural matrix of the
/// library (differentials, T, X) has small integer entries, so it is built
/// once and then lifted to the field of interest.
struct IntegerMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<IntegerEntry> entries;

    void add(std::size_t r, std::size_t c, std::int64_t v) { entries.push_back({r, c, v}); }
};

template <class F>
struct Entry {
    std::size_t index;
    typename F::Element value;

    friend bool operator==(const Entry&, const Entry&) = default;
};

/// Sorted by index, no explicit zeros.
template <class F>
using SparseVector = std::vector<Entry<F>>;

enum class Representation { Dense, Sparse };

inline constexpr std::size_t kSparseEntryThreshold = 100000;
inline constexpr std::size_t kSparseColumnThreshold = 4096;

inline Representation representation_for(std::size_t rows, std::size_t cols)
{
    if (cols >= kSparseColumnThreshold || rows * cols >= kSparseEntryThreshold)
        return Representation::Sparse;
    return Representation::Dense;
}

/// Scratch row for sparse accumulation: dense values plus the list of
/// touched positions.
template <ExactField F>
class Accumulator {
public:
    using Element = typename F::Element;

    Accumulator(const F& field, std::size_t size)
        : field_(&field), values_(size, field.zero()), touched_(size, false)
    {
    }

    void add(std::size_t i, const Element& v)
    {
        if (!touched_[i]) {
            touched_[i] = true;
            list_.push_back(i);
            values_[i] = v;
        } else {
            values_[i] = field_->add(values_[i], v);
        }
    }
    /// this += c * row
    void axpy(const Element& c, std::span<const Entry<F>> row)
    {
        for (const auto& e : row)
            add(e.index, field_->mul(c, e.value));
    }
    const Element& operator[](std::size_t i) const { return values_[i]; }
    Element& value(std::size_t i) { return values_[i]; }
    bool touched(std::size_t i) const { return touched_[i]; }

    /// Sorted nonzero entries; resets the accumulator.
    SparseVector<F> extract()
    {
        std::sort(list_.begin(), list_.end());
        SparseVector<F> out;
        out.reserve(list_.size());
        for (auto i : list_) {
            if (!field_->is_zero(values_[i]))
                out.push_back({i, std::move(values_[i])});
            values_[i] = field_->zero();
            touched_[i] = false;
        }
        list_.clear();
        return out;
    }

private:
    const F* field_;
    std::vector<Element> values_;
    std::vector<bool> touched_;
    std::vector<std::size_t> list_;
};

/// Exact matrix over F, stored as sorted (row, col) triplets in compressed
/// row form. No explicit zeros are stored.
template <ExactField F>
class Matrix {
public:
    using Element = typename F::Element;

    struct Triplet {
        std::size_t row;
        std::size_t col;
        Element value;
    };

    Matrix(const F& field, std::size_t rows, std::size_t cols)
        : field_(field), rows_(rows), cols_(cols), row_ptr_(rows + 1, 0)
    {
    }

    static Matrix from_integer(const F& field, const IntegerMatrix& m)
    {
        std::vector<IntegerEntry> sorted = m.entries;
        std::sort(sorted.begin(), sorted.end(),
                  [](const auto& x, const auto& y) { return std::pair(x.row, x.col) < std::pair(y.row, y.col); });
        Matrix out(field, m.rows, m.cols);
        std::size_t i = 0;
        while (i < sorted.size()) {
            std::size_t j = i;
            std::int64_t sum = 0;
            while (j < sorted.size() && sorted[j].row == sorted[i].row && sorted[j].col == sorted[i].col)
                sum += sorted[j++].value;
            auto v = field.from_int(sum);
            if (!field.is_zero(v)) {
                out.entries_.push_back({sorted[i].col, std::move(v)});
                ++out.row_ptr_[sorted[i].row + 1];
            }
            i = j;
        }
        for (std::size_t r = 0; r < m.rows; ++r)
            out.row_ptr_[r + 1] += out.row_ptr_[r];
        return out;
    }

    /// Rows must be sorted and zero-free.
    static Matrix from_rows(const F& field, std::size_t cols, const std::vector<SparseVector<F>>& rows)
    {
        Matrix out(field, rows.size(), cols);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            out.entries_.insert(out.entries_.end(), rows[r].begin(), rows[r].end());
            out.row_ptr_[r + 1] = out.entries_.size();
        }
        return out;
    }

    static Matrix identity(const F& field, std::size_t n)
    {
        Matrix out(field, n, n);
        for (std::size_t i = 0; i < n; ++i) {
            out.entries_.push_back({i, field.one()});
            out.row_ptr_[i + 1] = i + 1;
        }
        return out;
    }

    const F& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t nnz() const { return entries_.size(); }
    bool is_zero() const { return entries_.empty(); }
    Representation representation() const { return representation_for(rows_, cols_); }

    std::span<const Entry<F>> row(std::size_t r) const
    {
        return {entries_.data() + row_ptr_[r], entries_.data() + row_ptr_[r + 1]};
    }

    Element at(std::size_t r, std::size_t c) const
    {
        auto rw = row(r);
        auto it = std::lower_bound(rw.begin(), rw.end(), c, [](const Entry<F>& e, std::size_t k) { return e.index < k; });
        return it != rw.end() && it->index == c ? it->value : field_.zero();
    }

    std::vector<Triplet> triplets() const
    {
        std::vector<Triplet> out;
        out.reserve(nnz());
        for (std::size_t r = 0; r < rows_; ++r)
            for (const auto& e : row(r))
                out.push_back({r, e.index, e.value});
        return out;
    }

    std::vector<SparseVector<F>> row_vectors() const
    {
        std::vector<SparseVector<F>> out(rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            out[r].assign(row(r).begin(), row(r).end());
        return out;
    }

    Matrix transpose() const
    {
        Matrix out(field_, cols_, rows_);
        for (const auto& e : entries_)
            ++out.row_ptr_[e.index + 1];
        for (std::size_t c = 0; c < cols_; ++c)
            out.row_ptr_[c + 1] += out.row_ptr_[c];
        std::vector<std::size_t> fill(out.row_ptr_.begin(), out.row_ptr_.end() - 1);
        out.entries_.resize(entries_.size(), Entry<F>{0, field_.zero()});
        for (std::size_t r = 0; r < rows_; ++r)
            for (const auto& e : row(r))
                out.entries_[fill[e.index]++] = {r, e.value};
        return out;
    }

    /// Column j becomes column cols-1-j.
    Matrix reverse_columns() const
    {
        Matrix out(field_, rows_, cols_);
        out.row_ptr_ = row_ptr_;
        out.entries_.reserve(entries_.size());
        for (std::size_t r = 0; r < rows_; ++r) {
            auto rw = row(r);
            for (auto it = rw.rbegin(); it != rw.rend(); ++it)
                out.entries_.push_back({cols_ - 1 - it->index, it->value});
        }
        return out;
    }

    Matrix scaled(const Element& c) const
    {
        Matrix out(field_, rows_, cols_);
        if (field_.is_zero(c))
            return out;
        out.row_ptr_ = row_ptr_;
        out.entries_.reserve(entries_.size());
        for (const auto& e : entries_)
            out.entries_.push_back({e.index, field_.mul(c, e.value)});
        return out;
    }

    /// Keeps the listed columns, renumbered 0..k-1 in the given order.
    Matrix select_columns(std::span<const std::size_t> keep) const
    {
        std::vector<std::ptrdiff_t> position(cols_, -1);
        for (std::size_t j = 0; j < keep.size(); ++j)
            position[keep[j]] = static_cast<std::ptrdiff_t>(j);
        std::vector<SparseVector<F>> out_rows(rows_);
        for (std::size_t r = 0; r < rows_; ++r) {
            for (const auto& e : row(r))
                if (position[e.index] >= 0)
                    out_rows[r].push_back({static_cast<std::size_t>(position[e.index]), e.value});
            std::sort(out_rows[r].begin(), out_rows[r].end(),
                      [](const auto& x, const auto& y) { return x.index < y.index; });
        }
        return from_rows(field_, keep.size(), out_rows);
    }

    Matrix select_rows(std::span<const std::size_t> keep) const
    {
        std::vector<SparseVector<F>> out_rows;
        out_rows.reserve(keep.size());
        for (auto r : keep)
            out_rows.emplace_back(row(r).begin(), row(r).end());
        return from_rows(field_, cols_, out_rows);
    }

    /// M x for a sparse column vector x.
    SparseVector<F> apply(const SparseVector<F>& x) const
    {
        SparseVector<F> out;
        for (std::size_t r = 0; r < rows_; ++r) {
            auto rw = row(r);
            Element acc = field_.zero();
            auto a = rw.begin();
            auto b = x.begin();
            while (a != rw.end() && b != x.end()) {
                if (a->index < b->index)
                    ++a;
                else if (b->index < a->index)
                    ++b;
                else {
                    acc = field_.add(acc, field_.mul(a->value, b->value));
                    ++a;
                    ++b;
                }
            }
            if (!field_.is_zero(acc))
                out.push_back({r, std::move(acc)});
        }
        return out;
    }

    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.row_ptr_ == b.row_ptr_ && a.entries_ == b.entries_;
    }

private:
    F field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<std::size_t> row_ptr_;
    std::vector<Entry<F>> entries_;
};

/// A·B by row-wise (Gustavson) accumulation. Throws LinalgError(ShapeMismatch).
template <ExactField F>
Matrix<F> product(const Matrix<F>& a, const Matrix<F>& b)
{
    if (a.cols() != b.rows())
        throw LinalgError("ShapeMismatch", "product of " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                                               " and " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    const F& field = a.field();
    Accumulator<F> acc(field, b.cols());
    std::vector<SparseVector<F>> rows(a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (const auto& e : a.row(r))
            acc.axpy(e.value, b.row(e.index));
        rows[r] = acc.extract();
    }
    return Matrix<F>::from_rows(field, b.cols(), rows);
}

template <ExactField F>
Matrix<F> operator*(const Matrix<F>& a, const Matrix<F>& b)
{
    return product(a, b);
}

/// Lexicographically first (row, col) where a and b differ; nothing if equal.
/// Throws LinalgError(ShapeMismatch) on different shapes.
template <ExactField F>
std::optional<std::pair<std::size_t, std::size_t>> first_difference(const Matrix<F>& a, const Matrix<F>& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw LinalgError("ShapeMismatch", "comparing matrices of different shapes");
    for (std::size_t r = 0; r < a.rows(); ++r) {
        auto x = a.row(r);
        auto y = b.row(r);
        std::size_t i = 0, j = 0;
        while (i < x.size() || j < y.size()) {
            if (j == y.size() || (i < x.size() && x[i].index < y[j].index))
                return std::pair(r, x[i].index);
            if (i == x.size() || y[j].index < x[i].index)
                return std::pair(r, y[j].index);
            if (!(x[i].value == y[j].value))
                return std::pair(r, x[i].index);
            ++i;
            ++j;
        }
    }
    return std::nullopt;
}

} // namespace hochcat
