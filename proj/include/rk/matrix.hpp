#pragma once

#include <cassert>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "rk/errors.hpp"
#include "rk/scalar.hpp"

namespace rk {

template <ScalarType T>
using Vector = std::vector<T>;

/// Dense row-major matrix over a real or complex 64-bit scalar field.
/// Rows are exposed as contiguous views; the storage is immutable in every
/// library operation once constructed.
template <ScalarType T>
class Matrix {
  public:
    using value_type = T;

    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(checked_size(rows, cols)) {}

    Matrix(std::size_t rows, std::size_t cols, std::vector<T> entries)
        : rows_(rows), cols_(cols), data_(std::move(entries)) {
        if (data_.size() != checked_size(rows, cols)) {
            throw DimensionError("matrix entries length " + std::to_string(data_.size()) +
                                 " does not match " + std::to_string(rows) + "x" +
                                 std::to_string(cols));
        }
    }

    Matrix(std::size_t rows, std::size_t cols, std::initializer_list<T> entries)
        : Matrix(rows, cols, std::vector<T>(entries)) {}

    static Matrix identity(std::size_t n) {
        Matrix a(n, n);
        for (std::size_t i = 0; i < n; ++i) a(i, i) = T(1);
        return a;
    }

    static Matrix diagonal(std::span<const T> d) {
        Matrix a(d.size(), d.size());
        for (std::size_t i = 0; i < d.size(); ++i) a(i, i) = d[i];
        return a;
    }
    static Matrix diagonal(std::initializer_list<T> d) {
        return diagonal(std::span<const T>(d.begin(), d.size()));
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Field field() const { return field_of<T>; }

    T& operator()(std::size_t i, std::size_t j) {
        assert(i < rows_ && j < cols_);
        return data_[i * cols_ + j];
    }
    const T& operator()(std::size_t i, std::size_t j) const {
        assert(i < rows_ && j < cols_);
        return data_[i * cols_ + j];
    }

    /// Contiguous view of row i; throws on an out-of-range index.
    std::span<const T> row(std::size_t i) const {
        if (i >= rows_) {
            throw DimensionError("row index " + std::to_string(i) + " out of range for " +
                                 std::to_string(rows_) + " rows");
        }
        return std::span<const T>(data_.data() + i * cols_, cols_);
    }

    std::span<const T> data() const { return data_; }
    std::span<T> mutable_data() { return data_; }

    friend bool operator==(const Matrix& a, const Matrix& b) = default;

  private:
    static std::size_t checked_size(std::size_t rows, std::size_t cols) {
        if (rows == 0 || cols == 0) {
            throw DimensionError("matrix dimensions must be at least 1x1");
        }
        return rows * cols;
    }

    std::size_t rows_;
    std::size_t cols_;
    std::vector<T> data_;
};

using AnyMatrix = std::variant<Matrix<double>, Matrix<Complex>>;
using AnyVector = std::variant<Vector<double>, Vector<Complex>>;

inline Field field_of_any(const AnyMatrix& m) {
    return std::holds_alternative<Matrix<double>>(m) ? Field::Real : Field::Complex;
}
inline Field field_of_any(const AnyVector& v) {
    return std::holds_alternative<Vector<double>>(v) ? Field::Real : Field::Complex;
}

} // namespace rk
