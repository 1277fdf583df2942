#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <string>

#include "rk/matrix.hpp"

namespace rk {

/// Inner product ⟨a, x⟩ = Σ_j conj(a_j)·x_j, conjugate-linear in the first
/// argument. In real mode this is the plain dot product. The projection step
/// relies on this convention: ⟨a, x + c·a⟩ = ⟨a, x⟩ + c‖a‖².
template <ScalarType T>
T inner(std::span<const T> a, std::span<const T> x) {
    if (a.size() != x.size()) {
        throw DimensionError("inner: length mismatch " + std::to_string(a.size()) + " vs " +
                             std::to_string(x.size()));
    }
    T acc{};
    for (std::size_t j = 0; j < a.size(); ++j) acc += conj_of(a[j]) * x[j];
    return acc;
}

template <ScalarType T>
T inner(const Vector<T>& a, const Vector<T>& x) {
    return inner(std::span<const T>(a), std::span<const T>(x));
}

template <ScalarType T>
double norm_sq(std::span<const T> v) {
    double acc = 0.0;
    for (const T& e : v) acc += abs_sq(e);
    return acc;
}

template <ScalarType T>
double norm_sq(const Vector<T>& v) {
    return norm_sq(std::span<const T>(v));
}

template <ScalarType T>
double norm(std::span<const T> v) {
    return std::sqrt(norm_sq(v));
}

template <ScalarType T>
double norm(const Vector<T>& v) {
    return std::sqrt(norm_sq(std::span<const T>(v)));
}

/// ‖a_i‖²₂ of row i.
template <ScalarType T>
double row_norm_sq(const Matrix<T>& a, std::size_t i) {
    return norm_sq(a.row(i));
}

/// ‖A‖²_F = Σ_i ‖a_i‖².
template <ScalarType T>
double frobenius_sq(const Matrix<T>& a) {
    return norm_sq(a.data());
}

template <ScalarType T>
Vector<T> multiply(const Matrix<T>& a, const Vector<T>& x) {
    if (x.size() != a.cols()) {
        throw DimensionError("multiply: vector length " + std::to_string(x.size()) +
                             " does not match " + std::to_string(a.cols()) + " columns");
    }
    Vector<T> y(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        auto row = a.row(i);
        T acc{};
        for (std::size_t j = 0; j < row.size(); ++j) acc += row[j] * x[j];
        y[i] = acc;
    }
    return y;
}

/// y ↦ A*y (conjugate transpose applied to y).
template <ScalarType T>
Vector<T> adjoint_multiply(const Matrix<T>& a, const Vector<T>& y) {
    if (y.size() != a.rows()) {
        throw DimensionError("adjoint_multiply: vector length " + std::to_string(y.size()) +
                             " does not match " + std::to_string(a.rows()) + " rows");
    }
    Vector<T> x(a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        auto row = a.row(i);
        for (std::size_t j = 0; j < row.size(); ++j) x[j] += conj_of(row[j]) * y[i];
    }
    return x;
}

/// ‖u − v‖₂.
template <ScalarType T>
double distance(std::span<const T> u, std::span<const T> v) {
    if (u.size() != v.size()) {
        throw DimensionError("distance: length mismatch");
    }
    double acc = 0.0;
    for (std::size_t j = 0; j < u.size(); ++j) acc += abs_sq(u[j] - v[j]);
    return std::sqrt(acc);
}

template <ScalarType T>
double distance(const Vector<T>& u, const Vector<T>& v) {
    return distance(std::span<const T>(u), std::span<const T>(v));
}

} // namespace rk
