#pragma once

#include <complex>
#include <concepts>
#include <string_view>

namespace rk {

using Complex = std::complex<double>;

/// Scalar field of a matrix or vector. Real entries are stored as double,
/// complex entries as std::complex<double>; 64-bit precision throughout.
enum class Field { Real, Complex };

template <typename T>
concept ScalarType = std::same_as<T, double> || std::same_as<T, Complex>;

template <ScalarType T>
inline constexpr Field field_of = std::same_as<T, Complex> ? Field::Complex : Field::Real;

constexpr std::string_view field_name(Field f) {
    return f == Field::Real ? "real" : "complex";
}

inline double conj_of(double x) { return x; }
inline Complex conj_of(const Complex& z) { return std::conj(z); }

/// |z|² = z·conj(z); nonnegative by construction.
inline double abs_sq(double x) { return x * x; }
inline double abs_sq(const Complex& z) { return std::norm(z); }

inline double real_part(double x) { return x; }
inline double real_part(const Complex& z) { return z.real(); }

inline double abs_of(double x) { return x < 0 ? -x : x; }
inline double abs_of(const Complex& z) { return std::abs(z); }

} // namespace rk
