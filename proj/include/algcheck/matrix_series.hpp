#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "algcheck/common.hpp"
#include "algcheck/rational.hpp"

namespace algcheck {

/// Real 2x2 matrix over the scalar type T (double or Rational).
template <typename T>
struct Mat2 {
    T a11{}, a12{}, a21{}, a22{};

    static Mat2 identity() { return {T{1}, T{0}, T{0}, T{1}}; }

    friend bool operator==(const Mat2&, const Mat2&) = default;
};

template <typename T>
[[nodiscard]] Mat2<T> mat_mul(const Mat2<T>& x, const Mat2<T>& y) {
    return {x.a11 * y.a11 + x.a12 * y.a21, x.a11 * y.a12 + x.a12 * y.a22,
            x.a21 * y.a11 + x.a22 * y.a21, x.a21 * y.a12 + x.a22 * y.a22};
}

template <typename T>
[[nodiscard]] Mat2<T> mat_add(const Mat2<T>& x, const Mat2<T>& y) {
    return {x.a11 + y.a11, x.a12 + y.a12, x.a21 + y.a21, x.a22 + y.a22};
}

template <typename T>
[[nodiscard]] Mat2<T> mat_scale(const T& s, const Mat2<T>& x) {
    return {s * x.a11, s * x.a12, s * x.a21, s * x.a22};
}

/// A^k by repeated multiplication.
template <typename T>
[[nodiscard]] Mat2<T> mat_pow(const Mat2<T>& x, int k) {
    if (k < 1) throw PreconditionError("mat_pow needs k >= 1");
    Mat2<T> r = x;
    for (int i = 1; i < k; ++i) r = mat_mul(r, x);
    return r;
}

template <typename T>
[[nodiscard]] T trace(const Mat2<T>& x) {
    return x.a11 + x.a22;
}

template <typename T>
[[nodiscard]] T det(const Mat2<T>& x) {
    return x.a11 * x.a22 - x.a12 * x.a21;
}

/// A + A^2 + ... + A^9, accumulated term by term.
template <typename T>
[[nodiscard]] Mat2<T> power_sum(const Mat2<T>& x) {
    Mat2<T> term = x;
    Mat2<T> sum = x;
    for (int k = 2; k <= 9; ++k) {
        term = mat_mul(term, x);
        sum = mat_add(sum, term);
    }
    return sum;
}

/// (tr(A) + 1)(tr(A^3) + 1) A^5.
template <typename T>
[[nodiscard]] Mat2<T> rhs_factored(const Mat2<T>& x) {
    const T scalar = (trace(x) + T{1}) * (trace(mat_pow(x, 3)) + T{1});
    return mat_scale(scalar, mat_pow(x, 5));
}

struct IdentityReport {
    Mat2<double> lhs;
    Mat2<double> rhs;
    double max_abs_error = 0;
    /// Entrywise |lhs - rhs| / max(1, |lhs|).
    double max_rel_error = 0;
    double det_input = 0;
    bool passed = false;
};

inline constexpr double det_tolerance = 1e-9;

/// Float path. Throws PreconditionError when |det(A) - 1| > 1e-9.
[[nodiscard]] inline IdentityReport verify_identity(const Mat2<double>& x, double tol_rel) {
    for (double v : {x.a11, x.a12, x.a21, x.a22}) {
        if (!std::isfinite(v)) throw ValidationError("matrix entries must be finite");
    }
    IdentityReport r;
    r.det_input = det(x);
    if (std::abs(r.det_input - 1.0) > det_tolerance) {
        throw PreconditionError("identity requires det(A) = 1, got det(A) = " + std::to_string(r.det_input));
    }
    r.lhs = power_sum(x);
    r.rhs = rhs_factored(x);
    const double l[4] = {r.lhs.a11, r.lhs.a12, r.lhs.a21, r.lhs.a22};
    const double h[4] = {r.rhs.a11, r.rhs.a12, r.rhs.a21, r.rhs.a22};
    for (int i = 0; i < 4; ++i) {
        const double e = std::abs(l[i] - h[i]);
        r.max_abs_error = std::max(r.max_abs_error, e);
        r.max_rel_error = std::max(r.max_rel_error, e / std::max(1.0, std::abs(l[i])));
    }
    r.passed = r.max_rel_error <= tol_rel;
    return r;
}

struct ExactIdentityReport {
    Mat2<Rational> lhs;
    Mat2<Rational> rhs;
    bool equal = false;
};

/// Rational path; equality is exact.
[[nodiscard]] inline ExactIdentityReport verify_identity_exact(const Mat2<Rational>& x) {
    if (det(x) != 1) throw PreconditionError("identity requires det(A) = 1, got " + to_fraction_string(det(x)));
    ExactIdentityReport r{power_sum(x), rhs_factored(x)};
    r.equal = r.lhs == r.rhs;
    return r;
}

[[nodiscard]] inline Mat2<double> to_double(const Mat2<Rational>& x) {
    return {x.a11.convert_to<double>(), x.a12.convert_to<double>(), x.a21.convert_to<double>(),
            x.a22.convert_to<double>()};
}

/// Unipotent example [[1,1],[0,1]].
[[nodiscard]] inline Mat2<Rational> unipotent_example() { return {Rational{1}, Rational{1}, Rational{0}, Rational{1}}; }
/// Diagonal example diag(2, 1/2).
[[nodiscard]] inline Mat2<Rational> diagonal_example() {
    return {Rational{2}, Rational{0}, Rational{0}, Rational{1, 2}};
}

namespace detail {

/// Uniform double in [lo, hi) from the top 53 bits; identical on every platform.
inline double uniform(std::mt19937_64& rng, double lo, double hi) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
}

} // namespace detail

/// Deterministic det-1 matrices: a, b, c uniform in [-3, 3] with |a| >= 1e-3
/// (redrawn otherwise) and d = (1 + bc) / a.
[[nodiscard]] inline std::vector<Mat2<double>> random_sl2(std::uint64_t seed, std::size_t count) {
    if (count < 1) throw PreconditionError("random_sl2 needs count >= 1");
    std::mt19937_64 rng{seed};
    std::vector<Mat2<double>> out;
    out.reserve(count);
    while (out.size() < count) {
        double a = 0;
        do {
            a = detail::uniform(rng, -3.0, 3.0);
        } while (std::abs(a) < 1e-3);
        const double b = detail::uniform(rng, -3.0, 3.0);
        const double c = detail::uniform(rng, -3.0, 3.0);
        out.push_back({a, b, c, (1.0 + b * c) / a});
    }
    return out;
}

} // namespace algcheck
