#pragma once

#include <complex>

#include <Eigen/Dense>

namespace acsa {

using Complex = std::complex<double>;

/// Basis ordering used everywhere: 0 = |c> (upper), 1 = |b>, 2 = |a>.
enum class Level : int { c = 0, b = 1, a = 2 };

constexpr int index(Level level) { return static_cast<int>(level); }

using Matrix3 = Eigen::Matrix<Complex, 3, 3>;
using Vector3 = Eigen::Matrix<Complex, 3, 1>;

/// Column-major vectorization of a 3x3 operator: element (i, j) sits at i + 3 j.
using Vector9 = Eigen::Matrix<Complex, 9, 1>;
using Superoperator = Eigen::Matrix<Complex, 9, 9>;

inline Vector9 vectorize(const Matrix3& m) {
    Vector9 v;
    for (int j = 0; j < 3; ++j)
        for (int i = 0; i < 3; ++i) v(i + 3 * j) = m(i, j);
    return v;
}

inline Matrix3 unvectorize(const Vector9& v) {
    Matrix3 m;
    for (int j = 0; j < 3; ++j)
        for (int i = 0; i < 3; ++i) m(i, j) = v(i + 3 * j);
    return m;
}

}  // namespace acsa
