#pragma once

#include <cstdint>

#include "horadam/rational.hpp"

namespace horadam {

/// 2x2 matrix over the rationals, row-major:
///   [ a11 a12 ]
///   [ a21 a22 ]
struct Mat2 {
    Rational a11{1}, a12{0}, a21{0}, a22{1};

    static Mat2 identity() { return {}; }

    Rational determinant() const { return a11 * a22 - a12 * a21; }

    /// Throws SingularityError when the determinant is zero.
    Mat2 inverse() const;

    friend Mat2 operator*(const Mat2& x, const Mat2& y);
    friend bool operator==(const Mat2& x, const Mat2& y) = default;
};

/// m^n by binary exponentiation. n < 0 uses the inverse and throws
/// SingularityError for singular m.
Mat2 mat_pow(const Mat2& m, std::int64_t n);

}  // namespace horadam
