#include "horadam/mat2.hpp"

#include "horadam/error.hpp"

namespace horadam {

Mat2 Mat2::inverse() const {
    const Rational det = determinant();
    if (det.is_zero()) throw SingularityError("matrix is singular");
    const Rational inv = det.inverse();
    return {a22 * inv, -a12 * inv, -a21 * inv, a11 * inv};
}

Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.a11 * y.a11 + x.a12 * y.a21, x.a11 * y.a12 + x.a12 * y.a22,
            x.a21 * y.a11 + x.a22 * y.a21, x.a21 * y.a12 + x.a22 * y.a22};
}

Mat2 mat_pow(const Mat2& m, std::int64_t n) {
    if (n < 0) {
        if (m.determinant().is_zero()) throw SingularityError("negative power of a singular matrix");
        // -(INT64_MIN) overflows; split off one factor first.
        return mat_pow(m.inverse(), -(n + 1)) * m.inverse();
    }
    Mat2 result = Mat2::identity();
    Mat2 base = m;
    auto e = static_cast<std::uint64_t>(n);
    while (e != 0) {
        if (e & 1U) result = result * base;
        e >>= 1U;
        if (e != 0) base = base * base;
    }
    return result;
}

}  // namespace horadam
