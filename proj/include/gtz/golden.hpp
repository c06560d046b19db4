#pragma once

// Exact planar geometry over Q(zeta), zeta = exp(2*pi*i/5).
//
// Points are c0 + c1*zeta + c2*zeta^2 + c3*zeta^3 with rational coefficients
// (zeta^4 is eliminated with 1 + zeta + ... + zeta^4 = 0). Every golden
// triangle and gnomon with sides in the pentagon directions has vertices in
// this field, and all squared lengths land in its real subfield Q(sqrt5),
// so every equality and ordering decision below is exact.

#include <array>
#include <compare>
#include <complex>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace gtz {

using Rational = mpq_class;

Rational parse_rational(std::string_view text);
/// Always "p/q" with q >= 1.
std::string format_rational(const Rational& r);

/// a + b*sqrt5.
class GoldenScalar {
public:
    GoldenScalar() = default;
    GoldenScalar(Rational a, Rational b = 0);

    static GoldenScalar phi();
    static GoldenScalar phi_squared();

    const Rational& a() const noexcept { return a_; }
    const Rational& b() const noexcept { return b_; }

    GoldenScalar operator-() const;
    GoldenScalar& operator+=(const GoldenScalar& o);
    GoldenScalar& operator-=(const GoldenScalar& o);
    GoldenScalar& operator*=(const GoldenScalar& o);
    /// Throws std::domain_error on division by zero.
    GoldenScalar& operator/=(const GoldenScalar& o);

    friend GoldenScalar operator+(GoldenScalar x, const GoldenScalar& y) { return x += y; }
    friend GoldenScalar operator-(GoldenScalar x, const GoldenScalar& y) { return x -= y; }
    friend GoldenScalar operator*(GoldenScalar x, const GoldenScalar& y) { return x *= y; }
    friend GoldenScalar operator/(GoldenScalar x, const GoldenScalar& y) { return x /= y; }

    friend bool operator==(const GoldenScalar& x, const GoldenScalar& y) {
        return x.a_ == y.a_ && x.b_ == y.b_;
    }
    /// Numeric order, decided exactly.
    friend std::strong_ordering operator<=>(const GoldenScalar& x, const GoldenScalar& y);

    double to_double() const;
    /// "a/b + c/d*sqrt5".
    std::string to_string() const;
    static GoldenScalar parse(std::string_view text);

private:
    void canonicalize();

    Rational a_ = 0;
    Rational b_ = 0;
};

/// Exact sign of a + b*sqrt5.
int gs_sign(const GoldenScalar& x);

/// Element of Q(zeta), read as a point of the plane.
class CycPoint {
public:
    CycPoint() = default;
    CycPoint(Rational c0, Rational c1 = 0, Rational c2 = 0, Rational c3 = 0);

    /// zeta^k for any integer k.
    static CycPoint zeta(int k = 1);
    /// Embeds a real a + b*sqrt5 (sqrt5 = 1 + 2*zeta + 2*zeta^4).
    static CycPoint from_golden(const GoldenScalar& g);

    const Rational& operator[](std::size_t i) const { return c_[i]; }
    const std::array<Rational, 4>& coeffs() const noexcept { return c_; }

    CycPoint operator-() const;
    CycPoint& operator+=(const CycPoint& o);
    CycPoint& operator-=(const CycPoint& o);
    CycPoint& operator*=(const CycPoint& o);
    CycPoint& operator*=(const Rational& r);

    friend CycPoint operator+(CycPoint x, const CycPoint& y) { return x += y; }
    friend CycPoint operator-(CycPoint x, const CycPoint& y) { return x -= y; }
    friend CycPoint operator*(CycPoint x, const CycPoint& y) { return x *= y; }
    friend CycPoint operator*(CycPoint x, const Rational& r) { return x *= r; }
    friend CycPoint operator*(const Rational& r, CycPoint x) { return x *= r; }

    /// Complex conjugation, zeta -> zeta^4 (mirror in the real axis).
    CycPoint conj() const;

    /// Coefficient-wise equality; the basis makes this equal to point equality.
    friend bool operator==(const CycPoint& x, const CycPoint& y) { return x.c_ == y.c_; }
    /// Lexicographic on coefficients; a storage order, not a geometric one.
    friend std::strong_ordering operator<=>(const CycPoint& x, const CycPoint& y);

    bool is_real() const;
    /// Throws std::domain_error unless is_real().
    GoldenScalar as_golden() const;
    /// Real part, always in Q(sqrt5).
    GoldenScalar real_part() const;
    /// Exact sign of the imaginary part.
    int imag_sign() const;

    std::complex<double> to_complex() const;

private:
    static CycPoint from5(const std::array<Rational, 5>& d);
    std::array<Rational, 5> as5() const;

    std::array<Rational, 4> c_{0, 0, 0, 0};
};

/// |p - q|^2.
GoldenScalar sq_distance(const CycPoint& p, const CycPoint& q);
/// Exact comparison of y-coordinates: sign(Im p - Im q).
int compare_imag(const CycPoint& p, const CycPoint& q);
/// Exact comparison of x-coordinates.
int compare_real(const CycPoint& p, const CycPoint& q);

/// +1 counter-clockwise, -1 clockwise, 0 collinear.
int orientation(const CycPoint& p, const CycPoint& q, const CycPoint& r);

enum class ShapeClass { GoldenTriangle, GoldenGnomon, Degenerate, Other };

std::string_view shape_name(ShapeClass s) noexcept;
inline bool is_golden_shape(ShapeClass s) noexcept {
    return s == ShapeClass::GoldenTriangle || s == ShapeClass::GoldenGnomon;
}

ShapeClass classify_triangle(const CycPoint& p, const CycPoint& q, const CycPoint& r);

/// p -> p + offset, or p -> conj(p) + offset (mirror in the real axis, then
/// translate). A reflection that fixes a point m maps p to conj(p) + m - conj(m),
/// i.e. mirrors in the horizontal line through m.
struct Isometry {
    enum class Kind { Translation, ReflectThenTranslate };

    Kind kind = Kind::Translation;
    CycPoint offset;

    static Isometry translation(CycPoint offset);
    static Isometry reflection(CycPoint offset);
    /// Mirror in the horizontal line through `m`.
    static Isometry mirror_through(const CycPoint& m);

    bool reflects() const noexcept { return kind == Kind::ReflectThenTranslate; }
    CycPoint operator()(const CycPoint& p) const;

    friend bool operator==(const Isometry&, const Isometry&) = default;
};

CycPoint apply_isometry(const Isometry& m, const CycPoint& p);
/// (a o b)(p) = a(b(p)).
Isometry compose(const Isometry& a, const Isometry& b);
std::string_view isometry_kind_name(Isometry::Kind k) noexcept;

} // namespace gtz
