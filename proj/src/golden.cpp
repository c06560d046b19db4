#include "gtz/golden.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "gtz/error.hpp"

namespace gtz {
namespace {

int sign_of(const Rational& r) { return sgn(r); }

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

std::strong_ordering from_cmp(int c) {
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

} // namespace

Rational parse_rational(std::string_view text) {
    std::string_view body = text;
    if (body.starts_with('-')) body.remove_prefix(1);
    auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? "1" : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
        throw ParseError("malformed rational '" + std::string(text) + "'", std::string(text), 0);
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0)
        throw ParseError("zero denominator in '" + std::string(text) + "'", std::string(text),
                         text.size());
    if (text.starts_with('-')) n = -n;
    Rational r(n, d);
    r.canonicalize();
    return r;
}

std::string format_rational(const Rational& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

// ---------------------------------------------------------------- GoldenScalar

GoldenScalar::GoldenScalar(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {
    canonicalize();
}

void GoldenScalar::canonicalize() {
    a_.canonicalize();
    b_.canonicalize();
}

GoldenScalar GoldenScalar::phi() { return {Rational(1, 2), Rational(1, 2)}; }
GoldenScalar GoldenScalar::phi_squared() { return {Rational(3, 2), Rational(1, 2)}; }

GoldenScalar GoldenScalar::operator-() const { return {-a_, -b_}; }

GoldenScalar& GoldenScalar::operator+=(const GoldenScalar& o) {
    a_ += o.a_;
    b_ += o.b_;
    return *this;
}

GoldenScalar& GoldenScalar::operator-=(const GoldenScalar& o) {
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
}

GoldenScalar& GoldenScalar::operator*=(const GoldenScalar& o) {
    Rational a = a_ * o.a_ + 5 * b_ * o.b_;
    Rational b = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(a);
    b_ = std::move(b);
    return *this;
}

GoldenScalar& GoldenScalar::operator/=(const GoldenScalar& o) {
    Rational n = o.a_ * o.a_ - 5 * o.b_ * o.b_;
    if (n == 0) throw std::domain_error("GoldenScalar: division by zero");
    *this *= GoldenScalar(o.a_ / n, -o.b_ / n);
    return *this;
}

std::strong_ordering operator<=>(const GoldenScalar& x, const GoldenScalar& y) {
    return from_cmp(gs_sign(x - y));
}

double GoldenScalar::to_double() const {
    return a_.get_d() + b_.get_d() * std::sqrt(5.0);
}

std::string GoldenScalar::to_string() const {
    return format_rational(a_) + " + " + format_rational(b_) + "*sqrt5";
}

GoldenScalar GoldenScalar::parse(std::string_view text) {
    constexpr std::string_view kSep = " + ";
    constexpr std::string_view kRoot = "*sqrt5";
    auto sep = text.find(kSep);
    if (sep == std::string_view::npos) return {parse_rational(text), 0};
    std::string_view rhs = text.substr(sep + kSep.size());
    if (!rhs.ends_with(kRoot))
        throw ParseError("golden scalar must end in '*sqrt5'", std::string(text), text.size());
    rhs.remove_suffix(kRoot.size());
    return {parse_rational(text.substr(0, sep)), parse_rational(rhs)};
}

int gs_sign(const GoldenScalar& x) {
    int sa = sign_of(x.a());
    int sb = sign_of(x.b());
    if (sa >= 0 && sb >= 0) return (sa > 0 || sb > 0) ? 1 : 0;
    if (sa <= 0 && sb <= 0) return -1;
    // Mixed signs: the larger of a^2 and 5b^2 wins. They cannot tie since
    // sqrt5 is irrational and neither term is zero here.
    Rational a2 = x.a() * x.a();
    Rational b2 = 5 * x.b() * x.b();
    return a2 > b2 ? sa : sb;
}

// ---------------------------------------------------------------- CycPoint

CycPoint::CycPoint(Rational c0, Rational c1, Rational c2, Rational c3)
    : c_{std::move(c0), std::move(c1), std::move(c2), std::move(c3)} {
    for (auto& c : c_) c.canonicalize();
}

CycPoint CycPoint::zeta(int k) {
    int m = ((k % 5) + 5) % 5;
    switch (m) {
    case 0: return {1, 0, 0, 0};
    case 1: return {0, 1, 0, 0};
    case 2: return {0, 0, 1, 0};
    case 3: return {0, 0, 0, 1};
    default: return {-1, -1, -1, -1};
    }
}

CycPoint CycPoint::from_golden(const GoldenScalar& g) {
    // sqrt5 = -1 - 2*zeta^2 - 2*zeta^3.
    return {g.a() - g.b(), 0, -2 * g.b(), -2 * g.b()};
}

std::array<Rational, 5> CycPoint::as5() const { return {c_[0], c_[1], c_[2], c_[3], 0}; }

CycPoint CycPoint::from5(const std::array<Rational, 5>& d) {
    return {d[0] - d[4], d[1] - d[4], d[2] - d[4], d[3] - d[4]};
}

CycPoint CycPoint::operator-() const { return {-c_[0], -c_[1], -c_[2], -c_[3]}; }

CycPoint& CycPoint::operator+=(const CycPoint& o) {
    for (std::size_t i = 0; i < 4; ++i) c_[i] += o.c_[i];
    return *this;
}

CycPoint& CycPoint::operator-=(const CycPoint& o) {
    for (std::size_t i = 0; i < 4; ++i) c_[i] -= o.c_[i];
    return *this;
}

CycPoint& CycPoint::operator*=(const CycPoint& o) {
    // Cyclic convolution modulo zeta^5 = 1, then drop the zeta^4 term.
    std::array<Rational, 5> d{0, 0, 0, 0, 0};
    for (std::size_t i = 0; i < 4; ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < 4; ++j)
            if (o.c_[j] != 0) d[(i + j) % 5] += c_[i] * o.c_[j];
    }
    *this = from5(d);
    return *this;
}

CycPoint& CycPoint::operator*=(const Rational& r) {
    for (auto& c : c_) c *= r;
    return *this;
}

CycPoint CycPoint::conj() const { return from5({c_[0], 0, c_[3], c_[2], c_[1]}); }

std::strong_ordering operator<=>(const CycPoint& x, const CycPoint& y) {
    for (std::size_t i = 0; i < 4; ++i) {
        int c = cmp(x.c_[i], y.c_[i]);
        if (c != 0) return from_cmp(c);
    }
    return std::strong_ordering::equal;
}

bool CycPoint::is_real() const { return c_[1] == 0 && c_[2] == c_[3]; }

GoldenScalar CycPoint::as_golden() const {
    if (!is_real()) throw std::domain_error("CycPoint::as_golden: point is not real");
    // c0 + c2*(zeta^2 + zeta^3), with zeta^2 + zeta^3 = -(1 + sqrt5)/2.
    Rational half(1, 2);
    return {c_[0] - c_[2] * half, -c_[2] * half};
}

GoldenScalar CycPoint::real_part() const {
    CycPoint twice = *this + conj();
    twice *= Rational(1, 2);
    return twice.as_golden();
}

int CycPoint::imag_sign() const {
    // Im z = sin36 * ((c1 - c4) * phi + (c2 - c3)) with c4 = 0.
    GoldenScalar v = GoldenScalar::phi() * GoldenScalar(c_[1]) + GoldenScalar(c_[2] - c_[3]);
    return gs_sign(v);
}

std::complex<double> CycPoint::to_complex() const {
    std::complex<double> out = 0;
    for (std::size_t k = 0; k < 4; ++k) {
        double ang = 2.0 * std::numbers::pi * static_cast<double>(k) / 5.0;
        out += c_[k].get_d() * std::complex<double>(std::cos(ang), std::sin(ang));
    }
    return out;
}

GoldenScalar sq_distance(const CycPoint& p, const CycPoint& q) {
    CycPoint d = p - q;
    return (d * d.conj()).as_golden();
}

int compare_imag(const CycPoint& p, const CycPoint& q) { return (p - q).imag_sign(); }

int compare_real(const CycPoint& p, const CycPoint& q) {
    return gs_sign((p - q).real_part());
}

int orientation(const CycPoint& p, const CycPoint& q, const CycPoint& r) {
    return ((q - p).conj() * (r - p)).imag_sign();
}

std::string_view shape_name(ShapeClass s) noexcept {
    switch (s) {
    case ShapeClass::GoldenTriangle: return "GoldenTriangle";
    case ShapeClass::GoldenGnomon: return "GoldenGnomon";
    case ShapeClass::Degenerate: return "Degenerate";
    case ShapeClass::Other: return "Other";
    }
    return "?";
}

ShapeClass classify_triangle(const CycPoint& p, const CycPoint& q, const CycPoint& r) {
    if (orientation(p, q, r) == 0) return ShapeClass::Degenerate;
    std::array<GoldenScalar, 3> l = {sq_distance(p, q), sq_distance(q, r), sq_distance(r, p)};
    std::sort(l.begin(), l.end());
    const GoldenScalar long_sq = GoldenScalar::phi_squared() * l[0];
    if (l[1] == l[2] && l[2] == long_sq) return ShapeClass::GoldenTriangle;
    if (l[0] == l[1] && l[2] == long_sq) return ShapeClass::GoldenGnomon;
    return ShapeClass::Other;
}

// ---------------------------------------------------------------- Isometry

Isometry Isometry::translation(CycPoint offset) { return {Kind::Translation, std::move(offset)}; }

Isometry Isometry::reflection(CycPoint offset) {
    return {Kind::ReflectThenTranslate, std::move(offset)};
}

Isometry Isometry::mirror_through(const CycPoint& m) { return reflection(m - m.conj()); }

CycPoint Isometry::operator()(const CycPoint& p) const {
    return (reflects() ? p.conj() : p) + offset;
}

CycPoint apply_isometry(const Isometry& m, const CycPoint& p) { return m(p); }

Isometry compose(const Isometry& a, const Isometry& b) {
    // a(b(p)) = A(B(p) + ob) + oa where A, B are identity or conj.
    CycPoint off = (a.reflects() ? b.offset.conj() : b.offset) + a.offset;
    bool reflect = a.reflects() != b.reflects();
    return {reflect ? Isometry::Kind::ReflectThenTranslate : Isometry::Kind::Translation, off};
}

std::string_view isometry_kind_name(Isometry::Kind k) noexcept {
    return k == Isometry::Kind::Translation ? "Translation" : "ReflectThenTranslate";
}

} // namespace gtz
