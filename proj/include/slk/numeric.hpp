#pragma once

#include <gmpxx.h>

#include <cstdint>

namespace slk {

/// Arbitrary-precision rational, always kept in lowest terms.
using Rational = mpq_class;
using BigInt = mpz_class;

/// Canonicalized rational from an integer pair. mpq_class does not reduce on
/// construction, so every entry point that builds a Rational from raw
/// numerator/denominator must go through here.
Rational make_rational(long long num, long long den = 1);

int sign_of(const Rational& q);

/// Exact 3-vector over the rationals. Doubles as a point.
struct Vec3 {
    Rational x, y, z;

    Vec3() : x(0), y(0), z(0) {}
    Vec3(Rational xx, Rational yy, Rational zz)
        : x(std::move(xx)), y(std::move(yy)), z(std::move(zz)) {}

    bool operator==(const Vec3& o) const { return x == o.x && y == o.y && z == o.z; }
    bool is_zero() const { return x == 0 && y == 0 && z == 0; }
};

using Point3 = Vec3;

Vec3 operator-(const Vec3& a, const Vec3& b);
Vec3 operator+(const Vec3& a, const Vec3& b);
Vec3 operator*(const Rational& s, const Vec3& v);
Rational dot(const Vec3& a, const Vec3& b);
Vec3 cross(const Vec3& a, const Vec3& b);

/// sign of det[b-a, c-a, d-a]; positive iff d lies on the side of plane (a,b,c)
/// pointed to by (b-a) x (c-a).
int orient3d(const Point3& a, const Point3& b, const Point3& c, const Point3& d);

/// Exact factorial / binomial in 64-bit range (n <= 20, ample for desk scale).
long long factorial64(int k);
long long binomial64(int n, int k);

} // namespace slk
