#include "slk/numeric.hpp"

#include <stdexcept>

namespace slk {

Rational make_rational(long long num, long long den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational q(static_cast<long>(num), static_cast<long>(den));
    q.canonicalize();
    return q;
}

int sign_of(const Rational& q) { return sgn(q); }

Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
Vec3 operator*(const Rational& s, const Vec3& v) { return {s * v.x, s * v.y, s * v.z}; }

Rational dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

int orient3d(const Point3& a, const Point3& b, const Point3& c, const Point3& d) {
    return sgn(dot(cross(b - a, c - a), d - a));
}

long long factorial64(int k) {
    if (k < 0) throw std::invalid_argument("factorial of negative number");
    if (k > 20) throw std::overflow_error("factorial64 beyond 64-bit range");
    long long r = 1;
    for (int i = 2; i <= k; ++i) r *= i;
    return r;
}

long long binomial64(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    long long r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i; // exact: r*(n-k+i) is divisible by i here
    }
    return r;
}

} // namespace slk
