#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace su2ab {

// Exact rational on int64 with __int128 intermediates. All torus geometry
// runs on these; overflow aborts loudly instead of corrupting a result.
struct Rat {
    long long num = 0;
    long long den = 1;

    Rat() = default;
    Rat(long long n) : num(n), den(1) {}
    Rat(long long n, long long d) : num(n), den(d) { reduce(); }

    static long long checked(__int128 x) {
        if (x > INT64_MAX / 4 || x < INT64_MIN / 4)
            throw std::overflow_error("rational overflow");
        return static_cast<long long>(x);
    }

    void reduce() {
        if (den == 0) throw std::domain_error("zero denominator");
        if (den < 0) { num = -num; den = -den; }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
        if (num == 0) den = 1;
    }

    friend Rat operator+(const Rat& a, const Rat& b) {
        __int128 n = (__int128)a.num * b.den + (__int128)b.num * a.den;
        __int128 d = (__int128)a.den * b.den;
        __int128 g = gcd128(n, d);
        return Rat(checked(n / g), checked(d / g));
    }
    friend Rat operator-(const Rat& a, const Rat& b) { return a + Rat(-b.num, b.den); }
    Rat operator-() const { return Rat(-num, den); }
    friend Rat operator*(const Rat& a, const Rat& b) {
        __int128 n = (__int128)a.num * b.num;
        __int128 d = (__int128)a.den * b.den;
        __int128 g = gcd128(n, d);
        return Rat(checked(n / g), checked(d / g));
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.num == 0) throw std::domain_error("division by zero");
        return a * Rat(b.den, b.num);
    }
    friend bool operator==(const Rat& a, const Rat& b) { return a.num == b.num && a.den == b.den; }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) {
        return (__int128)a.num * b.den < (__int128)b.num * a.den;
    }
    friend bool operator<=(const Rat& a, const Rat& b) { return a == b || a < b; }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator>=(const Rat& a, const Rat& b) { return b <= a; }

    // floor(num/den)
    long long floor() const {
        long long q = num / den;
        if (num % den != 0 && num < 0) --q;
        return q;
    }

    // representative in [0,1)
    Rat mod1() const { return *this - Rat(floor()); }

    bool is_integer() const { return den == 1; }
    double to_double() const { return (double)num / (double)den; }

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }

  private:
    static __int128 gcd128(__int128 a, __int128 b) {
        if (a < 0) a = -a;
        if (b < 0) b = -b;
        while (b) { __int128 t = a % b; a = b; b = t; }
        return a == 0 ? 1 : a;
    }
};

// Angle as a fraction of a full turn, normalized into [0,1).
// theta = 2*pi*value; every construction in the recipes stays rational here.
struct Turn {
    Rat v;

    Turn() = default;
    explicit Turn(const Rat& q) : v(q.mod1()) {}
    Turn(long long n, long long d) : v(Rat(n, d).mod1()) {}

    friend Turn operator+(const Turn& a, const Turn& b) { return Turn(a.v + b.v); }
    friend Turn operator-(const Turn& a, const Turn& b) { return Turn(a.v - b.v); }
    Turn operator-() const { return Turn(-v); }
    friend bool operator==(const Turn& a, const Turn& b) { return a.v == b.v; }
    friend bool operator!=(const Turn& a, const Turn& b) { return a.v != b.v; }
    friend bool operator<(const Turn& a, const Turn& b) { return a.v < b.v; }

    bool is_zero() const { return v.num == 0; }
    bool is_half() const { return v.num * 2 == v.den; }
    bool is_central() const { return is_zero() || is_half(); }

    double radians() const { return 6.283185307179586476925287 * v.to_double(); }
    std::string str() const { return v.str(); }
};

inline Turn turn_normalize(const Rat& q) { return Turn(q); }

// ax + by = gcd(a,b); returns gcd
inline long long ext_gcd(long long a, long long b, long long& x, long long& y) {
    if (b == 0) { x = (a < 0) ? -1 : 1; y = 0; return a < 0 ? -a : a; }
    // iterative to keep coefficients small
    long long x0 = 1, y0 = 0, x1 = 0, y1 = 1;
    long long r0 = a, r1 = b;
    while (r1 != 0) {
        long long q = r0 / r1;
        long long r2 = r0 - q * r1; r0 = r1; r1 = r2;
        long long x2 = x0 - q * x1; x0 = x1; x1 = x2;
        long long y2 = y0 - q * y1; y0 = y1; y1 = y2;
    }
    if (r0 < 0) { r0 = -r0; x0 = -x0; y0 = -y0; }
    x = x0; y = y0;
    return r0;
}

}  // namespace su2ab
