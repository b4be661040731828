#pragma once

// Exact elements of Q(i, sqrt2), stored as a + b*i + c*s2 + d*i*s2.

#include <gmpxx.h>

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ck {

using Rational = mpq_class;

class Scalar {
public:
    Scalar() = default;
    Scalar(long v) : c_{Rational(v), 0, 0, 0} {}
    Scalar(const Rational& r);
    Scalar(Rational a, Rational b, Rational c, Rational d);

    static Scalar i() { return Scalar(0, 1, 0, 0); }
    static Scalar sqrt2() { return Scalar(0, 0, 1, 0); }
    static Scalar frac(long p, long q) { return Scalar(Rational(p, q)); }

    const Rational& re() const { return c_[0]; }
    const Rational& im() const { return c_[1]; }
    const Rational& s2() const { return c_[2]; }
    const Rational& is2() const { return c_[3]; }
    const Rational& component(int k) const { return c_[k]; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o) { return *this *= o.inv(); }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inv(); }

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }
    // Total order on the component tuple, used for canonical sorting only.
    bool lex_less(const Scalar& o) const;

    // throws std::domain_error on zero
    Scalar inv() const;
    Scalar conj() const;

    std::string str() const;
    // grammar: sum of terms  [+-] [rational] [*i] [*s2], also bare i, s2, i*s2
    static Scalar parse(std::string_view text);

    std::size_t hash() const;

private:
    std::array<Rational, 4> c_;
};

inline Scalar scalar_add(const Scalar& x, const Scalar& y) { return x + y; }
inline Scalar scalar_mul(const Scalar& x, const Scalar& y) { return x * y; }
inline Scalar scalar_neg(const Scalar& x) { return -x; }
inline Scalar scalar_inv(const Scalar& x) { return x.inv(); }
inline Scalar scalar_conj(const Scalar& x) { return x.conj(); }

std::string rational_str(const Rational& r);

}  // namespace ck
