#pragma once

#include <shv/scalars/rational.hpp>

namespace shv {

// a + b*sqrt(2) with a, b rational: the coefficient field of the free-field
// realisation.
class RationalSqrt2 {
public:
    RationalSqrt2() = default;
    RationalSqrt2(int a) : a_(a) {}
    RationalSqrt2(const Rational& a) : a_(a) {}
    RationalSqrt2(const Rational& a, const Rational& b) : a_(a), b_(b) {}
    static RationalSqrt2 sqrt2() { return RationalSqrt2(Rational(0), Rational(1)); }

    const Rational& rational_part() const { return a_; }
    const Rational& sqrt2_part() const { return b_; }
    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_rational() const { return b_.is_zero(); }

    RationalSqrt2& operator+=(const RationalSqrt2& o) {
        a_ += o.a_;
        if (!o.b_.is_zero()) b_ += o.b_;
        return *this;
    }
    RationalSqrt2& operator-=(const RationalSqrt2& o) {
        a_ -= o.a_;
        if (!o.b_.is_zero()) b_ -= o.b_;
        return *this;
    }
    RationalSqrt2& operator*=(const RationalSqrt2& o);
    RationalSqrt2& operator*=(const Rational& c) {
        a_ *= c;
        if (!b_.is_zero()) b_ *= c;
        return *this;
    }
    RationalSqrt2& operator/=(const RationalSqrt2& o) { return *this *= o.inverse(); }
    RationalSqrt2 operator-() const { return RationalSqrt2(-a_, -b_); }
    RationalSqrt2 inverse() const;
    RationalSqrt2 conjugate() const { return RationalSqrt2(a_, -b_); }

    friend RationalSqrt2 operator+(RationalSqrt2 x, const RationalSqrt2& y) { return x += y; }
    friend RationalSqrt2 operator-(RationalSqrt2 x, const RationalSqrt2& y) { return x -= y; }
    friend RationalSqrt2 operator*(RationalSqrt2 x, const RationalSqrt2& y) { return x *= y; }
    friend RationalSqrt2 operator/(RationalSqrt2 x, const RationalSqrt2& y) { return x /= y; }
    friend bool operator==(const RationalSqrt2& x, const RationalSqrt2& y) { return x.a_ == y.a_ && x.b_ == y.b_; }
    friend bool operator!=(const RationalSqrt2& x, const RationalSqrt2& y) { return !(x == y); }

    std::string to_string() const;

private:
    Rational a_, b_;
};

inline RationalSqrt2 exact_quotient(const RationalSqrt2& a, const RationalSqrt2& b) { return a / b; }

std::ostream& operator<<(std::ostream& os, const RationalSqrt2& x);

}  // namespace shv
