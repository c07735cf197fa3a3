#pragma once

#include <shv/scalars/polynomial.hpp>

namespace shv {

// Quotient of parameter polynomials in canonical form: numerator and
// denominator coprime, denominator monic in lex order.  Two rational
// functions are equal exactly when their canonical forms are identical.
class RationalFunction {
public:
    RationalFunction() : den_(1) {}
    RationalFunction(int c) : num_(c), den_(1) {}
    RationalFunction(const Rational& c) : num_(c), den_(1) {}
    RationalFunction(const Polynomial& p) : num_(p), den_(1) {}
    RationalFunction(const Polynomial& num, const Polynomial& den);
    static RationalFunction variable(Parameter v) { return RationalFunction(Polynomial::variable(v)); }

    const Polynomial& numerator() const { return num_; }
    const Polynomial& denominator() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }

    RationalFunction& operator+=(const RationalFunction& o);
    RationalFunction& operator-=(const RationalFunction& o);
    RationalFunction& operator*=(const RationalFunction& o);
    RationalFunction& operator/=(const RationalFunction& o);
    RationalFunction operator-() const;
    RationalFunction inverse() const;
    friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
    friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
    friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
    friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

    // throws DivisionByZero when the denominator vanishes at the point
    Rational evaluate(const Assignment& values) const;
    RationalFunction specialize(const Assignment& values) const;

    std::string to_string() const;

private:
    Polynomial num_, den_;
    void normalize();
};

inline RationalFunction exact_quotient(const RationalFunction& a, const RationalFunction& b) { return a / b; }

std::ostream& operator<<(std::ostream& os, const RationalFunction& f);

}  // namespace shv
