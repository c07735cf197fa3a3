#include <shv/scalars/sqrt2.hpp>

namespace shv {

RationalSqrt2& RationalSqrt2::operator*=(const RationalSqrt2& o) {
    if (b_.is_zero() && o.b_.is_zero()) {
        a_ *= o.a_;
        return *this;
    }
    Rational a = a_ * o.a_ + Rational(2) * b_ * o.b_;
    Rational b = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(a);
    b_ = std::move(b);
    return *this;
}

RationalSqrt2 RationalSqrt2::inverse() const {
    // sqrt(2) is irrational, so the norm vanishes only at zero
    Rational norm = a_ * a_ - Rational(2) * b_ * b_;
    if (norm.is_zero()) throw DivisionByZero();
    return RationalSqrt2(a_ / norm, -b_ / norm);
}

std::string RationalSqrt2::to_string() const {
    if (b_.is_zero()) return a_.to_string();
    std::string s = b_.to_string() + "*sqrt2";
    if (a_.is_zero()) return s;
    return a_.to_string() + (b_.sign() < 0 ? " - " + (-b_).to_string() + "*sqrt2" : " + " + s);
}

std::ostream& operator<<(std::ostream& os, const RationalSqrt2& x) { return os << x.to_string(); }

}  // namespace shv
