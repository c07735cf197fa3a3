#pragma once

#include <shv/scalars/rational_function.hpp>

#include <variant>

namespace shv {

enum class ScalarMode { Specialized, Symbolic };

const char* mode_name(ScalarMode m);
ScalarMode parse_mode(const std::string& s);

// A scalar of either mode.  Arithmetic never mixes modes silently.
class Scalar {
public:
    Scalar() : v_(Rational()) {}
    Scalar(const Rational& q) : v_(q) {}
    Scalar(const RationalFunction& f) : v_(f) {}

    ScalarMode mode() const {
        return std::holds_alternative<Rational>(v_) ? ScalarMode::Specialized : ScalarMode::Symbolic;
    }
    const Rational& rational() const;
    const RationalFunction& function() const;
    bool is_zero() const;

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    Scalar operator-() const;
    friend bool operator==(const Scalar& a, const Scalar& b);

    // Parses "3/2" in specialized mode, or a polynomial expression in the
    // parameters (e.g. "cL - 3", "(1/2)*p^2") in symbolic mode.
    static Scalar parse(const std::string& text, ScalarMode mode);

    Rational evaluate(const Assignment& values) const;
    std::string to_string() const;

private:
    std::variant<Rational, RationalFunction> v_;
};

// Parses a polynomial expression over the five parameters: sums of products
// of rational literals, parameter names and non-negative integer powers.
Polynomial parse_polynomial(const std::string& text);

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace shv
