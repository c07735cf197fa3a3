#pragma once

#include <shv/scalars/rational.hpp>

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace shv {

// The five free parameters of the theory.  The numeric value doubles as the
// variable priority used by lex order: cL is the most significant.
enum class Parameter : int { cL = 0, cA = 1, cLa = 2, r = 3, p = 4 };
inline constexpr int kParameterCount = 5;

const char* parameter_name(Parameter v);
Parameter parse_parameter(const std::string& name);

using Exponents = std::array<std::uint16_t, kParameterCount>;
using Assignment = std::map<Parameter, Rational>;

class Polynomial {
public:
    Polynomial() = default;
    Polynomial(int c) : Polynomial(Rational(c)) {}
    Polynomial(const Rational& c);
    static Polynomial variable(Parameter v);
    static Polynomial monomial(const Exponents& e, const Rational& c);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_value() const;  // throws unless constant
    int degree(Parameter v) const;
    int total_degree() const;
    std::set<Parameter> variables() const;
    const std::map<Exponents, Rational>& terms() const { return terms_; }

    // lex leading term with respect to cL > cA > cLa > r > p
    std::pair<Exponents, Rational> leading_term() const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);
    Polynomial& operator*=(const Rational& c);
    Polynomial operator-() const;
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }
    friend bool operator<(const Polynomial& a, const Polynomial& b) { return a.terms_ < b.terms_; }
    Polynomial pow(int e) const;

    // Throws std::domain_error when the division is not exact.
    Polynomial divide_exact(const Polynomial& d) const;

    Rational evaluate(const Assignment& values) const;  // throws MissingParameter
    Polynomial specialize(const Assignment& values) const;
    Polynomial derivative(Parameter v) const;

    std::map<int, Polynomial> coefficients_in(Parameter v) const;
    static Polynomial from_coefficients(Parameter v, const std::map<int, Polynomial>& coeffs);

    std::string to_string() const;
    std::size_t hash() const;

private:
    std::map<Exponents, Rational> terms_;
    void add_term(const Exponents& e, const Rational& c);
};

Polynomial gcd(const Polynomial& a, const Polynomial& b);
// Makes the lex leading coefficient one (zero stays zero).
Polynomial make_monic(const Polynomial& a);
inline Polynomial exact_quotient(const Polynomial& a, const Polynomial& b) { return a.divide_exact(b); }

// All rational roots (without multiplicity, ascending) of a polynomial that
// involves no parameter other than v.
std::vector<Rational> rational_roots_in(const Polynomial& poly, Parameter v);

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace shv
