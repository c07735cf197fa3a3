#pragma once

#include <shv/algebra/generator.hpp>
#include <shv/scalars/sqrt2.hpp>

#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace shv::freefield {

using Coeff = RationalSqrt2;
using algebra::HalfInt;

// Lattice point gamma = xc * c + xd * d labelling the sector e^gamma, with
// <c, c> = <d, d> = 0 and <c, d> = 2.
struct Sector {
    Rational xc, xd;

    Rational pair_c() const { return Rational(2) * xd; }  // <c, gamma>
    Rational pair_d() const { return Rational(2) * xc; }  // <d, gamma>
    // a-modes are integral here; otherwise they live in 1/2 + Z
    bool untwisted() const { return xd.is_integer(); }
    bool twisted() const { return (Rational(2) * xd).is_integer() && !xd.is_integer(); }
    std::string to_string() const;
    friend bool operator==(const Sector& a, const Sector& b) { return a.xc == b.xc && a.xd == b.xd; }
    friend bool operator!=(const Sector& a, const Sector& b) { return !(a == b); }
};

// Psi+_{-lambda+} Psi-_{-lambda-} d_{-mu+} c_{-mu-} e^gamma.  Bosonic parts are
// weakly decreasing positive mode magnitudes; fermionic parts are strictly
// decreasing twice-magnitudes (odd positive integers).  The fermion order of
// the state is all Psi+ factors (listed order) followed by all Psi- factors.
struct FockMonomial {
    std::vector<int> c, d, pp, pm;

    int twice_degree() const;
    int fermion_count() const { return static_cast<int>(pp.size() + pm.size()); }
    bool is_ground() const { return c.empty() && d.empty() && pp.empty() && pm.empty(); }
    std::string to_string() const;
    friend auto operator<=>(const FockMonomial&, const FockMonomial&) = default;
    friend bool operator==(const FockMonomial&, const FockMonomial&) = default;
};

class FockVector {
public:
    FockVector() = default;
    explicit FockVector(Sector s) : sector_(std::move(s)) {}
    static FockVector ground(const Sector& s, const Coeff& c = Coeff(1));

    const Sector& sector() const { return sector_; }
    const std::map<FockMonomial, Coeff>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    Coeff coefficient(const FockMonomial& m) const;
    // largest monomial degree present (0 for the zero vector)
    int max_twice_degree() const;
    bool is_homogeneous() const;

    void add(const FockMonomial& m, const Coeff& c);
    FockVector& operator+=(const FockVector& o);
    FockVector& operator-=(const FockVector& o);
    FockVector& operator*=(const Coeff& c);
    friend FockVector operator+(FockVector a, const FockVector& b) { return a += b; }
    friend FockVector operator-(FockVector a, const FockVector& b) { return a -= b; }
    friend FockVector operator*(FockVector a, const Coeff& c) { return a *= c; }
    friend FockVector operator*(const Coeff& c, FockVector a) { return a *= c; }
    friend bool operator==(const FockVector& a, const FockVector& b);
    friend bool operator!=(const FockVector& a, const FockVector& b) { return !(a == b); }

    std::string to_string() const;

private:
    Sector sector_;
    std::map<FockMonomial, Coeff> terms_;
};

enum class FreeField { c, d, psi_plus, psi_minus };
const char* free_field_name(FreeField f);

class ParityMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// One free-field mode on one monomial.  Bosonic modes are integral, fermionic
// modes half-integral; zero modes act by <c, gamma> and <d, gamma>.  Returns
// false when the result vanishes.
bool free_mode_on_monomial(FreeField f, HalfInt mode, const Sector& s, FockMonomial& m, Rational& coeff);

FockVector free_mode_act(FreeField f, HalfInt mode, const FockVector& v);

// All monomials of a given degree, in a fixed order.
const std::vector<FockMonomial>& fock_basis(int twice_d);

}  // namespace shv::freefield
