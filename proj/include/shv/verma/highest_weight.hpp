#pragma once

#include <shv/scalars/polynomial.hpp>
#include <shv/scalars/rational_function.hpp>

#include <stdexcept>

namespace shv::verma {

class DegenerateWeight : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Central charges and highest weight (h, h_alpha) of a Verma module.
template <class K>
struct HighestWeight {
    K cL, cA, cLa, h, hA;
};

template <class K>
struct PRLabel {
    K p, r;
};

// h_{p,r} = (1 - p^2)(cL - 3)/24 - r p,  h_alpha = (1 + p) cLa
template <class K>
HighestWeight<K> pr_to_hw(const K& p, const K& r, const K& cL, const K& cLa, const K& cA = K(0)) {
    K h = (K(1) - p * p) * (cL - K(3)) * K(Rational(1, 24)) - r * p;
    K hA = (K(1) + p) * cLa;
    return HighestWeight<K>{cL, cA, cLa, h, hA};
}

// Inverse of pr_to_hw; needs h_alpha != cLa (equivalently p != 0).
PRLabel<Rational> hw_to_pr(const HighestWeight<Rational>& hw);
PRLabel<RationalFunction> hw_to_pr(const HighestWeight<RationalFunction>& hw);

// Pinned generic parameters used by tests and the CLI defaults.
struct Defaults {
    static Rational cL() { return Rational(11, 2); }
    static Rational cLa() { return Rational(2, 3); }
    static Rational cA() { return Rational(0); }
    static Rational r() { return Rational(1, 3); }
};

HighestWeight<Rational> specialized_hw(const Rational& p, const Rational& r, const Rational& cL = Defaults::cL(),
                                       const Rational& cLa = Defaults::cLa());

// Highest weight with p kept as the polynomial variable and everything else fixed.
HighestWeight<Polynomial> symbolic_in_p_hw(const Rational& r, const Rational& cL, const Rational& cLa);

}  // namespace shv::verma
