#include <shv/verma/highest_weight.hpp>

namespace shv::verma {

namespace {

template <class K>
PRLabel<K> invert(const HighestWeight<K>& hw) {
    if (hw.cLa.is_zero()) throw DegenerateWeight("cLa = 0: the (p, r) parametrisation is undefined");
    K p = hw.hA / hw.cLa - K(1);
    if (p.is_zero()) throw DegenerateWeight("h_alpha = cLa: p = 0 and r is not determined");
    K base = (K(1) - p * p) * (hw.cL - K(3)) * K(Rational(1, 24));
    K r = (base - hw.h) / p;
    return PRLabel<K>{p, r};
}

}  // namespace

PRLabel<Rational> hw_to_pr(const HighestWeight<Rational>& hw) { return invert(hw); }
PRLabel<RationalFunction> hw_to_pr(const HighestWeight<RationalFunction>& hw) { return invert(hw); }

HighestWeight<Rational> specialized_hw(const Rational& p, const Rational& r, const Rational& cL, const Rational& cLa) {
    return pr_to_hw<Rational>(p, r, cL, cLa, Rational(0));
}

HighestWeight<Polynomial> symbolic_in_p_hw(const Rational& r, const Rational& cL, const Rational& cLa) {
    return pr_to_hw<Polynomial>(Polynomial::variable(Parameter::p), Polynomial(r), Polynomial(cL), Polynomial(cLa),
                                Polynomial(0));
}

}  // namespace shv::verma
