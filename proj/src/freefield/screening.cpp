#include <shv/freefield/screening.hpp>

namespace shv::freefield {

namespace {

void check_coset(const Sector& s, bool twisted) {
    if (twisted ? !s.twisted() : !s.untwisted())
        throw InadmissibleIndex(std::string(twisted ? "twisted" : "untwisted") + " screening is not defined on " +
                                s.to_string());
}

}  // namespace

FockVector screening_Q(const FockVector& v) {
    check_coset(v.sector(), false);
    return a_mode(Rational(0), v);
}

FockVector screening_S(const FockVector& v, bool twisted) {
    const Sector& s = v.sector();
    check_coset(s, twisted);
    FockVector out(Sector{s.xc + Rational(1), s.xd});
    if (v.is_zero()) return out;
    // a_i v = 0 once i exceeds deg - 1/2 - xd
    const Rational bound = Rational(v.max_twice_degree(), 2) - Rational(1, 2) - s.xd;
    for (Rational i = twisted ? Rational(1, 2) : Rational(1); i <= bound; i += Rational(1)) {
        const FockVector inner = a_mode(i, v);
        if (inner.is_zero()) continue;
        out += a_mode(Rational(0) - i, inner) * Coeff(i.inverse());
    }
    return out;
}

FockVector screening_G(const FockVector& v, bool twisted) {
    check_coset(v.sector(), twisted);
    return lattice_exp_act(2, Rational(0), v) - screening_S(v, twisted);
}

}  // namespace shv::freefield
