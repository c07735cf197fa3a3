#pragma once

#include <shv/verma/verma_module.hpp>

#include <cstdint>
#include <set>
#include <string>

namespace shv::verma {

// (cLa^4/4)(1+k-x)(-1+k+x)(1+l-x)(-1+l+x), x = h_alpha / cLa
template <class K>
K det_formula_phi(int k, int l, const HighestWeight<K>& hw) {
    if (k < 1 || l < 1 || (k - l) % 2 != 0) throw std::invalid_argument("phi_{k,l} needs k, l >= 1 of equal parity");
    if (hw.cLa.is_zero()) throw std::domain_error("phi_{k,l} is undefined for cLa = 0");
    const K x = hw.hA / hw.cLa;
    const K c4 = hw.cLa * hw.cLa * hw.cLa * hw.cLa;
    return c4 * K(Rational(1, 4)) * (K(1 + k) - x) * (K(k - 1) + x) * (K(1 + l) - x) * (K(l - 1) + x);
}

// Number of PBW monomials at degree twice_d/2, counted by dynamic
// programming over the four families of lowering modes.
std::int64_t kostant_p2(int twice_d);

// Predicted vanishing points in p at a level: {+-k, +-l : k, l >= 1,
// k = l mod 2, kl <= 2 * level}.
std::set<Rational> predicted_det_roots(int twice_level);

struct DetVanishingReport {
    int twice_level = 0;
    std::vector<Rational> computed;
    std::set<Rational> predicted;
    Polynomial determinant;  // of the unit-cleared Gram matrix, in p
    bool match = false;
    std::string to_string() const;
};

// Gram determinant with every parameter but p fixed; compares its rational
// roots in p with the predicted set.
DetVanishingReport det_vanishing_check(int twice_level, const Rational& r, const Rational& cL, const Rational& cLa);

}  // namespace shv::verma
