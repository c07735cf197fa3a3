#pragma once

#include <shv/freefield/fock.hpp>

namespace shv::freefield {

class InadmissibleIndex : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// n-th mode of the lattice vertex operator e^{k c/2}, with
// Y(e^beta, z) = sum_n e^beta_n z^{-n-1} and trivial cocycle:
//   e^beta_n w = sum_j S_{j-n-1-<beta,gamma>}(beta(-1), beta(-2), ...) S_j(-beta(1), -beta(2), ...) w
// moved to the sector gamma + beta.  n must lie in -<beta, gamma> + Z.
FockVector lattice_exp_act(int k_half, const Rational& n, const FockVector& v);

// a = Psi-(-1/2) e^{c/2}:  a_n = sum_t Psi-(t) e^{c/2}_{n-t-1/2}.  n must lie in
// -xd + Z; the result has degree (deg - n - 1/2 - xd) in the sector shifted by c/2.
FockVector a_mode(const Rational& n, const FockVector& v);

// Degree change of a_n on a sector (twice units are not used since xd may be
// any rational): -n - 1/2 - xd.
Rational a_mode_degree_shift(const Rational& n, const Sector& s);

}  // namespace shv::freefield
