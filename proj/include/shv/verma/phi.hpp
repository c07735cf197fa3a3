#pragma once

#include <shv/algebra/element.hpp>
#include <shv/verma/verma_module.hpp>

namespace shv::verma {

// S_k(scale * X), X = alpha or L: the Schur polynomial with x(-n) replaced
// by scale * X(-n).  Zero for k < 0.
Element<Rational> schur_element(int k, Kind kind, const Rational& scale);

// Phi(p, r) for p a negative integer.  It does not depend on r; applied to
// v_{p,r} it gives a vector of degree -p.
Element<Rational> phi_operator(int p, const Rational& cL, const Rational& cLa);

}  // namespace shv::verma
