#pragma once

#include <shv/freefield/realization.hpp>
#include <shv/freefield/screening.hpp>

namespace shv::freefield {

// Displayed vectors as elements of U(SH^-) acting on v_{p,r}.  Schur
// polynomials are expanded in alpha-modes.

// sum_{i=0}^{(p-1)/2} Psi(-i-1/2) S_{(p-1)/2-i}(-alpha/(2cLa)),  p odd > 0
Element<Rational> sing_odd_element(int p, const Rational& cLa);

// S_p(-alpha/cLa) + sum_{k=1}^{(p-1)/2} (1/k) (sum_i Psi(i+k-p/2) S_i)(sum_j Psi(j-k-p/2) S_j),
// inner Schur arguments -alpha/(2cLa), p odd > 0.  The double sum is
// multiplied by double_sum_scale; 1/(2 cLa^2) turns the vector into G v_{p,r-1}.
Element<Rational> subsing_odd_element(int p, const Rational& cLa, const Rational& double_sum_scale = Rational(1));

// S_p(-alpha/cLa) + sum_{k=0}^{[(p-1)/2]} 1/(k+1/2) (sum_i Psi(i+k-(p-1)/2) S_i)(sum_j Psi(j-k-(p+1)/2) S_j),
// inner Schur arguments -alpha/(2cLa), p even > 0; double_sum_scale as above
// (1/(2 cLa^2) gives G^tw v_{p,r-1}).
Element<Rational> sing_even_element(int p, const Rational& cLa, const Rational& double_sum_scale = Rational(1));

// sum_{i=0}^{(p-1)/2} Psi(-i-1/2)/cLa S_{(p-1)/2-i}(c), with c(-n) = -alpha(-n)/cLa
Element<Rational> gen_rhs_element(int p, const Rational& cLa);

// sum_{i=0}^{(p-1)/2-n} Psi(-i-1/2) S_{(p-1)/2-n-i}(-alpha/(2cLa)); the displayed
// a_n v_{p,r-1/2} is this vector times -1/(sqrt2 cLa)
Element<Rational> an_rhs_element(int p, int n, const Rational& cLa);
FockVector an_rhs(int p, int n, const Rational& r, const FreeFieldParams& prm);

FockVector build_singular_odd(int p, const Rational& r, const FreeFieldParams& prm);
FockVector build_subsingular_odd(int p, const Rational& r, const FreeFieldParams& prm,
                                 const Rational& double_sum_scale = Rational(1));
FockVector build_singular_even(int p, const Rational& r, const FreeFieldParams& prm,
                               const Rational& double_sum_scale = Rational(1));

enum class FamilyKind { singular, subsingular };

// p odd:  singular u^(n) = G^n Q v_{p,r-n-1/2},  subsingular w^(n) = G^n v_{p,r-n} (n >= 1)
// p even: singular u^(n) = (G^tw)^n v_{p,r-n}
// All results live in the sector of v_{p,r}.
FockVector family_vector(int p, const Rational& r, int n, FamilyKind kind, const FreeFieldParams& prm);

// Degree of the family vector above v_{p,r}.
algebra::HalfInt family_degree(int p, int n, FamilyKind kind);

}  // namespace shv::freefield
