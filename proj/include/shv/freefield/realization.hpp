#pragma once

#include <shv/algebra/bracket.hpp>
#include <shv/algebra/element.hpp>
#include <shv/freefield/fock.hpp>
#include <shv/linalg/matrix.hpp>
#include <shv/verma/verma_module.hpp>

#include <optional>

namespace shv::freefield {

using algebra::Element;
using algebra::Gen;
using algebra::Kind;
using algebra::Word;

// Central charges of the realisation (c_alpha = 0).
struct FreeFieldParams {
    Rational cL, cLa;
};

// v_{p,r} = e^{-(p+1)/2 (d - (cL-3)/12 c) + r c}
Sector pr_sector(const Rational& p, const Rational& r, const Rational& cL);
FockVector highest_vector(const Rational& p, const Rational& r, const Rational& cL);

// L(0)-eigenvalue of e^gamma: 2 xc xd - (cL-3)/12 xd + xc
Rational sector_weight(const Sector& s, const Rational& cL);

// Mode of a realised generator:
//   alpha = -cLa c(-1)
//   tau   = sqrt2 (c(-1)Psi+(-1/2)/2 + d(-1)Psi-(-1/2)/2 + (cL-3)/12 Psi-(-3/2) - Psi+(-3/2))
//   omega = c(-1)d(-1)/2 + (cL-3)/24 c(-2) - d(-2)/2 + (Psi+(-3/2)Psi-(-1/2) + Psi-(-3/2)Psi+(-1/2))/2
//   Psi   = -sqrt2 cLa Psi-(-1/2)
// acting through normally ordered field modes.  Central elements act by
// cL, 0 and cLa.
FockVector realized_act(const Gen& g, const FockVector& v, const FreeFieldParams& prm);
FockVector realized_act(const Word& w, const FockVector& v, const FreeFieldParams& prm);
FockVector realized_act(const Element<Rational>& x, const FockVector& v, const FreeFieldParams& prm);
FockVector realize_element(const Element<Rational>& x, const Sector& s, const FreeFieldParams& prm);

struct BracketCheckReport {
    std::size_t checks = 0;
    std::size_t failures = 0;
    std::string first_failure;  // "[x, y] on <monomial>"
    bool ok() const { return failures == 0; }
};

// x(y w) - (-1)^{|x||y|} y(x w) against the realised bracket [x, y] w for all
// generators with |2*mode| <= twice_mode_bound and all Fock monomials w of
// degree <= twice_max / 2 in the sector.
BracketCheckReport check_realized_brackets(const Sector& s, const FreeFieldParams& prm, int twice_mode_bound,
                                           int twice_max,
                                           const algebra::BracketTable& table = algebra::BracketTable::standard());

// Coordinates of a homogeneous vector in fock_basis(twice_d).
std::vector<Coeff> fock_coordinates(const FockVector& v, int twice_d);
FockVector from_fock_coordinates(const Sector& s, int twice_d, const std::vector<Coeff>& coords);

// Graded comparison between a Verma module and the Fock module of the same
// highest weight: images of PBW basis vectors, memoised by degree.
class VermaFockBridge {
public:
    VermaFockBridge(verma::VermaModule<Rational>& m, Sector s, FreeFieldParams prm);

    verma::VermaModule<Rational>& module() { return m_; }
    const Sector& sector() const { return sector_; }
    const FreeFieldParams& params() const { return prm_; }

    const FockVector& image(int twice_d, std::size_t idx);
    FockVector realize(const verma::ModuleVector<Rational>& v);
    // columns: images of the PBW basis at degree d in fock_basis(d) coordinates
    linalg::Matrix<Coeff> image_matrix(int twice_d);
    // Verma coordinates of a Fock vector, up to an overall factor sqrt2 so that
    // they are rational; nullopt if the vector is not an image or the
    // coordinates are not in Q or sqrt2*Q.
    std::optional<verma::ModuleVector<Rational>> pull_back(const FockVector& f, int twice_d);

private:
    verma::VermaModule<Rational>& m_;
    Sector sector_;
    FreeFieldParams prm_;
    std::map<std::pair<int, std::size_t>, FockVector> images_;
};

}  // namespace shv::freefield
