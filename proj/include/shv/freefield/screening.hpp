#pragma once

#include <shv/freefield/lattice.hpp>

namespace shv::freefield {

// Q = a_0, defined on untwisted sectors.
FockVector screening_Q(const FockVector& v);

// S = sum_{i>0} (1/i) a_{-i} a_i (untwisted) or
// S^tw = sum_{i>=0} (1/(i+1/2)) a_{-i-1/2} a_{i+1/2} (twisted); only the
// finitely many terms that can be non-zero on v are evaluated.
FockVector screening_S(const FockVector& v, bool twisted);

// e^c_0 - S or e^c_0 - S^tw.  Maps the sector of v_{p,r-1} to that of v_{p,r}
// and raises the degree by p.
FockVector screening_G(const FockVector& v, bool twisted);

}  // namespace shv::freefield
