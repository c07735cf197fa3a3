#pragma once

#include <shv/scalars/polynomial.hpp>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace shv::qchar {

// q^{offset} * sum_d a_d q^d, with d in (1/2)Z>=0 stored as twice values and
// all coefficients up to the truncation (inclusive) present.  The offset is a
// polynomial in the parameters and kept apart from the numeric coefficients.
class QSeries {
public:
    QSeries(Polynomial offset, std::vector<std::int64_t> coefficients);

    const Polynomial& offset() const { return offset_; }
    int twice_truncation() const { return static_cast<int>(coeffs_.size()) - 1; }
    // coefficient of q^{offset + twice/2}; throws past the truncation
    std::int64_t coefficient(int twice) const;
    const std::vector<std::int64_t>& coefficients() const { return coeffs_; }
    std::string to_string() const;

private:
    Polynomial offset_;
    std::vector<std::int64_t> coeffs_;
};

// prod_{k>=1} (1 + q^{k-1/2})^2 / (1 - q^k)^2, truncated at twice_truncation/2
QSeries char_verma(int twice_truncation);

// Character of the irreducible quotient: the Verma character times
// (1 - q^{|p|/2}) for odd p, (1 - q^{|p|}) for non-zero even p, and 1 for
// p not a non-zero integer.  Offset h_{p,r} = (1-p^2)(cL-3)/24 - r p.
QSeries char_simple(const Rational& p, int twice_truncation);

struct DimComparison {
    bool match = true;
    int first_mismatch_twice = -1;
    std::int64_t expected = 0, actual = 0;
    std::string to_string() const;
};

// dims[i] is the graded dimension at degree i/2
DimComparison compare_dims(const QSeries& series, const std::vector<std::int64_t>& dims);

}  // namespace shv::qchar
