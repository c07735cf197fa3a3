#pragma once

#include <shv/scalars/rational.hpp>

#include <vector>

namespace shv::qchar {

// S_k(x) = sum over partitions lambda of k of prod_n x_n^{m_n} / (n^{m_n} m_n!),
// where m_n is the multiplicity of n in lambda.  S_k = 0 for k < 0.
struct SchurTerm {
    std::vector<int> parts;  // weakly decreasing
    Rational coefficient;
};

std::vector<SchurTerm> schur_expand(int k);

// Same expansion with x_n replaced by scale * x_n.
std::vector<SchurTerm> schur_expand_scaled(int k, const Rational& scale);

}  // namespace shv::qchar
