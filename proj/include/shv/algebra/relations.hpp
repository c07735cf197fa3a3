#pragma once

#include <shv/algebra/normal_order.hpp>

#include <string>
#include <vector>

namespace shv::algebra {

struct RelationReport {
    std::size_t pairs_checked = 0;
    std::size_t triples_checked = 0;
    std::size_t words_checked = 0;
    std::vector<std::string> failures;  // first few offending pairs/triples, e.g. "[L(2), L(-2)]"
    std::size_t failure_count = 0;
    bool ok() const { return failure_count == 0; }
};

// Super-antisymmetry [x,y] = -(-1)^{|x||y|}[y,x] for all generators with
// |2*mode| <= twice_bound.
RelationReport check_antisymmetry(const BracketTable& table, int twice_bound);

// Super-Jacobi identity on all ordered triples with |2*mode| <= twice_bound;
// outer brackets are evaluated through normal ordering.
RelationReport check_jacobi(const BracketTable& table, int twice_bound);

// Normal forms of all words of the given length over generators with
// |2*mode| <= twice_bound agree between leftmost and randomised rewriting.
RelationReport check_confluence(const BracketTable& table, int twice_bound, int length, unsigned seed);

}  // namespace shv::algebra
