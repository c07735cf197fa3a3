#pragma once

#include <shv/algebra/bracket.hpp>
#include <shv/algebra/element.hpp>
#include <shv/linalg/matrix.hpp>
#include <shv/verma/highest_weight.hpp>

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

namespace shv::verma {

using algebra::Element;
using algebra::Gen;
using algebra::HalfInt;
using algebra::Kind;
using algebra::Word;

// Homogeneous vector of a Verma module: coordinates in the graded PBW basis
// of its degree.
template <class K>
struct ModuleVector {
    int twice_degree = 0;
    std::vector<K> coords;

    bool is_zero() const {
        for (const auto& c : coords)
            if (!c.is_zero()) return false;
        return true;
    }
    friend bool operator==(const ModuleVector& a, const ModuleVector& b) {
        return a.twice_degree == b.twice_degree && a.coords == b.coords;
    }
};

template <class K>
struct ShapovalovGram {
    // M(x, y) = coefficient of v in sigma0(x) y v, where sigma0 is the
    // anti-automorphism L(n) -> L(-n), A(n) -> -A(-n), G(s) -> G(-s),
    // P(s) -> P(-s).  The Gram matrix of the contravariant form is
    // diag(i^{row_i_power}) * M.
    linalg::Matrix<K> matrix;
    std::vector<int> row_i_power;
};

// The Verma module V(h, h_alpha) with central charges substituted, or the
// universal vacuum module when `vacuum` is set (then L(-1) and G(-1/2) also
// annihilate the generating vector and h = h_alpha = 0 is expected).
//
// Basis at degree d: canonical lowering words P(..)A(..)G(..)L(..) of degree
// d applied to v.  All caches are filled under a lock and never change
// afterwards, so concurrent callers see the same results.
template <class K>
class VermaModule {
public:
    using SparseVec = std::vector<std::pair<std::uint32_t, K>>;

    explicit VermaModule(HighestWeight<K> hw, bool vacuum = false,
                         const algebra::BracketTable& table = algebra::BracketTable::standard());

    const HighestWeight<K>& highest_weight() const { return hw_; }
    bool is_vacuum() const { return vacuum_; }

    const std::vector<Word>& basis(int twice_d);
    std::size_t dimension(int twice_d) { return basis(twice_d).size(); }
    std::optional<std::uint32_t> index_of(int twice_d, const Word& w);
    std::uint64_t basis_hash(int twice_d);

    // g applied to the idx-th basis vector of degree twice_d
    const SparseVec& apply(const Gen& g, int twice_d, std::uint32_t idx);

    ModuleVector<K> highest_weight_vector();
    ModuleVector<K> basis_vector(int twice_d, std::size_t idx);
    ModuleVector<K> zero(int twice_d);
    ModuleVector<K> act(const Gen& g, const ModuleVector<K>& v);
    // letters applied right to left; every word must have the same degree
    ModuleVector<K> act(const Element<K>& x, const ModuleVector<K>& v);
    ModuleVector<K> act_word(const Word& w, const ModuleVector<K>& v);

    // matrix of g : V_d -> V_{d + deg g}
    linalg::Matrix<K> generator_matrix(const Gen& g, int twice_d);

    ShapovalovGram<K> gram(int twice_d);

    std::string vector_to_string(const ModuleVector<K>& v);

private:
    HighestWeight<K> hw_;
    bool vacuum_;
    const algebra::BracketTable& table_;
    std::recursive_mutex mutex_;
    std::map<int, std::vector<Word>> bases_;
    std::map<int, std::unordered_map<Word, std::uint32_t, algebra::WordHash>> indices_;
    std::unordered_map<std::uint64_t, SparseVec> memo_;
    std::map<std::pair<int, std::uint32_t>, std::vector<K>> functionals_;

    SparseVec compute_apply(const Gen& g, int twice_d, std::uint32_t idx);
    bool annihilates_vacuum(const Gen& g) const;
    const std::vector<K>& functional(int twice_d, std::uint32_t idx);
};

// Rank of the contravariant form at one degree = graded dimension of the
// irreducible quotient.
template <class K>
std::size_t simple_graded_dim(VermaModule<K>& m, int twice_d) {
    return linalg::rank(m.gram(twice_d).matrix);
}

// Raising generators sufficient to test singularity of a degree-d vector.
std::vector<Gen> raising_test_generators(int twice_d);

// Linear span closed under the action, truncated at a maximal degree.
template <class K>
class GradedSpan {
public:
    GradedSpan() = default;
    GradedSpan(VermaModule<K>& m, int twice_max) : twice_max_(twice_max) {
        for (int d = 0; d <= twice_max; ++d) parts_.emplace(d, linalg::EchelonSpan<K>(m.dimension(d)));
    }
    int twice_max() const { return twice_max_; }
    std::size_t dimension(int twice_d) const {
        auto it = parts_.find(twice_d);
        return it == parts_.end() ? 0 : it->second.dimension();
    }
    bool contains(const ModuleVector<K>& v) const {
        auto it = parts_.find(v.twice_degree);
        if (it == parts_.end()) throw std::out_of_range("degree outside the truncated span");
        return it->second.contains(v.coords);
    }
    bool add(const ModuleVector<K>& v) { return parts_.at(v.twice_degree).add(v.coords); }
    const linalg::EchelonSpan<K>& part(int twice_d) const { return parts_.at(twice_d); }

private:
    int twice_max_ = 0;
    std::map<int, linalg::EchelonSpan<K>> parts_;
};

// Smallest subspace up to twice_max containing the generators and closed
// under all lowering generators and (if requested) raising generators, as
// far as the truncation allows.
template <class K>
GradedSpan<K> submodule_closure(VermaModule<K>& m, const std::vector<ModuleVector<K>>& generators, int twice_max,
                                bool include_raising = true);

// Exact kernel of the raising action at degree d, normalised so that the
// leading PBW word carries coefficient 1.
template <class K>
std::vector<ModuleVector<K>> singular_vectors(VermaModule<K>& m, int twice_d);

template <class K>
bool is_singular(VermaModule<K>& m, const ModuleVector<K>& v);

// Vectors at degree d, independent modulo s and the singular vectors, whose
// raising images lie in s.
template <class K>
std::vector<ModuleVector<K>> subsingular_vectors(VermaModule<K>& m, int twice_d, const GradedSpan<K>& s);

// Index of the leading PBW word among the non-zero coordinates (throws on zero).
template <class K>
std::size_t leading_index(VermaModule<K>& m, const ModuleVector<K>& v);

template <class K>
ModuleVector<K> normalize_leading(VermaModule<K>& m, ModuleVector<K> v);

// PBW order used for normalisation: pairs (L-partition, G-superpartition)
// compared first, then (alpha-partition, Psi-superpartition).
bool pbw_word_less(const Word& a, const Word& b);

}  // namespace shv::verma
