#pragma once

#include <shv/algebra/bracket.hpp>
#include <shv/cli/cache.hpp>
#include <shv/cli/report.hpp>
#include <shv/freefield/constructions.hpp>
#include <shv/verma/diagram.hpp>

#include <cstdint>
#include <optional>
#include <vector>

namespace shv::cli {

using freefield::FreeFieldParams;

// Graded dimensions of the irreducible quotient at degrees 0, 1/2, ...,
// twice_max/2 (Gram ranks), memoised in the cache.  With symbolic_r the rank
// is taken over Q[r], i.e. for generic r.
std::vector<std::int64_t> simple_dims(const Cache& cache, const Rational& p, const Rational& r,
                                      const FreeFieldParams& prm, const Rational& cA, int twice_max,
                                      bool symbolic_r = false);
std::vector<std::int64_t> verma_dims(int twice_max);

Check check_relations(const algebra::BracketTable& table, int twice_bound);

// Bracket equality of the realised modes on F_{p,r}; then the cyclicity check
// (p not a negative integer) or the graded dimension of the image of the
// Verma module (p a negative integer).
Check check_realization(const Rational& p, const Rational& r, const FreeFieldParams& prm, int twice_mode_bound,
                        int twice_max, const Cache& cache);

// Items of the singular and subsingular certification.  Verma cross-checks
// run only up to twice_verma_max.
void certify_sing_nep(Check& c, int p, const Rational& r, const FreeFieldParams& prm, int twice_verma_max);
void certify_sing_par(Check& c, int p, const Rational& r, const FreeFieldParams& prm, int twice_verma_max);
void certify_phi(Check& c, int p, const Rational& r, const FreeFieldParams& prm);
void certify_family(Check& c, int p, const Rational& r, int n, const FreeFieldParams& prm, int twice_verma_max);
void certify_subsingular(Check& c, int p, const Rational& r, const FreeFieldParams& prm);

// p = 2 style evidence: x v_{p,r-1} -> x u^(1)_{p,r} is injective up to
// twice_max, and the maximal submodule has the dims of the shifted Verma module.
void certify_even_injectivity(Check& c, int p, const Rational& r, const FreeFieldParams& prm, int twice_max,
                              const Cache& cache);

// Symbolic-in-r variant of the singular command: dimension of the raising
// kernel over Q(r) at the degrees where singular vectors are expected.
void certify_generic_kernel(Check& c, int p, const FreeFieldParams& prm, int twice_max);

Check check_singular_battery(const Rational& r, const FreeFieldParams& prm, int twice_verma_max);
Check check_subsingular_battery(const Rational& r, const FreeFieldParams& prm);
Check check_characters(const std::vector<int>& ps, const Rational& r, const FreeFieldParams& prm, int twice_max,
                       const Cache& cache, bool symbolic_r = false);
Check check_duality(const std::vector<int>& ps, const Rational& r, const FreeFieldParams& prm, int twice_max,
                    const Cache& cache, bool symbolic_r = false);
Check check_determinant(int twice_max_level, const Rational& r, const FreeFieldParams& prm);
Check check_screening(const FreeFieldParams& prm, int twice_mode_bound, int twice_max);
Check check_structure(const Rational& r, const FreeFieldParams& prm, int twice_max, const Cache& cache);
Check check_diagrams(const Rational& r, const FreeFieldParams& prm, int twice_max);
Check check_screening_kernel(const FreeFieldParams& prm);

// Descriptive name of the expected embedding pattern for p, and whether the
// computed diagram has it (nodes and covering arrows within the truncation).
struct DiagramPattern {
    std::string identifier;
    bool matches = false;
    std::vector<std::string> notes;
};
DiagramPattern classify_diagram(const verma::EmbeddingDiagram& dg);

struct AcceptanceOptions {
    Rational r{1, 3};
    FreeFieldParams prm{Rational(11, 2), Rational(2, 3)};
    int twice_max = 8;
    const Cache* cache = nullptr;
    bool parallel = true;
};

// The full battery, one check per criterion, in a fixed order.
std::vector<Check> acceptance_battery(const AcceptanceOptions& opt);

}  // namespace shv::cli
