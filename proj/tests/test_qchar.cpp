#include <doctest.h>

#include <shv/qchar/qseries.hpp>
#include <shv/qchar/schur.hpp>
#include <shv/verma/determinant.hpp>

using namespace shv;

namespace {

Rational eval_schur(int k, const std::vector<Rational>& x) {
    Rational s(0);
    for (const auto& t : qchar::schur_expand(k)) {
        Rational term = t.coefficient;
        for (int part : t.parts) term *= x[static_cast<std::size_t>(part)];
        s += term;
    }
    return s;
}

}  // namespace

TEST_CASE("Schur polynomials satisfy the Newton recurrence k S_k = sum_n x_n S_{k-n}") {
    const std::vector<Rational> x{Rational(0), Rational(2, 3), Rational(-1), Rational(5, 7), Rational(3), Rational(-2, 5),
                                  Rational(1, 9), Rational(4)};
    std::vector<Rational> s{Rational(1)};
    for (int k = 1; k <= 7; ++k) {
        Rational acc(0);
        for (int n = 1; n <= k; ++n) acc += x[static_cast<std::size_t>(n)] * s[static_cast<std::size_t>(k - n)];
        s.push_back(acc / Rational(k));
        CHECK(eval_schur(k, x) == s.back());
    }
    CHECK(qchar::schur_expand(-1).empty());
    CHECK(eval_schur(0, x) == Rational(1));
}

TEST_CASE("Verma character coefficients equal the PBW count") {
    const auto ch = qchar::char_verma(12);
    for (int d = 0; d <= 12; ++d) CHECK(ch.coefficient(d) == verma::kostant_p2(d));
    CHECK(ch.coefficient(0) == 1);
    CHECK(ch.coefficient(1) == 2);
    CHECK(ch.coefficient(2) == 3);
    CHECK(ch.coefficient(3) == 6);
    CHECK_THROWS(ch.coefficient(13));
}

TEST_CASE("irreducible characters for integral p") {
    const auto v = qchar::char_verma(10);
    // p = 2: Verma minus Verma shifted by 2
    const auto c2 = qchar::char_simple(Rational(2), 10);
    for (int d = 0; d <= 10; ++d) CHECK(c2.coefficient(d) == v.coefficient(d) - (d >= 4 ? v.coefficient(d - 4) : 0));
    // p = 3: shift by 3/2
    const auto c3 = qchar::char_simple(Rational(-3), 10);
    for (int d = 0; d <= 10; ++d) CHECK(c3.coefficient(d) == v.coefficient(d) - (d >= 3 ? v.coefficient(d - 3) : 0));
    // generic p
    const auto cg = qchar::char_simple(Rational(1, 2), 10);
    CHECK(cg.coefficients() == v.coefficients());
}

TEST_CASE("dimension comparison reports the first mismatch") {
    const auto c = qchar::compare_dims(qchar::char_verma(4), {1, 2, 3, 5, 11});
    CHECK_FALSE(c.match);
    CHECK(c.first_mismatch_twice == 3);
    CHECK(c.expected == 6);
    CHECK(c.actual == 5);
}
