#include <doctest.h>

#include <shv/linalg/matrix.hpp>
#include <shv/scalars/polynomial.hpp>

using namespace shv;
using linalg::Matrix;

TEST_CASE("rank and kernel") {
    auto m = Matrix<Rational>::from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}}, 3);
    CHECK(linalg::rank(m) == 2);
    const auto ker = linalg::kernel_basis(m);
    REQUIRE(ker.size() == 1);
    const auto img = m * ker[0];
    for (const auto& x : img) CHECK(x.is_zero());
}

TEST_CASE("Vandermonde determinant") {
    const std::vector<Rational> x{Rational(1, 2), Rational(2), Rational(-3), Rational(5, 3)};
    Matrix<Rational> m(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) m(i, j) = x[i].pow(static_cast<int>(j));
    Rational expect(1);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j) expect *= x[j] - x[i];
    CHECK(linalg::determinant(m) == expect);
}

TEST_CASE("fraction-free determinant over polynomials") {
    const Polynomial p = Polynomial::variable(Parameter::p);
    auto m = Matrix<Polynomial>::from_rows({{p, Polynomial(1)}, {Polynomial(1), p}}, 2);
    CHECK(linalg::determinant(m) == p * p - Polynomial(1));
}

TEST_CASE("solve and span membership") {
    auto m = Matrix<Rational>::from_rows({{1, 1}, {1, -1}, {2, 0}}, 2);
    const auto x = linalg::solve(m, {Rational(3), Rational(1), Rational(4)});
    REQUIRE(x);
    CHECK((*x)[0] == Rational(2));
    CHECK((*x)[1] == Rational(1));
    CHECK_FALSE(linalg::solve(m, {Rational(1), Rational(1), Rational(0)}));
    linalg::EchelonSpan<Rational> s(3);
    CHECK(s.add({1, 0, 1}));
    CHECK(s.add({0, 1, 1}));
    CHECK_FALSE(s.add({1, 1, 2}));
    CHECK(s.contains({2, -1, 1}));
    CHECK_FALSE(s.contains({0, 0, 1}));
}
