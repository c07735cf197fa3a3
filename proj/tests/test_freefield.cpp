#include <doctest.h>

#include <shv/freefield/constructions.hpp>
#include <shv/verma/determinant.hpp>

using namespace shv;
using namespace shv::freefield;

namespace {

const FreeFieldParams kPrm{Rational(11, 2), Rational(2, 3)};

FockVector single(const Sector& s, FockMonomial m, const Coeff& c = Coeff(1)) {
    FockVector v(s);
    v.add(m, c);
    return v;
}

}  // namespace

TEST_CASE("Fock dimensions equal the PBW count") {
    for (int d = 0; d <= 10; ++d) CHECK(fock_basis(d).size() == static_cast<std::size_t>(verma::kostant_p2(d)));
}

TEST_CASE("Heisenberg pairing [c(n), d(-n)] = 2n") {
    const Sector s{Rational(1, 3), Rational(-1)};
    const auto g = FockVector::ground(s);
    for (int n = 1; n <= 3; ++n) {
        const auto v = free_mode_act(FreeField::c, HalfInt::integer(n), free_mode_act(FreeField::d, HalfInt::integer(-n), g));
        CHECK(v == g * Coeff(2 * n));
        CHECK(free_mode_act(FreeField::c, HalfInt::integer(n), free_mode_act(FreeField::c, HalfInt::integer(-n), g)).is_zero());
    }
    // zero modes: c(0) = <c, gamma> = 2 xd, d(0) = 2 xc
    CHECK(free_mode_act(FreeField::c, HalfInt(0), g) == g * Coeff(-2));
    CHECK(free_mode_act(FreeField::d, HalfInt(0), g) == g * Coeff(Rational(2, 3)));
    CHECK_THROWS_AS(free_mode_act(FreeField::c, HalfInt(1), g), ParityMismatch);
}

TEST_CASE("fermions anticommute") {
    const Sector s{Rational(0), Rational(0)};
    const auto g = FockVector::ground(s);
    const auto a = free_mode_act(FreeField::psi_plus, HalfInt(-1), free_mode_act(FreeField::psi_minus, HalfInt(-3), g));
    const auto b = free_mode_act(FreeField::psi_minus, HalfInt(-3), free_mode_act(FreeField::psi_plus, HalfInt(-1), g));
    CHECK(a + b == FockVector());
    CHECK(free_mode_act(FreeField::psi_plus, HalfInt(-1), free_mode_act(FreeField::psi_plus, HalfInt(-1), g)).is_zero());
}

TEST_CASE("the highest vector carries the weights of v_{p,r}") {
    for (const auto& [p, r] : std::vector<std::pair<Rational, Rational>>{
             {Rational(1), Rational(1, 3)}, {Rational(-2), Rational(3, 4)}, {Rational(1, 2), Rational(5)}}) {
        const auto hw = verma::specialized_hw(p, r, kPrm.cL, kPrm.cLa);
        const auto v = highest_vector(p, r, kPrm.cL);
        CHECK(sector_weight(v.sector(), kPrm.cL) == hw.h);
        CHECK(realized_act(Gen::L(0), v, kPrm) == v * Coeff(hw.h));
        CHECK(realized_act(Gen::A(0), v, kPrm) == v * Coeff(hw.hA));
        for (const auto& g : algebra::raising_generators_up_to(6)) CHECK(realized_act(g, v, kPrm).is_zero());
    }
}

TEST_CASE("realized brackets on a small truncation") {
    const auto rep = check_realized_brackets(pr_sector(Rational(1), Rational(1, 3), kPrm.cL), kPrm, 4, 3);
    CHECK(rep.ok());
    CHECK(rep.checks > 0);
    algebra::BracketTable bad = algebra::BracketTable::standard();
    bad.override_pair(Gen::L(1), Gen::L(-1), algebra::RElement::generator(Gen::L(0), Rational(3)));
    CHECK_FALSE(check_realized_brackets(pr_sector(Rational(1), Rational(1, 3), kPrm.cL), kPrm, 2, 2, bad).ok());
}

TEST_CASE("Psi = -sqrt2 cLa Psi-") {
    const Sector s = pr_sector(Rational(1), Rational(1, 3), kPrm.cL);
    const auto v = realized_act(Gen::P(-1), FockVector::ground(s), kPrm);
    FockMonomial m;
    m.pm = {1};
    CHECK(v == single(s, m, Coeff(Rational(0), -kPrm.cLa)));
}

TEST_CASE("odd p singular vector is annihilated by the raising modes") {
    for (int p : {1, 3}) {
        const auto u = build_singular_odd(p, Rational(1, 3), kPrm);
        CHECK(u.max_twice_degree() == p);
        for (const auto& g : verma::raising_test_generators(p)) CHECK(realized_act(g, u, kPrm).is_zero());
    }
}

TEST_CASE("screening operators") {
    const Sector s = pr_sector(Rational(-1), Rational(0), kPrm.cL);
    CHECK(s.untwisted());
    CHECK(pr_sector(Rational(2), Rational(0), kPrm.cL).twisted());
    for (int d = 0; d <= 4; ++d)
        for (const auto& m : fock_basis(d)) CHECK(screening_Q(screening_Q(single(s, m))).is_zero());
    // e^c_0 raises xc by one
    const auto g = screening_G(FockVector::ground(s), false);
    if (!g.is_zero()) CHECK(g.sector().xc == s.xc + Rational(1));
    CHECK_THROWS_AS(a_mode(Rational(1, 2), FockVector::ground(s)), InadmissibleIndex);
}

TEST_CASE("family vectors sit at the expected degrees") {
    CHECK(family_degree(3, 1, FamilyKind::singular).twice == 9);
    CHECK(family_degree(3, 1, FamilyKind::subsingular).twice == 6);
    CHECK(family_degree(2, 2, FamilyKind::singular).twice == 8);
    const auto u = family_vector(2, Rational(1, 2), 1, FamilyKind::singular, kPrm);
    CHECK(u.max_twice_degree() == 4);
    CHECK(u.is_homogeneous());
    CHECK_THROWS(family_vector(2, Rational(1, 2), 1, FamilyKind::subsingular, kPrm));
}

TEST_CASE("Verma-Fock bridge for generic p is an isomorphism in low degree") {
    verma::VermaModule<Rational> m(verma::specialized_hw(Rational(1, 2), Rational(1, 3), kPrm.cL, kPrm.cLa));
    VermaFockBridge bridge(m, pr_sector(Rational(1, 2), Rational(1, 3), kPrm.cL), kPrm);
    for (int d = 0; d <= 4; ++d) CHECK(linalg::rank(bridge.image_matrix(d)) == fock_basis(d).size());
    const auto x = m.basis_vector(2, 1);
    const auto back = bridge.pull_back(bridge.realize(x), 2);
    REQUIRE(back);
    CHECK(*back == x);
}
