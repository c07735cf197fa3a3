#include <doctest.h>

#include <shv/algebra/bracket.hpp>
#include <shv/algebra/normal_order.hpp>
#include <shv/algebra/partition.hpp>
#include <shv/algebra/relations.hpp>

using namespace shv;
using namespace shv::algebra;

namespace {

RElement gen(const Gen& g, const Rational& c = Rational(1)) { return RElement::generator(g, c); }
RElement cl(const Rational& c) { return gen(Gen::central(Kind::CL), c); }
RElement cla(const Rational& c) { return gen(Gen::central(Kind::CLA), c); }

}  // namespace

TEST_CASE("brackets agree with hand-evaluated relations") {
    const auto& t = BracketTable::standard();
    // (m - n) L(m+n) + (m^3 - m)/12 CL at m = 2, n = -2
    CHECK(t(Gen::L(2), Gen::L(-2)) == gen(Gen::L(0), 4) + cl(Rational(1, 2)));
    // 2 L(0) + (m^2 + m)/3 CL with m = 1
    CHECK(t(Gen::G(3), Gen::G(-3)) == gen(Gen::L(0), 2) + cl(Rational(2, 3)));
    CHECK(t(Gen::G(1), Gen::G(-1)) == gen(Gen::L(0), 2));
    // -n alpha(m+n) - (m^2 + m) CLa with m = 1, n = -1
    CHECK(t(Gen::L(1), Gen::A(-1)) == gen(Gen::A(0)) + cla(Rational(-2)));
    // alpha(m+n+1) + 2m CLa with m = 1, n = -2
    CHECK(t(Gen::P(3), Gen::G(-3)) == gen(Gen::A(0)) + cla(Rational(2)));
    CHECK(t(Gen::A(1), Gen::G(-1)) == gen(Gen::P(1)));
    // (m/2 - n - 1/2) G(m+n+1/2) with m = 1, n = -1
    CHECK(t(Gen::L(1), Gen::G(-1)) == gen(Gen::G(1), Rational(1)));
    // (2m + n + 1)/2 Psi(m+n+1/2) with m = 0, n = 1
    CHECK(t(Gen::P(1), Gen::L(1)) == gen(Gen::P(3), Rational(1)));
    CHECK(t(Gen::A(2), Gen::P(-1)).is_zero());
    CHECK(t(Gen::P(1), Gen::P(-1)) == gen(Gen::central(Kind::CA)));
    CHECK(t(Gen::A(3), Gen::A(-3)) == gen(Gen::central(Kind::CA), 3));
}

TEST_CASE("super-antisymmetry on the table") {
    const auto& t = BracketTable::standard();
    CHECK(t(Gen::G(-3), Gen::P(3)) == t(Gen::P(3), Gen::G(-3)));
    CHECK(t(Gen::A(-1), Gen::L(1)) == t(Gen::L(1), Gen::A(-1)) * Rational(-1));
}

TEST_CASE("normal ordering of an odd pair") {
    NormalOrderer no;
    RElement expect = RElement(Word{Gen::G(-1), Gen::G(1)}, Rational(-1)) + gen(Gen::L(0), 2);
    CHECK(no.order(Word{Gen::G(1), Gen::G(-1)}) == expect);
    CHECK(no.order(Word{Gen::G(-1), Gen::G(-1)}) == gen(Gen::L(-1)));
}

TEST_CASE("partition enumeration") {
    CHECK(partitions(4, 4).size() == 5);
    CHECK(partitions(6, 6).size() == 11);
    CHECK(strict_odd_partitions(8, 8).size() == 2);  // 7+1, 5+3
    CHECK_THROWS(Partition({1, 2}));
    CHECK_THROWS(SuperPartition({3, 3}));
    CHECK(compare_pairs(Partition({2}), SuperPartition(), Partition({1, 1}), SuperPartition()) == PairOrder::Less);
}

TEST_CASE("identity suites pass and detect a corrupted bracket") {
    const auto& t = BracketTable::standard();
    CHECK(check_antisymmetry(t, 6).ok());
    const auto jac = check_jacobi(t, 4);
    CHECK(jac.ok());
    CHECK(jac.triples_checked == 5832);
    CHECK(check_confluence(t, 4, 3, 7).ok());

    BracketTable bad = t;
    bad.override_pair(Gen::L(2), Gen::L(-2), gen(Gen::L(0), 5));
    const auto rep = check_antisymmetry(bad, 4);
    CHECK_FALSE(rep.ok());
    bool named = false;
    for (const auto& f : rep.failures) named = named || f == "[L(2), L(-2)]";
    CHECK(named);
}

TEST_CASE("generator parsing round trip") {
    for (const auto& g : generators_up_to(6)) CHECK(Gen::parse(g.to_string()) == g);
    CHECK(HalfInt::parse("5/2").twice == 5);
    CHECK_THROWS(HalfInt::parse("1/3"));
}
