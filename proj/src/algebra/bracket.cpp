#include <shv/algebra/bracket.hpp>

namespace shv::algebra {

namespace {

Rational hm(int twice) { return half(twice); }

void put(RElement& e, Kind k, int twice_mode, const Rational& c) {
    if (!c.is_zero()) e.add(Word{Gen(k, HalfInt(twice_mode))}, c);
}

void put_central(RElement& e, Kind k, const Rational& c) {
    if (!c.is_zero()) e.add(Word{Gen::central(k)}, c);
}

}  // namespace

RElement defining_bracket(const Gen& x, const Gen& y) {
    RElement e;
    if (x.is_central() || y.is_central()) return e;
    const int tx = x.twice_mode, ty = y.twice_mode, ts = tx + ty;
    const Rational a = hm(tx), b = hm(ty);
    const bool balanced = ts == 0;
    const Kind X = x.kind, Y = y.kind;

    if (X == Kind::L && Y == Kind::L) {
        put(e, Kind::L, ts, a - b);
        if (balanced) put_central(e, Kind::CL, (a * a * a - a) / Rational(12));
    } else if (X == Kind::L && Y == Kind::A) {
        put(e, Kind::A, ts, -b);
        if (balanced) put_central(e, Kind::CLA, -(a * a + a));
    } else if (X == Kind::A && Y == Kind::L) {
        put(e, Kind::A, ts, a);
        if (balanced) put_central(e, Kind::CLA, b * b + b);
    } else if (X == Kind::A && Y == Kind::A) {
        if (balanced) put_central(e, Kind::CA, a);
    } else if (X == Kind::P && Y == Kind::P) {
        if (balanced) put_central(e, Kind::CA, 1);
    } else if (X == Kind::G && Y == Kind::G) {
        put(e, Kind::L, ts, 2);
        if (balanced) put_central(e, Kind::CL, (a * a - Rational(1, 4)) / Rational(3));
    } else if (X == Kind::L && Y == Kind::G) {
        put(e, Kind::G, ts, a / Rational(2) - b);
    } else if (X == Kind::G && Y == Kind::L) {
        put(e, Kind::G, ts, a - b / Rational(2));
    } else if (X == Kind::A && Y == Kind::G) {
        put(e, Kind::P, ts, a);
    } else if (X == Kind::G && Y == Kind::A) {
        put(e, Kind::P, ts, -b);
    } else if (X == Kind::P && Y == Kind::L) {
        put(e, Kind::P, ts, a + b / Rational(2));
    } else if (X == Kind::L && Y == Kind::P) {
        put(e, Kind::P, ts, -(b + a / Rational(2)));
    } else if (X == Kind::P && Y == Kind::G) {
        put(e, Kind::A, ts, 1);
        if (balanced) put_central(e, Kind::CLA, Rational(2) * a - Rational(1));
    } else if (X == Kind::G && Y == Kind::P) {
        put(e, Kind::A, ts, 1);
        if (balanced) put_central(e, Kind::CLA, Rational(2) * b - Rational(1));
    }
    // alpha with Psi, in either order: zero
    return e;
}

RElement BracketTable::operator()(const Gen& x, const Gen& y) const {
    if (!overrides_.empty()) {
        auto it = overrides_.find({x, y});
        if (it != overrides_.end()) return it->second;
    }
    return defining_bracket(x, y);
}

const BracketTable& BracketTable::standard() {
    static const BracketTable table;
    return table;
}

}  // namespace shv::algebra
