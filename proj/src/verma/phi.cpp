#include <shv/verma/phi.hpp>

#include <shv/qchar/schur.hpp>

#include <stdexcept>

namespace shv::verma {

Element<Rational> schur_element(int k, Kind kind, const Rational& scale) {
    Element<Rational> out;
    for (const auto& t : qchar::schur_expand_scaled(k, scale)) {
        Word w;
        for (int part : t.parts) w.push_back(Gen(kind, HalfInt::integer(-part)));
        out.add(w, t.coefficient);
    }
    return out;
}

Element<Rational> phi_operator(int p, const Rational& cL, const Rational& cLa) {
    if (p >= 0) throw std::invalid_argument("phi_operator needs p < 0");
    if (cLa.is_zero()) throw std::domain_error("phi_operator needs cLa != 0");
    const int n = -p;
    const Rational s = cLa.inverse();
    auto S = [&](int k) { return schur_element(k, Kind::A, s); };
    auto gen = [](const Gen& g, const Rational& c = Rational(1)) { return Element<Rational>::generator(g, c); };

    Element<Rational> out;
    for (int i = 1; i <= n; ++i)
        out += (gen(Gen::L(-i)) + gen(Gen::A(-i), (cL - Rational(27)) / (Rational(24) * cLa))) * S(n - i);
    out += S(n) * (gen(Gen::L(0)) + gen(Gen::A(0), (cL - Rational(3)) / (Rational(24) * cLa)));

    const Rational c_pg = Rational(1) / (Rational(2) * cLa);
    const Rational c_pp = Rational(0) - (cL - Rational(15)) / (Rational(24) * cLa * cLa);
    for (int i = 0; i <= n - 1; ++i)
        for (int k = 0; k <= n - i - 1; ++k) {
            const Element<Rational> tail = S(n - i - k - 1);
            out += gen(Gen::P(-2 * i - 1), c_pg) * gen(Gen::G(-2 * k - 1)) * tail;
            if (i != 0) out += gen(Gen::P(-2 * i - 1), c_pp * Rational(i)) * gen(Gen::P(-2 * k - 1)) * tail;
        }
    return out;
}

}  // namespace shv::verma
