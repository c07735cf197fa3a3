#include <shv/freefield/lattice.hpp>

#include <shv/qchar/schur.hpp>

#include <algorithm>

namespace shv::freefield {

namespace {

// S_j(-beta(1), -beta(2), ...) with beta = (k/2) c, where beta(n) acts as
// k n d/d d(-n) on the d-part.  Adds the results into out.
void apply_annihilation_schur(int j, int k_half, const FockMonomial& m, const Rational& coeff,
                              std::vector<std::pair<FockMonomial, Rational>>& out) {
    for (const auto& t : qchar::schur_expand(j)) {
        FockMonomial n = m;
        Rational c = coeff * t.coefficient;
        bool ok = true;
        for (int part : t.parts) {
            auto it = std::find(n.d.begin(), n.d.end(), part);
            if (it == n.d.end()) {
                ok = false;
                break;
            }
            const long mult = static_cast<long>(std::count(n.d.begin(), n.d.end(), part));
            c *= Rational(-static_cast<long>(k_half) * part * mult);
            n.d.erase(it);
        }
        if (ok) out.emplace_back(std::move(n), std::move(c));
    }
}

}  // namespace

FockVector lattice_exp_act(int k_half, const Rational& n, const FockVector& v) {
    const Sector& s = v.sector();
    // <beta, gamma> = (k/2) <c, gamma>
    const Rational pair = Rational(k_half) * s.xd;
    const Rational base = n + Rational(1) + pair;  // Schur index = j - base
    if (!base.is_integer()) throw InadmissibleIndex("e^{" + std::to_string(k_half) + "c/2}_" + n.to_string() +
                                                    " is not defined on " + s.to_string());
    const long b = base.to_long();
    Sector t{s.xc + Rational(k_half, 2), s.xd};
    FockVector out(t);
    const Rational scale(k_half, 2);
    for (const auto& [m, c] : v.terms()) {
        int dmax = 0;
        for (int x : m.d) dmax += x;
        for (int j = 0; j <= dmax; ++j) {
            const long idx = j - b;
            if (idx < 0) continue;
            std::vector<std::pair<FockMonomial, Rational>> stage;
            apply_annihilation_schur(j, k_half, m, Rational(1), stage);
            for (const auto& [n1, c1] : stage)
                for (const auto& t2 : qchar::schur_expand_scaled(static_cast<int>(idx), scale)) {
                    FockMonomial n2 = n1;
                    for (int part : t2.parts) {
                        auto it = std::find_if(n2.c.begin(), n2.c.end(), [part](int y) { return y < part; });
                        n2.c.insert(it, part);
                    }
                    out.add(n2, c * Coeff(c1 * t2.coefficient));
                }
        }
    }
    return out;
}

Rational a_mode_degree_shift(const Rational& n, const Sector& s) { return Rational(0) - n - Rational(1, 2) - s.xd; }

FockVector a_mode(const Rational& n, const FockVector& v) {
    const Sector& s = v.sector();
    if (!(n + s.xd).is_integer()) throw InadmissibleIndex("a_" + n.to_string() + " is not defined on " + s.to_string());
    FockVector out(Sector{s.xc + Rational(1, 2), s.xd});
    if (v.is_zero()) return out;
    // e^{c/2}_m vanishes unless m <= deg_d(w) - 1 - xd, and Psi-(t), t > 0,
    // needs a Psi+(-t) in w
    const int TD = v.max_twice_degree();
    const Rational m_max = Rational(TD, 2) - Rational(1) - s.xd;
    const Rational t_min = n - Rational(1, 2) - m_max;
    int T = (Rational(2) * t_min).floor().to_long();
    if (T % 2 == 0) --T;
    for (; T <= TD; T += 2) {
        const Rational t(T, 2);
        const FockVector e = lattice_exp_act(1, n - t - Rational(1, 2), v);
        if (!e.is_zero()) out += free_mode_act(FreeField::psi_minus, HalfInt(T), e);
    }
    return out;
}

}  // namespace shv::freefield
