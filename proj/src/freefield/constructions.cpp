#include <shv/freefield/constructions.hpp>

#include <shv/verma/phi.hpp>

namespace shv::freefield {

namespace {

using E = Element<Rational>;

E psi(int twice_mode) { return E::generator(Gen::P(twice_mode)); }

E schur(int k, const Rational& scale) { return verma::schur_element(k, Kind::A, scale); }

void require(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
}

// sum_{i>=0} Psi(i + shift) S_i(scale) over lowering Psi modes; shift in twice units
E psi_schur_sum(int twice_shift, const Rational& scale) {
    E out;
    for (int i = 0; 2 * i + twice_shift < 0; ++i) out += psi(2 * i + twice_shift) * schur(i, scale);
    return out;
}

}  // namespace

E sing_odd_element(int p, const Rational& cLa) {
    require(p > 0 && p % 2 == 1, "sing_odd_element needs odd p > 0");
    const Rational s = Rational(-1) / (Rational(2) * cLa);
    E out;
    for (int i = 0; i <= (p - 1) / 2; ++i) out += psi(-2 * i - 1) * schur((p - 1) / 2 - i, s);
    return out;
}

E subsing_odd_element(int p, const Rational& cLa, const Rational& double_sum_scale) {
    require(p > 0 && p % 2 == 1, "subsing_odd_element needs odd p > 0");
    const Rational s = Rational(-1) / (Rational(2) * cLa);
    E out = schur(p, Rational(-1) / cLa);
    for (int k = 1; k <= (p - 1) / 2; ++k)
        out += psi_schur_sum(2 * k - p, s) * psi_schur_sum(-2 * k - p, s) * (Rational(1, k) * double_sum_scale);
    return out;
}

E sing_even_element(int p, const Rational& cLa, const Rational& double_sum_scale) {
    require(p > 0 && p % 2 == 0, "sing_even_element needs even p > 0");
    const Rational s = Rational(-1) / (Rational(2) * cLa);
    E out = schur(p, Rational(-1) / cLa);
    for (int k = 0; 2 * k <= p - 1; ++k)
        out += psi_schur_sum(2 * k - (p - 1), s) * psi_schur_sum(-2 * k - (p + 1), s) * (Rational(2, 2 * k + 1) * double_sum_scale);
    return out;
}

E gen_rhs_element(int p, const Rational& cLa) {
    require(p > 0 && p % 2 == 1, "gen_rhs_element needs odd p > 0");
    E out;
    for (int i = 0; i <= (p - 1) / 2; ++i)
        out += psi(-2 * i - 1) * schur((p - 1) / 2 - i, Rational(-1) / cLa) * cLa.inverse();
    return out;
}

E an_rhs_element(int p, int n, const Rational& cLa) {
    require(p > 0 && p % 2 == 1, "an_rhs_element needs odd p > 0");
    const Rational s = Rational(-1) / (Rational(2) * cLa);
    E out;
    for (int i = 0; i <= (p - 1) / 2 - n; ++i) out += psi(-2 * i - 1) * schur((p - 1) / 2 - n - i, s);
    return out;
}

FockVector an_rhs(int p, int n, const Rational& r, const FreeFieldParams& prm) {
    const Coeff pref = (Coeff::sqrt2() * Coeff(prm.cLa)).inverse() * Coeff(-1);
    return realize_element(an_rhs_element(p, n, prm.cLa), pr_sector(Rational(p), r, prm.cL), prm) * pref;
}

FockVector build_singular_odd(int p, const Rational& r, const FreeFieldParams& prm) {
    return realize_element(sing_odd_element(p, prm.cLa), pr_sector(Rational(p), r, prm.cL), prm);
}

FockVector build_subsingular_odd(int p, const Rational& r, const FreeFieldParams& prm,
                                 const Rational& double_sum_scale) {
    return realize_element(subsing_odd_element(p, prm.cLa, double_sum_scale), pr_sector(Rational(p), r, prm.cL), prm);
}

FockVector build_singular_even(int p, const Rational& r, const FreeFieldParams& prm,
                               const Rational& double_sum_scale) {
    return realize_element(sing_even_element(p, prm.cLa, double_sum_scale), pr_sector(Rational(p), r, prm.cL), prm);
}

FockVector family_vector(int p, const Rational& r, int n, FamilyKind kind, const FreeFieldParams& prm) {
    require(p > 0, "family_vector needs p > 0");
    require(n >= (kind == FamilyKind::subsingular ? 1 : 0), "family index out of range");
    const bool odd = p % 2 == 1;
    require(odd || kind == FamilyKind::singular, "even p has no subsingular family");
    FockVector v;
    if (odd && kind == FamilyKind::singular) {
        v = screening_Q(highest_vector(Rational(p), r - Rational(n) - Rational(1, 2), prm.cL));
    } else {
        v = highest_vector(Rational(p), r - Rational(n), prm.cL);
    }
    for (int i = 0; i < n; ++i) v = screening_G(v, !odd);
    return v;
}

algebra::HalfInt family_degree(int p, int n, FamilyKind kind) {
    const bool odd = p % 2 == 1;
    return algebra::HalfInt(2 * n * p + (odd && kind == FamilyKind::singular ? p : 0));
}

}  // namespace shv::freefield
