#include <shv/freefield/realization.hpp>

#include <algorithm>

namespace shv::freefield {

namespace {

struct Acc {
    FockVector& out;
    const Sector& s;

    // coefficient * X(tx) Y(ty) on (m, c): Y first
    void quad(FreeField X, int tx, FreeField Y, int ty, const Coeff& k, const FockMonomial& m, const Coeff& c) {
        FockMonomial n = m;
        Rational r(1);
        if (!free_mode_on_monomial(Y, HalfInt(ty), s, n, r)) return;
        if (!free_mode_on_monomial(X, HalfInt(tx), s, n, r)) return;
        out.add(n, c * k * Coeff(r));
    }
    void lin(FreeField X, int tx, const Coeff& k, const FockMonomial& m, const Coeff& c) {
        if (k.is_zero()) return;
        FockMonomial n = m;
        Rational r(1);
        if (free_mode_on_monomial(X, HalfInt(tx), s, n, r)) out.add(n, c * k * Coeff(r));
    }
    // :X(t)Y(u): for fermions, creation modes to the left
    void fermion_normal(FreeField X, int tx, FreeField Y, int ty, const Coeff& k, const FockMonomial& m,
                        const Coeff& c) {
        if (tx < 0)
            quad(X, tx, Y, ty, k, m, c);
        else
            quad(Y, ty, X, tx, -k, m, c);
    }
};

const Coeff kSqrt2 = Coeff::sqrt2();

void act_L(int T, const FockVector& v, const FreeFieldParams& prm, FockVector& out) {
    const int TD = v.max_twice_degree();
    const Rational beta = (prm.cL - Rational(3)) / Rational(24);
    const int m = T / 2;
    Acc acc{out, v.sector()};
    for (const auto& [mono, c] : v.terms()) {
        const int D = TD / 2;
        for (int k = m - D; k <= D; ++k) {
            // :c(k) d(m-k): with the annihilation mode on the right
            if (k > 0)
                acc.quad(FreeField::d, 2 * (m - k), FreeField::c, 2 * k, Coeff(Rational(1, 2)), mono, c);
            else
                acc.quad(FreeField::c, 2 * k, FreeField::d, 2 * (m - k), Coeff(Rational(1, 2)), mono, c);
        }
        acc.lin(FreeField::c, T, Coeff(beta * Rational(-m - 1)), mono, c);
        acc.lin(FreeField::d, T, Coeff(Rational(m + 1, 2)), mono, c);
        for (int t = T - TD - 1; t <= TD + 1; ++t) {
            if (t % 2 == 0) continue;
            // (1/2)(-t-1/2) [:Psi+(t)Psi-(m-t): + :Psi-(t)Psi+(m-t):]
            const Coeff k(Rational(-t - 1, 4));
            acc.fermion_normal(FreeField::psi_plus, t, FreeField::psi_minus, T - t, k, mono, c);
            acc.fermion_normal(FreeField::psi_minus, t, FreeField::psi_plus, T - t, k, mono, c);
        }
    }
}

void act_G(int S, const FockVector& v, const FreeFieldParams& prm, FockVector& out) {
    const int TD = v.max_twice_degree();
    Acc acc{out, v.sector()};
    const Coeff half = kSqrt2 * Coeff(Rational(1, 2));
    const Coeff dpsi = kSqrt2 * Coeff((prm.cL - Rational(3)) / Rational(12) * Rational(-S - 1, 2));
    const Coeff dpsi_plus = kSqrt2 * Coeff(Rational(S + 1, 2));
    for (const auto& [mono, c] : v.terms()) {
        for (int k2 = S - TD - 1; k2 <= TD + 1; ++k2) {
            if (k2 % 2) continue;
            acc.quad(FreeField::c, k2, FreeField::psi_plus, S - k2, half, mono, c);
            acc.quad(FreeField::d, k2, FreeField::psi_minus, S - k2, half, mono, c);
        }
        acc.lin(FreeField::psi_minus, S, dpsi, mono, c);
        acc.lin(FreeField::psi_plus, S, dpsi_plus, mono, c);
    }
}

}  // namespace

Sector pr_sector(const Rational& p, const Rational& r, const Rational& cL) {
    const Rational k = (p + Rational(1)) / Rational(2);
    return Sector{r + k * (cL - Rational(3)) / Rational(12), -k};
}

FockVector highest_vector(const Rational& p, const Rational& r, const Rational& cL) {
    return FockVector::ground(pr_sector(p, r, cL));
}

Rational sector_weight(const Sector& s, const Rational& cL) {
    return Rational(2) * s.xc * s.xd - (cL - Rational(3)) / Rational(12) * s.xd + s.xc;
}

FockVector realized_act(const Gen& g, const FockVector& v, const FreeFieldParams& prm) {
    FockVector out(v.sector());
    switch (g.kind) {
    case Kind::CL: return v * Coeff(prm.cL);
    case Kind::CA: return out;
    case Kind::CLA: return v * Coeff(prm.cLa);
    case Kind::A: return free_mode_act(FreeField::c, g.mode(), v) * Coeff(-prm.cLa);
    case Kind::P: return free_mode_act(FreeField::psi_minus, g.mode(), v) * (Coeff(-prm.cLa) * kSqrt2);
    case Kind::L: act_L(g.twice_mode, v, prm, out); return out;
    case Kind::G: act_G(g.twice_mode, v, prm, out); return out;
    }
    return out;
}

FockVector realized_act(const Word& w, const FockVector& v, const FreeFieldParams& prm) {
    FockVector cur = v;
    for (auto it = w.rbegin(); it != w.rend() && !cur.is_zero(); ++it) cur = realized_act(*it, cur, prm);
    return cur;
}

FockVector realized_act(const Element<Rational>& x, const FockVector& v, const FreeFieldParams& prm) {
    FockVector out(v.sector());
    for (const auto& [w, c] : x.terms()) out += realized_act(w, v, prm) * Coeff(c);
    return out;
}

FockVector realize_element(const Element<Rational>& x, const Sector& s, const FreeFieldParams& prm) {
    return realized_act(x, FockVector::ground(s), prm);
}

BracketCheckReport check_realized_brackets(const Sector& s, const FreeFieldParams& prm, int twice_mode_bound,
                                           int twice_max, const algebra::BracketTable& table) {
    BracketCheckReport rep;
    const auto gens = algebra::generators_up_to(twice_mode_bound);
    for (int d = 0; d <= twice_max; ++d)
        for (const auto& mono : fock_basis(d)) {
            FockVector w(s);
            w.add(mono, Coeff(1));
            std::vector<FockVector> once;
            once.reserve(gens.size());
            for (const auto& g : gens) once.push_back(realized_act(g, w, prm));
            for (std::size_t i = 0; i < gens.size(); ++i)
                for (std::size_t j = 0; j < gens.size(); ++j) {
                    const Gen& x = gens[i];
                    const Gen& y = gens[j];
                    FockVector lhs = realized_act(x, once[j], prm);
                    FockVector yx = realized_act(y, once[i], prm);
                    if (x.is_odd() && y.is_odd()) lhs += yx;
                    else lhs -= yx;
                    ++rep.checks;
                    if (lhs != realized_act(table(x, y), w, prm)) {
                        if (rep.failures++ == 0)
                            rep.first_failure = "[" + x.to_string() + ", " + y.to_string() + "] on " + mono.to_string();
                    }
                }
        }
    return rep;
}

std::vector<Coeff> fock_coordinates(const FockVector& v, int twice_d) {
    const auto& basis = fock_basis(twice_d);
    std::vector<Coeff> out(basis.size(), Coeff(0));
    for (const auto& [m, c] : v.terms()) {
        auto it = std::lower_bound(basis.begin(), basis.end(), m);
        if (it == basis.end() || *it != m) throw std::invalid_argument("monomial " + m.to_string() + " not of degree " +
                                                                      HalfInt(twice_d).to_string());
        out[static_cast<std::size_t>(it - basis.begin())] = c;
    }
    return out;
}

FockVector from_fock_coordinates(const Sector& s, int twice_d, const std::vector<Coeff>& coords) {
    const auto& basis = fock_basis(twice_d);
    FockVector v(s);
    for (std::size_t i = 0; i < coords.size(); ++i) v.add(basis.at(i), coords[i]);
    return v;
}

VermaFockBridge::VermaFockBridge(verma::VermaModule<Rational>& m, Sector s, FreeFieldParams prm)
    : m_(m), sector_(std::move(s)), prm_(std::move(prm)) {}

const FockVector& VermaFockBridge::image(int twice_d, std::size_t idx) {
    auto key = std::make_pair(twice_d, idx);
    auto it = images_.find(key);
    if (it != images_.end()) return it->second;
    const Word& w = m_.basis(twice_d).at(idx);
    FockVector img;
    if (w.empty()) {
        img = FockVector::ground(sector_);
    } else {
        // the suffix of a canonical word is a canonical word
        const Word rest(w.begin() + 1, w.end());
        const int rd = twice_d - w[0].twice_degree();
        img = realized_act(w[0], image(rd, *m_.index_of(rd, rest)), prm_);
    }
    return images_.emplace(key, std::move(img)).first->second;
}

FockVector VermaFockBridge::realize(const verma::ModuleVector<Rational>& v) {
    FockVector out(sector_);
    for (std::size_t i = 0; i < v.coords.size(); ++i)
        if (!v.coords[i].is_zero()) out += image(v.twice_degree, i) * Coeff(v.coords[i]);
    return out;
}

linalg::Matrix<Coeff> VermaFockBridge::image_matrix(int twice_d) {
    const std::size_t n = m_.dimension(twice_d);
    std::vector<std::vector<Coeff>> cols;
    cols.reserve(n);
    for (std::size_t i = 0; i < n; ++i) cols.push_back(fock_coordinates(image(twice_d, i), twice_d));
    linalg::Matrix<Coeff> a(fock_basis(twice_d).size(), n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < cols[j].size(); ++i) a(i, j) = cols[j][i];
    return a;
}

std::optional<verma::ModuleVector<Rational>> VermaFockBridge::pull_back(const FockVector& f, int twice_d) {
    if (!f.is_zero() && f.sector() != sector_) throw std::invalid_argument("pull_back: sector mismatch");
    auto x = linalg::solve(image_matrix(twice_d), fock_coordinates(f, twice_d));
    if (!x) return std::nullopt;
    bool all_rational = true, all_sqrt2 = true;
    for (const auto& c : *x) {
        if (!c.sqrt2_part().is_zero()) all_rational = false;
        if (!c.rational_part().is_zero()) all_sqrt2 = false;
    }
    verma::ModuleVector<Rational> out{twice_d, {}};
    for (const auto& c : *x) out.coords.push_back(all_rational ? c.rational_part() : c.sqrt2_part());
    if (!all_rational && !all_sqrt2) return std::nullopt;
    return out;
}

}  // namespace shv::freefield
