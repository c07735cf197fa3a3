#include <shv/cli/checks.hpp>

#include <shv/algebra/relations.hpp>
#include <shv/qchar/qseries.hpp>
#include <shv/verma/determinant.hpp>
#include <shv/verma/phi.hpp>

#include <chrono>
#include <functional>
#include <future>
#include <set>
#include <sstream>

namespace shv::cli {

using namespace freefield;
using algebra::HalfInt;
using verma::ModuleVector;
using verma::VermaModule;

namespace {

std::string hd(int twice) { return HalfInt(twice).to_string(); }

std::string dims_text(const std::vector<std::int64_t>& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
    os << ")";
    return os.str();
}

std::string gens_text(const std::vector<Gen>& gs, std::size_t limit = 6) {
    std::ostringstream os;
    for (std::size_t i = 0; i < gs.size() && i < limit; ++i) os << (i ? ", " : "") << gs[i].to_string();
    if (gs.size() > limit) os << ", ... (" << gs.size() << " in total)";
    return os.str();
}

Check timed(const std::function<Check()>& f) {
    const auto t0 = std::chrono::steady_clock::now();
    Check c = f();
    c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return c;
}

verma::HighestWeight<Rational> hw_of(const Rational& p, const Rational& r, const FreeFieldParams& prm,
                                     const Rational& cA = Rational(0)) {
    return verma::pr_to_hw<Rational>(p, r, prm.cL, prm.cLa, cA);
}

int twice_degree_of(const FockVector& u) { return u.max_twice_degree(); }

// raising generators that do not annihilate u
std::vector<Gen> failing_raising(const FockVector& u, const FreeFieldParams& prm) {
    std::vector<Gen> bad;
    for (const auto& g : verma::raising_test_generators(twice_degree_of(u)))
        if (!realized_act(g, u, prm).is_zero()) bad.push_back(g);
    return bad;
}

std::string singularity_text(const FockVector& u, const std::vector<Gen>& bad) {
    if (u.is_zero()) return "vector is zero";
    if (bad.empty()) return "annihilated by every raising generator up to mode " + hd(2 * ((twice_degree_of(u) + 1) / 2));
    return "not annihilated by " + gens_text(bad);
}

// a = lambda b
std::optional<Coeff> proportionality(const FockVector& a, const FockVector& b) {
    if (b.is_zero()) return a.is_zero() ? std::optional<Coeff>(Coeff(0)) : std::nullopt;
    const auto& [m, c] = *b.terms().begin();
    Coeff lambda = a.coefficient(m) / c;
    if (a == b * lambda) return lambda;
    return std::nullopt;
}

std::string ratio_text(const FockVector& a, const FockVector& b) {
    auto l = proportionality(a, b);
    return l ? "ratio " + l->to_string() : "not proportional";
}

std::string short_vector(VermaModule<Rational>& m, const ModuleVector<Rational>& v) {
    std::string s = m.vector_to_string(verma::normalize_leading(m, v));
    if (s.size() > 400) {
        std::size_t n = 0;
        for (const auto& x : v.coords) n += !x.is_zero();
        return std::to_string(n) + " PBW terms";
    }
    return s;
}

// Pulls a Fock vector back into the Verma module of the same highest weight
// and compares it with the raising kernel there.
void verma_cross_check(Check& c, const std::string& label, int p, const Rational& r, const FreeFieldParams& prm,
                       const FockVector& u, int twice_d) {
    VermaModule<Rational> m(hw_of(Rational(p), r, prm));
    VermaFockBridge bridge(m, pr_sector(Rational(p), r, prm.cL), prm);
    auto pb = bridge.pull_back(u, twice_d);
    if (!pb) {
        c.expect(false, label + ": not in the image of the Verma module");
        return;
    }
    const auto ker = verma::singular_vectors(m, twice_d);
    linalg::EchelonSpan<Rational> span(m.dimension(twice_d));
    for (const auto& k : ker) span.add(k.coords);
    c.expect(verma::is_singular(m, *pb) && span.contains(pb->coords),
             label + ": Verma preimage lies in the raising kernel (dim " + std::to_string(ker.size()) +
                 ") at degree " + hd(twice_d));
    c.note(label + " normalized: " + short_vector(m, *pb));
}

FockVector fock_basis_vector(const Sector& s, const FockMonomial& mono) {
    FockVector w(s);
    w.add(mono, Coeff(1));
    return w;
}

std::string sector_label(int p, const Rational& r) { return "(p, r) = (" + std::to_string(p) + ", " + r.to_string() + ")"; }

}  // namespace

std::vector<std::int64_t> verma_dims(int twice_max) {
    std::vector<std::int64_t> v;
    for (int d = 0; d <= twice_max; ++d) v.push_back(verma::kostant_p2(d));
    return v;
}

std::vector<std::int64_t> simple_dims(const Cache& cache, const Rational& p, const Rational& r,
                                      const FreeFieldParams& prm, const Rational& cA, int twice_max, bool symbolic_r) {
    const std::string base = "verma|gram_rank|p=" + p.to_string() + "|r=" + (symbolic_r ? "generic" : r.to_string()) +
                             "|cL=" + prm.cL.to_string() + "|cLa=" + prm.cLa.to_string() + "|cA=" + cA.to_string() +
                             "|d=";
    std::vector<std::int64_t> out;
    std::optional<VermaModule<Rational>> m;
    std::optional<VermaModule<Polynomial>> ms;
    for (int d = 0; d <= twice_max; ++d) {
        const std::string key = base + std::to_string(d);
        if (auto hit = cache.get(key)) {
            out.push_back(hit->get<std::int64_t>());
            continue;
        }
        std::int64_t rank;
        if (symbolic_r) {
            if (!ms)
                ms.emplace(verma::pr_to_hw<Polynomial>(Polynomial(p), Polynomial::variable(Parameter::r),
                                                       Polynomial(prm.cL), Polynomial(prm.cLa), Polynomial(cA)));
            rank = static_cast<std::int64_t>(verma::simple_graded_dim(*ms, d));
        } else {
            if (!m) m.emplace(hw_of(p, r, prm, cA));
            rank = static_cast<std::int64_t>(verma::simple_graded_dim(*m, d));
        }
        cache.put(key, rank);
        out.push_back(rank);
    }
    return out;
}

Check check_relations(const algebra::BracketTable& table, int twice_bound) {
    return timed([&] {
        Check c{"bracket soundness", "super-commutator relations of the algebra"};
        const auto anti = algebra::check_antisymmetry(table, twice_bound);
        std::string line = "super-antisymmetry: " + std::to_string(anti.pairs_checked) + " pairs, " +
                           std::to_string(anti.failure_count) + " failures";
        for (const auto& f : anti.failures) line += "; " + f;
        c.expect(anti.ok(), line);
        const auto jac = algebra::check_jacobi(table, twice_bound);
        line = "super-Jacobi: " + std::to_string(jac.triples_checked) + " triples, " +
               std::to_string(jac.failure_count) + " failures";
        for (const auto& f : jac.failures) line += "; " + f;
        c.expect(jac.ok(), line);
        c.note("generators with |2*mode| <= " + std::to_string(twice_bound));
        return c;
    });
}

Check check_realization(const Rational& p, const Rational& r, const FreeFieldParams& prm, int twice_mode_bound,
                        int twice_max, const Cache& cache) {
    return timed([&] {
        Check c{"realization (p, r) = (" + p.to_string() + ", " + r.to_string() + ")",
                "free field realization on F_{p,r}"};
        const Sector s = pr_sector(p, r, prm.cL);
        const auto rep = check_realized_brackets(s, prm, twice_mode_bound, twice_max);
        c.expect(rep.ok(), "realized brackets, |2*mode| <= " + std::to_string(twice_mode_bound) + ", degree <= " +
                               hd(twice_max) + ": " + std::to_string(rep.checks) + " checks, " +
                               std::to_string(rep.failures) + " failures" +
                               (rep.ok() ? "" : "; first " + rep.first_failure));
        VermaModule<Rational> m(hw_of(p, r, prm));
        VermaFockBridge bridge(m, s, prm);
        const bool negative_integer = p.is_integer() && p < Rational(0);
        std::vector<std::int64_t> ranks, expected;
        for (int d = 0; d <= twice_max; ++d) {
            ranks.push_back(static_cast<std::int64_t>(linalg::rank(bridge.image_matrix(d))));
            if (!negative_integer) expected.push_back(static_cast<std::int64_t>(fock_basis(d).size()));
        }
        if (negative_integer) {
            expected = simple_dims(cache, p, r, prm, Rational(0), twice_max);
            c.expect(ranks == expected, "image of v_{p,r} has the graded dims of the simple quotient: " +
                                            dims_text(ranks) + " vs " + dims_text(expected));
        } else {
            c.expect(ranks == expected,
                     "v_{p,r} generates F_{p,r}: image dims " + dims_text(ranks) + " vs Fock dims " + dims_text(expected));
        }
        return c;
    });
}

void certify_sing_nep(Check& c, int p, const Rational& r, const FreeFieldParams& prm, int twice_verma_max) {
    const std::string label = "odd p singular vector, " + sector_label(p, r);
    const FockVector u = build_singular_odd(p, r, prm);
    const auto bad = failing_raising(u, prm);
    c.expect(!u.is_zero() && bad.empty() && twice_degree_of(u) == p,
             label + " at degree " + hd(p) + ": " + singularity_text(u, bad));
    const FockVector u0 = family_vector(p, r, 0, FamilyKind::singular, prm);
    c.note(label + ": compared with Q v_{p,r-1/2}: " + ratio_text(u0, u));
    if (p <= twice_verma_max) verma_cross_check(c, label, p, r, prm, u, p);
}

void certify_sing_par(Check& c, int p, const Rational& r, const FreeFieldParams& prm, int twice_verma_max) {
    const std::string label = "even p displayed singular vector, " + sector_label(p, r);
    const FockVector printed = build_singular_even(p, r, prm);
    const auto bad = failing_raising(printed, prm);
    c.expect(!printed.is_zero() && bad.empty(), label + " at degree " + hd(2 * p) + ": " + singularity_text(printed, bad));
    const FockVector gtw = family_vector(p, r, 1, FamilyKind::singular, prm);
    const FockVector scaled =
        build_singular_even(p, r, prm, Rational(1) / (Rational(2) * prm.cLa * prm.cLa));
    c.note(label + ": displayed vector vs G^tw v_{p,r-1}: " + ratio_text(printed, gtw) +
           "; with the double sum divided by 2 cLa^2 the two " + (scaled == gtw ? "coincide" : "still differ"));
    const auto bad_g = failing_raising(gtw, prm);
    c.expect(!gtw.is_zero() && bad_g.empty(), "G^tw v_{p,r-1}, " + sector_label(p, r) + ": " + singularity_text(gtw, bad_g));
    if (2 * p <= twice_verma_max) verma_cross_check(c, "G^tw v_{p,r-1}, " + sector_label(p, r), p, r, prm, gtw, 2 * p);
}

void certify_phi(Check& c, int p, const Rational& r, const FreeFieldParams& prm) {
    const std::string label = "Phi(p, r)v, " + sector_label(p, r);
    VermaModule<Rational> m(hw_of(Rational(p), r, prm));
    const auto v = m.act(verma::phi_operator(p, prm.cL, prm.cLa), m.highest_weight_vector());
    const int d = -2 * p;
    std::vector<Gen> bad;
    for (const auto& g : verma::raising_test_generators(d)) {
        const auto img = m.act(g, v);
        if (img.twice_degree >= 0 && !img.is_zero()) bad.push_back(g);
    }
    c.expect(!v.is_zero() && bad.empty(),
             label + " at degree " + hd(d) + ": " +
                 (v.is_zero() ? std::string("vector is zero")
                              : bad.empty() ? "annihilated by every raising generator" : "not annihilated by " + gens_text(bad)));
    const auto ker = verma::singular_vectors(m, d);
    if (ker.size() == 1 && !v.is_zero() && !bad.empty()) {
        // compare with the kernel vector scaled to agree on its leading word
        const std::size_t lead = verma::leading_index(m, ker[0]);
        const Rational lambda = v.coords[lead];
        std::size_t differ = 0;
        bool pure_alpha = true;
        const auto& basis = m.basis(d);
        for (std::size_t i = 0; i < v.coords.size(); ++i) {
            if (v.coords[i] == lambda * ker[0].coords[i]) continue;
            ++differ;
            for (const auto& g : basis[i])
                if (g.kind != Kind::A) pure_alpha = false;
        }
        c.note(label + ": raising kernel at degree " + hd(d) + " is 1-dimensional; Phi v differs from its multiple in " +
               std::to_string(differ) + " PBW coordinates" + (pure_alpha ? ", all of them pure alpha words" : ""));
    } else {
        c.note(label + ": raising kernel dimension at degree " + hd(d) + " is " + std::to_string(ker.size()));
    }
    if (!v.is_zero()) c.note(label + " normalized: " + short_vector(m, v));
}

void certify_family(Check& c, int p, const Rational& r, int n, const FreeFieldParams& prm, int twice_verma_max) {
    const std::string label = "u^(" + std::to_string(n) + "), " + sector_label(p, r);
    const FockVector u = family_vector(p, r, n, FamilyKind::singular, prm);
    const int d = family_degree(p, n, FamilyKind::singular).twice;
    const auto bad = failing_raising(u, prm);
    c.expect(!u.is_zero() && bad.empty() && twice_degree_of(u) == d,
             label + " at degree " + hd(d) + " (" + std::to_string(u.size()) + " Fock terms): " + singularity_text(u, bad));
    if (d <= twice_verma_max && d > 0) verma_cross_check(c, label, p, r, prm, u, d);
    if (p % 2 == 1 && n >= 1) {
        const FockVector w = family_vector(p, r, n, FamilyKind::subsingular, prm);
        c.note("w^(" + std::to_string(n) + "), " + sector_label(p, r) + " at degree " + hd(twice_degree_of(w)) + ": " +
               (failing_raising(w, prm).empty() ? "singular" : "not singular"));
    }
}

void certify_subsingular(Check& c, int p, const Rational& r, const FreeFieldParams& prm) {
    const std::string tag = sector_label(p, r);
    const FockVector printed = build_subsingular_odd(p, r, prm);
    const FockVector family = family_vector(p, r, 1, FamilyKind::subsingular, prm);
    const FockVector scaled = build_subsingular_odd(p, r, prm, Rational(1) / (Rational(2) * prm.cLa * prm.cLa));
    const FockVector u0 = family_vector(p, r, 0, FamilyKind::singular, prm);
    c.note("displayed w^(1), " + tag + " vs G v_{p,r-1}: " + (printed == family ? "equal" : ratio_text(printed, family)) +
           "; with the double sum divided by 2 cLa^2 they " + (scaled == family ? "coincide" : "still differ"));

    VermaModule<Rational> m(hw_of(Rational(p), r, prm));
    VermaFockBridge bridge(m, pr_sector(Rational(p), r, prm.cL), prm);
    const auto u0v = bridge.pull_back(u0, p);
    if (!u0v) {
        c.expect(false, "u^(0), " + tag + ": no Verma preimage");
        return;
    }
    const auto closure = verma::submodule_closure(m, {*u0v}, 2 * p);

    auto examine = [&](const std::string& name, const FockVector& w) {
        c.expect(!screening_Q(w).is_zero(), name + ", " + tag + ": Q-image is non-zero");
        const auto wv = bridge.pull_back(w, 2 * p);
        if (!wv) {
            c.expect(false, name + ", " + tag + ": no Verma preimage");
            return;
        }
        std::vector<Gen> outside;
        bool some_nonzero = false;
        for (const auto& g : verma::raising_test_generators(2 * p)) {
            const auto img = m.act(g, *wv);
            if (img.twice_degree < 0 || img.is_zero()) continue;
            some_nonzero = true;
            if (!closure.contains(img)) outside.push_back(g);
        }
        c.expect(outside.empty() && some_nonzero && !closure.contains(*wv),
                 name + ", " + tag + ": raising images lie in <u^(0)>" +
                     (outside.empty() ? "" : " except under " + gens_text(outside)) +
                     (some_nonzero ? "" : " (vector is singular)") +
                     (closure.contains(*wv) ? " (vector itself lies in <u^(0)>)" : ""));
    };
    examine("displayed w^(1)", printed);
    if (!(printed == family)) examine("G v_{p,r-1}", family);

    const FockVector rhs = realize_element(gen_rhs_element(p, prm.cLa), pr_sector(Rational(p), r, prm.cL), prm);
    const FockVector lhs = realized_act(Gen::G(p), printed, prm);
    c.expect(lhs == rhs, "G(" + hd(p) + ") w^(1) equals the displayed u^(0), " + tag + ": " +
                             (lhs == rhs ? "exact" : "G(p/2) w^(1) vs displayed u^(0): " + ratio_text(lhs, rhs)));
    c.note("G(" + hd(p) + ") G v_{p,r-1} vs Q v_{p,r-1/2}: " + ratio_text(realized_act(Gen::G(p), family, prm), u0));
}

void certify_even_injectivity(Check& c, int p, const Rational& r, const FreeFieldParams& prm, int twice_max,
                              const Cache& cache) {
    const std::string tag = sector_label(p, r);
    VermaModule<Rational> m(hw_of(Rational(p), r, prm));
    VermaModule<Rational> shifted(hw_of(Rational(p), r - Rational(1), prm));
    VermaFockBridge bridge(m, pr_sector(Rational(p), r, prm.cL), prm);
    const int du = 2 * p;
    auto uv = bridge.pull_back(family_vector(p, r, 1, FamilyKind::singular, prm), du);
    if (!uv) {
        c.expect(false, "u^(1), " + tag + ": no Verma preimage");
        return;
    }
    std::vector<std::int64_t> ranks, dims;
    for (int d = 0; d <= twice_max; ++d) {
        std::vector<std::vector<Rational>> cols;
        for (const auto& w : shifted.basis(d)) cols.push_back(m.act_word(w, *uv).coords);
        ranks.push_back(static_cast<std::int64_t>(
            linalg::rank(linalg::Matrix<Rational>::from_columns(cols, m.dimension(d + du)))));
        dims.push_back(static_cast<std::int64_t>(shifted.dimension(d)));
    }
    c.expect(ranks == dims, "x v_{p,r-1} -> x u^(1), " + tag + ": ranks " + dims_text(ranks) + " equal source dims " +
                                dims_text(dims) + " up to degree " + hd(twice_max));
    const auto vd = verma_dims(twice_max);
    const auto sd = simple_dims(cache, Rational(p), r, prm, Rational(0), twice_max);
    std::vector<std::int64_t> maximal, shift;
    for (int d = 0; d <= twice_max; ++d) {
        maximal.push_back(vd[d] - sd[d]);
        shift.push_back(d >= du ? vd[d - du] : 0);
    }
    c.expect(maximal == shift, "maximal submodule dims " + dims_text(maximal) + " equal Verma dims shifted by " + hd(du) +
                                   " " + dims_text(shift));
}

void certify_generic_kernel(Check& c, int p, const FreeFieldParams& prm, int twice_max) {
    VermaModule<RationalFunction> m(verma::pr_to_hw<RationalFunction>(
        RationalFunction(Rational(p)), RationalFunction::variable(Parameter::r), RationalFunction(prm.cL),
        RationalFunction(prm.cLa), RationalFunction(Rational(0))));
    const int a = p < 0 ? -p : p;
    for (int d = 1; d <= twice_max; ++d) {
        bool expected;
        if (p < 0) expected = (p % 2 != 0) ? d % a == 0 : d % (2 * a) == 0;
        else if (p % 2 != 0) expected = d >= p && (d - p) % (2 * p) == 0;
        else expected = d % (2 * p) == 0;
        const auto ker = verma::singular_vectors(m, d);
        c.expect(ker.size() == (expected ? 1u : 0u), "generic r, p = " + std::to_string(p) + ": raising kernel at degree " +
                                                         hd(d) + " has dimension " + std::to_string(ker.size()));
    }
}

Check check_singular_battery(const Rational& r, const FreeFieldParams& prm, int twice_verma_max) {
    return timed([&] {
        Check c{"singular certification", "explicit singular vectors and their families"};
        for (int p : {1, 3, 5}) certify_sing_nep(c, p, r, prm, twice_verma_max);
        for (int p : {2, 4}) certify_sing_par(c, p, r, prm, twice_verma_max);
        for (int p : {-1, -2, -3}) certify_phi(c, p, r, prm);
        for (int p : {1, 2, 3})
            for (int n = (p % 2 ? 0 : 1); n <= 2; ++n) certify_family(c, p, r, n, prm, twice_verma_max);
        return c;
    });
}

Check check_subsingular_battery(const Rational& r, const FreeFieldParams& prm) {
    return timed([&] {
        Check c{"subsingular certification", "subsingular vectors w^(1) for odd p"};
        for (int p : {1, 3}) certify_subsingular(c, p, r, prm);
        return c;
    });
}

Check check_characters(const std::vector<int>& ps, const Rational& r, const FreeFieldParams& prm, int twice_max,
                       const Cache& cache, bool symbolic_r) {
    return timed([&] {
        Check c{"characters", "characters of the irreducible quotients for integral p"};
        for (int p : ps) {
            const auto dims = simple_dims(cache, Rational(p), r, prm, Rational(0), twice_max, symbolic_r);
            const auto cmp = qchar::compare_dims(qchar::char_simple(Rational(p), twice_max), dims);
            c.expect(cmp.match, "p = " + std::to_string(p) + ": Gram-rank dims " + dims_text(dims) +
                                    (cmp.match ? " match the character" : "; " + cmp.to_string()));
        }
        c.note(symbolic_r ? "r generic (ranks over Q[r])" : "r = " + r.to_string());
        return c;
    });
}

Check check_duality(const std::vector<int>& ps, const Rational& r, const FreeFieldParams& prm, int twice_max,
                    const Cache& cache, bool symbolic_r) {
    return timed([&] {
        Check c{"duality", "contragredient duality (p, r) <-> (-p, -r)"};
        for (int p : ps) {
            const auto a = simple_dims(cache, Rational(p), r, prm, Rational(0), twice_max, symbolic_r);
            const auto b = simple_dims(cache, Rational(-p), -r, prm, Rational(0), twice_max, symbolic_r);
            c.expect(a == b, "p = " + std::to_string(p) + ": " + dims_text(a) + " vs " + dims_text(b));
        }
        return c;
    });
}

Check check_determinant(int twice_max_level, const Rational& r, const FreeFieldParams& prm) {
    return timed([&] {
        Check c{"determinant vanishing locus", "Gram determinant formula and its zeros in p"};
        for (int lvl = 1; lvl <= twice_max_level; ++lvl) {
            const auto rep = verma::det_vanishing_check(lvl, r, prm.cL, prm.cLa);
            c.expect(rep.match, rep.to_string());
        }
        c.note("roots of the Gram determinant in p, other parameters fixed; singular vector at degree |p| for even p, |p|/2 for odd p");
        return c;
    });
}

Check check_screening(const FreeFieldParams& prm, int twice_mode_bound, int twice_max) {
    return timed([&] {
        Check c{"screening algebra", "screening operators Q, G and G^tw"};
        const auto gens = algebra::generators_up_to(twice_mode_bound);
        auto a_modes = [&](const Sector& s) {
            std::vector<Rational> ns;
            for (int k = -twice_mode_bound; k <= twice_mode_bound; ++k) {
                Rational n(k, 2);
                if ((n + s.xd).is_integer()) ns.push_back(n);
            }
            return ns;
        };
        auto anticommutators = [&](const Sector& s, const std::string& tag) {
            const auto ns = a_modes(s);
            std::size_t checks = 0, failures = 0;
            for (int d = 0; d <= twice_max; ++d)
                for (const auto& mono : fock_basis(d)) {
                    const FockVector w = fock_basis_vector(s, mono);
                    std::vector<FockVector> once;
                    for (const auto& n : ns) once.push_back(a_mode(n, w));
                    for (std::size_t i = 0; i < ns.size(); ++i)
                        for (std::size_t j = i; j < ns.size(); ++j) {
                            ++checks;
                            if (!(a_mode(ns[i], once[j]) + a_mode(ns[j], once[i])).is_zero()) ++failures;
                        }
                }
            c.expect(failures == 0, "{a_m, a_n} = 0 on " + tag + ", |2m|, |2n| <= " + std::to_string(twice_mode_bound) +
                                        ": " + std::to_string(checks) + " checks, " + std::to_string(failures) + " failures");
        };
        auto commutes = [&](const FockVector& k, bool twisted) {
            std::size_t bad = 0;
            for (const auto& g : gens) {
                FockVector diff = screening_G(realized_act(g, k, prm), twisted) - realized_act(g, screening_G(k, twisted), prm);
                if (!diff.is_zero()) ++bad;
            }
            return bad;
        };

        for (auto [p, r] : {std::pair<int, Rational>{1, Rational(1, 3)}, {-1, Rational(0)}}) {
            const Sector s = pr_sector(Rational(p), r, prm.cL);
            const std::string tag = "F" + sector_label(p, r).substr(9);
            std::size_t q2 = 0, qg = 0, n = 0;
            std::size_t gx_checks = 0, gx_bad = 0;
            for (int d = 0; d <= twice_max; ++d) {
                const auto& basis = fock_basis(d);
                const int td = d + (Rational(2) * a_mode_degree_shift(Rational(0), s)).to_long();
                linalg::Matrix<Coeff> qm(td >= 0 ? fock_basis(td).size() : 0, basis.size());
                for (std::size_t j = 0; j < basis.size(); ++j) {
                    const FockVector w = fock_basis_vector(s, basis[j]);
                    const FockVector qw = screening_Q(w);
                    ++n;
                    if (!screening_Q(qw).is_zero()) ++q2;
                    if (!(screening_Q(screening_G(w, false)) - screening_G(qw, false)).is_zero()) ++qg;
                    if (td >= 0) {
                        const auto col = fock_coordinates(qw, td);
                        for (std::size_t i = 0; i < col.size(); ++i) qm(i, j) = col[i];
                    }
                }
                std::vector<std::vector<Coeff>> ker;
                if (td >= 0) ker = linalg::kernel_basis(qm);
                else
                    for (std::size_t j = 0; j < basis.size(); ++j) {
                        std::vector<Coeff> e(basis.size(), Coeff(0));
                        e[j] = Coeff(1);
                        ker.push_back(e);
                    }
                for (const auto& kv : ker) {
                    gx_checks += gens.size();
                    gx_bad += commutes(from_fock_coordinates(s, d, kv), false);
                }
            }
            c.expect(q2 == 0, "Q^2 = 0 on " + tag + ": " + std::to_string(n) + " monomials, " + std::to_string(q2) + " failures");
            c.expect(qg == 0, "[Q, G] = 0 on " + tag + ": " + std::to_string(n) + " monomials, " + std::to_string(qg) + " failures");
            c.expect(gx_bad == 0, "[G, x_n] = 0 on Ker Q in " + tag + ": " + std::to_string(gx_checks) + " checks, " +
                                      std::to_string(gx_bad) + " failures");
            anticommutators(s, tag);
        }
        for (auto [p, r] : {std::pair<int, Rational>{2, Rational(1, 2)}, {-2, Rational(3, 4)}}) {
            const Sector s = pr_sector(Rational(p), r, prm.cL);
            const std::string tag = "F" + sector_label(p, r).substr(9);
            std::size_t checks = 0, bad = 0;
            for (int d = 0; d <= twice_max; ++d)
                for (const auto& mono : fock_basis(d)) {
                    checks += gens.size();
                    bad += commutes(fock_basis_vector(s, mono), true);
                }
            c.expect(bad == 0, "[G^tw, x_n] = 0 on " + tag + ": " + std::to_string(checks) + " checks, " +
                                   std::to_string(bad) + " failures");
            anticommutators(s, tag);
        }
        c.note("Fock degrees <= " + hd(twice_max) + ", generators with |2*mode| <= " + std::to_string(twice_mode_bound));
        return c;
    });
}

Check check_structure(const Rational& r, const FreeFieldParams& prm, int twice_max, const Cache& cache) {
    return timed([&] {
        Check c{"structure at truncation", "submodule structure for p = 2 and p = 1"};
        certify_even_injectivity(c, 2, r, prm, twice_max, cache);

        VermaModule<Rational> m(hw_of(Rational(1), r, prm));
        VermaFockBridge bridge(m, pr_sector(Rational(1), r, prm.cL), prm);
        const auto wv = bridge.pull_back(family_vector(1, r, 1, FamilyKind::subsingular, prm), 2);
        if (!wv) {
            c.expect(false, "w^(1), " + sector_label(1, r) + ": no Verma preimage");
            return c;
        }
        const auto span = verma::submodule_closure(m, {*wv}, twice_max);
        const auto vd = verma_dims(twice_max);
        const auto sd = simple_dims(cache, Rational(1), r, prm, Rational(0), twice_max);
        std::vector<std::int64_t> got, maximal;
        for (int d = 0; d <= twice_max; ++d) {
            got.push_back(static_cast<std::int64_t>(span.dimension(d)));
            maximal.push_back(vd[d] - sd[d]);
        }
        c.expect(got == maximal, "<w^(1)>, " + sector_label(1, r) + ": dims " + dims_text(got) +
                                     " vs maximal submodule " + dims_text(maximal) + " up to degree " + hd(twice_max));
        return c;
    });
}

DiagramPattern classify_diagram(const verma::EmbeddingDiagram& dg) {
    DiagramPattern out;
    const auto& nodes = dg.nodes;
    auto covering_pairs = [&](int twice_limit) {
        std::set<std::pair<std::size_t, std::size_t>> s;
        for (const auto& e : dg.edges)
            if (e.covering && nodes[e.from].vector.twice_degree <= twice_limit &&
                nodes[e.to].vector.twice_degree <= twice_limit)
                s.insert({e.from, e.to});
        return s;
    };
    const bool integral = dg.p.is_integer() && !dg.p.is_zero();
    if (!integral) {
        out.identifier = "single node (p not a non-zero integer)";
        out.matches = nodes.size() == 1;
        out.notes.push_back(std::to_string(nodes.size()) + " nodes");
        return out;
    }
    const long p = dg.p.to_long();
    if (p < 0 || p % 2 == 0) {
        long step;
        if (p < 0 && p % 2 != 0) {
            out.identifier = "negative odd p: chain of singular vectors at every multiple of |p|/2";
            step = -p;
        } else if (p < 0) {
            out.identifier = "negative even p: chain of singular vectors at every multiple of |p|";
            step = -2 * p;
        } else {
            out.identifier = "positive even p: chain of singular vectors at every multiple of p";
            step = 2 * p;
        }
        bool ok = nodes[0].kind == verma::NodeKind::Top;
        std::set<std::pair<std::size_t, std::size_t>> chain;
        std::size_t expected_nodes = 1;
        for (long d = step; d <= dg.twice_max; d += step) ++expected_nodes;
        ok = ok && nodes.size() == expected_nodes;
        for (std::size_t i = 1; ok && i < nodes.size(); ++i) {
            ok = nodes[i].kind == verma::NodeKind::Singular && nodes[i].vector.twice_degree == static_cast<int>(i * step);
            chain.insert({i - 1, i});
        }
        ok = ok && covering_pairs(dg.twice_max) == chain;
        out.matches = ok;
        out.notes.push_back(std::to_string(nodes.size()) + " nodes, expected " + std::to_string(expected_nodes) +
                            " in a single chain");
        return out;
    }
    out.identifier = "positive odd p: singular u^(0) at p/2 below subsingular w^(1) at p";
    std::optional<std::size_t> u0, w1;
    std::size_t low = 0;
    for (std::size_t i = 1; i < nodes.size(); ++i) {
        const int d = nodes[i].vector.twice_degree;
        if (d > 2 * p) continue;
        ++low;
        if (d == p && nodes[i].kind == verma::NodeKind::Singular) u0 = i;
        if (d == 2 * p && nodes[i].kind == verma::NodeKind::Subsingular) w1 = i;
    }
    bool ok = dg.twice_max >= 2 * p && u0 && w1 && low == 2;
    if (ok) {
        const auto cov = covering_pairs(2 * static_cast<int>(p));
        ok = cov == std::set<std::pair<std::size_t, std::size_t>>{{0, *w1}, {*w1, *u0}} && dg.has_edge(0, *u0);
    }
    out.matches = ok;
    out.notes.push_back("checked below degree " + hd(2 * static_cast<int>(p)) + " inclusive; " +
                        std::to_string(nodes.size()) + " nodes up to degree " + hd(dg.twice_max));
    return out;
}

Check check_diagrams(const Rational& r, const FreeFieldParams& prm, int twice_max) {
    return timed([&] {
        Check c{"embedding diagrams", "embedding diagrams of Verma modules"};
        for (auto [p, tm] : {std::pair<int, int>{-2, twice_max}, {-1, twice_max}, {1, 4}}) {
            const auto dg = verma::embedding_diagram(Rational(p), r, tm, prm.cL, prm.cLa);
            const auto pat = classify_diagram(dg);
            std::string arrows;
            for (const auto& e : dg.edges)
                if (e.covering) arrows += (arrows.empty() ? "" : ", ") + dg.nodes[e.from].name + "->" + dg.nodes[e.to].name;
            c.expect(pat.matches, "p = " + std::to_string(p) + " up to degree " + hd(tm) + ": " + pat.identifier + "; " +
                                      pat.notes.front() + "; arrows " + arrows);
        }
        return c;
    });
}

Check check_screening_kernel(const FreeFieldParams& prm) {
    return timed([&] {
        Check c{"kernel of the screenings", "graded dims of Ker Q and Ker G in F_{-1,0}"};
        const Sector s = pr_sector(Rational(-1), Rational(0), prm.cL);
        const std::vector<std::int64_t> expected{1, 1, 1, 3};
        std::vector<std::int64_t> got;
        for (int d = 0; d <= 3; ++d) {
            const auto& basis = fock_basis(d);
            linalg::Matrix<Coeff> mat;
            auto add_block = [&](const std::function<FockVector(const FockVector&)>& op, int td) {
                if (td < 0) return;
                linalg::Matrix<Coeff> block(fock_basis(td).size(), basis.size());
                for (std::size_t j = 0; j < basis.size(); ++j) {
                    const auto col = fock_coordinates(op(fock_basis_vector(s, basis[j])), td);
                    for (std::size_t i = 0; i < col.size(); ++i) block(i, j) = col[i];
                }
                for (std::size_t i = 0; i < block.rows(); ++i) mat.append_row(block.row(i));
            };
            add_block([](const FockVector& w) { return screening_Q(w); }, d - 1);
            add_block([](const FockVector& w) { return screening_G(w, false); }, d - 2);
            got.push_back(mat.rows() == 0 ? static_cast<std::int64_t>(basis.size())
                                          : static_cast<std::int64_t>(linalg::kernel_basis(mat).size()));
        }
        c.expect(got == expected, "dims up to degree 3/2: " + dims_text(got) + " vs " + dims_text(expected), false);
        return c;
    });
}

std::vector<Check> acceptance_battery(const AcceptanceOptions& opt) {
    static const Cache no_cache;
    const Cache& cache = opt.cache ? *opt.cache : no_cache;
    const auto& prm = opt.prm;
    const Rational& r = opt.r;
    std::vector<std::pair<std::string, std::function<Check()>>> jobs;
    jobs.push_back({"1", [&] { return check_relations(algebra::BracketTable::standard(), 8); }});
    jobs.push_back({"2", [&] {
                        Check all{"realization", "free field realization on F_{p,r}"};
                        const std::vector<std::pair<Rational, Rational>> sectors{
                            {Rational(-1), Rational(0)}, {Rational(1), Rational(1, 3)}, {Rational(2), Rational(1, 2)},
                            {Rational(-2), Rational(3, 4)}, {Rational(1, 2), Rational(1, 3)}};
                        std::vector<std::future<Check>> parts;
                        for (const auto& [p, rr] : sectors)
                            parts.push_back(std::async(opt.parallel ? std::launch::async : std::launch::deferred,
                                                       [&, p = p, rr = rr] { return check_realization(p, rr, prm, 6, 6, cache); }));
                        for (auto& f : parts) {
                            Check part = f.get();
                            for (const auto& d : part.details) all.details.push_back(part.name.substr(12) + " " + d);
                            if (part.status == Status::fail) all.status = Status::fail;
                            all.seconds += part.seconds;
                        }
                        return all;
                    }});
    jobs.push_back({"3", [&] { return check_singular_battery(r, prm, opt.twice_max); }});
    jobs.push_back({"4", [&] { return check_subsingular_battery(r, prm); }});
    jobs.push_back({"5", [&] { return check_characters({1, -1, 2, -2, 3, -3}, r, prm, opt.twice_max, cache); }});
    jobs.push_back({"6", [&] { return check_duality({1, 2, 3}, r, prm, 6, cache); }});
    jobs.push_back({"7", [&] { return check_determinant(4, r, prm); }});
    jobs.push_back({"8", [&] { return check_screening(prm, 6, 6); }});
    jobs.push_back({"9", [&] { return check_structure(r, prm, 6, cache); }});
    jobs.push_back({"10", [&] { return check_diagrams(r, prm, opt.twice_max); }});
    jobs.push_back({"11", [&] { return check_screening_kernel(prm); }});

    std::vector<std::future<Check>> futures;
    for (auto& [id, f] : jobs)
        futures.push_back(std::async(opt.parallel ? std::launch::async : std::launch::deferred, f));
    std::vector<Check> out;
    for (std::size_t i = 0; i < futures.size(); ++i) {
        Check c = futures[i].get();
        c.name = "criterion " + jobs[i].first + ": " + c.name;
        out.push_back(std::move(c));
    }
    return out;
}

}  // namespace shv::cli
