#include <shv/verma/determinant.hpp>

#include <sstream>

namespace shv::verma {

std::int64_t kostant_p2(int twice_d) {
    if (twice_d < 0) return 0;
    // ways[t] = number of monomials of twice-degree t; add one family at a time
    std::vector<std::int64_t> ways(static_cast<std::size_t>(twice_d) + 1, 0);
    ways[0] = 1;
    auto add_bosonic = [&](int) {
        for (int part = 2; part <= twice_d; part += 2)
            for (int t = part; t <= twice_d; ++t) ways[t] += ways[t - part];
    };
    auto add_fermionic = [&](int) {
        for (int part = 1; part <= twice_d; part += 2)
            for (int t = twice_d; t >= part; --t) ways[t] += ways[t - part];
    };
    add_bosonic(0);
    add_bosonic(1);
    add_fermionic(0);
    add_fermionic(1);
    return ways[static_cast<std::size_t>(twice_d)];
}

std::set<Rational> predicted_det_roots(int twice_level) {
    std::set<Rational> roots;
    for (int k = 1; k <= twice_level; ++k)
        for (int l = 1; k * l <= twice_level; ++l) {
            if ((k - l) % 2) continue;
            for (int v : {k, -k, l, -l}) roots.insert(Rational(v));
        }
    return roots;
}

std::string DetVanishingReport::to_string() const {
    std::ostringstream os;
    os << "level " << algebra::HalfInt(twice_level).to_string() << ": computed {";
    for (std::size_t i = 0; i < computed.size(); ++i) os << (i ? ", " : "") << computed[i];
    os << "}, predicted {";
    bool first = true;
    for (const auto& x : predicted) {
        os << (first ? "" : ", ") << x;
        first = false;
    }
    os << "} -> " << (match ? "match" : "MISMATCH");
    return os.str();
}

DetVanishingReport det_vanishing_check(int twice_level, const Rational& r, const Rational& cL, const Rational& cLa) {
    VermaModule<Polynomial> m(symbolic_in_p_hw(r, cL, cLa));
    DetVanishingReport rep;
    rep.twice_level = twice_level;
    rep.determinant = linalg::determinant(m.gram(twice_level).matrix);
    if (rep.determinant.is_zero()) throw std::domain_error("Gram determinant vanishes identically in p");
    rep.computed = rational_roots_in(rep.determinant, Parameter::p);
    rep.predicted = predicted_det_roots(twice_level);
    rep.match = std::set<Rational>(rep.computed.begin(), rep.computed.end()) == rep.predicted;
    return rep;
}

}  // namespace shv::verma
