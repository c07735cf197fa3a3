#include <shv/algebra/generator.hpp>

#include <shv/scalars/rational.hpp>

#include <stdexcept>

namespace shv::algebra {

HalfInt HalfInt::parse(const std::string& s) {
    Rational q = Rational::parse(s);
    if (!q.is_half_integer()) throw std::invalid_argument("'" + s + "' is not a half-integer");
    return HalfInt(q.twice());
}

std::string HalfInt::to_string() const {
    if (twice % 2 == 0) return std::to_string(twice / 2);
    return std::to_string(twice) + "/2";
}

Gen::Gen(Kind k, HalfInt mode) : kind(k), twice_mode(mode.twice) {
    switch (k) {
    case Kind::L:
    case Kind::A:
        if (twice_mode % 2 != 0) throw std::invalid_argument("L and alpha need integer modes");
        break;
    case Kind::G:
    case Kind::P:
        if (twice_mode % 2 == 0) throw std::invalid_argument("G and Psi need half-odd modes");
        break;
    default:
        if (twice_mode != 0) throw std::invalid_argument("central elements carry no mode");
    }
}

int Gen::order_key() const {
    // lowering: P < A < G < L, ascending mode; Cartan: L0, A0, CL, CA, CLA;
    // raising: L < G < A < P, ascending mode.  Modes are bounded well inside 4096.
    constexpr int span = 8192;
    auto rank_in = [&](std::initializer_list<Kind> order) {
        int i = 0;
        for (Kind k : order) {
            if (k == kind) return i;
            ++i;
        }
        return i;
    };
    if (is_lowering()) return rank_in({Kind::P, Kind::A, Kind::G, Kind::L}) * span + (twice_mode + span / 2);
    if (is_raising()) return 16 * span + rank_in({Kind::L, Kind::G, Kind::A, Kind::P}) * span + twice_mode;
    return 8 * span + rank_in({Kind::L, Kind::A, Kind::CL, Kind::CA, Kind::CLA});
}

std::string Gen::to_string() const {
    switch (kind) {
    case Kind::CL: return "CL";
    case Kind::CA: return "CA";
    case Kind::CLA: return "CLA";
    default: break;
    }
    const char* name = kind == Kind::L ? "L" : kind == Kind::A ? "A" : kind == Kind::G ? "G" : "P";
    return std::string(name) + "(" + mode().to_string() + ")";
}

Gen Gen::parse(const std::string& s) {
    if (s == "CL") return central(Kind::CL);
    if (s == "CA") return central(Kind::CA);
    if (s == "CLA") return central(Kind::CLA);
    if (s.size() < 4 || s[1] != '(' || s.back() != ')') throw std::invalid_argument("malformed generator '" + s + "'");
    Kind k;
    switch (s[0]) {
    case 'L': k = Kind::L; break;
    case 'A': k = Kind::A; break;
    case 'G': k = Kind::G; break;
    case 'P': k = Kind::P; break;
    default: throw std::invalid_argument("unknown generator '" + s + "'");
    }
    return Gen(k, HalfInt::parse(s.substr(2, s.size() - 3)));
}

std::string word_to_string(const Word& w) {
    if (w.empty()) return "1";
    std::string s;
    for (const auto& g : w) s += g.to_string();
    return s;
}

Word parse_word(const std::string& s) {
    Word w;
    if (s == "1" || s.empty()) return w;
    std::size_t i = 0;
    while (i < s.size()) {
        if (s[i] == ' ') {
            ++i;
            continue;
        }
        if (s.compare(i, 3, "CLA") == 0) {
            w.push_back(Gen::central(Kind::CLA));
            i += 3;
        } else if (s.compare(i, 2, "CL") == 0 || s.compare(i, 2, "CA") == 0) {
            w.push_back(Gen::parse(s.substr(i, 2)));
            i += 2;
        } else {
            auto close = s.find(')', i);
            if (close == std::string::npos) throw std::invalid_argument("malformed word '" + s + "'");
            w.push_back(Gen::parse(s.substr(i, close - i + 1)));
            i = close + 1;
        }
    }
    return w;
}

int word_parity(const Word& w) {
    int p = 0;
    for (const auto& g : w) p ^= g.is_odd() ? 1 : 0;
    return p;
}

int word_twice_degree(const Word& w) {
    int d = 0;
    for (const auto& g : w) d += g.twice_degree();
    return d;
}

bool is_canonical(const Word& w) {
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        int a = w[i].order_key(), b = w[i + 1].order_key();
        if (a > b || (a == b && w[i].is_odd())) return false;
    }
    return true;
}

std::vector<Gen> generators_up_to(int twice_bound) {
    std::vector<Gen> out;
    for (int t = -twice_bound; t <= twice_bound; ++t) {
        if (t % 2 == 0) {
            out.push_back(Gen(Kind::L, HalfInt(t)));
            out.push_back(Gen(Kind::A, HalfInt(t)));
        } else {
            out.push_back(Gen(Kind::G, HalfInt(t)));
            out.push_back(Gen(Kind::P, HalfInt(t)));
        }
    }
    return out;
}

std::vector<Gen> raising_generators_up_to(int twice_mode_max) {
    std::vector<Gen> out;
    for (const auto& g : generators_up_to(twice_mode_max))
        if (g.is_raising()) out.push_back(g);
    return out;
}

std::vector<Gen> lowering_generators_up_to(int twice_mode_max) {
    std::vector<Gen> out;
    for (const auto& g : generators_up_to(twice_mode_max))
        if (g.is_lowering()) out.push_back(g);
    return out;
}

}  // namespace shv::algebra
