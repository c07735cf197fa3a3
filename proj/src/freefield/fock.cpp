#include <shv/freefield/fock.hpp>

#include <shv/algebra/partition.hpp>

#include <algorithm>
#include <mutex>
#include <sstream>

namespace shv::freefield {

namespace {

void join(std::ostringstream& os, const char* name, const std::vector<int>& parts, bool twice) {
    for (int x : parts) os << name << "(" << (twice ? HalfInt(-x).to_string() : std::to_string(-x)) << ")";
}

// insert keeping the vector weakly (bosons) or strictly (fermions) decreasing;
// returns the insertion position
std::size_t insert_sorted(std::vector<int>& v, int x) {
    auto it = std::find_if(v.begin(), v.end(), [x](int y) { return y < x; });
    auto pos = static_cast<std::size_t>(it - v.begin());
    v.insert(it, x);
    return pos;
}

std::size_t multiplicity(const std::vector<int>& v, int x) {
    return static_cast<std::size_t>(std::count(v.begin(), v.end(), x));
}

void erase_one(std::vector<int>& v, int x) { v.erase(std::find(v.begin(), v.end(), x)); }

}  // namespace

std::string Sector::to_string() const {
    std::ostringstream os;
    os << "e^(" << xc << " c + " << xd << " d)";
    return os.str();
}

int FockMonomial::twice_degree() const {
    int t = 0;
    for (int x : c) t += 2 * x;
    for (int x : d) t += 2 * x;
    for (int x : pp) t += x;
    for (int x : pm) t += x;
    return t;
}

std::string FockMonomial::to_string() const {
    std::ostringstream os;
    join(os, "P+", pp, true);
    join(os, "P-", pm, true);
    join(os, "d", d, false);
    join(os, "c", c, false);
    std::string s = os.str();
    return s.empty() ? "1" : s;
}

FockVector FockVector::ground(const Sector& s, const Coeff& c) {
    FockVector v(s);
    v.add(FockMonomial{}, c);
    return v;
}

Coeff FockVector::coefficient(const FockMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Coeff(0) : it->second;
}

int FockVector::max_twice_degree() const {
    int t = 0;
    for (const auto& [m, c] : terms_) t = std::max(t, m.twice_degree());
    return t;
}

bool FockVector::is_homogeneous() const {
    if (terms_.empty()) return true;
    const int t = terms_.begin()->first.twice_degree();
    for (const auto& [m, c] : terms_)
        if (m.twice_degree() != t) return false;
    return true;
}

void FockVector::add(const FockMonomial& m, const Coeff& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

FockVector& FockVector::operator+=(const FockVector& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) sector_ = o.sector_;
    if (sector_ != o.sector_) throw std::invalid_argument("adding Fock vectors from different sectors");
    for (const auto& [m, c] : o.terms_) add(m, c);
    return *this;
}

FockVector& FockVector::operator-=(const FockVector& o) {
    FockVector n = o;
    n *= Coeff(-1);
    return *this += n;
}

FockVector& FockVector::operator*=(const Coeff& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, x] : terms_) x *= c;
    return *this;
}

bool operator==(const FockVector& a, const FockVector& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    return a.sector_ == b.sector_ && a.terms_ == b.terms_;
}

std::string FockVector::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        os << (first ? "" : " + ") << "(" << it->second << ")*" << it->first.to_string();
        first = false;
    }
    os << " " << sector_.to_string();
    return os.str();
}

const char* free_field_name(FreeField f) {
    switch (f) {
    case FreeField::c: return "c";
    case FreeField::d: return "d";
    case FreeField::psi_plus: return "Psi+";
    case FreeField::psi_minus: return "Psi-";
    }
    return "?";
}

bool free_mode_on_monomial(FreeField f, HalfInt mode, const Sector& s, FockMonomial& m, Rational& coeff) {
    const bool fermion = f == FreeField::psi_plus || f == FreeField::psi_minus;
    if (fermion == mode.is_integer())
        throw ParityMismatch(std::string(free_field_name(f)) + " has no mode " + mode.to_string());
    const int T = mode.twice;
    auto sign = [&](std::size_t before) {
        if (before % 2) coeff = -coeff;
    };
    switch (f) {
    case FreeField::c:
    case FreeField::d: {
        const bool is_c = f == FreeField::c;
        const int n = T / 2;
        if (n < 0) {
            insert_sorted(is_c ? m.c : m.d, -n);
            return true;
        }
        if (n == 0) {
            Rational z = is_c ? s.pair_c() : s.pair_d();
            if (z.is_zero()) return false;
            coeff *= z;
            return true;
        }
        // [c(n), d(-n)] = [d(n), c(-n)] = 2n
        std::vector<int>& other = is_c ? m.d : m.c;
        const std::size_t k = multiplicity(other, n);
        if (k == 0) return false;
        coeff *= Rational(2 * n * static_cast<long>(k));
        erase_one(other, n);
        return true;
    }
    case FreeField::psi_plus:
        if (T < 0) {
            if (multiplicity(m.pp, -T)) return false;
            sign(insert_sorted(m.pp, -T));
            return true;
        } else {
            auto it = std::find(m.pm.begin(), m.pm.end(), T);
            if (it == m.pm.end()) return false;
            sign(m.pp.size() + static_cast<std::size_t>(it - m.pm.begin()));
            m.pm.erase(it);
            return true;
        }
    case FreeField::psi_minus:
        if (T < 0) {
            if (multiplicity(m.pm, -T)) return false;
            sign(m.pp.size() + insert_sorted(m.pm, -T));
            return true;
        } else {
            auto it = std::find(m.pp.begin(), m.pp.end(), T);
            if (it == m.pp.end()) return false;
            sign(static_cast<std::size_t>(it - m.pp.begin()));
            m.pp.erase(it);
            return true;
        }
    }
    return false;
}

FockVector free_mode_act(FreeField f, HalfInt mode, const FockVector& v) {
    FockVector out(v.sector());
    for (const auto& [m, c] : v.terms()) {
        FockMonomial n = m;
        Rational k(1);
        if (free_mode_on_monomial(f, mode, v.sector(), n, k)) out.add(n, c * Coeff(k));
    }
    return out;
}

const std::vector<FockMonomial>& fock_basis(int twice_d) {
    static std::mutex mu;
    static std::map<int, std::vector<FockMonomial>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(twice_d);
    if (it != cache.end()) return it->second;
    std::vector<FockMonomial> out;
    if (twice_d >= 0) {
        for (int tc = 0; 2 * tc <= twice_d; ++tc)
            for (int td = 0; 2 * (tc + td) <= twice_d; ++td)
                for (int tp = 0; 2 * (tc + td) + tp <= twice_d; ++tp) {
                    const int tm = twice_d - 2 * (tc + td) - tp;
                    for (const auto& c : algebra::partitions(tc, tc))
                        for (const auto& d : algebra::partitions(td, td))
                            for (const auto& pp : algebra::strict_odd_partitions(tp, tp))
                                for (const auto& pm : algebra::strict_odd_partitions(tm, tm))
                                    out.push_back(FockMonomial{c, d, pp, pm});
                }
        std::sort(out.begin(), out.end());
    }
    return cache.emplace(twice_d, std::move(out)).first->second;
}

}  // namespace shv::freefield
