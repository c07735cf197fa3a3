#include <shv/scalars/polynomial.hpp>
#include <shv/scalars/integer_factor.hpp>

#include <algorithm>
#include <sstream>

namespace shv {

namespace {

constexpr const char* kNames[kParameterCount] = {"cL", "cA", "cLa", "r", "p"};

bool divides(const Exponents& a, const Exponents& b) {
    for (int i = 0; i < kParameterCount; ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Exponents unit_exponent(Parameter v, int k) {
    Exponents e{};
    e[static_cast<int>(v)] = static_cast<std::uint16_t>(k);
    return e;
}

// highest-priority parameter present in either polynomial
std::optional<Parameter> main_variable(const Polynomial& a, const Polynomial& b) {
    auto va = a.variables();
    auto vb = b.variables();
    va.insert(vb.begin(), vb.end());
    if (va.empty()) return std::nullopt;
    return *va.begin();
}

Polynomial leading_coefficient_in(const Polynomial& a, Parameter v) {
    auto cs = a.coefficients_in(v);
    return cs.rbegin()->second;
}

Polynomial content_in(const Polynomial& a, Parameter v) {
    Polynomial g;
    for (const auto& [k, c] : a.coefficients_in(v)) {
        g = gcd(g, c);
        if (g.is_constant()) return Polynomial(1);
    }
    return g;
}

Polynomial pseudo_remainder(Polynomial a, const Polynomial& b, Parameter v) {
    const int db = b.degree(v);
    const Polynomial lcb = leading_coefficient_in(b, v);
    while (!a.is_zero() && a.degree(v) >= db) {
        const int da = a.degree(v);
        Polynomial lca = leading_coefficient_in(a, v);
        a = lcb * a - lca * Polynomial::monomial(unit_exponent(v, da - db), 1) * b;
    }
    return a;
}

}  // namespace

const char* parameter_name(Parameter v) { return kNames[static_cast<int>(v)]; }

Parameter parse_parameter(const std::string& name) {
    for (int i = 0; i < kParameterCount; ++i)
        if (name == kNames[i]) return static_cast<Parameter>(i);
    throw std::invalid_argument("unknown parameter '" + name + "'");
}

Polynomial::Polynomial(const Rational& c) {
    if (!c.is_zero()) terms_.emplace(Exponents{}, c);
}

Polynomial Polynomial::variable(Parameter v) { return monomial(unit_exponent(v, 1), 1); }

Polynomial Polynomial::monomial(const Exponents& e, const Rational& c) {
    Polynomial p;
    p.add_term(e, c);
    return p;
}

void Polynomial::add_term(const Exponents& e, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponents{});
}

Rational Polynomial::constant_value() const {
    if (!is_constant()) throw std::domain_error("polynomial " + to_string() + " is not constant");
    return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

int Polynomial::degree(Parameter v) const {
    int d = terms_.empty() ? -1 : 0;
    for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[static_cast<int>(v)]));
    return d;
}

int Polynomial::total_degree() const {
    int d = terms_.empty() ? -1 : 0;
    for (const auto& [e, c] : terms_) {
        int s = 0;
        for (auto x : e) s += x;
        d = std::max(d, s);
    }
    return d;
}

std::set<Parameter> Polynomial::variables() const {
    std::set<Parameter> vs;
    for (const auto& [e, c] : terms_)
        for (int i = 0; i < kParameterCount; ++i)
            if (e[i]) vs.insert(static_cast<Parameter>(i));
    return vs;
}

std::pair<Exponents, Rational> Polynomial::leading_term() const {
    if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
    // std::array compares lexicographically with index 0 most significant
    const auto& last = *terms_.rbegin();
    return {last.first, last.second};
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, x] : terms_) x *= c;
    return *this;
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& [e, x] : r.terms_) x = -x;
    return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial r;
    if (a.is_zero() || b.is_zero()) return r;
    if (b.is_constant()) return Polynomial(a) *= b.terms_.begin()->second;
    if (a.is_constant()) return Polynomial(b) *= a.terms_.begin()->second;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            Exponents e;
            for (int i = 0; i < kParameterCount; ++i) e[i] = static_cast<std::uint16_t>(ea[i] + eb[i]);
            r.add_term(e, ca * cb);
        }
    return r;
}

Polynomial Polynomial::pow(int e) const {
    if (e < 0) throw std::domain_error("negative power of a polynomial");
    Polynomial r(1), base = *this;
    while (e) {
        if (e & 1) r *= base;
        e >>= 1;
        if (e) base = base * base;
    }
    return r;
}

Polynomial Polynomial::divide_exact(const Polynomial& d) const {
    if (d.is_zero()) throw DivisionByZero();
    if (d.is_constant()) return Polynomial(*this) *= d.constant_value().inverse();
    const auto [ld, lc] = d.leading_term();
    Polynomial rem = *this, quo;
    while (!rem.is_zero()) {
        auto [lr, lrc] = rem.leading_term();
        if (!divides(ld, lr))
            throw std::domain_error("inexact polynomial division: " + to_string() + " / " + d.to_string());
        Exponents e;
        for (int i = 0; i < kParameterCount; ++i) e[i] = static_cast<std::uint16_t>(lr[i] - ld[i]);
        Polynomial t = monomial(e, lrc / lc);
        quo += t;
        rem -= t * d;
    }
    return quo;
}

Rational Polynomial::evaluate(const Assignment& values) const {
    Rational total;
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (int i = 0; i < kParameterCount; ++i) {
            if (!e[i]) continue;
            auto it = values.find(static_cast<Parameter>(i));
            if (it == values.end())
                throw MissingParameter(std::string("no value supplied for parameter ") + kNames[i]);
            t *= it->second.pow(e[i]);
        }
        total += t;
    }
    return total;
}

Polynomial Polynomial::specialize(const Assignment& values) const {
    Polynomial r;
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        Exponents rest = e;
        for (const auto& [v, x] : values) {
            int i = static_cast<int>(v);
            if (rest[i]) {
                t *= x.pow(rest[i]);
                rest[i] = 0;
            }
        }
        r.add_term(rest, t);
    }
    return r;
}

Polynomial Polynomial::derivative(Parameter v) const {
    Polynomial r;
    int i = static_cast<int>(v);
    for (const auto& [e, c] : terms_) {
        if (!e[i]) continue;
        Exponents f = e;
        --f[i];
        r.add_term(f, c * Rational(static_cast<long>(e[i])));
    }
    return r;
}

std::map<int, Polynomial> Polynomial::coefficients_in(Parameter v) const {
    std::map<int, Polynomial> out;
    int i = static_cast<int>(v);
    for (const auto& [e, c] : terms_) {
        Exponents f = e;
        f[i] = 0;
        out[e[i]].add_term(f, c);
    }
    return out;
}

Polynomial Polynomial::from_coefficients(Parameter v, const std::map<int, Polynomial>& coeffs) {
    Polynomial r;
    for (const auto& [k, c] : coeffs) r += c * monomial(unit_exponent(v, k), 1);
    return r;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    // print by descending total degree, then descending lex
    std::vector<std::pair<Exponents, Rational>> ts(terms_.begin(), terms_.end());
    std::stable_sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
        int da = 0, db = 0;
        for (auto x : a.first) da += x;
        for (auto x : b.first) db += x;
        if (da != db) return da > db;
        return a.first > b.first;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : ts) {
        Rational mag = c.sign() < 0 ? -c : c;
        if (first) {
            if (c.sign() < 0) os << "-";
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        bool constant = e == Exponents{};
        bool need_star = false;
        if (constant || !mag.is_one()) {
            if (mag.is_integer()) os << mag;
            else os << "(" << mag << ")";
            need_star = true;
        }
        for (int i = 0; i < kParameterCount; ++i) {
            if (!e[i]) continue;
            if (need_star) os << "*";
            os << kNames[i];
            if (e[i] > 1) os << "^" << e[i];
            need_star = true;
        }
    }
    return os.str();
}

std::size_t Polynomial::hash() const {
    std::size_t h = terms_.size();
    for (const auto& [e, c] : terms_) {
        for (auto x : e) h = h * 131 + x;
        h ^= c.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

Polynomial make_monic(const Polynomial& a) {
    if (a.is_zero()) return a;
    return Polynomial(a) *= a.leading_term().second.inverse();
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero()) return make_monic(b);
    if (b.is_zero()) return make_monic(a);
    if (a.is_constant() || b.is_constant()) return Polynomial(1);
    const Parameter v = *main_variable(a, b);
    if (a.degree(v) == 0) return gcd(a, content_in(b, v));
    if (b.degree(v) == 0) return gcd(content_in(a, v), b);

    const Polynomial ca = content_in(a, v), cb = content_in(b, v);
    const Polynomial g = gcd(ca, cb);
    Polynomial x = a.divide_exact(ca), y = b.divide_exact(cb);
    if (x.degree(v) < y.degree(v)) std::swap(x, y);
    while (!y.is_zero()) {
        Polynomial rem = pseudo_remainder(x, y, v);
        x = std::move(y);
        if (rem.is_zero()) {
            y = Polynomial();
        } else if (rem.degree(v) == 0) {
            // coprime in v: gcd is carried by the contents alone
            return make_monic(g);
        } else {
            y = rem.divide_exact(content_in(rem, v));
        }
    }
    x = x.divide_exact(content_in(x, v));
    return make_monic(g * x);
}

std::vector<Rational> rational_roots_in(const Polynomial& poly, Parameter v) {
    if (poly.is_zero()) throw std::domain_error("rational roots of the zero polynomial");
    for (Parameter w : poly.variables())
        if (w != v)
            throw std::domain_error(std::string("polynomial still depends on ") + parameter_name(w));
    std::vector<Rational> roots;
    if (poly.degree(v) <= 0) return roots;

    Polynomial f = poly;
    auto low = f.coefficients_in(v).begin()->first;
    if (low > 0) {
        roots.push_back(Rational(0));
        f = f.divide_exact(Polynomial::monomial(unit_exponent(v, low), 1));
    }
    Polynomial g = gcd(f, f.derivative(v));
    f = f.divide_exact(g);
    if (f.degree(v) <= 0) return roots;

    // integer coefficients c_0..c_n
    auto cs = f.coefficients_in(v);
    const int n = cs.rbegin()->first;
    mpz_class lcm_den = 1;
    for (const auto& [k, c] : cs) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.constant_value().raw().get_den_mpz_t());
    std::vector<mpz_class> ic(n + 1, 0);
    for (const auto& [k, c] : cs) {
        mpq_class q = c.constant_value().raw() * lcm_den;
        ic[k] = q.get_num();
    }
    auto is_root = [&](const mpz_class& a, const mpz_class& b) {
        // sum c_k a^k b^(n-k)
        mpz_class total = 0, apow = 1;
        std::vector<mpz_class> bpow(n + 1, 1);
        for (int k = 1; k <= n; ++k) bpow[k] = bpow[k - 1] * b;
        for (int k = 0; k <= n; ++k) {
            total += ic[k] * apow * bpow[n - k];
            apow *= a;
        }
        return total == 0;
    };
    for (const auto& a : positive_divisors(ic[0]))
        for (const auto& b : positive_divisors(ic[n])) {
            mpz_class gg;
            mpz_gcd(gg.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
            if (gg != 1) continue;
            if (is_root(a, b)) roots.emplace_back(a, b);
            mpz_class na = -a;
            if (is_root(na, b)) roots.emplace_back(na, b);
        }
    std::sort(roots.begin(), roots.end());
    return roots;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

}  // namespace shv
