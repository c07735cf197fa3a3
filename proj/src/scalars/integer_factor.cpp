#include <shv/scalars/integer_factor.hpp>

#include <algorithm>
#include <map>
#include <stdexcept>

namespace shv {

namespace {

mpz_class brent_rho(const mpz_class& n) {
    if (mpz_even_p(n.get_mpz_t())) return 2;
    for (unsigned long c = 1; c < 200; ++c) {
        mpz_class y = 2, x, g = 1, q = 1, ys;
        unsigned long r = 1;
        const unsigned long m = 64;
        auto f = [&](const mpz_class& v) {
            mpz_class t = v * v + c;
            mpz_mod(t.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
            return t;
        };
        do {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = f(y);
            unsigned long k = 0;
            do {
                ys = y;
                for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    mpz_class diff = x - y;
                    q = q * abs(diff);
                    mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += m;
            } while (k < r && g == 1);
            r *= 2;
        } while (g == 1);
        if (g == n) {
            do {
                ys = f(ys);
                mpz_class diff = x - ys;
                mpz_class a = abs(diff);
                mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t());
            } while (g == 1);
        }
        if (g != n) return g;
    }
    throw std::runtime_error("integer factorisation failed for " + n.get_str());
}

void factor_into(mpz_class n, std::vector<mpz_class>& out) {
    if (n == 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 30) > 0) {
        out.push_back(n);
        return;
    }
    mpz_class d = brent_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

}  // namespace

std::vector<mpz_class> prime_factors(const mpz_class& n0) {
    if (n0 == 0) throw std::invalid_argument("cannot factor zero");
    mpz_class n = abs(n0);
    std::vector<mpz_class> out;
    auto strip = [&](unsigned long p) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            out.push_back(p);
            n /= p;
        }
    };
    strip(2);
    for (unsigned long p = 3; p < 10000 && n > 1; p += 2) strip(p);
    factor_into(n, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<mpz_class> positive_divisors(const mpz_class& n) {
    std::map<mpz_class, int> mult;
    for (const auto& p : prime_factors(n)) ++mult[p];
    std::vector<mpz_class> divs{1};
    for (const auto& [p, e] : mult) {
        std::size_t base = divs.size();
        mpz_class pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

}  // namespace shv
