#include <shv/qchar/schur.hpp>

#include <algorithm>
#include <map>
#include <mutex>

namespace shv::qchar {

namespace {

void partitions_into(int n, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int k = std::min(n, max_part); k >= 1; --k) {
        cur.push_back(k);
        partitions_into(n - k, k, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<SchurTerm> schur_expand(int k) {
    static std::mutex mu;
    static std::map<int, std::vector<SchurTerm>> cache;
    if (k < 0) return {};
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(k);
    if (it != cache.end()) return it->second;

    std::vector<std::vector<int>> parts;
    std::vector<int> cur;
    partitions_into(k, k, cur, parts);
    std::vector<SchurTerm> out;
    for (auto& lam : parts) {
        Rational c(1);
        std::map<int, int> mult;
        for (int x : lam) ++mult[x];
        for (const auto& [n, m] : mult) {
            Rational denom = Rational(n).pow(m);
            for (int i = 2; i <= m; ++i) denom *= Rational(i);
            c /= denom;
        }
        out.push_back({std::move(lam), c});
    }
    cache.emplace(k, out);
    return out;
}

std::vector<SchurTerm> schur_expand_scaled(int k, const Rational& scale) {
    auto terms = schur_expand(k);
    for (auto& t : terms) t.coefficient *= scale.pow(static_cast<int>(t.parts.size()));
    return terms;
}

}  // namespace shv::qchar
