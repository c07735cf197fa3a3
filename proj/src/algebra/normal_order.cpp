#include <shv/algebra/normal_order.hpp>

namespace shv::algebra {

namespace {

bool out_of_order(const Gen& x, const Gen& y) {
    const int a = x.order_key(), b = y.order_key();
    return a > b || (a == b && x.is_odd());
}

}  // namespace

RElement NormalOrderer::order(const Word& w) { return order_ref(w); }

const RElement& NormalOrderer::order_ref(const Word& w) {
    std::lock_guard<std::recursive_mutex> lock(mutex_);
    auto it = memo_.find(w);
    if (it != memo_.end()) return it->second;
    RElement r = compute(w);
    return memo_.emplace(w, std::move(r)).first->second;
}

RElement NormalOrderer::compute(const Word& w) {
    std::vector<std::size_t> bad;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (out_of_order(w[i], w[i + 1])) {
            bad.push_back(i);
            if (strategy_ == RewriteStrategy::Leftmost) break;
        }
    if (bad.empty()) return RElement(w);

    std::size_t i = bad.front();
    if (strategy_ == RewriteStrategy::Random) i = bad[std::uniform_int_distribution<std::size_t>(0, bad.size() - 1)(rng_)];
    const Gen x = w[i], y = w[i + 1];
    RElement out;

    auto splice = [&](const Word& middle, const Rational& c) {
        Word v(w.begin(), w.begin() + static_cast<long>(i));
        v.insert(v.end(), middle.begin(), middle.end());
        v.insert(v.end(), w.begin() + static_cast<long>(i) + 2, w.end());
        // copy: recursion may rehash the memo table
        RElement sub = order_ref(v);
        out += sub * c;
    };

    if (x == y) {
        // x odd: xx = [x,x]/2
        const RElement sq = table_(x, y);
        for (const auto& [m, c] : sq.terms()) splice(m, c / Rational(2));
        return out;
    }
    const Rational sign = (x.is_odd() && y.is_odd()) ? Rational(-1) : Rational(1);
    splice(Word{y, x}, sign);
    const RElement br = table_(x, y);
    for (const auto& [m, c] : br.terms()) splice(m, c);
    return out;
}

}  // namespace shv::algebra
