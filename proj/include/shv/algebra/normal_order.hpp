#pragma once

#include <shv/algebra/bracket.hpp>

#include <mutex>
#include <random>
#include <unordered_map>

namespace shv::algebra {

enum class RewriteStrategy { Leftmost, Random };

// Rewrites words into the PBW normal form: lowering block (P < A < G < L,
// ascending modes), then L(0), alpha(0), CL, CA, CLA, then the raising block
// (L < G < A < P, ascending modes).  Each step replaces an out-of-order
// adjacent pair xy by (-1)^{|x||y|} yx + [x,y], and a repeated odd letter xx
// by [x,x]/2.  Results are memoised per word.
class NormalOrderer {
public:
    explicit NormalOrderer(const BracketTable& table = BracketTable::standard(),
                           RewriteStrategy strategy = RewriteStrategy::Leftmost, unsigned seed = 0)
        : table_(table), strategy_(strategy), rng_(seed) {}

    RElement order(const Word& w);

    template <class K>
    Element<K> order(const Element<K>& e) {
        Element<K> out;
        for (const auto& [w, c] : e.terms()) {
            const RElement& n = order_ref(w);
            for (const auto& [nw, nc] : n.terms()) out.add(nw, c * K(nc));
        }
        return out;
    }

    // super commutator [a, b] of two elements, normal ordered
    template <class K>
    Element<K> commutator(const Element<K>& a, const Element<K>& b) {
        Element<K> out;
        for (const auto& [wa, ca] : a.terms())
            for (const auto& [wb, cb] : b.terms()) {
                const int sign = (word_parity(wa) & word_parity(wb)) ? -1 : 1;
                Word ab = wa, ba = wb;
                ab.insert(ab.end(), wb.begin(), wb.end());
                ba.insert(ba.end(), wa.begin(), wa.end());
                K c = ca * cb;
                for (const auto& [w, x] : order_ref(ab).terms()) out.add(w, c * K(x));
                for (const auto& [w, x] : order_ref(ba).terms()) out.add(w, K(0) - K(sign) * c * K(x));
            }
        return out;
    }

    std::size_t memo_size() const { return memo_.size(); }

private:
    const BracketTable& table_;
    RewriteStrategy strategy_;
    std::mt19937 rng_;
    std::unordered_map<Word, RElement, WordHash> memo_;
    std::recursive_mutex mutex_;

    const RElement& order_ref(const Word& w);
    RElement compute(const Word& w);
};

}  // namespace shv::algebra
