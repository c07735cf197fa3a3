#pragma once

#include <shv/algebra/generator.hpp>
#include <shv/scalars/rational.hpp>

#include <map>
#include <sstream>
#include <string>

namespace shv::algebra {

// Finite linear combination of words in the generators.  Words need not be
// canonical; see NormalOrderer for the PBW normal form.
template <class K>
class Element {
public:
    Element() = default;
    explicit Element(const Word& w, const K& c = K(1)) { add(w, c); }
    static Element generator(const Gen& g, const K& c = K(1)) { return Element(Word{g}, c); }
    static Element scalar(const K& c) { return Element(Word{}, c); }

    const std::map<Word, K>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    void add(const Word& w, const K& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(w, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    K coefficient(const Word& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? K(0) : it->second;
    }

    Element& operator+=(const Element& o) {
        for (const auto& [w, c] : o.terms_) add(w, c);
        return *this;
    }
    Element& operator-=(const Element& o) {
        for (const auto& [w, c] : o.terms_) add(w, K(0) - c);
        return *this;
    }
    Element& operator*=(const K& c) {
        if (c.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [w, x] : terms_) x *= c;
        return *this;
    }
    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    friend Element operator*(Element a, const K& c) { return a *= c; }
    friend Element operator*(const K& c, Element a) { return a *= c; }
    // concatenation product (not normal ordered)
    friend Element operator*(const Element& a, const Element& b) {
        Element r;
        for (const auto& [wa, ca] : a.terms_)
            for (const auto& [wb, cb] : b.terms_) {
                Word w = wa;
                w.insert(w.end(), wb.begin(), wb.end());
                r.add(w, ca * cb);
            }
        return r;
    }
    friend bool operator==(const Element& a, const Element& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

    template <class Out, class F>
    Element<Out> map_coefficients(F f) const {
        Element<Out> r;
        for (const auto& [w, c] : terms_) r.add(w, f(c));
        return r;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [w, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            os << "(" << c << ")";
            if (!w.empty()) os << "*" << word_to_string(w);
        }
        return os.str();
    }

private:
    std::map<Word, K> terms_;
};

}  // namespace shv::algebra
