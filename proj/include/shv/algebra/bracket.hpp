#pragma once

#include <shv/algebra/element.hpp>

#include <map>
#include <utility>

namespace shv::algebra {

using RElement = Element<Rational>;

// The super bracket [x, y] of two generators, as a combination of single
// generators and central elements.  Centrals are kept as formal symbols.
class BracketTable {
public:
    RElement operator()(const Gen& x, const Gen& y) const;

    // Replaces the value of one ordered pair; used to exercise failure paths
    // of the relation checks.
    void override_pair(const Gen& x, const Gen& y, RElement value) { overrides_[{x, y}] = std::move(value); }
    bool has_overrides() const { return !overrides_.empty(); }

    static const BracketTable& standard();

private:
    struct PairLess {
        bool operator()(const std::pair<Gen, Gen>& a, const std::pair<Gen, Gen>& b) const {
            if (a.first.order_key() != b.first.order_key()) return a.first.order_key() < b.first.order_key();
            return a.second.order_key() < b.second.order_key();
        }
    };
    std::map<std::pair<Gen, Gen>, RElement, PairLess> overrides_;
};

// The defining relations for an ordered pair in which the first entry is not
// "after" the second in the fixed relation table; symmetric cases are derived
// by super-antisymmetry.
RElement defining_bracket(const Gen& x, const Gen& y);

}  // namespace shv::algebra
