#include <shv/algebra/partition.hpp>

#include <shv/algebra/generator.hpp>

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace shv::algebra {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

int Partition::degree() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::string Partition::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) s += (i ? "," : "") + std::to_string(parts_[i]);
    return s + ")";
}

SuperPartition::SuperPartition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0 || parts_[i] % 2 == 0)
            throw std::invalid_argument("superpartition parts must be positive half-odd numbers");
        if (i && parts_[i] >= parts_[i - 1])
            throw std::invalid_argument("superpartition parts must be strictly decreasing");
    }
}

int SuperPartition::twice_degree() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::string SuperPartition::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) s += (i ? "," : "") + HalfInt(parts_[i]).to_string();
    return s + ")";
}

const char* pair_order_name(PairOrder o) {
    switch (o) {
    case PairOrder::Less: return "less";
    case PairOrder::Equal: return "equal";
    case PairOrder::Greater: return "greater";
    default: return "incomparable";
    }
}

namespace {

PairOrder compare_sequences(const std::vector<int>& a, const std::vector<int>& b) {
    const std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i)
        if (a[i] != b[i]) return a[i] > b[i] ? PairOrder::Less : PairOrder::Greater;
    if (a.size() == b.size()) return PairOrder::Equal;
    return PairOrder::Incomparable;
}

}  // namespace

PairOrder compare_pairs(const Partition& mu1, const SuperPartition& la1, const Partition& mu2,
                        const SuperPartition& la2) {
    const int d1 = 2 * mu1.degree() + la1.twice_degree();
    const int d2 = 2 * mu2.degree() + la2.twice_degree();
    if (d1 != d2) return d1 < d2 ? PairOrder::Less : PairOrder::Greater;
    const int l1 = mu1.length() + la1.length(), l2 = mu2.length() + la2.length();
    if (l1 != l2) return l1 < l2 ? PairOrder::Less : PairOrder::Greater;
    PairOrder m = compare_sequences(mu1.parts(), mu2.parts());
    if (m != PairOrder::Equal) return m;
    return compare_sequences(la1.twice_parts(), la2.twice_parts());
}

std::vector<std::vector<int>> partitions(int n, int max_part) {
    std::vector<std::vector<int>> out;
    if (n == 0) {
        out.push_back({});
        return out;
    }
    for (int k = std::min(n, max_part); k >= 1; --k)
        for (auto& rest : partitions(n - k, k)) {
            rest.insert(rest.begin(), k);
            out.push_back(std::move(rest));
        }
    return out;
}

std::vector<std::vector<int>> strict_odd_partitions(int twice_n, int twice_max) {
    std::vector<std::vector<int>> out;
    if (twice_n == 0) {
        out.push_back({});
        return out;
    }
    int start = std::min(twice_n, twice_max);
    if (start % 2 == 0) --start;
    for (int k = start; k >= 1; k -= 2)
        for (auto& rest : strict_odd_partitions(twice_n - k, k - 2)) {
            rest.insert(rest.begin(), k);
            out.push_back(std::move(rest));
        }
    return out;
}

}  // namespace shv::algebra
