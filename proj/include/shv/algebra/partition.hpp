#pragma once

#include <string>
#include <vector>

namespace shv::algebra {

// Weakly decreasing sequence of positive integers.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);  // throws unless weakly decreasing and positive
    const std::vector<int>& parts() const { return parts_; }
    int degree() const;
    int length() const { return static_cast<int>(parts_.size()); }
    std::string to_string() const;
    friend bool operator==(const Partition&, const Partition&) = default;
    friend bool operator<(const Partition& a, const Partition& b) { return a.parts_ < b.parts_; }

private:
    std::vector<int> parts_;
};

// Strictly decreasing sequence of positive half-odd numbers, stored as the
// odd integers 2*lambda_i.
class SuperPartition {
public:
    SuperPartition() = default;
    explicit SuperPartition(std::vector<int> twice_parts);  // throws unless strictly decreasing, odd, positive
    const std::vector<int>& twice_parts() const { return parts_; }
    int twice_degree() const;
    int length() const { return static_cast<int>(parts_.size()); }
    std::string to_string() const;
    friend bool operator==(const SuperPartition&, const SuperPartition&) = default;
    friend bool operator<(const SuperPartition& a, const SuperPartition& b) { return a.parts_ < b.parts_; }

private:
    std::vector<int> parts_;
};

enum class PairOrder { Less, Equal, Greater, Incomparable };
const char* pair_order_name(PairOrder o);

// The order on pairs (mu, lambda): total degree first, then total length,
// then mu, then lambda, where a sequence precedes another when at the first
// differing position its part is larger.  Sequences of which one is a proper
// prefix of the other are incomparable.
PairOrder compare_pairs(const Partition& mu1, const SuperPartition& la1, const Partition& mu2,
                        const SuperPartition& la2);

// All partitions of n with parts <= max_part, in reverse lex order.
std::vector<std::vector<int>> partitions(int n, int max_part);
// All strict partitions of twice_n into odd parts (i.e. superpartitions of
// degree twice_n/2), parts <= twice_max.
std::vector<std::vector<int>> strict_odd_partitions(int twice_n, int twice_max);

}  // namespace shv::algebra
