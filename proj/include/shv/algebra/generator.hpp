#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace shv::algebra {

// A number in (1/2)Z, stored as twice its value.  Used for modes and degrees.
struct HalfInt {
    int twice = 0;

    constexpr HalfInt() = default;
    constexpr explicit HalfInt(int twice_value) : twice(twice_value) {}
    static constexpr HalfInt integer(int n) { return HalfInt(2 * n); }
    static HalfInt parse(const std::string& s);

    constexpr bool is_integer() const { return twice % 2 == 0; }
    std::string to_string() const;

    friend constexpr auto operator<=>(HalfInt, HalfInt) = default;
    friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return HalfInt(a.twice + b.twice); }
    friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return HalfInt(a.twice - b.twice); }
    constexpr HalfInt operator-() const { return HalfInt(-twice); }
};

enum class Kind : std::uint8_t { L, A, G, P, CL, CA, CLA };

// One generator of the algebra: a mode L(m), alpha(m), G(r), Psi(r), or one
// of the central elements.  Written A for alpha and P for Psi in text.
struct Gen {
    Kind kind = Kind::L;
    int twice_mode = 0;

    Gen() = default;
    Gen(Kind k, HalfInt mode);
    static Gen L(int m) { return Gen(Kind::L, HalfInt::integer(m)); }
    static Gen A(int m) { return Gen(Kind::A, HalfInt::integer(m)); }
    static Gen G(int twice) { return Gen(Kind::G, HalfInt(twice)); }
    static Gen P(int twice) { return Gen(Kind::P, HalfInt(twice)); }
    static Gen central(Kind k) { return Gen(k, HalfInt(0)); }
    static Gen parse(const std::string& s);

    HalfInt mode() const { return HalfInt(twice_mode); }
    bool is_odd() const { return kind == Kind::G || kind == Kind::P; }
    bool is_central() const { return kind == Kind::CL || kind == Kind::CA || kind == Kind::CLA; }
    bool is_lowering() const { return !is_central() && twice_mode < 0; }
    bool is_raising() const { return !is_central() && twice_mode > 0; }
    // L(0), alpha(0) and the centrals
    bool is_cartan() const { return !is_lowering() && !is_raising(); }
    // amount by which the generator raises the degree of a module vector (twice units)
    int twice_degree() const { return -twice_mode; }

    // position in the canonical PBW order (lowering block, Cartan block, raising block)
    int order_key() const;
    std::string to_string() const;

    friend bool operator==(const Gen& a, const Gen& b) { return a.kind == b.kind && a.twice_mode == b.twice_mode; }
    friend bool operator!=(const Gen& a, const Gen& b) { return !(a == b); }
    friend bool operator<(const Gen& a, const Gen& b) { return a.order_key() < b.order_key(); }
};

using Word = std::vector<Gen>;

std::string word_to_string(const Word& w);
Word parse_word(const std::string& s);
int word_parity(const Word& w);
int word_twice_degree(const Word& w);
bool is_canonical(const Word& w);

struct WordHash {
    std::size_t operator()(const Word& w) const {
        std::size_t h = w.size();
        for (const auto& g : w) h = h * 1000003u + static_cast<std::size_t>(g.order_key());
        return h;
    }
};

struct GenHash {
    std::size_t operator()(const Gen& g) const { return std::hash<int>{}(g.order_key()); }
};

// All non-central generators with |2*mode| <= twice_bound (centrals excluded).
std::vector<Gen> generators_up_to(int twice_bound);
std::vector<Gen> raising_generators_up_to(int twice_mode_max);
std::vector<Gen> lowering_generators_up_to(int twice_mode_max);

}  // namespace shv::algebra
