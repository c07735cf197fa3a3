#include <shv/verma/verma_module.hpp>

#include <shv/algebra/partition.hpp>

#include <algorithm>
#include <sstream>

namespace shv::verma {

namespace {

std::uint64_t memo_key(const Gen& g, int twice_d, std::uint32_t idx) {
    return (static_cast<std::uint64_t>(g.order_key()) << 40) | (static_cast<std::uint64_t>(twice_d) << 24) | idx;
}

struct WordShape {
    std::vector<int> plus_even, plus_odd, minus_even, minus_odd;  // L, G, A, P parts (twice units for odd)
};

WordShape shape_of(const Word& w) {
    WordShape s;
    for (const auto& g : w) {
        switch (g.kind) {
        case Kind::L: s.plus_even.push_back(-g.twice_mode / 2); break;
        case Kind::G: s.plus_odd.push_back(-g.twice_mode); break;
        case Kind::A: s.minus_even.push_back(-g.twice_mode / 2); break;
        case Kind::P: s.minus_odd.push_back(-g.twice_mode); break;
        default: break;
        }
    }
    return s;
}

// -1, 0, 1 in the order "larger part first is smaller"; a proper prefix is smaller
int compare_seq(const std::vector<int>& a, const std::vector<int>& b) {
    const std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i)
        if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
    if (a.size() == b.size()) return 0;
    return a.size() < b.size() ? -1 : 1;
}

int compare_pair(const std::vector<int>& mu1, const std::vector<int>& la1, const std::vector<int>& mu2,
                 const std::vector<int>& la2) {
    auto sum = [](const std::vector<int>& v, int f) {
        int s = 0;
        for (int x : v) s += f * x;
        return s;
    };
    int d1 = sum(mu1, 2) + sum(la1, 1), d2 = sum(mu2, 2) + sum(la2, 1);
    if (d1 != d2) return d1 < d2 ? -1 : 1;
    std::size_t l1 = mu1.size() + la1.size(), l2 = mu2.size() + la2.size();
    if (l1 != l2) return l1 < l2 ? -1 : 1;
    if (int c = compare_seq(mu1, mu2)) return c;
    return compare_seq(la1, la2);
}

template <class K>
typename VermaModule<K>::SparseVec compress(const std::vector<K>& acc) {
    typename VermaModule<K>::SparseVec out;
    for (std::size_t i = 0; i < acc.size(); ++i)
        if (!acc[i].is_zero()) out.emplace_back(static_cast<std::uint32_t>(i), acc[i]);
    return out;
}

}  // namespace

bool pbw_word_less(const Word& a, const Word& b) {
    WordShape sa = shape_of(a), sb = shape_of(b);
    if (int c = compare_pair(sa.plus_even, sa.plus_odd, sb.plus_even, sb.plus_odd)) return c < 0;
    if (int c = compare_pair(sa.minus_even, sa.minus_odd, sb.minus_even, sb.minus_odd)) return c < 0;
    return a < b;
}

std::vector<Gen> raising_test_generators(int twice_d) {
    const int ceil_d = (twice_d + 1) / 2;
    return algebra::raising_generators_up_to(2 * ceil_d);
}

template <class K>
VermaModule<K>::VermaModule(HighestWeight<K> hw, bool vacuum, const algebra::BracketTable& table)
    : hw_(std::move(hw)), vacuum_(vacuum), table_(table) {}

template <class K>
const std::vector<Word>& VermaModule<K>::basis(int twice_d) {
    std::lock_guard<std::recursive_mutex> lock(mutex_);
    auto it = bases_.find(twice_d);
    if (it != bases_.end()) return it->second;
    if (twice_d < 0) throw std::invalid_argument("negative degree");

    const int min_a = 1, min_l = vacuum_ ? 2 : 1, min_g = vacuum_ ? 3 : 1;
    std::vector<Word> words;
    // split twice_d = tp + 2a + tg + 2l
    for (int tp = 0; tp <= twice_d; ++tp)
        for (int tg = 0; tp + tg <= twice_d; ++tg) {
            int rest = twice_d - tp - tg;
            if (rest % 2) continue;
            rest /= 2;
            auto ps = algebra::strict_odd_partitions(tp, tp);
            auto gs = algebra::strict_odd_partitions(tg, tg);
            for (int a = 0; a <= rest; ++a) {
                auto as = algebra::partitions(a, a);
                auto ls = algebra::partitions(rest - a, rest - a);
                for (const auto& P : ps)
                    for (const auto& A : as) {
                        if (!A.empty() && A.back() < min_a) continue;
                        for (const auto& G : gs) {
                            if (!G.empty() && G.back() < min_g) continue;
                            for (const auto& L : ls) {
                                if (!L.empty() && L.back() < min_l) continue;
                                Word w;
                                for (int x : P) w.push_back(Gen::P(-x));
                                for (int x : A) w.push_back(Gen::A(-x));
                                for (int x : G) w.push_back(Gen::G(-x));
                                for (int x : L) w.push_back(Gen::L(-x));
                                words.push_back(std::move(w));
                            }
                        }
                    }
            }
        }
    std::sort(words.begin(), words.end());
    auto& idx = indices_[twice_d];
    for (std::uint32_t i = 0; i < words.size(); ++i) idx.emplace(words[i], i);
    return bases_.emplace(twice_d, std::move(words)).first->second;
}

template <class K>
std::optional<std::uint32_t> VermaModule<K>::index_of(int twice_d, const Word& w) {
    std::lock_guard<std::recursive_mutex> lock(mutex_);
    basis(twice_d);
    const auto& idx = indices_.at(twice_d);
    auto it = idx.find(w);
    if (it == idx.end()) return std::nullopt;
    return it->second;
}

template <class K>
std::uint64_t VermaModule<K>::basis_hash(int twice_d) {
    // FNV-1a over the printed basis words
    std::uint64_t h = 1469598103934665603ULL;
    for (const auto& w : basis(twice_d)) {
        for (char ch : algebra::word_to_string(w) + ";") {
            h ^= static_cast<unsigned char>(ch);
            h *= 1099511628211ULL;
        }
    }
    return h;
}

template <class K>
bool VermaModule<K>::annihilates_vacuum(const Gen& g) const {
    if (g.is_raising()) return true;
    return vacuum_ && (g == Gen::L(-1) || g == Gen::G(-1));
}

template <class K>
const typename VermaModule<K>::SparseVec& VermaModule<K>::apply(const Gen& g, int twice_d, std::uint32_t idx) {
    std::lock_guard<std::recursive_mutex> lock(mutex_);
    const std::uint64_t key = memo_key(g, twice_d, idx);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    SparseVec r = compute_apply(g, twice_d, idx);
    return memo_.emplace(key, std::move(r)).first->second;
}

template <class K>
typename VermaModule<K>::SparseVec VermaModule<K>::compute_apply(const Gen& g, int twice_d, std::uint32_t idx) {
    const Word w = basis(twice_d).at(idx);
    const int td = twice_d + g.twice_degree();
    if (td < 0) return {};

    switch (g.kind) {
    case Kind::CL: return hw_.cL.is_zero() ? SparseVec{} : SparseVec{{idx, hw_.cL}};
    case Kind::CA: return hw_.cA.is_zero() ? SparseVec{} : SparseVec{{idx, hw_.cA}};
    case Kind::CLA: return hw_.cLa.is_zero() ? SparseVec{} : SparseVec{{idx, hw_.cLa}};
    default: break;
    }
    if (g.twice_mode == 0) {
        // alpha(0) is central in the algebra, L(0) measures the degree
        K c = g.kind == Kind::L ? hw_.h + K(half(twice_d)) : hw_.hA;
        return c.is_zero() ? SparseVec{} : SparseVec{{idx, c}};
    }

    const bool annihilating = annihilates_vacuum(g);
    if (w.empty() && annihilating) return {};
    if (!annihilating) {
        if (w.empty() || g.order_key() < w[0].order_key() || (g == w[0] && !g.is_odd())) {
            Word nw;
            nw.reserve(w.size() + 1);
            nw.push_back(g);
            nw.insert(nw.end(), w.begin(), w.end());
            auto j = index_of(td, nw);
            if (!j) throw std::logic_error("word " + algebra::word_to_string(nw) + " missing from the basis");
            return SparseVec{{*j, K(1)}};
        }
    }

    std::vector<K> acc(dimension(td), K(0));
    const Gen y = w[0];
    const Word rest(w.begin() + 1, w.end());
    const int rd = twice_d - y.twice_degree();
    const std::uint32_t ridx = *index_of(rd, rest);
    auto add_apply = [&](const K& coef, const Gen& z, int d, std::uint32_t i) {
        const SparseVec& r = apply(z, d, i);
        for (const auto& [j, c] : r) acc[j] += coef * c;
    };

    if (!annihilating && g == y) {
        // repeated odd letter: g g = [g, g] / 2
        const auto sq = table_(g, g);
        for (const auto& [m, c] : sq.terms()) add_apply(K(c / Rational(2)), m[0], rd, ridx);
        return compress(acc);
    }

    // g y rest = (-1)^{|g||y|} y (g rest) + [g, y] rest
    const K sign = (g.is_odd() && y.is_odd()) ? K(-1) : K(1);
    const SparseVec inner = apply(g, rd, ridx);
    const int id = rd + g.twice_degree();
    for (const auto& [j, c] : inner) add_apply(sign * c, y, id, j);
    const auto br = table_(g, y);
    for (const auto& [m, c] : br.terms()) add_apply(K(c), m[0], rd, ridx);
    return compress(acc);
}

template <class K>
ModuleVector<K> VermaModule<K>::highest_weight_vector() {
    return basis_vector(0, 0);
}

template <class K>
ModuleVector<K> VermaModule<K>::zero(int twice_d) {
    return ModuleVector<K>{twice_d, std::vector<K>(dimension(twice_d), K(0))};
}

template <class K>
ModuleVector<K> VermaModule<K>::basis_vector(int twice_d, std::size_t idx) {
    ModuleVector<K> v = zero(twice_d);
    v.coords.at(idx) = K(1);
    return v;
}

template <class K>
ModuleVector<K> VermaModule<K>::act(const Gen& g, const ModuleVector<K>& v) {
    const int td = v.twice_degree + g.twice_degree();
    if (td < 0) return ModuleVector<K>{td, {}};
    ModuleVector<K> out = zero(td);
    for (std::size_t i = 0; i < v.coords.size(); ++i) {
        if (v.coords[i].is_zero()) continue;
        for (const auto& [j, c] : apply(g, v.twice_degree, static_cast<std::uint32_t>(i)))
            out.coords[j] += v.coords[i] * c;
    }
    return out;
}

template <class K>
ModuleVector<K> VermaModule<K>::act_word(const Word& w, const ModuleVector<K>& v) {
    ModuleVector<K> cur = v;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        cur = act(*it, cur);
        if (cur.twice_degree < 0) return cur;
    }
    return cur;
}

template <class K>
ModuleVector<K> VermaModule<K>::act(const Element<K>& x, const ModuleVector<K>& v) {
    std::optional<int> td;
    ModuleVector<K> out;
    for (const auto& [w, c] : x.terms()) {
        int d = v.twice_degree + algebra::word_twice_degree(w);
        if (td && *td != d) throw std::invalid_argument("act: element is not homogeneous");
        if (!td) {
            td = d;
            out = d >= 0 ? zero(d) : ModuleVector<K>{d, {}};
        }
        if (d < 0) continue;
        ModuleVector<K> r = act_word(w, v);
        if (r.twice_degree < 0) continue;
        for (std::size_t i = 0; i < r.coords.size(); ++i)
            if (!r.coords[i].is_zero()) out.coords[i] += c * r.coords[i];
    }
    if (!td) return zero(v.twice_degree);
    return out;
}

template <class K>
linalg::Matrix<K> VermaModule<K>::generator_matrix(const Gen& g, int twice_d) {
    const int td = twice_d + g.twice_degree();
    const std::size_t n = dimension(twice_d);
    if (td < 0) return linalg::Matrix<K>(0, n);
    linalg::Matrix<K> m(dimension(td), n);
    for (std::uint32_t i = 0; i < n; ++i)
        for (const auto& [j, c] : apply(g, twice_d, i)) m(j, i) = c;
    return m;
}

template <class K>
const std::vector<K>& VermaModule<K>::functional(int twice_d, std::uint32_t idx) {
    std::lock_guard<std::recursive_mutex> lock(mutex_);
    auto key = std::make_pair(twice_d, idx);
    auto it = functionals_.find(key);
    if (it != functionals_.end()) return it->second;
    const Word w = basis(twice_d).at(idx);
    std::vector<K> f(dimension(twice_d), K(0));
    if (w.empty()) {
        f[0] = K(1);
    } else {
        // f_w(u) = f_rest(sigma0(w[0]) u)
        const Gen x = w[0];
        const Word rest(w.begin() + 1, w.end());
        const int rd = twice_d - x.twice_degree();
        const std::vector<K> fr = functional(rd, *index_of(rd, rest));
        const Gen sx(x.kind, HalfInt(-x.twice_mode));
        const K sign = x.kind == Kind::A ? K(-1) : K(1);
        for (std::uint32_t j = 0; j < f.size(); ++j) {
            K acc(0);
            for (const auto& [i, c] : apply(sx, twice_d, j))
                if (!fr[i].is_zero()) acc += fr[i] * c;
            f[j] = sign * acc;
        }
    }
    return functionals_.emplace(key, std::move(f)).first->second;
}

template <class K>
ShapovalovGram<K> VermaModule<K>::gram(int twice_d) {
    const std::size_t n = dimension(twice_d);
    ShapovalovGram<K> g{linalg::Matrix<K>(n, n), std::vector<int>(n, 0)};
    for (std::uint32_t i = 0; i < n; ++i) {
        const auto& f = functional(twice_d, i);
        for (std::size_t j = 0; j < n; ++j) g.matrix(i, j) = f[j];
        int power = 0;
        for (const auto& x : basis(twice_d)[i]) {
            if (x.kind == Kind::P) power += 1;
            if (x.kind == Kind::G) power += 3;
        }
        g.row_i_power[i] = power % 4;
    }
    return g;
}

template <class K>
std::string VermaModule<K>::vector_to_string(const ModuleVector<K>& v) {
    if (v.twice_degree < 0) return "0";
    std::ostringstream os;
    bool first = true;
    const auto& b = basis(v.twice_degree);
    for (std::size_t i = 0; i < v.coords.size(); ++i) {
        if (v.coords[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << v.coords[i] << ")*" << algebra::word_to_string(b[i]) << "v";
    }
    if (first) os << "0";
    return os.str();
}

template <class K>
std::size_t leading_index(VermaModule<K>& m, const ModuleVector<K>& v) {
    const auto& b = m.basis(v.twice_degree);
    std::optional<std::size_t> best;
    for (std::size_t i = 0; i < v.coords.size(); ++i) {
        if (v.coords[i].is_zero()) continue;
        if (!best || pbw_word_less(b[*best], b[i])) best = i;
    }
    if (!best) throw std::domain_error("leading word of the zero vector");
    return *best;
}

template <class K>
ModuleVector<K> normalize_leading(VermaModule<K>& m, ModuleVector<K> v) {
    const K lead = v.coords[leading_index(m, v)];
    const K inv = K(1) / lead;
    for (auto& c : v.coords)
        if (!c.is_zero()) c *= inv;
    return v;
}

template <class K>
bool is_singular(VermaModule<K>& m, const ModuleVector<K>& v) {
    for (const auto& g : raising_test_generators(v.twice_degree)) {
        ModuleVector<K> r = m.act(g, v);
        if (r.twice_degree >= 0 && !r.is_zero()) return false;
    }
    return true;
}

template <class K>
std::vector<ModuleVector<K>> singular_vectors(VermaModule<K>& m, int twice_d) {
    const std::size_t n = m.dimension(twice_d);
    linalg::Matrix<K> stacked(0, n);
    for (const auto& g : raising_test_generators(twice_d)) {
        auto a = m.generator_matrix(g, twice_d);
        for (std::size_t i = 0; i < a.rows(); ++i) stacked.append_row(a.row(i));
    }
    std::vector<ModuleVector<K>> out;
    for (auto& k : linalg::kernel_basis(stacked))
        out.push_back(normalize_leading(m, ModuleVector<K>{twice_d, std::move(k)}));
    return out;
}

template <class K>
GradedSpan<K> submodule_closure(VermaModule<K>& m, const std::vector<ModuleVector<K>>& generators, int twice_max,
                                bool include_raising) {
    GradedSpan<K> span(m, twice_max);
    std::vector<ModuleVector<K>> work;
    for (const auto& g : generators) {
        if (g.twice_degree > twice_max) continue;
        if (span.add(g)) work.push_back(g);
    }
    const auto lowering = algebra::lowering_generators_up_to(twice_max);
    const auto raising = algebra::raising_generators_up_to(twice_max);
    while (!work.empty()) {
        ModuleVector<K> u = std::move(work.back());
        work.pop_back();
        auto push = [&](const Gen& g) {
            const int td = u.twice_degree + g.twice_degree();
            if (td < 0 || td > twice_max) return;
            ModuleVector<K> x = m.act(g, u);
            if (!x.is_zero() && span.add(x)) work.push_back(std::move(x));
        };
        for (const auto& g : lowering) push(g);
        if (include_raising)
            for (const auto& g : raising) push(g);
    }
    return span;
}

template <class K>
std::vector<ModuleVector<K>> subsingular_vectors(VermaModule<K>& m, int twice_d, const GradedSpan<K>& s) {
    const std::size_t n = m.dimension(twice_d);
    linalg::Matrix<K> stacked(0, n);
    for (const auto& g : raising_test_generators(twice_d)) {
        const int td = twice_d + g.twice_degree();
        if (td < 0) continue;
        // rows annihilating s_td: left null space of its basis
        const auto& rows = s.part(td).rows();
        linalg::Matrix<K> b(rows.size(), m.dimension(td));
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < rows[i].size(); ++j) b(i, j) = rows[i][j];
        auto ann = linalg::kernel_basis(b);
        auto a = m.generator_matrix(g, twice_d);
        for (const auto& y : ann) stacked.append_row(linalg::left_multiply(y, a));
    }
    linalg::EchelonSpan<K> known(n);
    for (const auto& r : s.part(twice_d).rows()) known.add(r);
    for (const auto& u : singular_vectors(m, twice_d)) known.add(u.coords);
    std::vector<ModuleVector<K>> out;
    auto kernel = linalg::kernel_basis(stacked);
    for (auto& k : kernel) {
        if (known.add(k)) out.push_back(normalize_leading(m, ModuleVector<K>{twice_d, k}));
    }
    return out;
}

template class VermaModule<Rational>;
template class VermaModule<Polynomial>;
template class VermaModule<RationalFunction>;

#define SHV_FIELD_INSTANTIATIONS(K)                                                                                 \
    template std::size_t leading_index(VermaModule<K>&, const ModuleVector<K>&);                                    \
    template ModuleVector<K> normalize_leading(VermaModule<K>&, ModuleVector<K>);                                   \
    template bool is_singular(VermaModule<K>&, const ModuleVector<K>&);                                             \
    template std::vector<ModuleVector<K>> singular_vectors(VermaModule<K>&, int);                                   \
    template GradedSpan<K> submodule_closure(VermaModule<K>&, const std::vector<ModuleVector<K>>&, int, bool);      \
    template std::vector<ModuleVector<K>> subsingular_vectors(VermaModule<K>&, int, const GradedSpan<K>&);

SHV_FIELD_INSTANTIATIONS(Rational)
SHV_FIELD_INSTANTIATIONS(RationalFunction)

}  // namespace shv::verma
