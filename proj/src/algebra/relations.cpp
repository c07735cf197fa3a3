#include <shv/algebra/relations.hpp>

namespace shv::algebra {

namespace {

constexpr std::size_t kMaxListed = 8;

void record(RelationReport& rep, std::string what) {
    if (rep.failures.size() < kMaxListed) rep.failures.push_back(std::move(what));
    ++rep.failure_count;
}

int parity(const Gen& g) { return g.is_odd() ? 1 : 0; }

}  // namespace

RelationReport check_antisymmetry(const BracketTable& table, int twice_bound) {
    RelationReport rep;
    auto gens = generators_up_to(twice_bound);
    for (const auto& x : gens)
        for (const auto& y : gens) {
            ++rep.pairs_checked;
            RElement lhs = table(x, y);
            RElement rhs = table(y, x) * Rational((parity(x) & parity(y)) ? 1 : -1);
            if (lhs != rhs) record(rep, "[" + x.to_string() + ", " + y.to_string() + "]");
        }
    return rep;
}

RelationReport check_jacobi(const BracketTable& table, int twice_bound) {
    RelationReport rep;
    NormalOrderer no(table);
    auto gens = generators_up_to(twice_bound);
    auto sgn = [](int a, int b) { return Rational((a & b) ? -1 : 1); };
    for (const auto& x : gens)
        for (const auto& y : gens)
            for (const auto& z : gens) {
                ++rep.triples_checked;
                const int px = parity(x), py = parity(y), pz = parity(z);
                RElement t1 = no.commutator(RElement::generator(x), table(y, z)) * sgn(px, pz);
                RElement t2 = no.commutator(RElement::generator(y), table(z, x)) * sgn(py, px);
                RElement t3 = no.commutator(RElement::generator(z), table(x, y)) * sgn(pz, py);
                RElement sum = t1 + t2 + t3;
                if (!sum.is_zero())
                    record(rep, "[" + x.to_string() + ", " + y.to_string() + ", " + z.to_string() + "]");
            }
    return rep;
}

RelationReport check_confluence(const BracketTable& table, int twice_bound, int length, unsigned seed) {
    RelationReport rep;
    NormalOrderer left(table, RewriteStrategy::Leftmost);
    NormalOrderer random(table, RewriteStrategy::Random, seed);
    auto gens = generators_up_to(twice_bound);
    std::vector<std::size_t> idx(static_cast<std::size_t>(length), 0);
    for (;;) {
        Word w;
        for (auto i : idx) w.push_back(gens[i]);
        ++rep.words_checked;
        if (left.order(w) != random.order(w)) record(rep, word_to_string(w));
        std::size_t k = 0;
        while (k < idx.size() && ++idx[k] == gens.size()) idx[k++] = 0;
        if (k == idx.size()) break;
    }
    return rep;
}

}  // namespace shv::algebra
