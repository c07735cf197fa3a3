#include <shv/verma/diagram.hpp>

#include <sstream>

namespace shv::verma {

const char* node_kind_name(NodeKind k) {
    switch (k) {
    case NodeKind::Top: return "top";
    case NodeKind::Singular: return "singular";
    case NodeKind::Subsingular: return "subsingular";
    }
    return "?";
}

bool EmbeddingDiagram::has_edge(std::size_t from, std::size_t to) const {
    for (const auto& e : edges)
        if (e.from == from && e.to == to) return true;
    return false;
}

std::string EmbeddingDiagram::to_text() const {
    std::ostringstream os;
    os << "embedding diagram p=" << p << " r=" << r << " up to degree " << HalfInt(twice_max).to_string() << "\n";
    for (const auto& n : nodes) {
        const char* mark = n.kind == NodeKind::Singular ? "*" : n.kind == NodeKind::Subsingular ? "o" : "v";
        os << "  " << mark << " " << n.name << "  degree " << HalfInt(n.vector.twice_degree).to_string() << "  "
           << node_kind_name(n.kind) << "\n";
    }
    for (const auto& e : edges)
        if (e.covering) os << "  " << nodes[e.from].name << " -> " << nodes[e.to].name << "\n";
    return os.str();
}

EmbeddingDiagram embedding_diagram(const Rational& p, const Rational& r, int twice_max, const Rational& cL,
                                   const Rational& cLa) {
    VermaModule<Rational> m(specialized_hw(p, r, cL, cLa));
    EmbeddingDiagram dg;
    dg.p = p;
    dg.r = r;
    dg.twice_max = twice_max;
    dg.nodes.push_back({"v", NodeKind::Top, m.highest_weight_vector()});

    std::vector<ModuleVector<Rational>> found;
    int count = 0;
    auto add_node = [&](NodeKind k, const ModuleVector<Rational>& u) {
        std::string name = (k == NodeKind::Singular ? "u" : "w") + std::to_string(++count) + "@" +
                           HalfInt(u.twice_degree).to_string();
        dg.nodes.push_back({std::move(name), k, u});
        found.push_back(u);
    };
    for (int d = 1; d <= twice_max; ++d) {
        for (const auto& u : singular_vectors(m, d)) add_node(NodeKind::Singular, u);
        GradedSpan<Rational> span = submodule_closure(m, found, twice_max);
        for (const auto& w : subsingular_vectors(m, d, span)) add_node(NodeKind::Subsingular, w);
    }

    const std::size_t n = dg.nodes.size();
    std::vector<std::vector<bool>> in(n, std::vector<bool>(n, false));  // in[a][b]: b lies in <a>
    for (std::size_t a = 0; a < n; ++a) {
        GradedSpan<Rational> cl = submodule_closure(m, {dg.nodes[a].vector}, twice_max);
        for (std::size_t b = 0; b < n; ++b) in[a][b] = a != b && cl.contains(dg.nodes[b].vector);
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            if (!in[a][b]) continue;
            bool covering = true;
            for (std::size_t c = 0; c < n && covering; ++c)
                if (c != a && c != b && in[a][c] && in[c][b] && !in[c][a]) covering = false;
            dg.edges.push_back({a, b, covering});
        }
    return dg;
}

}  // namespace shv::verma
