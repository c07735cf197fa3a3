#pragma once

#include <shv/verma/verma_module.hpp>

#include <string>
#include <vector>

namespace shv::verma {

enum class NodeKind { Top, Singular, Subsingular };
const char* node_kind_name(NodeKind k);

struct DiagramNode {
    std::string name;
    NodeKind kind = NodeKind::Top;
    ModuleVector<Rational> vector;
};

// from -> to means the vector of `to` lies in the submodule generated by `from`
struct DiagramEdge {
    std::size_t from = 0, to = 0;
    bool covering = false;
};

struct EmbeddingDiagram {
    Rational p, r;
    int twice_max = 0;
    std::vector<DiagramNode> nodes;
    std::vector<DiagramEdge> edges;

    bool has_edge(std::size_t from, std::size_t to) const;
    std::string to_text() const;
};

// Singular vectors are the full raising kernel at each degree; subsingular
// ones are taken modulo the submodule generated by all earlier nodes.  Every
// statement holds up to degree twice_max / 2.
EmbeddingDiagram embedding_diagram(const Rational& p, const Rational& r, int twice_max,
                                   const Rational& cL = Defaults::cL(), const Rational& cLa = Defaults::cLa());

}  // namespace shv::verma
