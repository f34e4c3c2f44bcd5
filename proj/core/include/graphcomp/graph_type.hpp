#ifndef GRAPHCOMP_GRAPH_TYPE_HPP
#define GRAPHCOMP_GRAPH_TYPE_HPP

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "graphcomp/graph.hpp"

namespace graphcomp {

/// A named structural constraint; the check returns a violation message
/// for each way g breaks the constraint.
struct GraphPredicate {
    std::string name;
    std::function<std::vector<std::string>(const Graph&)> check;
};

/// Compositional graph type: label sets plus optional structural
/// constraints. An empty optional label set admits any integer label.
struct GraphType {
    std::optional<std::set<Label>> node_label_set;
    std::optional<std::set<Label>> edge_label_set;
    bool require_symmetric_edges = false;
    std::optional<std::size_t> max_degree;
    std::vector<GraphPredicate> predicates;

    static GraphType permissive() { return {}; }
};

struct ValidationReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

/// Lists every violated constraint: dangling edges, labels on missing
/// elements, disallowed labels, failed predicates.
ValidationReport validate_graph(const Graph& g, const GraphType& t);

/// Grid graph type: width*height nodes 0..n-1 connected per the chosen
/// neighborhood, no edge labels.
GraphType grid_graph_type(std::size_t width, std::size_t height, bool moore,
                          std::set<Label> cell_states);

/// Symmetric adjacency of a width x height grid (row-major node ids).
std::set<Edge> grid_edge_set(std::size_t width, std::size_t height, bool moore);

}  // namespace graphcomp

#endif
