#include "graphcomp/graph_type.hpp"

#include <sstream>

namespace graphcomp {

namespace {

std::string edge_str(const Edge& e) {
    std::ostringstream o;
    o << "(" << e.first << "," << e.second << ")";
    return o.str();
}

}  // namespace

ValidationReport validate_graph(const Graph& g, const GraphType& t) {
    ValidationReport report;
    auto add = [&](const std::string& msg) { report.violations.push_back(msg); };

    for (const Edge& e : g.edges) {
        if (!g.nodes.count(e.first) || !g.nodes.count(e.second))
            add("dangling edge " + edge_str(e));
        if (t.require_symmetric_edges && !g.edges.count({e.second, e.first}))
            add("asymmetric edge " + edge_str(e) + " in undirected graph");
    }
    for (const auto& [n, l] : g.node_labels) {
        if (!g.nodes.count(n))
            add("label on missing node " + std::to_string(n));
        else if (t.node_label_set && !t.node_label_set->count(l))
            add("disallowed node label " + std::to_string(l) + " on node " + std::to_string(n));
    }
    for (const auto& [e, l] : g.edge_labels) {
        if (!g.edges.count(e))
            add("label on missing edge " + edge_str(e));
        else if (t.edge_label_set && !t.edge_label_set->count(l))
            add("disallowed edge label " + std::to_string(l) + " on edge " + edge_str(e));
    }
    if (t.max_degree) {
        for (NodeId n : g.nodes) {
            std::size_t deg = g.out_neighbors(n).size();
            if (deg > *t.max_degree)
                add("degree " + std::to_string(deg) + " of node " + std::to_string(n) +
                    " exceeds bound " + std::to_string(*t.max_degree));
        }
    }
    for (const GraphPredicate& p : t.predicates) {
        for (std::string& v : p.check(g)) report.violations.push_back(p.name + ": " + v);
    }
    return report;
}

std::set<Edge> grid_edge_set(std::size_t width, std::size_t height, bool moore) {
    std::set<Edge> edges;
    auto id = [&](std::size_t r, std::size_t c) {
        return static_cast<NodeId>(r * width + c);
    };
    for (std::size_t r = 0; r < height; ++r) {
        for (std::size_t c = 0; c < width; ++c) {
            for (int dr = -1; dr <= 1; ++dr) {
                for (int dc = -1; dc <= 1; ++dc) {
                    if (dr == 0 && dc == 0) continue;
                    if (!moore && dr != 0 && dc != 0) continue;
                    long nr = static_cast<long>(r) + dr;
                    long nc = static_cast<long>(c) + dc;
                    if (nr < 0 || nc < 0 || nr >= static_cast<long>(height) ||
                        nc >= static_cast<long>(width))
                        continue;
                    edges.insert({id(r, c), id(nr, nc)});
                }
            }
        }
    }
    return edges;
}

GraphType grid_graph_type(std::size_t width, std::size_t height, bool moore,
                          std::set<Label> cell_states) {
    GraphType t;
    t.node_label_set = std::move(cell_states);
    t.edge_label_set = std::set<Label>{};  // no edge labels allowed
    t.require_symmetric_edges = true;
    std::set<Edge> expected = grid_edge_set(width, height, moore);
    std::size_t n = width * height;
    t.predicates.push_back(
        {"grid-shape", [n, expected](const Graph& g) -> std::vector<std::string> {
             std::vector<std::string> v;
             if (g.nodes.size() != n)
                 v.push_back("expected " + std::to_string(n) + " nodes, got " +
                             std::to_string(g.nodes.size()));
             if (g.edges != expected) v.push_back("edge set is not the grid adjacency");
             return v;
         }});
    return t;
}

}  // namespace graphcomp
