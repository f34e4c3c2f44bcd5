#ifndef GRAPHCOMP_GRAPH_HPP
#define GRAPHCOMP_GRAPH_HPP

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace graphcomp {

using NodeId = std::int64_t;
using Edge = std::pair<NodeId, NodeId>;
using Label = std::int64_t;

/// Labeled directed graph. Undirected graphs are stored as symmetric
/// directed pairs; use add_undirected_edge to keep the symmetry.
struct Graph {
    std::set<NodeId> nodes;
    std::set<Edge> edges;
    std::map<NodeId, Label> node_labels;
    std::map<Edge, Label> edge_labels;

    void add_node(NodeId n) { nodes.insert(n); }
    void add_node(NodeId n, Label l) {
        nodes.insert(n);
        node_labels[n] = l;
    }
    void add_edge(NodeId a, NodeId b) { edges.insert({a, b}); }
    void add_undirected_edge(NodeId a, NodeId b) {
        edges.insert({a, b});
        edges.insert({b, a});
    }
    void remove_undirected_edge(NodeId a, NodeId b) {
        edges.erase({a, b});
        edges.erase({b, a});
    }

    bool has_edge(NodeId a, NodeId b) const { return edges.count({a, b}) > 0; }
    bool has_undirected_edge(NodeId a, NodeId b) const {
        return has_edge(a, b) && has_edge(b, a);
    }

    Label node_label(NodeId n, Label fallback = 0) const {
        auto it = node_labels.find(n);
        return it == node_labels.end() ? fallback : it->second;
    }

    /// Neighbors along outgoing edges, sorted.
    std::vector<NodeId> out_neighbors(NodeId n) const;

    bool operator==(const Graph&) const = default;
};

/// Stable canonical serialization; nodes, edges and labels in sorted order.
std::string canonical_serialization(const Graph& g);

/// 64-bit FNV-1a over the canonical serialization, as a hex string.
std::string graph_digest(const Graph& g);

}  // namespace graphcomp

#endif
