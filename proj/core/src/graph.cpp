#include "graphcomp/graph.hpp"

#include <sstream>

namespace graphcomp {

std::vector<NodeId> Graph::out_neighbors(NodeId n) const {
    std::vector<NodeId> result;
    for (auto it = edges.lower_bound({n, INT64_MIN}); it != edges.end() && it->first == n; ++it) {
        result.push_back(it->second);
    }
    return result;
}

std::string canonical_serialization(const Graph& g) {
    std::ostringstream out;
    out << "N:";
    for (NodeId n : g.nodes) out << n << ",";
    out << ";E:";
    for (const Edge& e : g.edges) out << e.first << ">" << e.second << ",";
    out << ";NL:";
    for (const auto& [n, l] : g.node_labels) out << n << "=" << l << ",";
    out << ";EL:";
    for (const auto& [e, l] : g.edge_labels) out << e.first << ">" << e.second << "=" << l << ",";
    return out.str();
}

std::string graph_digest(const Graph& g) {
    const std::string s = canonical_serialization(g);
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

}  // namespace graphcomp
