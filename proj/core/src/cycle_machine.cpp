#include "graphcomp/cycle_machine.hpp"

#include <algorithm>

namespace graphcomp {

namespace {

std::map<NodeId, std::vector<NodeId>> undirected_adjacency(const Graph& g) {
    std::map<NodeId, std::vector<NodeId>> adj;
    for (NodeId n : g.nodes) adj[n];
    for (const Edge& e : g.edges)
        if (g.has_edge(e.second, e.first)) adj[e.first].push_back(e.second);
    for (auto& [n, nbrs] : adj) {
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    }
    return adj;
}

void extend_cycle(const std::map<NodeId, std::vector<NodeId>>& adj,
                  std::vector<NodeId>& path, std::set<NodeId>& on_path,
                  std::size_t max_len, std::set<std::vector<NodeId>>& out) {
    NodeId start = path.front();
    NodeId last = path.back();
    auto it = adj.find(last);
    if (it == adj.end()) return;
    for (NodeId next : it->second) {
        if (next == start && path.size() >= 3 && path[1] < path.back()) {
            out.insert(path);  // canonical: starts at min, second < last
            continue;
        }
        if (next <= start || on_path.count(next) || path.size() >= max_len) continue;
        path.push_back(next);
        on_path.insert(next);
        extend_cycle(adj, path, on_path, max_len, out);
        on_path.erase(next);
        path.pop_back();
    }
}

}  // namespace

std::set<std::vector<NodeId>> enumerate_cycles(const Graph& g, std::size_t max_len) {
    std::set<std::vector<NodeId>> out;
    if (max_len < 3) return out;
    auto adj = undirected_adjacency(g);
    for (NodeId start : g.nodes) {
        std::vector<NodeId> path{start};
        std::set<NodeId> on_path{start};
        extend_cycle(adj, path, on_path, max_len, out);
    }
    return out;
}

bool in_cycle(const Graph& g, NodeId n) {
    for (const auto& cycle : enumerate_cycles(g, g.nodes.size()))
        if (std::find(cycle.begin(), cycle.end(), n) != cycle.end()) return true;
    return false;
}

bool shares_cycle(const Graph& g, NodeId a, NodeId b) {
    for (const auto& cycle : enumerate_cycles(g, g.nodes.size())) {
        bool has_a = std::find(cycle.begin(), cycle.end(), a) != cycle.end();
        bool has_b = std::find(cycle.begin(), cycle.end(), b) != cycle.end();
        if (has_a && has_b) return true;
    }
    return false;
}

bool CycleMachine::cycle_intact(const std::string& name) const {
    const std::vector<NodeId>& nodes = registered_cycles.at(name);
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        NodeId a = nodes[i];
        NodeId b = nodes[(i + 1) % nodes.size()];
        if (!graph.has_undirected_edge(a, b)) return false;
    }
    return true;
}

FreqMultiset CycleMachine::node_multiset(NodeId n) const {
    FreqMultiset freqs;
    for (const auto& [name, state] : active) {
        if (!state) continue;
        const std::vector<NodeId>& nodes = registered_cycles.at(name);
        if (std::find(nodes.begin(), nodes.end(), n) != nodes.end())
            freqs.push_back(*state);
    }
    std::sort(freqs.begin(), freqs.end());
    return freqs;
}

std::vector<std::string> CycleMachine::check_invariants() const {
    std::vector<std::string> violations;
    for (const auto& [name, state] : active) {
        if (!state) continue;
        const std::vector<int>& allowed = cycle_freqs.at(name);
        if (std::find(allowed.begin(), allowed.end(), *state) == allowed.end())
            violations.push_back("cycle " + name + " active at disallowed frequency");
        if (!cycle_intact(name)) violations.push_back("cycle " + name + " active but broken");
    }
    for (const auto& [node, allowed] : node_freqs) {
        FreqMultiset m = node_multiset(node);
        if (!allowed.count(m))
            violations.push_back("node " + std::to_string(node) +
                                 " carries a disallowed frequency multiset");
    }
    return violations;
}

CycleMachine step_cycle_machine(const CycleMachine& m) {
    CycleMachine next = m;

    // Broken cycles lose their signal.
    for (auto& [name, state] : next.active)
        if (state && !next.cycle_intact(name)) state.reset();

    // Intrinsic cycles keep trying to jump-start, in name order, preferring
    // earlier-listed frequencies.
    for (const std::string& name : next.intrinsic) {
        if (next.active[name] || !next.cycle_intact(name)) continue;
        for (int freq : next.cycle_freqs.at(name)) {
            bool ok = true;
            for (NodeId node : next.registered_cycles.at(name)) {
                auto it = next.node_freqs.find(node);
                if (it == next.node_freqs.end()) continue;  // unconstrained
                FreqMultiset with = next.node_multiset(node);
                with.insert(std::upper_bound(with.begin(), with.end(), freq), freq);
                if (!it->second.count(with)) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                next.active[name] = freq;
                break;
            }
        }
    }
    return next;
}

std::pair<CycleMachine, CycleGateSpec> build_cycle_nand() {
    constexpr int w1 = 1, w2 = 2;
    constexpr NodeId X = 0;
    CycleMachine m;
    // Three triangles sharing node X.
    auto add_cycle = [&](const std::string& name, NodeId u, NodeId v) {
        for (NodeId n : {X, u, v}) m.graph.add_node(n);
        m.graph.add_undirected_edge(X, u);
        m.graph.add_undirected_edge(u, v);
        m.graph.add_undirected_edge(v, X);
        m.registered_cycles[name] = {X, u, v};
        m.active[name] = std::nullopt;
    };
    add_cycle("A", 1, 2);
    add_cycle("B", 3, 4);
    add_cycle("C", 5, 6);
    m.cycle_freqs = {{"A", {w1}}, {"B", {w2}}, {"C", {w1, w2}}};
    m.intrinsic = {"A", "B", "C"};
    // X supports any sub-multiset of {w1, w2}; repeats are not allowed.
    m.node_freqs[X] = {{}, {w1}, {w2}, {w1, w2}};
    CycleGateSpec spec{"A", "B", "C", {1, 2}, {3, 4}};
    return {m, spec};
}

CycleMachine apply_cycle_inputs(const CycleMachine& m, const CycleGateSpec& spec,
                                bool a_intact, bool b_intact) {
    CycleMachine out = m;
    if (!a_intact) out.graph.remove_undirected_edge(spec.break_a.first, spec.break_a.second);
    if (!b_intact) out.graph.remove_undirected_edge(spec.break_b.first, spec.break_b.second);
    return out;
}

}  // namespace graphcomp
