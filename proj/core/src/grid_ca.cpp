#include "graphcomp/grid_ca.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace graphcomp {

Label life_rule(Label self, const std::vector<Label>& neighbors) {
    long live = std::count(neighbors.begin(), neighbors.end(), Label{1});
    if (self == 1) return (live == 2 || live == 3) ? 1 : 0;
    return live == 3 ? 1 : 0;
}

Graph grid_graph(std::size_t width, std::size_t height, Neighborhood neighborhood,
                 const std::vector<Label>& states) {
    if (states.size() != width * height)
        throw std::invalid_argument("state vector does not match grid size");
    Graph g;
    for (std::size_t i = 0; i < states.size(); ++i)
        g.add_node(static_cast<NodeId>(i), states[i]);
    for (const Edge& e : grid_edge_set(width, height, neighborhood == Neighborhood::moore_8))
        g.add_edge(e.first, e.second);
    return g;
}

std::vector<Label> grid_states(const Graph& g, std::size_t width, std::size_t height) {
    std::vector<Label> states(width * height, 0);
    for (std::size_t i = 0; i < states.size(); ++i)
        states[i] = g.node_label(static_cast<NodeId>(i));
    return states;
}

Machine build_grid_ca_machine(std::size_t width, std::size_t height,
                              Neighborhood neighborhood, LocalRule local_rule,
                              std::string rule_name) {
    if (width < 1 || height < 1) throw std::invalid_argument("grid must be at least 1x1");

    Machine m;
    m.mode = MachineMode::node_based;
    m.rule_name = std::move(rule_name);
    m.graph_type = grid_graph_type(width, height, neighborhood == Neighborhood::moore_8,
                                   std::set<Label>{});
    m.graph_type.node_label_set.reset();  // the local rule defines the state set

    m.update_rule = [local_rule](const Graph& g) {
        Graph next = g;
        for (NodeId n : g.nodes) {
            std::vector<Label> neighbor_labels;
            for (NodeId nb : g.out_neighbors(n)) neighbor_labels.push_back(g.node_label(nb));
            std::sort(neighbor_labels.begin(), neighbor_labels.end());
            next.node_labels[n] = local_rule(g.node_label(n), neighbor_labels);
        }
        return next;
    };

    m.input_fn = [width, height, neighborhood](std::int64_t seed) {
        std::mt19937_64 rng(static_cast<std::uint64_t>(seed));
        std::vector<Label> states(width * height);
        for (Label& s : states) s = static_cast<Label>(rng() & 1);
        return grid_graph(width, height, neighborhood, states);
    };

    m.output_fn = [](const Graph&) -> Output { return NOT_HALTED_YET; };
    return m;
}

}  // namespace graphcomp
