#include "graphcomp/arc_gate.hpp"

#include <algorithm>
#include <stdexcept>

namespace graphcomp {

namespace {

Edge normalized(const Edge& e) {
    return e.first <= e.second ? e : Edge{e.second, e.first};
}

}  // namespace

std::map<std::pair<bool, bool>, bool> nand_table() {
    return {{{false, false}, true},
            {{false, true}, true},
            {{true, false}, true},
            {{true, true}, false}};
}

ArcGateSpec ArcGateSpec::triangle_nand(NodeId a, NodeId b, NodeId c) {
    ArcGateSpec s;
    s.shape = ArcGateShape::triangle;
    s.input_arcs = {Edge{a, b}, Edge{b, c}};
    s.output_arc = {a, c};
    s.table = nand_table();
    return s;
}

ArcGateSpec ArcGateSpec::square_nand(NodeId a, NodeId b, NodeId c, NodeId d) {
    ArcGateSpec s;
    s.shape = ArcGateShape::square;
    s.input_arcs = {Edge{a, c}, Edge{b, d}};
    s.output_arc = {c, d};
    s.table = nand_table();
    return s;
}

void ArcGateSpec::validate() const {
    std::set<Edge> arcs = {normalized(input_arcs[0]), normalized(input_arcs[1]),
                           normalized(output_arc)};
    if (arcs.size() != 3)
        throw std::invalid_argument("arc gate input and output arcs must be distinct");
    if (table.size() != 4)
        throw std::invalid_argument("arc gate table must cover all four input combinations");
    std::set<NodeId> ns;
    for (const Edge& e : arcs) {
        ns.insert(e.first);
        ns.insert(e.second);
    }
    std::size_t expected = shape == ArcGateShape::triangle ? 3 : 4;
    if (ns.size() != expected)
        throw std::invalid_argument("arc gate node count does not match its shape");
}

Machine build_arc_gate_machine(const std::vector<ArcGateSpec>& specs,
                               const std::set<Edge>& static_edges) {
    std::set<Edge> outputs;
    for (const ArcGateSpec& s : specs) {
        s.validate();
        if (!outputs.insert(normalized(s.output_arc)).second)
            throw std::invalid_argument("overlapping gate output arcs");
        if (normalized(s.input_arcs[0]) == normalized(s.output_arc) ||
            normalized(s.input_arcs[1]) == normalized(s.output_arc))
            throw std::invalid_argument("gate output arc is also its own input");
    }

    std::set<NodeId> gate_nodes;
    for (const ArcGateSpec& s : specs) {
        for (const Edge& e : {s.input_arcs[0], s.input_arcs[1], s.output_arc}) {
            gate_nodes.insert(e.first);
            gate_nodes.insert(e.second);
        }
    }
    for (const Edge& e : static_edges) {
        gate_nodes.insert(e.first);
        gate_nodes.insert(e.second);
    }

    Machine m;
    m.mode = MachineMode::arc_based;
    m.rule_name = "arc_gates";
    m.graph_type.require_symmetric_edges = true;
    m.graph_type.edge_label_set = std::set<Label>{};

    m.update_rule = [specs](const Graph& g) {
        Graph next = g;
        for (const ArcGateSpec& s : specs) {
            bool in0 = g.has_undirected_edge(s.input_arcs[0].first, s.input_arcs[0].second);
            bool in1 = g.has_undirected_edge(s.input_arcs[1].first, s.input_arcs[1].second);
            bool out = s.table.at({in0, in1});
            if (out)
                next.add_undirected_edge(s.output_arc.first, s.output_arc.second);
            else
                next.remove_undirected_edge(s.output_arc.first, s.output_arc.second);
        }
        return next;
    };

    m.input_fn = [specs, static_edges, gate_nodes](std::int64_t mask) {
        if (mask < 0 || mask >= (std::int64_t{1} << (2 * specs.size())))
            throw DomainError("input mask out of range for gate count");
        Graph g;
        for (NodeId n : gate_nodes) g.add_node(n);
        for (const Edge& e : static_edges) g.add_undirected_edge(e.first, e.second);
        std::size_t bit = 0;
        for (const ArcGateSpec& s : specs) {
            for (const Edge& in : s.input_arcs) {
                if ((mask >> bit) & 1) g.add_undirected_edge(in.first, in.second);
                ++bit;
            }
        }
        return g;
    };

    // Arc-gate machines run forever; they are observed through step().
    m.output_fn = [](const Graph&) -> Output { return NOT_HALTED_YET; };
    return m;
}

}  // namespace graphcomp
