#include "graphcomp/machine.hpp"

namespace graphcomp {

Graph step(const Machine& m, const Graph& g) {
    Graph next = m.update_rule(g);
    if (m.mode == MachineMode::node_based) {
        if (next.edges != g.edges || next.edge_labels != g.edge_labels)
            throw ModeViolation("node_based update rule changed edges or edge labels");
        if (next.nodes != g.nodes)
            throw ModeViolation("node_based update rule added or deleted nodes");
    } else if (m.mode == MachineMode::arc_based) {
        if (next.nodes != g.nodes || next.node_labels != g.node_labels)
            throw ModeViolation("arc_based update rule changed nodes or node labels");
    }
    return next;
}

RunResult run(const Machine& m, std::int64_t input, std::size_t max_steps,
              bool record_trajectory) {
    Graph g = m.input_fn(input);
    RunResult result;
    for (std::size_t t = 0;; ++t) {
        if (record_trajectory) result.trajectory_hashes.push_back(graph_digest(g));
        if (Output out = m.output_fn(g)) {
            result.outcome = Halted{*out, t};
            return result;
        }
        if (t == max_steps) {
            result.outcome = CapExceeded{max_steps};
            return result;
        }
        g = step(m, g);
    }
}

}  // namespace graphcomp
