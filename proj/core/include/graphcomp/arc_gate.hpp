#ifndef GRAPHCOMP_ARC_GATE_HPP
#define GRAPHCOMP_ARC_GATE_HPP

#include <array>
#include <map>

#include "graphcomp/machine.hpp"

namespace graphcomp {

enum class ArcGateShape { triangle, square };

/// A gate over potential undirected arcs: two input arcs, one output arc,
/// and a total truth table. Triangle gates share a node between inputs
/// and output; square gates use four distinct nodes.
struct ArcGateSpec {
    ArcGateShape shape = ArcGateShape::triangle;
    std::array<Edge, 2> input_arcs;
    Edge output_arc;
    std::map<std::pair<bool, bool>, bool> table;

    /// Triangle NAND on nodes (a,b,c): inputs AB, BC; output AC.
    static ArcGateSpec triangle_nand(NodeId a, NodeId b, NodeId c);
    /// Square NAND on nodes (a,b,c,d): inputs AC, BD; output CD.
    static ArcGateSpec square_nand(NodeId a, NodeId b, NodeId c, NodeId d);

    void validate() const;
};

/// Arc-based machine whose update rule applies every gate's table to the
/// presence of its input arcs, simultaneously, and leaves all other arcs
/// alone. input_fn(bitmask) sets the gates' input arcs from the low bits
/// of the mask (two bits per gate, in registration order).
Machine build_arc_gate_machine(const std::vector<ArcGateSpec>& specs,
                               const std::set<Edge>& static_edges = {});

/// NAND truth table over arc presence.
std::map<std::pair<bool, bool>, bool> nand_table();

}  // namespace graphcomp

#endif
