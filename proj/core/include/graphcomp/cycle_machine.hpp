#ifndef GRAPHCOMP_CYCLE_MACHINE_HPP
#define GRAPHCOMP_CYCLE_MACHINE_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "graphcomp/graph.hpp"

namespace graphcomp {

/// All simple cycles of length 3..max_len in an undirected graph, in
/// canonical form: smallest node first, second node smaller than the last
/// (fixes rotation and reflection), each cycle reported once.
std::set<std::vector<NodeId>> enumerate_cycles(const Graph& g, std::size_t max_len);

bool in_cycle(const Graph& g, NodeId n);
bool shares_cycle(const Graph& g, NodeId a, NodeId b);

/// Frequencies are small integer identifiers; a node's concurrent
/// frequencies form a sorted multiset (vector).
using FreqMultiset = std::vector<int>;

/// Oscillation state of a set of registered cycles under per-node and
/// per-cycle frequency constraints.
struct CycleMachine {
    Graph graph;  // undirected
    std::map<std::string, std::vector<NodeId>> registered_cycles;  // node sequence
    /// Allowed concurrent frequency multisets per node; an absent node is
    /// unconstrained.
    std::map<NodeId, std::set<FreqMultiset>> node_freqs;
    /// Allowed frequencies per cycle, in activation preference order.
    std::map<std::string, std::vector<int>> cycle_freqs;
    /// Cycles with a jump-start oscillator: they keep trying to activate.
    std::set<std::string> intrinsic;
    /// nullopt = inactive; value = oscillation frequency.
    std::map<std::string, std::optional<int>> active;

    /// True when every consecutive (and wraparound) edge of the cycle is
    /// present in both directions.
    bool cycle_intact(const std::string& name) const;

    /// Concurrent frequency multiset at a node, from currently active cycles.
    FreqMultiset node_multiset(NodeId n) const;

    /// Violation messages for the active-state invariants.
    std::vector<std::string> check_invariants() const;
};

/// One synchronous step: broken cycles deactivate; intrinsic inactive
/// intact cycles (in name order) activate at the first allowed frequency
/// that keeps every node's multiset allowed.
CycleMachine step_cycle_machine(const CycleMachine& m);

struct CycleGateSpec {
    std::string input_a;
    std::string input_b;
    std::string output;
    Edge break_a;  // removing this edge sets input a to FALSE
    Edge break_b;
};

/// The Appendix-style cycle NAND: three cycles A, B, C sharing node X;
/// A runs at w1 only, B at w2 only, C at either; X allows any sub-multiset
/// of {w1, w2} without repeats.
std::pair<CycleMachine, CycleGateSpec> build_cycle_nand();

/// Copy of m with the break edges of FALSE inputs removed.
CycleMachine apply_cycle_inputs(const CycleMachine& m, const CycleGateSpec& spec,
                                bool a_intact, bool b_intact);

}  // namespace graphcomp

#endif
