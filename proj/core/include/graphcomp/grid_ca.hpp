#ifndef GRAPHCOMP_GRID_CA_HPP
#define GRAPHCOMP_GRID_CA_HPP

#include "graphcomp/machine.hpp"

namespace graphcomp {

enum class Neighborhood { von_neumann_4, moore_8 };

/// New label from the cell's own label and the labels of its neighbors
/// (passed sorted, so the rule sees a multiset).
using LocalRule = std::function<Label(Label, const std::vector<Label>&)>;

/// Conway's Game of Life (B3/S23); expects a moore_8 neighborhood.
Label life_rule(Label self, const std::vector<Label>& neighbors);

/// Node-based machine on a grid graph; the update rule applies local_rule
/// simultaneously to every node. input_fn(seed) produces a random 0/1
/// grid from the seed; initial states can also be built with grid_graph.
Machine build_grid_ca_machine(std::size_t width, std::size_t height,
                              Neighborhood neighborhood, LocalRule local_rule,
                              std::string rule_name = "custom");

/// Grid graph with the given row-major cell states.
Graph grid_graph(std::size_t width, std::size_t height, Neighborhood neighborhood,
                 const std::vector<Label>& states);

/// Row-major cell states of a grid graph.
std::vector<Label> grid_states(const Graph& g, std::size_t width, std::size_t height);

}  // namespace graphcomp

#endif
