#ifndef GRAPHCOMP_MACHINE_HPP
#define GRAPHCOMP_MACHINE_HPP

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "graphcomp/graph.hpp"
#include "graphcomp/graph_type.hpp"

namespace graphcomp {

enum class MachineMode { node_based, arc_based, unrestricted };

/// outputFn result: either a value (halted) or not-halted-yet.
using Output = std::optional<std::int64_t>;
inline constexpr std::nullopt_t NOT_HALTED_YET = std::nullopt;

struct Machine {
    GraphType graph_type;
    std::function<Graph(const Graph&)> update_rule;
    std::function<Graph(std::int64_t)> input_fn;
    std::function<Output(const Graph&)> output_fn;
    MachineMode mode = MachineMode::unrestricted;

    // Registered rule name and parameters, for persistence.
    std::string rule_name;
};

struct Halted {
    std::int64_t value = 0;
    std::size_t steps = 0;
};
struct CapExceeded {
    std::size_t cap = 0;
};

struct RunResult {
    std::variant<Halted, CapExceeded> outcome;
    std::vector<std::string> trajectory_hashes;

    bool halted() const { return std::holds_alternative<Halted>(outcome); }
    const Halted& as_halted() const { return std::get<Halted>(outcome); }
    const CapExceeded& as_cap() const { return std::get<CapExceeded>(outcome); }
};

struct ModeViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// One application of the update rule, with mode enforcement: node_based
/// rules must leave edges and edge labels untouched, arc_based rules must
/// leave nodes and node labels untouched.
Graph step(const Machine& m, const Graph& g);

/// Iterates from input_fn(input) until output_fn halts or max_steps is
/// reached. Checks output_fn before the first update, so a machine can
/// halt in zero steps.
RunResult run(const Machine& m, std::int64_t input, std::size_t max_steps,
              bool record_trajectory = false);

}  // namespace graphcomp

#endif
