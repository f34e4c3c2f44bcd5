#ifndef GRAPHCOMP_CIRCUIT_HPP
#define GRAPHCOMP_CIRCUIT_HPP

#include <map>
#include <string>
#include <vector>

namespace graphcomp {

/// Unit-delay boolean gate primitives. OUTPUT is an identity buffer used
/// to mark externally observable lines; INPUT gates take external bits.
enum class GatePrim { AND, OR, NOT, NAND, CONST0, CONST1, INPUT, OUTPUT };

std::string gate_prim_name(GatePrim p);
GatePrim gate_prim_from_name(const std::string& name);

struct Wire {
    std::string from;
    std::string to;
    int slot = 0;
};

/// Synchronous unit-delay circuit: every gate's output at tick T is
/// computed from its sources' outputs at T-1 (two-phase update). All gates
/// start at 0.
struct Circuit {
    std::map<std::string, GatePrim> gates;
    std::vector<Wire> wires;
    std::map<std::string, int> state;  // current output bit per gate

    void add_gate(const std::string& id, GatePrim prim);
    void connect(const std::string& from, const std::string& to, int slot);

    /// Arity violations, dangling wires, inputs with incoming wires.
    std::vector<std::string> validate() const;
};

/// Advances one tick. `inputs` must provide a bit for every INPUT gate.
Circuit tick(const Circuit& c, const std::map<std::string, int>& inputs);
void tick_inplace(Circuit& c, const std::map<std::string, int>& inputs);

/// Named external ports -> gate ids.
using PortMap = std::map<std::string, std::string>;

/// OR-loop storage cell with ports read / erase / write. The two-gate loop
/// means erase and write pulses must be held for 2 ticks to fill it; the
/// frontend below takes care of that.
std::pair<Circuit, PortMap> build_memory_cell();

/// Memory cell plus protocol frontend: pulse write_now for one tick while
/// value holds the bit; the frontend erases and then commits the sampled
/// value. Ports: read, value, write_now. Settles within
/// kFrontendSettleTicks.
std::pair<Circuit, PortMap> build_frontend_cell();
inline constexpr int kFrontendSettleTicks = 12;

/// Adds a frontend cell in-place under gate-id prefix `p`, driven by
/// existing gates instead of fresh INPUT ports. Exposes p + "read".
void add_frontend_cell(Circuit& c, const std::string& p, const std::string& write_now_src,
                       const std::string& value_src);

/// Ring of `period` unit-delay stages carrying a single circulating 1,
/// seeded by a first-tick strobe. Port: clock_out, which pulses exactly
/// once per `period` ticks.
std::pair<Circuit, PortMap> build_clock(int period);

/// One trace row per (tick, port).
struct TraceRow {
    int tick;
    std::string port;
    int bit;
};

std::string trace_csv(const std::vector<TraceRow>& rows);

}  // namespace graphcomp

#endif
