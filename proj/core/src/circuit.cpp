#include "graphcomp/circuit.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace graphcomp {

std::string gate_prim_name(GatePrim p) {
    switch (p) {
        case GatePrim::AND: return "AND";
        case GatePrim::OR: return "OR";
        case GatePrim::NOT: return "NOT";
        case GatePrim::NAND: return "NAND";
        case GatePrim::CONST0: return "CONST0";
        case GatePrim::CONST1: return "CONST1";
        case GatePrim::INPUT: return "INPUT";
        case GatePrim::OUTPUT: return "OUTPUT";
    }
    return "?";
}

GatePrim gate_prim_from_name(const std::string& name) {
    static const std::map<std::string, GatePrim> prims = {
        {"AND", GatePrim::AND},     {"OR", GatePrim::OR},
        {"NOT", GatePrim::NOT},     {"NAND", GatePrim::NAND},
        {"CONST0", GatePrim::CONST0}, {"CONST1", GatePrim::CONST1},
        {"INPUT", GatePrim::INPUT}, {"OUTPUT", GatePrim::OUTPUT},
    };
    auto it = prims.find(name);
    if (it == prims.end()) throw std::invalid_argument("unknown gate primitive: " + name);
    return it->second;
}

void Circuit::add_gate(const std::string& id, GatePrim prim) {
    if (gates.count(id)) throw std::invalid_argument("duplicate gate id: " + id);
    gates[id] = prim;
    state[id] = 0;
}

void Circuit::connect(const std::string& from, const std::string& to, int slot) {
    wires.push_back({from, to, slot});
}

std::vector<std::string> Circuit::validate() const {
    std::vector<std::string> violations;
    std::map<std::string, int> fanin;
    for (const Wire& w : wires) {
        if (!gates.count(w.from)) violations.push_back("wire from missing gate " + w.from);
        if (!gates.count(w.to)) violations.push_back("wire into missing gate " + w.to);
        ++fanin[w.to];
    }
    for (const auto& [id, prim] : gates) {
        int n = fanin.count(id) ? fanin.at(id) : 0;
        switch (prim) {
            case GatePrim::AND:
            case GatePrim::OR:
            case GatePrim::NAND:
                if (n < 1) violations.push_back(id + ": needs at least one input");
                break;
            case GatePrim::NOT:
            case GatePrim::OUTPUT:
                if (n != 1) violations.push_back(id + ": needs exactly one input");
                break;
            case GatePrim::CONST0:
            case GatePrim::CONST1:
            case GatePrim::INPUT:
                if (n != 0) violations.push_back(id + ": must have no inputs");
                break;
        }
        if (!state.count(id)) violations.push_back(id + ": missing state");
    }
    return violations;
}

void tick_inplace(Circuit& c, const std::map<std::string, int>& inputs) {
    std::map<std::string, std::vector<int>> in_bits;
    for (const Wire& w : c.wires) in_bits[w.to].push_back(c.state.at(w.from));

    std::map<std::string, int> next;
    for (const auto& [id, prim] : c.gates) {
        const std::vector<int>& bits = in_bits[id];
        int out = 0;
        switch (prim) {
            case GatePrim::AND:
                out = std::all_of(bits.begin(), bits.end(), [](int b) { return b; });
                break;
            case GatePrim::OR:
            case GatePrim::OUTPUT:
                out = std::any_of(bits.begin(), bits.end(), [](int b) { return b; });
                break;
            case GatePrim::NOT:
                out = bits.at(0) ? 0 : 1;
                break;
            case GatePrim::NAND:
                out = std::all_of(bits.begin(), bits.end(), [](int b) { return b; }) ? 0 : 1;
                break;
            case GatePrim::CONST0: out = 0; break;
            case GatePrim::CONST1: out = 1; break;
            case GatePrim::INPUT: {
                auto it = inputs.find(id);
                if (it == inputs.end())
                    throw std::invalid_argument("tick: missing input bit for " + id);
                out = it->second ? 1 : 0;
                break;
            }
        }
        next[id] = out;
    }
    c.state = std::move(next);
}

Circuit tick(const Circuit& c, const std::map<std::string, int>& inputs) {
    Circuit out = c;
    tick_inplace(out, inputs);
    return out;
}

namespace {

/// Single-input OR used as a unit-delay buffer.
void add_buf(Circuit& c, const std::string& id, const std::string& src) {
    c.add_gate(id, GatePrim::OR);
    c.connect(src, id, 0);
}

/// The raw two-gate OR/AND storage loop. Prefix distinguishes instances.
void add_cell_core(Circuit& c, const std::string& p, const std::string& write_src,
                   const std::string& erase_src) {
    c.add_gate(p + "O", GatePrim::OR);
    c.add_gate(p + "A", GatePrim::AND);
    c.add_gate(p + "notE", GatePrim::NOT);
    c.add_gate(p + "read", GatePrim::OUTPUT);
    c.connect(p + "A", p + "O", 0);
    c.connect(write_src, p + "O", 1);
    c.connect(p + "O", p + "A", 0);
    c.connect(p + "notE", p + "A", 1);
    c.connect(erase_src, p + "notE", 0);
    c.connect(p + "A", p + "read", 0);
}

}  // namespace

std::pair<Circuit, PortMap> build_memory_cell() {
    Circuit c;
    c.add_gate("write", GatePrim::INPUT);
    c.add_gate("erase", GatePrim::INPUT);
    add_cell_core(c, "", "write", "erase");
    return {c, PortMap{{"read", "read"}, {"erase", "erase"}, {"write", "write"}}};
}

/// Frontend around a cell core: a write_now pulse at tick t is stretched
/// into a 2-tick erase (filling the 2-gate loop) and a 2-tick commit of the
/// value sampled at t.
void add_frontend_cell(Circuit& c, const std::string& p, const std::string& write_now_src,
                       const std::string& value_src) {
    std::string prev = write_now_src;
    for (int i = 1; i <= 7; ++i) {
        add_buf(c, p + "d" + std::to_string(i), prev);
        prev = p + "d" + std::to_string(i);
    }
    prev = value_src;
    for (int i = 1; i <= 7; ++i) {
        add_buf(c, p + "v" + std::to_string(i), prev);
        prev = p + "v" + std::to_string(i);
    }
    c.add_gate(p + "erase_sig", GatePrim::OR);
    c.connect(p + "d1", p + "erase_sig", 0);
    c.connect(p + "d2", p + "erase_sig", 1);
    // Two ANDs sample the value at matching delays so the commit uses the
    // value as of the write_now pulse.
    c.add_gate(p + "wr_a", GatePrim::AND);
    c.connect(p + "d6", p + "wr_a", 0);
    c.connect(p + "v6", p + "wr_a", 1);
    c.add_gate(p + "wr_b", GatePrim::AND);
    c.connect(p + "d7", p + "wr_b", 0);
    c.connect(p + "v7", p + "wr_b", 1);
    c.add_gate(p + "cellwrite", GatePrim::OR);
    c.connect(p + "wr_a", p + "cellwrite", 0);
    c.connect(p + "wr_b", p + "cellwrite", 1);
    add_cell_core(c, p, p + "cellwrite", p + "erase_sig");
}

std::pair<Circuit, PortMap> build_frontend_cell() {
    Circuit c;
    c.add_gate("write_now", GatePrim::INPUT);
    c.add_gate("value", GatePrim::INPUT);
    add_frontend_cell(c, "", "write_now", "value");
    return {c, PortMap{{"read", "read"}, {"value", "value"}, {"write_now", "write_now"}}};
}

std::pair<Circuit, PortMap> build_clock(int period) {
    if (period < 2) throw std::invalid_argument("build_clock: period must be >= 2");
    Circuit c;
    c.add_gate("one", GatePrim::CONST1);
    c.add_gate("strobe", GatePrim::NOT);  // 1 at tick 1 only (all-zero start)
    c.connect("one", "strobe", 0);
    c.add_gate("b0", GatePrim::OR);
    c.connect("strobe", "b0", 1);
    for (int i = 1; i < period; ++i) add_buf(c, "b" + std::to_string(i), "b" + std::to_string(i - 1));
    c.connect("b" + std::to_string(period - 1), "b0", 0);
    c.add_gate("clock_out", GatePrim::OUTPUT);
    c.connect("b" + std::to_string(period - 1), "clock_out", 0);
    return {c, PortMap{{"clock_out", "clock_out"}}};
}

std::string trace_csv(const std::vector<TraceRow>& rows) {
    std::ostringstream os;
    os << "tick,port,bit\n";
    for (const TraceRow& r : rows) os << r.tick << ',' << r.port << ',' << r.bit << '\n';
    return os.str();
}

}  // namespace graphcomp
