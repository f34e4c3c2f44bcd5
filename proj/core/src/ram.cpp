#include "graphcomp/ram.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace graphcomp {

namespace {

std::string addr_port(int i) { return "address" + std::to_string(i); }

/// Leaf prefix for an address, most significant bit first.
std::string addr_prefix(int addr, int bits) {
    std::string s;
    for (int i = bits - 1; i >= 0; --i) s += ((addr >> i) & 1) ? '1' : '0';
    return s;
}

std::map<std::string, int> make_inputs(const RamHandle& h, int addr, int data, int aw, int ar) {
    std::map<std::string, int> in;
    for (int i = 0; i < h.address_bits; ++i)
        in[addr_port(i)] = (addr >> (h.address_bits - 1 - i)) & 1;
    in["data_in"] = data;
    in["active_write"] = aw;
    in["active_read"] = ar;
    return in;
}

void run_ticks(RamHandle& h, const std::map<std::string, int>& in, int n) {
    for (int i = 0; i < n; ++i) tick_inplace(h.circuit, in);
}

}  // namespace

RamHandle build_ram(int address_bits) {
    if (address_bits < 1 || address_bits > 6)
        throw std::invalid_argument("build_ram: address_bits must be in [1, 6]");
    RamHandle h;
    h.address_bits = address_bits;
    h.settle_steps = 2 * (address_bits + 2);
    Circuit& c = h.circuit;

    c.add_gate("active_write", GatePrim::INPUT);
    c.add_gate("active_read", GatePrim::INPUT);
    c.add_gate("data_in", GatePrim::INPUT);
    for (int i = 0; i < address_bits; ++i) {
        c.add_gate(addr_port(i), GatePrim::INPUT);
        // Stable select line for the "left" (bit = 0) branch at level i.
        c.add_gate("nsel" + std::to_string(i), GatePrim::NOT);
        c.connect(addr_port(i), "nsel" + std::to_string(i), 0);
    }

    // Root write activity is cut off as soon as any child bank activates
    // (NOR feedback over the bank-active lines).
    c.add_gate("woractive", GatePrim::OR);
    c.add_gate("wnorfb", GatePrim::NOT);
    c.connect("woractive", "wnorfb", 0);
    c.add_gate("aw_root", GatePrim::AND);
    c.connect("active_write", "aw_root", 0);
    c.connect("wnorfb", "aw_root", 1);

    // Routing tree: each bank forwards its activity bit to the child whose
    // constant matches the address bit for that level. Address and data are
    // held stable by the protocol drivers, so only the activity pulses are
    // routed.
    std::vector<std::string> level{""};
    for (int d = 0; d < address_bits; ++d) {
        std::vector<std::string> next_level;
        for (const std::string& s : level) {
            std::string aw_parent = s.empty() ? "aw_root" : "aw_" + s;
            std::string ar_parent = s.empty() ? "active_read" : "ar_" + s;
            for (int b = 0; b < 2; ++b) {
                std::string child = s + (b ? '1' : '0');
                std::string sel = b ? addr_port(d) : "nsel" + std::to_string(d);
                c.add_gate("aw_" + child, GatePrim::AND);
                c.connect(aw_parent, "aw_" + child, 0);
                c.connect(sel, "aw_" + child, 1);
                c.add_gate("ar_" + child, GatePrim::AND);
                c.connect(ar_parent, "ar_" + child, 0);
                c.connect(sel, "ar_" + child, 1);
                next_level.push_back(child);
            }
        }
        if (d == 0)
            for (const std::string& child : next_level)
                c.connect("aw_" + child, "woractive", 0);
        level = std::move(next_level);
    }

    // Leaves: a frontend cell each, plus the read-collection network.
    c.add_gate("or_data", GatePrim::OR);
    c.add_gate("ra1", GatePrim::OR);
    for (const std::string& s : level) {
        add_frontend_cell(c, "cell_" + s + "_", "aw_" + s, "data_in");
        c.add_gate("rd_" + s, GatePrim::AND);
        c.connect("cell_" + s + "_read", "rd_" + s, 0);
        c.connect("ar_" + s, "rd_" + s, 1);
        c.connect("rd_" + s, "or_data", 0);
        c.connect("ar_" + s, "ra1", 0);
    }
    c.add_gate("data_out", GatePrim::OUTPUT);
    c.connect("or_data", "data_out", 0);
    // One extra delay stage so result_arrived rises on the same tick the
    // routed bit reaches data_out.
    c.add_gate("ra2", GatePrim::OR);
    c.connect("ra1", "ra2", 0);
    c.add_gate("result_arrived", GatePrim::OUTPUT);
    c.connect("ra2", "result_arrived", 0);

    h.ports["data_in"] = "data_in";
    h.ports["data_out"] = "data_out";
    h.ports["active_write"] = "active_write";
    h.ports["active_read"] = "active_read";
    h.ports["result_arrived"] = "result_arrived";
    for (int i = 0; i < address_bits; ++i) h.ports[addr_port(i)] = addr_port(i);
    return h;
}

void ram_write(RamHandle& h, int addr, int bit) {
    if (addr < 0 || addr >= (1 << h.address_bits))
        throw std::invalid_argument("ram_write: address out of range");
    // Let the select lines settle on the new address.
    run_ticks(h, make_inputs(h, addr, bit, 0, 0), 2);
    // One-tick activity pulse; the tree and cell frontend do the rest.
    run_ticks(h, make_inputs(h, addr, bit, 1, 0), 1);
    run_ticks(h, make_inputs(h, addr, bit, 0, 0),
              h.settle_steps + kFrontendSettleTicks + 4);
    run_ticks(h, make_inputs(h, 0, 0, 0, 0), 2);
}

int ram_read(RamHandle& h, int addr) {
    if (addr < 0 || addr >= (1 << h.address_bits))
        throw std::invalid_argument("ram_read: address out of range");
    run_ticks(h, make_inputs(h, addr, 0, 0, 0), 2);
    const int timeout = 4 * h.settle_steps + kFrontendSettleTicks;
    std::map<std::string, int> in = make_inputs(h, addr, 0, 0, 1);
    int bit = -1;
    for (int t = 0; t < timeout; ++t) {
        tick_inplace(h.circuit, in);
        if (h.circuit.state.at(h.ports.at("result_arrived"))) {
            bit = h.circuit.state.at(h.ports.at("data_out"));
            break;
        }
    }
    if (bit < 0) throw std::runtime_error("ram_read: result_arrived never rose (protocol timeout)");
    // Drop the read request and let the collection network drain.
    run_ticks(h, make_inputs(h, 0, 0, 0, 0), h.settle_steps);
    return bit;
}

}  // namespace graphcomp
