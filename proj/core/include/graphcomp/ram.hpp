#ifndef GRAPHCOMP_RAM_HPP
#define GRAPHCOMP_RAM_HPP

#include "graphcomp/circuit.hpp"

namespace graphcomp {

/// Tree-structured RAM built from frontend memory cells.
///
/// Ports: address0..address{n-1} (address0 is the most significant bit),
/// data_in, active_write, active_read, data_out, result_arrived.
///
/// Protocol (implemented by ram_write / ram_read): hold address and
/// data_in stable for the whole transaction; pulse active_write for one
/// tick to write, or hold active_read until result_arrived rises to read.
struct RamHandle {
    Circuit circuit;
    PortMap ports;
    int address_bits = 0;
    int settle_steps = 0;  // 2 * (address_bits + 2)
};

/// Binary routing tree with 2^address_bits leaf cells. Requires
/// 1 <= address_bits <= 6.
RamHandle build_ram(int address_bits);

/// Drives the write protocol for one location and lets the tree settle.
void ram_write(RamHandle& h, int addr, int bit);

/// Drives the read protocol and returns the stored bit. Throws
/// std::runtime_error if result_arrived does not rise within
/// 4 * settle_steps + frontend slack ticks.
int ram_read(RamHandle& h, int addr);

}  // namespace graphcomp

#endif
