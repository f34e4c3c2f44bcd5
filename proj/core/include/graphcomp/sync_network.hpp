#ifndef GRAPHCOMP_SYNC_NETWORK_HPP
#define GRAPHCOMP_SYNC_NETWORK_HPP

#include <cstdint>
#include <limits>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "graphcomp/spike_train.hpp"

namespace graphcomp {

struct NeuronSpec {
    enum class Kind { relay, threshold, inhibitory, port_input, intrinsic };
    Kind kind = Kind::relay;

    int threshold_count = 1;  // threshold units: required coincident inputs
    int port_delay = 0;       // port_input: shift applied to the port signal
    int period = 10;          // intrinsic / natural cycle time T

    // Activation-model parameters (models 2 and 3).
    bool stores_activation = false;
    int refractory = 0;  // H; 0 disables the relative refractory period
    double override_activation = std::numeric_limits<double>::infinity();
    double fire_threshold = 1.0;

    static NeuronSpec relay() { return {}; }
    static NeuronSpec threshold(int n) {
        NeuronSpec s;
        s.kind = Kind::threshold;
        s.threshold_count = n;
        return s;
    }
    static NeuronSpec inhibitory() {
        NeuronSpec s;
        s.kind = Kind::inhibitory;
        return s;
    }
    static NeuronSpec port_input(int delay) {
        NeuronSpec s;
        s.kind = Kind::port_input;
        s.port_delay = delay;
        return s;
    }
    static NeuronSpec intrinsic(int period) {
        NeuronSpec s;
        s.kind = Kind::intrinsic;
        s.period = period;
        return s;
    }
};

struct Connection {
    std::string from;
    std::string to;
    double weight = 1.0;
};

/// A synchrony network. Connection weights matter to models 2 and 3
/// (negative weight = inhibitory synapse); model 1 derives inhibition from
/// the source neuron's kind instead.
struct SyncNetwork {
    std::map<std::string, NeuronSpec> neurons;
    std::vector<Connection> connections;
    std::map<std::string, SpikeTrain> external_inputs;
    int window = 200;

    /// Port neurons fed by an internal neuron instead of an external
    /// train (set up by gate composition). The port delay applies to the
    /// feeding neuron's output.
    std::map<std::string, std::string> port_feeds;

    void validate() const;
};

/// Checks the no-accidental-synchronization assumptions on a set of input
/// trains: no silent input, distinct proper subset unions differ unless
/// forced by declared synchronizations, and (when require_private is set,
/// the inhibitory-gate regime) every train owns a spike time private to it.
std::vector<std::string> validate_distinctness(
    const std::map<std::string, SpikeTrain>& inputs,
    const std::set<std::pair<std::string, std::string>>& declared_syncs = {},
    bool require_private = true);

/// Deterministically generates n_ports pairwise disjoint nonempty trains
/// (even spike times) that pass validate_distinctness under the strict
/// regime. Throws std::invalid_argument when the window is too small.
std::vector<SpikeTrain> generate_distinct_inputs(std::size_t n_ports, int window,
                                                 std::uint64_t seed);

}  // namespace graphcomp

#endif
