#ifndef GRAPHCOMP_MODEL2_HPP
#define GRAPHCOMP_MODEL2_HPP

#include "graphcomp/sync_network.hpp"

namespace graphcomp {

/// Activation model: incoming spikes add their synapse weight to the
/// neuron's activation; unstored activation clears every step; a neuron
/// fires when activation reaches its threshold, unless it fired within the
/// last H steps (overridden when activation reaches the override level);
/// intrinsic neurons accumulate 1/T per step. Firing resets activation.
/// Signal propagation takes no time; the wiring must be feedforward.
SyncState simulate_model2(const SyncNetwork& net);

}  // namespace graphcomp

#endif
