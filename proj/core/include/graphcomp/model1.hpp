#ifndef GRAPHCOMP_MODEL1_HPP
#define GRAPHCOMP_MODEL1_HPP

#include <stdexcept>

#include "graphcomp/sync_network.hpp"

namespace graphcomp {

struct UnsupportedTopology : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Exact-synchrony model: neurons emit spikes at the same set of times iff
/// they receive spikes at the same set of times. Feedforward networks only.
///
/// Port neurons shift their port signal (external train or composition
/// feed) by their port delay; relays pass their total input through
/// unchanged; inhibitory outputs are set-subtracted at their targets;
/// threshold units fire at input coincidences and carry a unit-specific
/// odd offset so that no threshold unit ever matches another unit by
/// accident.
SyncState simulate_model1(const SyncNetwork& net);

}  // namespace graphcomp

#endif
