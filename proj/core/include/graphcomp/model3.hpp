#ifndef GRAPHCOMP_MODEL3_HPP
#define GRAPHCOMP_MODEL3_HPP

#include "graphcomp/sync_network.hpp"

namespace graphcomp {

/// Concrete parameterization of the enslavement model. The underlying
/// picture is informal; every constant here is a configuration choice.
struct Model3Params {
    /// Summed synchronous weight at which a presynaptic group captures
    /// the target's firing pattern outright.
    double enslave_threshold = 1.0;
    /// Mutual connections at or above this weight form a reciprocal pair.
    double reciprocal_min = 0.5;
    /// A single-step activation kick of this size between the two members
    /// of a reciprocal pair breaks their synchrony for the rest of the
    /// window; smaller kicks are reabsorbed by the pair.
    double split_threshold = 0.7;
};

/// Enslavement model: neurons fire on their natural cycle absent input; a
/// synchronous presynaptic group above the enslavement threshold captures
/// the firing pattern; conflicting strong groups cause dissonance (the
/// neuron falls back to its natural cycle); reciprocal pairs converge to a
/// common phase unless simultaneously kicked apart; inhibitory spikes
/// subtract activation and delay the next natural fire.
SyncState simulate_model3(const SyncNetwork& net, const Model3Params& params = {});

}  // namespace graphcomp

#endif
