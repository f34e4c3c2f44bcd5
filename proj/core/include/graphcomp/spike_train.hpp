#ifndef GRAPHCOMP_SPIKE_TRAIN_HPP
#define GRAPHCOMP_SPIKE_TRAIN_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

namespace graphcomp {

/// Finite set of integer spike times inside a window.
struct SpikeTrain {
    std::set<int> times;

    SpikeTrain() = default;
    SpikeTrain(std::initializer_list<int> ts) : times(ts) {}
    explicit SpikeTrain(std::set<int> ts) : times(std::move(ts)) {}

    bool empty() const { return times.empty(); }
    std::size_t size() const { return times.size(); }
    bool contains(int t) const { return times.count(t) > 0; }

    /// Translate all times by delta, dropping anything outside [0, window).
    SpikeTrain shifted(int delta, int window) const;

    bool operator==(const SpikeTrain&) const = default;
    auto operator<=>(const SpikeTrain&) const = default;
};

SpikeTrain train_union(const SpikeTrain& a, const SpikeTrain& b);
SpikeTrain train_intersection(const SpikeTrain& a, const SpikeTrain& b);
SpikeTrain train_minus(const SpikeTrain& a, const SpikeTrain& b);

/// Union of excitatory trains minus union of inhibitory trains.
SpikeTrain total_input(const std::vector<SpikeTrain>& excitatory,
                       const std::vector<SpikeTrain>& inhibitory = {});

/// Exact synchrony: identical spike-time sets (two silent trains count).
bool exactly_synchronized(const SpikeTrain& a, const SpikeTrain& b);

/// Partial spike-synchronization: one train contains the other.
bool partially_synchronized(const SpikeTrain& a, const SpikeTrain& b);

/// |A n B| / |A u B|; 1 when both trains are empty.
double correlation(const SpikeTrain& a, const SpikeTrain& b);

/// Neuron outputs over a window, keyed by id.
struct SyncState {
    std::map<std::string, SpikeTrain> trains;
};

/// Maximal blocks of neurons with pairwise equal trains, each block sorted,
/// blocks ordered by their first member.
std::vector<std::vector<std::string>> sync_partition(const SyncState& s);

/// Mixed graph over neuron ids: directed arc a->b when b's train is a
/// strict subset of a's, undirected arc when the trains are equal.
struct PartialSyncGraph {
    std::set<std::pair<std::string, std::string>> directed;    // superset -> subset
    std::set<std::pair<std::string, std::string>> undirected;  // stored with first < second
};

PartialSyncGraph partial_sync_graph(const SyncState& s);

}  // namespace graphcomp

#endif
