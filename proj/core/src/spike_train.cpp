#include "graphcomp/spike_train.hpp"

#include <algorithm>

namespace graphcomp {

SpikeTrain SpikeTrain::shifted(int delta, int window) const {
    SpikeTrain out;
    for (int t : times) {
        int s = t + delta;
        if (s >= 0 && s < window) out.times.insert(s);
    }
    return out;
}

SpikeTrain train_union(const SpikeTrain& a, const SpikeTrain& b) {
    SpikeTrain out = a;
    out.times.insert(b.times.begin(), b.times.end());
    return out;
}

SpikeTrain train_intersection(const SpikeTrain& a, const SpikeTrain& b) {
    SpikeTrain out;
    std::set_intersection(a.times.begin(), a.times.end(), b.times.begin(), b.times.end(),
                          std::inserter(out.times, out.times.begin()));
    return out;
}

SpikeTrain train_minus(const SpikeTrain& a, const SpikeTrain& b) {
    SpikeTrain out;
    std::set_difference(a.times.begin(), a.times.end(), b.times.begin(), b.times.end(),
                        std::inserter(out.times, out.times.begin()));
    return out;
}

SpikeTrain total_input(const std::vector<SpikeTrain>& excitatory,
                       const std::vector<SpikeTrain>& inhibitory) {
    SpikeTrain excit, inhib;
    for (const SpikeTrain& t : excitatory) excit = train_union(excit, t);
    for (const SpikeTrain& t : inhibitory) inhib = train_union(inhib, t);
    return train_minus(excit, inhib);
}

bool exactly_synchronized(const SpikeTrain& a, const SpikeTrain& b) {
    return a.times == b.times;
}

bool partially_synchronized(const SpikeTrain& a, const SpikeTrain& b) {
    return std::includes(a.times.begin(), a.times.end(), b.times.begin(), b.times.end()) ||
           std::includes(b.times.begin(), b.times.end(), a.times.begin(), a.times.end());
}

double correlation(const SpikeTrain& a, const SpikeTrain& b) {
    if (a.empty() && b.empty()) return 1.0;  // both silent: maximally synchronized
    const auto inter = train_intersection(a, b).size();
    const auto uni = train_union(a, b).size();
    return static_cast<double>(inter) / static_cast<double>(uni);
}

std::vector<std::vector<std::string>> sync_partition(const SyncState& s) {
    std::vector<std::vector<std::string>> blocks;
    std::map<SpikeTrain, std::vector<std::string>> by_train;
    for (const auto& [id, train] : s.trains) by_train[train].push_back(id);
    for (auto& [train, ids] : by_train) {
        std::sort(ids.begin(), ids.end());
        blocks.push_back(ids);
    }
    std::sort(blocks.begin(), blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return blocks;
}

PartialSyncGraph partial_sync_graph(const SyncState& s) {
    PartialSyncGraph g;
    for (const auto& [a, ta] : s.trains) {
        for (const auto& [b, tb] : s.trains) {
            if (a >= b) continue;
            if (ta == tb) {
                g.undirected.insert({a, b});
            } else if (std::includes(ta.times.begin(), ta.times.end(), tb.times.begin(),
                                     tb.times.end())) {
                g.directed.insert({a, b});
            } else if (std::includes(tb.times.begin(), tb.times.end(), ta.times.begin(),
                                     ta.times.end())) {
                g.directed.insert({b, a});
            }
        }
    }
    return g;
}

}  // namespace graphcomp
