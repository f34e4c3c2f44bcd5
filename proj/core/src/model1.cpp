#include "graphcomp/model1.hpp"

#include <algorithm>

namespace graphcomp {

SyncState simulate_model1(const SyncNetwork& net) {
    net.validate();

    // Dependency edges: connections plus composition port feeds.
    std::map<std::string, std::vector<std::string>> deps;
    for (const auto& [id, spec] : net.neurons) deps[id];
    for (const Connection& c : net.connections) deps[c.to].push_back(c.from);
    for (const auto& [port, src] : net.port_feeds) deps[port].push_back(src);

    // Kahn topological order, lexicographic among ready nodes.
    std::map<std::string, std::size_t> pending;
    std::map<std::string, std::vector<std::string>> dependents;
    for (const auto& [id, ds] : deps) {
        pending[id] = ds.size();
        for (const std::string& d : ds) dependents[d].push_back(id);
    }
    std::set<std::string> ready;
    for (const auto& [id, count] : pending)
        if (count == 0) ready.insert(id);
    std::vector<std::string> order;
    while (!ready.empty()) {
        std::string id = *ready.begin();
        ready.erase(ready.begin());
        order.push_back(id);
        for (const std::string& dep : dependents[id])
            if (--pending[dep] == 0) ready.insert(dep);
    }
    if (order.size() != net.neurons.size())
        throw UnsupportedTopology("model 1 requires feedforward wiring");

    // Per-unit odd offsets for threshold units, by sorted id.
    std::map<std::string, int> threshold_offset;
    {
        int j = 0;
        for (const auto& [id, spec] : net.neurons)
            if (spec.kind == NeuronSpec::Kind::threshold) threshold_offset[id] = 2 * j++ + 1;
    }

    SyncState state;
    for (const std::string& id : order) {
        const NeuronSpec& spec = net.neurons.at(id);
        std::vector<SpikeTrain> excit, inhib;
        for (const Connection& c : net.connections) {
            if (c.to != id) continue;
            const SpikeTrain& src = state.trains.at(c.from);
            if (net.neurons.at(c.from).kind == NeuronSpec::Kind::inhibitory)
                inhib.push_back(src);
            else
                excit.push_back(src);
        }

        SpikeTrain out;
        switch (spec.kind) {
            case NeuronSpec::Kind::port_input: {
                SpikeTrain signal;
                if (auto it = net.external_inputs.find(id); it != net.external_inputs.end())
                    signal = it->second;
                else if (auto ft = net.port_feeds.find(id); ft != net.port_feeds.end())
                    signal = state.trains.at(ft->second);
                signal = signal.shifted(spec.port_delay, net.window);
                excit.push_back(signal);
                out = total_input(excit, inhib);
                break;
            }
            case NeuronSpec::Kind::relay:
            case NeuronSpec::Kind::inhibitory:
                out = total_input(excit, inhib);
                break;
            case NeuronSpec::Kind::threshold: {
                // A threshold unit detects synchronized inputs: it fires the
                // common train of any group of >= n presynaptic neurons with
                // exactly equal outputs. Reading this per-timestep instead
                // would make the unit trip on signals that merely share some
                // spikes, which breaks gate composition.
                std::map<SpikeTrain, int> groups;
                for (const SpikeTrain& t : excit) ++groups[t];
                SpikeTrain detected;
                for (const auto& [train, count] : groups)
                    if (count >= spec.threshold_count) detected = train_union(detected, train);
                out = detected.shifted(threshold_offset.at(id), net.window);
                break;
            }
            case NeuronSpec::Kind::intrinsic: {
                for (int t = spec.period - 1; t < net.window; t += spec.period)
                    out.times.insert(t);
                break;
            }
        }
        // Everything stays inside the window.
        out = out.shifted(0, net.window);
        state.trains[id] = out;
    }
    return state;
}

}  // namespace graphcomp
