#include "graphcomp/model2.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "graphcomp/model1.hpp"  // UnsupportedTopology

namespace graphcomp {

namespace {
constexpr double kEps = 1e-9;

std::vector<std::string> topological_order(const SyncNetwork& net) {
    std::map<std::string, std::size_t> pending;
    std::map<std::string, std::vector<std::string>> dependents;
    for (const auto& [id, spec] : net.neurons) pending[id] = 0;
    for (const Connection& c : net.connections) {
        ++pending[c.to];
        dependents[c.from].push_back(c.to);
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
        throw UnsupportedTopology("model 2 requires feedforward wiring");
    return order;
}

}  // namespace

SyncState simulate_model2(const SyncNetwork& net) {
    net.validate();
    std::vector<std::string> order = topological_order(net);

    std::map<std::string, std::vector<std::pair<std::string, double>>> incoming;
    for (const Connection& c : net.connections) incoming[c.to].push_back({c.from, c.weight});

    std::map<std::string, double> synaptic, intrinsic_acc;
    std::map<std::string, int> last_fire;
    for (const auto& [id, spec] : net.neurons) {
        synaptic[id] = 0.0;
        intrinsic_acc[id] = 0.0;
        last_fire[id] = std::numeric_limits<int>::min() / 2;
    }

    SyncState state;
    for (const auto& [id, spec] : net.neurons) state.trains[id];
    std::map<std::string, bool> fired_now;

    for (int t = 0; t < net.window; ++t) {
        for (auto& [id, f] : fired_now) f = false;
        for (const std::string& id : order) {
            const NeuronSpec& spec = net.neurons.at(id);

            if (spec.kind == NeuronSpec::Kind::port_input) {
                auto it = net.external_inputs.find(id);
                bool fires = it != net.external_inputs.end() && it->second.contains(t);
                fired_now[id] = fires;
                if (fires) {
                    state.trains[id].times.insert(t);
                    last_fire[id] = t;
                }
                continue;
            }

            if (!spec.stores_activation) synaptic[id] = 0.0;
            if (spec.kind == NeuronSpec::Kind::intrinsic)
                intrinsic_acc[id] += 1.0 / spec.period;
            for (const auto& [from, weight] : incoming[id])
                if (fired_now[from]) synaptic[id] += weight;
            synaptic[id] = std::max(synaptic[id], 0.0);

            double activation = synaptic[id] + intrinsic_acc[id];
            bool over_threshold = activation >= spec.fire_threshold - kEps;
            bool refractory = spec.refractory > 0 && (t - last_fire[id]) <= spec.refractory;
            bool overridden = activation >= spec.override_activation - kEps;
            bool fires = over_threshold && (!refractory || overridden);

            fired_now[id] = fires;
            if (fires) {
                state.trains[id].times.insert(t);
                last_fire[id] = t;
                synaptic[id] = 0.0;
                intrinsic_acc[id] = 0.0;
            }
        }
    }
    return state;
}

}  // namespace graphcomp
