#include "graphcomp/model3.hpp"

#include <algorithm>
#include <cmath>

#include "graphcomp/model1.hpp"  // UnsupportedTopology

namespace graphcomp {

namespace {

constexpr double kEps = 1e-9;

SpikeTrain natural_train(int period, int window) {
    SpikeTrain t;
    for (int s = period - 1; s < window; s += period) t.times.insert(s);
    return t;
}

struct Unit {
    std::vector<std::string> members;  // one neuron, or a reciprocal pair
};

}  // namespace

SyncState simulate_model3(const SyncNetwork& net, const Model3Params& params) {
    net.validate();

    // Reciprocal pairs: mutual connections at or above reciprocal_min.
    std::map<std::pair<std::string, std::string>, double> weight;
    for (const Connection& c : net.connections)
        weight[{c.from, c.to}] = c.weight;
    std::map<std::string, std::string> partner;
    for (const Connection& c : net.connections) {
        if (c.weight < params.reciprocal_min) continue;
        auto back = weight.find({c.to, c.from});
        if (back == weight.end() || back->second < params.reciprocal_min) continue;
        partner[c.from] = c.to;
        partner[c.to] = c.from;
    }

    std::map<std::string, std::size_t> unit_of;
    std::vector<Unit> units;
    for (const auto& [id, spec] : net.neurons) {
        if (unit_of.count(id)) continue;
        Unit u;
        u.members.push_back(id);
        if (auto it = partner.find(id); it != partner.end()) u.members.push_back(it->second);
        for (const std::string& m : u.members) unit_of[m] = units.size();
        units.push_back(u);
    }

    // Topological order over units.
    std::vector<std::size_t> pending(units.size(), 0);
    std::vector<std::set<std::size_t>> unit_deps(units.size());
    for (const Connection& c : net.connections) {
        std::size_t from = unit_of[c.from], to = unit_of[c.to];
        if (from != to) unit_deps[to].insert(from);
    }
    for (std::size_t u = 0; u < units.size(); ++u) pending[u] = unit_deps[u].size();
    std::vector<std::size_t> order;
    std::set<std::size_t> ready;
    for (std::size_t u = 0; u < units.size(); ++u)
        if (pending[u] == 0) ready.insert(u);
    while (!ready.empty()) {
        std::size_t u = *ready.begin();
        ready.erase(ready.begin());
        order.push_back(u);
        for (std::size_t v = 0; v < units.size(); ++v)
            if (unit_deps[v].count(u) && --pending[v] == 0) ready.insert(v);
    }
    if (order.size() != units.size())
        throw UnsupportedTopology("model 3 supports cycles only as reciprocal pairs");

    SyncState state;

    // External (non-partner) inputs of a neuron, as (train, weight).
    auto ext_inputs = [&](const std::string& id) {
        std::vector<std::pair<SpikeTrain, double>> ins;
        for (const Connection& c : net.connections) {
            if (c.to != id) continue;
            if (partner.count(id) && partner.at(id) == c.from) continue;
            ins.push_back({state.trains.at(c.from), c.weight});
        }
        return ins;
    };

    // Distinct strong-group trains: presynaptic neurons with identical
    // trains pooled, kept when their summed excitatory weight reaches the
    // enslavement threshold.
    auto strong_groups = [&](const std::string& id) {
        std::map<SpikeTrain, double> groups;
        for (const auto& [train, w] : ext_inputs(id))
            if (w > 0 && !train.empty()) groups[train] += w;
        std::vector<SpikeTrain> strong;
        for (const auto& [train, w] : groups)
            if (w >= params.enslave_threshold - kEps) strong.push_back(train);
        return strong;
    };

    // Signed activation kick arriving at a neuron on a given step.
    auto kick_profile = [&](const std::string& id) {
        std::vector<double> kicks(net.window, 0.0);
        for (const auto& [train, w] : ext_inputs(id))
            for (int t : train.times)
                if (t < net.window) kicks[t] += w;
        return kicks;
    };

    auto integrate_single = [&](const std::string& id) {
        const NeuronSpec& spec = net.neurons.at(id);
        std::vector<double> kicks = kick_profile(id);
        SpikeTrain out;
        double a = 0.0;
        for (int t = 0; t < net.window; ++t) {
            a += 1.0 / spec.period;
            a = std::max(a + kicks[t], 0.0);
            if (a >= 1.0 - kEps) {
                out.times.insert(t);
                a = 0.0;
            }
        }
        return out;
    };

    for (std::size_t ui : order) {
        const Unit& unit = units[ui];
        if (unit.members.size() == 1) {
            const std::string& id = unit.members[0];
            const NeuronSpec& spec = net.neurons.at(id);
            if (spec.kind == NeuronSpec::Kind::port_input) {
                SpikeTrain train;
                if (auto it = net.external_inputs.find(id); it != net.external_inputs.end())
                    train = it->second;
                for (const auto& [src, w] : ext_inputs(id))
                    if (w < 0) train = train_minus(train, src);
                state.trains[id] = train;
                continue;
            }
            std::vector<SpikeTrain> strong = strong_groups(id);
            if (strong.size() == 1)
                state.trains[id] = strong[0];  // enslaved
            else if (strong.size() > 1)
                state.trains[id] = natural_train(spec.period, net.window);  // dissonance
            else
                state.trains[id] = integrate_single(id);
            continue;
        }

        // Reciprocal pair.
        const std::string& x = unit.members[0];
        const std::string& y = unit.members[1];
        std::vector<SpikeTrain> sx = strong_groups(x), sy = strong_groups(y);
        auto enslaved_train = [&](const std::vector<SpikeTrain>& s, const std::string& id) {
            return s.size() == 1 ? s[0]
                                 : natural_train(net.neurons.at(id).period, net.window);
        };
        if (!sx.empty() && !sy.empty()) {
            state.trains[x] = enslaved_train(sx, x);
            state.trains[y] = enslaved_train(sy, y);
            continue;
        }
        if (!sx.empty() || !sy.empty()) {
            const std::string& leader = sx.empty() ? y : x;
            const std::string& follower = sx.empty() ? x : y;
            SpikeTrain lead = enslaved_train(sx.empty() ? sy : sx, leader);
            state.trains[leader] = lead;
            state.trains[follower] = lead;  // dragged along by the strong coupling
            continue;
        }

        // Neither member is enslaved: fire jointly until a simultaneous
        // opposite kick exceeds the split threshold, separately afterwards.
        std::vector<double> kx = kick_profile(x), ky = kick_profile(y);
        const NeuronSpec& spec_x = net.neurons.at(x);
        const NeuronSpec& spec_y = net.neurons.at(y);
        SpikeTrain out_x, out_y;
        double ax = 0.0, ay = 0.0;
        bool split = false;
        for (int t = 0; t < net.window; ++t) {
            if (!split && std::abs(kx[t] - ky[t]) >= params.split_threshold - kEps)
                split = true;
            ax = std::max(ax + 1.0 / spec_x.period + kx[t], 0.0);
            ay = std::max(ay + 1.0 / spec_y.period + ky[t], 0.0);
            if (!split) {
                if (ax >= 1.0 - kEps || ay >= 1.0 - kEps) {
                    out_x.times.insert(t);
                    out_y.times.insert(t);
                    ax = ay = 0.0;
                }
            } else {
                if (ax >= 1.0 - kEps) {
                    out_x.times.insert(t);
                    ax = 0.0;
                }
                if (ay >= 1.0 - kEps) {
                    out_y.times.insert(t);
                    ay = 0.0;
                }
            }
        }
        state.trains[x] = out_x;
        state.trains[y] = out_y;
    }
    return state;
}

}  // namespace graphcomp
