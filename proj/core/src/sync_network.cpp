#include "graphcomp/sync_network.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <stdexcept>

namespace graphcomp {

void SyncNetwork::validate() const {
    for (const Connection& c : connections) {
        if (!neurons.count(c.from) || !neurons.count(c.to))
            throw std::invalid_argument("connection endpoint not in network: " + c.from +
                                        "->" + c.to);
    }
    for (const auto& [id, train] : external_inputs) {
        auto it = neurons.find(id);
        if (it == neurons.end())
            throw std::invalid_argument("external input targets unknown neuron " + id);
        if (it->second.kind != NeuronSpec::Kind::port_input)
            throw std::invalid_argument("external input targets non-port neuron " + id);
    }
    for (const auto& [port, src] : port_feeds) {
        if (!neurons.count(port) || !neurons.count(src))
            throw std::invalid_argument("port feed references unknown neuron");
    }
}

std::vector<std::string> validate_distinctness(
    const std::map<std::string, SpikeTrain>& inputs,
    const std::set<std::pair<std::string, std::string>>& declared_syncs,
    bool require_private) {
    std::vector<std::string> violations;
    std::vector<std::string> ids;
    for (const auto& [id, train] : inputs) {
        ids.push_back(id);
        if (train.empty()) violations.push_back("input " + id + " is silent");
    }
    const std::size_t n = ids.size();
    if (n > 12) throw std::invalid_argument("too many inputs for subset enumeration");

    // Equivalence classes from the declared synchronizations.
    std::vector<std::size_t> parent(n);
    for (std::size_t i = 0; i < n; ++i) parent[i] = i;
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
        return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    for (const auto& [a, b] : declared_syncs) {
        auto ia = std::find(ids.begin(), ids.end(), a);
        auto ib = std::find(ids.begin(), ids.end(), b);
        if (ia == ids.end() || ib == ids.end()) continue;
        parent[find(ia - ids.begin())] = find(ib - ids.begin());
    }
    auto class_set = [&](std::size_t mask) {
        std::set<std::size_t> cs;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (std::size_t{1} << i)) cs.insert(find(i));
        return cs;
    };
    auto union_of = [&](std::size_t mask) {
        SpikeTrain u;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (std::size_t{1} << i)) u = train_union(u, inputs.at(ids[i]));
        return u;
    };

    const std::size_t full = (std::size_t{1} << n) - 1;
    std::map<std::size_t, SpikeTrain> unions;
    for (std::size_t mask = 1; mask < full; ++mask) unions[mask] = union_of(mask);
    for (auto it = unions.begin(); it != unions.end(); ++it) {
        for (auto jt = std::next(it); jt != unions.end(); ++jt) {
            if (it->second != jt->second) continue;
            if (class_set(it->first) == class_set(jt->first)) continue;  // forced
            std::string lhs, rhs;
            for (std::size_t i = 0; i < n; ++i) {
                if (it->first & (std::size_t{1} << i)) lhs += ids[i] + " ";
                if (jt->first & (std::size_t{1} << i)) rhs += ids[i] + " ";
            }
            violations.push_back("subset unions collide: {" + lhs + "} vs {" + rhs + "}");
        }
    }

    if (require_private) {
        for (std::size_t i = 0; i < n; ++i) {
            SpikeTrain others;
            for (std::size_t j = 0; j < n; ++j)
                if (j != i && find(j) != find(i))
                    others = train_union(others, inputs.at(ids[j]));
            if (train_minus(inputs.at(ids[i]), others).empty() && !inputs.at(ids[i]).empty())
                violations.push_back("input " + ids[i] + " has no private spike time");
        }
    }
    return violations;
}

std::vector<SpikeTrain> generate_distinct_inputs(std::size_t n_ports, int window,
                                                 std::uint64_t seed) {
    if (n_ports == 0) return {};
    if (window < static_cast<int>(2 * n_ports))
        throw std::invalid_argument("window too small for distinct input generation");

    // Pairwise disjoint trains of even times make every proper subset
    // union distinct and give each train private spikes.
    const int limit = std::min(window / 2, 100);
    std::vector<int> slots;
    for (int t = 0; t < limit; t += 2) slots.push_back(t);
    std::mt19937_64 rng(seed);
    std::shuffle(slots.begin(), slots.end(), rng);

    const std::size_t per_port = std::max<std::size_t>(1, std::min<std::size_t>(
        3, slots.size() / n_ports));
    if (slots.size() < n_ports) throw std::invalid_argument("window too small");

    std::vector<SpikeTrain> out(n_ports);
    std::size_t next = 0;
    for (std::size_t p = 0; p < n_ports; ++p) {
        std::size_t take = std::min(per_port, slots.size() - next - (n_ports - p - 1));
        take = std::max<std::size_t>(take, 1);
        for (std::size_t k = 0; k < take; ++k) out[p].times.insert(slots[next++]);
    }

    std::map<std::string, SpikeTrain> named;
    for (std::size_t p = 0; p < n_ports; ++p) named["p" + std::to_string(p)] = out[p];
    if (!validate_distinctness(named).empty())
        throw std::logic_error("generated inputs failed distinctness validation");
    return out;
}

}  // namespace graphcomp
