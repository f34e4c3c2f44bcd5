#include "graphcomp/json_io.hpp"

#include <cmath>
#include <functional>
#include <map>

#include "graphcomp/arc_gate.hpp"
#include "graphcomp/grid_ca.hpp"
#include "graphcomp/turing.hpp"

namespace graphcomp {

using nlohmann::json;

namespace {

const json& require(const json& j, const char* field) {
    if (!j.is_object()) throw JsonError(std::string("expected object with field '") + field + "'");
    auto it = j.find(field);
    if (it == j.end()) throw JsonError(std::string("missing field '") + field + "'");
    return *it;
}

std::int64_t require_int(const json& j, const char* field) {
    const json& v = require(j, field);
    if (!v.is_number_integer()) throw JsonError(std::string("field '") + field + "' must be an integer");
    return v.get<std::int64_t>();
}

}  // namespace

json graph_to_json(const Graph& g) {
    json j;
    j["nodes"] = json::array();
    for (NodeId n : g.nodes) j["nodes"].push_back(n);
    j["edges"] = json::array();
    for (const Edge& e : g.edges) j["edges"].push_back({e.first, e.second});
    json nl = json::object();
    for (const auto& [n, l] : g.node_labels) nl[std::to_string(n)] = l;
    j["node_labels"] = nl;
    json el = json::array();
    for (const auto& [e, l] : g.edge_labels) el.push_back({e.first, e.second, l});
    j["edge_labels"] = el;
    return j;
}

Graph graph_from_json(const json& j) {
    Graph g;
    const json& nodes = require(j, "nodes");
    if (!nodes.is_array()) throw JsonError("field 'nodes' must be an array");
    for (const json& n : nodes) {
        if (!n.is_number_integer()) throw JsonError("field 'nodes' must hold integers");
        g.add_node(n.get<NodeId>());
    }
    const json& edges = require(j, "edges");
    if (!edges.is_array()) throw JsonError("field 'edges' must be an array");
    for (const json& e : edges) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
            throw JsonError("field 'edges' entries must be [from, to] integer pairs");
        g.add_edge(e[0].get<NodeId>(), e[1].get<NodeId>());
    }
    if (j.contains("node_labels")) {
        const json& nl = j.at("node_labels");
        if (!nl.is_object()) throw JsonError("field 'node_labels' must be an object");
        for (auto it = nl.begin(); it != nl.end(); ++it) {
            NodeId n;
            try {
                n = std::stoll(it.key());
            } catch (const std::exception&) {
                throw JsonError("field 'node_labels' keys must be integer node ids");
            }
            if (!it.value().is_number_integer())
                throw JsonError("field 'node_labels' values must be integers");
            if (!g.nodes.count(n)) throw JsonError("field 'node_labels' references missing node");
            g.node_labels[n] = it.value().get<Label>();
        }
    }
    if (j.contains("edge_labels")) {
        const json& el = j.at("edge_labels");
        if (!el.is_array()) throw JsonError("field 'edge_labels' must be an array");
        for (const json& e : el) {
            if (!e.is_array() || e.size() != 3)
                throw JsonError("field 'edge_labels' entries must be [from, to, label]");
            Edge edge{e[0].get<NodeId>(), e[1].get<NodeId>()};
            if (!g.edges.count(edge)) throw JsonError("field 'edge_labels' references missing edge");
            g.edge_labels[edge] = e[2].get<Label>();
        }
    }
    return g;
}

json machine_doc_to_json(const MachineDoc& doc) {
    json j = graph_to_json(doc.graph);
    j["schema_version"] = kSchemaVersion;
    j["rule"] = doc.rule;
    j["rule_params"] = doc.rule_params;
    j["digest"] = graph_digest(doc.graph);
    return j;
}

MachineDoc machine_doc_from_json(const json& j) {
    MachineDoc doc;
    doc.graph = graph_from_json(j);
    const json& rule = require(j, "rule");
    if (!rule.is_string()) throw JsonError("field 'rule' must be a string");
    doc.rule = rule.get<std::string>();
    if (j.contains("rule_params")) {
        if (!j.at("rule_params").is_object()) throw JsonError("field 'rule_params' must be an object");
        doc.rule_params = j.at("rule_params");
    }
    return doc;
}

namespace {

Machine make_identity_machine(const Graph& g) {
    Machine m;
    m.rule_name = "identity";
    m.graph_type = GraphType::permissive();
    m.update_rule = [](const Graph& in) { return in; };
    m.input_fn = [g](std::int64_t) { return g; };
    // Halts immediately with the sum of node labels: a trivial but
    // persistable machine, handy for zero-step halt checks.
    m.output_fn = [](const Graph& in) -> Output {
        std::int64_t sum = 0;
        for (const auto& [n, l] : in.node_labels) sum += l;
        return sum;
    };
    return m;
}

Machine make_life_machine(const json& params) {
    std::size_t w = static_cast<std::size_t>(require_int(params, "width"));
    std::size_t h = static_cast<std::size_t>(require_int(params, "height"));
    if (w == 0 || h == 0) throw JsonError("life: width and height must be positive");
    return build_grid_ca_machine(w, h, Neighborhood::moore_8, life_rule, "life");
}

Machine make_arc_nand_machine(const json& params, bool square) {
    std::vector<ArcGateSpec> specs;
    if (square)
        specs.push_back(ArcGateSpec::square_nand(
            require_int(params, "a"), require_int(params, "b"),
            require_int(params, "c"), require_int(params, "d")));
    else
        specs.push_back(ArcGateSpec::triangle_nand(
            require_int(params, "a"), require_int(params, "b"), require_int(params, "c")));
    return build_arc_gate_machine(specs);
}

Machine make_turing_machine(const json& params) {
    TuringSpec tm;
    tm.initial_state = static_cast<int>(require_int(params, "initial_state"));
    for (const json& s : require(params, "halt_states")) tm.halt_states.insert(s.get<int>());
    const json& trans = require(params, "transitions");
    if (!trans.is_array()) throw JsonError("turing: field 'transitions' must be an array");
    tm.tape_alphabet.insert(0);
    tm.states.insert(tm.initial_state);
    for (int h : tm.halt_states) tm.states.insert(h);
    for (const json& t : trans) {
        if (!t.is_array() || t.size() != 5)
            throw JsonError("turing: transitions entries must be [state, sym, next, write, move]");
        int state = t[0].get<int>(), sym = t[1].get<int>();
        TmAction a;
        a.next_state = t[2].get<int>();
        a.write_symbol = t[3].get<int>();
        std::string mv = t[4].get<std::string>();
        if (mv != "L" && mv != "R") throw JsonError("turing: move must be 'L' or 'R'");
        a.move = mv == "L" ? Move::L : Move::R;
        tm.states.insert(state);
        tm.states.insert(a.next_state);
        tm.tape_alphabet.insert(sym);
        tm.tape_alphabet.insert(a.write_symbol);
        tm.transition[{state, sym}] = a;
    }
    std::size_t tape = static_cast<std::size_t>(require_int(params, "tape_length"));
    std::vector<int> word;
    if (params.contains("input_word"))
        for (const json& s : params.at("input_word")) word.push_back(s.get<int>());
    tm.validate();
    return build_turing_machine_graph(tm, tape, word);
}

}  // namespace

std::vector<std::string> registered_rules() {
    return {"identity", "life", "arc_nand_triangle", "arc_nand_square", "turing"};
}

Machine instantiate_machine(const MachineDoc& doc) {
    if (doc.rule == "identity") return make_identity_machine(doc.graph);
    if (doc.rule == "life") return make_life_machine(doc.rule_params);
    if (doc.rule == "arc_nand_triangle") return make_arc_nand_machine(doc.rule_params, false);
    if (doc.rule == "arc_nand_square") return make_arc_nand_machine(doc.rule_params, true);
    if (doc.rule == "turing") return make_turing_machine(doc.rule_params);
    throw JsonError("unknown rule '" + doc.rule + "'");
}

json spike_train_to_json(const SpikeTrain& t) {
    json j = json::array();
    for (int time : t.times) j.push_back(time);
    return j;
}

SpikeTrain spike_train_from_json(const json& j) {
    if (!j.is_array()) throw JsonError("spike train must be an array of integers");
    SpikeTrain t;
    for (const json& v : j) {
        if (!v.is_number_integer()) throw JsonError("spike train times must be integers");
        t.times.insert(v.get<int>());
    }
    return t;
}

namespace {

const std::map<std::string, NeuronSpec::Kind>& neuron_kinds() {
    static const std::map<std::string, NeuronSpec::Kind> kinds = {
        {"relay", NeuronSpec::Kind::relay},
        {"threshold", NeuronSpec::Kind::threshold},
        {"inhibitory", NeuronSpec::Kind::inhibitory},
        {"port_input", NeuronSpec::Kind::port_input},
        {"intrinsic", NeuronSpec::Kind::intrinsic},
    };
    return kinds;
}

std::string neuron_kind_name(NeuronSpec::Kind k) {
    for (const auto& [name, kind] : neuron_kinds())
        if (kind == k) return name;
    return "relay";
}

}  // namespace

json sync_network_to_json(const SyncNetwork& net) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["window"] = net.window;
    json neurons = json::object();
    for (const auto& [id, spec] : net.neurons) {
        json n;
        n["kind"] = neuron_kind_name(spec.kind);
        n["threshold_count"] = spec.threshold_count;
        n["port_delay"] = spec.port_delay;
        n["period"] = spec.period;
        n["stores_activation"] = spec.stores_activation;
        n["refractory"] = spec.refractory;
        if (std::isfinite(spec.override_activation))
            n["override_activation"] = spec.override_activation;
        n["fire_threshold"] = spec.fire_threshold;
        neurons[id] = n;
    }
    j["neurons"] = neurons;
    json conns = json::array();
    for (const Connection& c : net.connections) conns.push_back({c.from, c.to, c.weight});
    j["connections"] = conns;
    json ext = json::object();
    for (const auto& [id, t] : net.external_inputs) ext[id] = spike_train_to_json(t);
    j["external_inputs"] = ext;
    json feeds = json::object();
    for (const auto& [port, from] : net.port_feeds) feeds[port] = from;
    j["port_feeds"] = feeds;
    return j;
}

SyncNetwork sync_network_from_json(const json& j) {
    SyncNetwork net;
    net.window = static_cast<int>(require_int(j, "window"));
    const json& neurons = require(j, "neurons");
    if (!neurons.is_object()) throw JsonError("field 'neurons' must be an object");
    for (auto it = neurons.begin(); it != neurons.end(); ++it) {
        const json& n = it.value();
        NeuronSpec spec;
        std::string kind = require(n, "kind").get<std::string>();
        auto kit = neuron_kinds().find(kind);
        if (kit == neuron_kinds().end()) throw JsonError("unknown neuron kind '" + kind + "'");
        spec.kind = kit->second;
        if (n.contains("threshold_count")) spec.threshold_count = n.at("threshold_count").get<int>();
        if (n.contains("port_delay")) spec.port_delay = n.at("port_delay").get<int>();
        if (n.contains("period")) spec.period = n.at("period").get<int>();
        if (n.contains("stores_activation"))
            spec.stores_activation = n.at("stores_activation").get<bool>();
        if (n.contains("refractory")) spec.refractory = n.at("refractory").get<int>();
        if (n.contains("override_activation"))
            spec.override_activation = n.at("override_activation").get<double>();
        if (n.contains("fire_threshold")) spec.fire_threshold = n.at("fire_threshold").get<double>();
        net.neurons[it.key()] = spec;
    }
    const json& conns = require(j, "connections");
    if (!conns.is_array()) throw JsonError("field 'connections' must be an array");
    for (const json& c : conns) {
        if (!c.is_array() || c.size() != 3)
            throw JsonError("field 'connections' entries must be [from, to, weight]");
        net.connections.push_back({c[0].get<std::string>(), c[1].get<std::string>(),
                                   c[2].get<double>()});
    }
    if (j.contains("external_inputs"))
        for (auto it = j.at("external_inputs").begin(); it != j.at("external_inputs").end(); ++it)
            net.external_inputs[it.key()] = spike_train_from_json(it.value());
    if (j.contains("port_feeds"))
        for (auto it = j.at("port_feeds").begin(); it != j.at("port_feeds").end(); ++it)
            net.port_feeds[it.key()] = it.value().get<std::string>();
    net.validate();
    return net;
}

json truth_table_report_to_json(const TruthTableReport& report) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["gate"] = report.gate_name;
    j["pass"] = report.pass;
    j["parameterization_contingent"] = report.parameterization_contingent;
    json rows = json::array();
    for (const TruthTableRow& r : report.rows) {
        json row;
        json ins = json::array(), exp = json::array();
        for (TruthValue v : r.inputs) ins.push_back(truth_value_name(v));
        for (TruthValue v : r.expected) exp.push_back(truth_value_name(v));
        row["inputs"] = ins;
        row["expected"] = exp;
        row["trials"] = r.trials;
        row["passes"] = r.passes;
        row["pass"] = r.pass;
        row["cross_sync_checked"] = r.cross_sync_checked;
        row["cross_sync_pass"] = r.cross_sync_pass;
        rows.push_back(row);
    }
    j["rows"] = rows;
    return j;
}

json circuit_to_json(const Circuit& c, const PortMap& ports) {
    json j;
    j["schema_version"] = kSchemaVersion;
    json gates = json::object();
    for (const auto& [id, prim] : c.gates) gates[id] = gate_prim_name(prim);
    j["gates"] = gates;
    json wires = json::array();
    for (const Wire& w : c.wires) wires.push_back({w.from, w.to, w.slot});
    j["wires"] = wires;
    json pm = json::object();
    for (const auto& [name, id] : ports) pm[name] = id;
    j["ports"] = pm;
    return j;
}

std::pair<Circuit, PortMap> circuit_from_json(const json& j) {
    Circuit c;
    const json& gates = require(j, "gates");
    if (!gates.is_object()) throw JsonError("field 'gates' must be an object");
    for (auto it = gates.begin(); it != gates.end(); ++it)
        c.add_gate(it.key(), gate_prim_from_name(it.value().get<std::string>()));
    const json& wires = require(j, "wires");
    if (!wires.is_array()) throw JsonError("field 'wires' must be an array");
    for (const json& w : wires) {
        if (!w.is_array() || w.size() != 3)
            throw JsonError("field 'wires' entries must be [from, to, slot]");
        c.connect(w[0].get<std::string>(), w[1].get<std::string>(), w[2].get<int>());
    }
    PortMap ports;
    if (j.contains("ports"))
        for (auto it = j.at("ports").begin(); it != j.at("ports").end(); ++it)
            ports[it.key()] = it.value().get<std::string>();
    auto violations = c.validate();
    if (!violations.empty()) throw JsonError("invalid circuit: " + violations.front());
    return {c, ports};
}

json cycle_machine_to_json(const CycleMachine& m) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["graph"] = graph_to_json(m.graph);
    json cycles = json::object();
    for (const auto& [name, nodes] : m.registered_cycles) cycles[name] = nodes;
    j["registered_cycles"] = cycles;
    json nf = json::object();
    for (const auto& [node, sets] : m.node_freqs) {
        json arr = json::array();
        for (const FreqMultiset& s : sets) arr.push_back(s);
        nf[std::to_string(node)] = arr;
    }
    j["node_freqs"] = nf;
    json cf = json::object();
    for (const auto& [name, freqs] : m.cycle_freqs) cf[name] = freqs;
    j["cycle_freqs"] = cf;
    j["intrinsic"] = std::vector<std::string>(m.intrinsic.begin(), m.intrinsic.end());
    json act = json::object();
    for (const auto& [name, state] : m.active)
        act[name] = state ? json(*state) : json(nullptr);
    j["active"] = act;
    return j;
}

CycleMachine cycle_machine_from_json(const json& j) {
    CycleMachine m;
    m.graph = graph_from_json(require(j, "graph"));
    for (auto it = require(j, "registered_cycles").begin();
         it != j.at("registered_cycles").end(); ++it)
        m.registered_cycles[it.key()] = it.value().get<std::vector<NodeId>>();
    if (j.contains("node_freqs"))
        for (auto it = j.at("node_freqs").begin(); it != j.at("node_freqs").end(); ++it) {
            std::set<FreqMultiset> sets;
            for (const json& s : it.value()) sets.insert(s.get<FreqMultiset>());
            m.node_freqs[std::stoll(it.key())] = sets;
        }
    for (auto it = require(j, "cycle_freqs").begin(); it != j.at("cycle_freqs").end(); ++it)
        m.cycle_freqs[it.key()] = it.value().get<std::vector<int>>();
    if (j.contains("intrinsic"))
        for (const json& n : j.at("intrinsic")) m.intrinsic.insert(n.get<std::string>());
    for (auto it = require(j, "active").begin(); it != j.at("active").end(); ++it)
        m.active[it.key()] = it.value().is_null() ? std::optional<int>{}
                                                  : std::optional<int>{it.value().get<int>()};
    return m;
}

}  // namespace graphcomp
