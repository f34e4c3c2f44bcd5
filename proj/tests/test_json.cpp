#include <doctest.h>

#include "graphcomp/json_io.hpp"

using namespace graphcomp;
using nlohmann::json;

TEST_CASE("graph JSON round trip") {
    Graph g;
    g.add_node(1, 5);
    g.add_node(2);
    g.add_edge(1, 2);
    g.edge_labels[{1, 2}] = 7;
    Graph back = graph_from_json(graph_to_json(g));
    CHECK(back == g);
}

TEST_CASE("graph JSON rejects malformed documents") {
    CHECK_THROWS_AS(graph_from_json(json{{"edges", json::array()}}), JsonError);
    CHECK_THROWS_AS(graph_from_json(json{{"nodes", {1, "x"}}, {"edges", json::array()}}),
                    JsonError);
    CHECK_THROWS_AS(
        graph_from_json(json{{"nodes", {1}}, {"edges", {{1}}}}),  // not a pair
        JsonError);
    CHECK_THROWS_AS(graph_from_json(json{{"nodes", {1}},
                                         {"edges", json::array()},
                                         {"node_labels", {{"9", 1}}}}),
                    JsonError);
}

TEST_CASE("machine document round trip and digest stability") {
    MachineDoc doc;
    doc.graph.add_node(0, 1);
    doc.graph.add_node(1, 2);
    doc.rule = "identity";
    json j = machine_doc_to_json(doc);
    CHECK(j.at("schema_version") == kSchemaVersion);
    CHECK(j.at("digest") == graph_digest(doc.graph));

    MachineDoc back = machine_doc_from_json(j);
    CHECK(back.graph == doc.graph);
    CHECK(back.rule == "identity");

    Machine m = instantiate_machine(back);
    RunResult r = run(m, 0, 10);
    REQUIRE(r.halted());
    CHECK(r.as_halted().value == 3);  // sum of node labels
    CHECK(r.as_halted().steps == 0);
}

TEST_CASE("unknown rules and bad params are rejected") {
    MachineDoc doc;
    doc.rule = "nosuch";
    CHECK_THROWS_AS(instantiate_machine(doc), JsonError);

    doc.rule = "life";  // missing width/height
    CHECK_THROWS_AS(instantiate_machine(doc), JsonError);
}

TEST_CASE("life machine from a document runs") {
    MachineDoc doc;
    doc.rule = "life";
    doc.rule_params = {{"width", 4}, {"height", 4}};
    Machine m = instantiate_machine(doc);
    RunResult r = run(m, 3, 5);
    CHECK_FALSE(r.halted());
}

TEST_CASE("turing machine from a document runs") {
    MachineDoc doc;
    doc.rule = "turing";
    doc.rule_params = {{"initial_state", 0},
                       {"halt_states", {1}},
                       {"tape_length", 12},
                       {"transitions",
                        {{0, 1, 0, 1, "R"}, {0, 0, 1, 1, "R"}}}};
    Machine m = instantiate_machine(doc);
    RunResult r = run(m, 2, 50);
    REQUIRE(r.halted());
    CHECK(r.as_halted().value == 3);
}

TEST_CASE("sync network JSON round trip") {
    SyncNetwork net;
    net.window = 120;
    net.neurons["p"] = NeuronSpec::port_input(2);
    net.neurons["t"] = NeuronSpec::threshold(2);
    net.neurons["i"] = NeuronSpec::inhibitory();
    net.connections.push_back({"p", "t", 1.0});
    net.connections.push_back({"i", "t", -1.0});
    net.external_inputs["p"] = SpikeTrain{0, 4, 8};
    json j = sync_network_to_json(net);
    SyncNetwork back = sync_network_from_json(j);
    CHECK(back.window == net.window);
    CHECK(back.neurons.size() == 3);
    CHECK(back.neurons.at("t").kind == NeuronSpec::Kind::threshold);
    CHECK(back.neurons.at("t").threshold_count == 2);
    CHECK(back.neurons.at("p").port_delay == 2);
    CHECK(back.connections.size() == 2);
    CHECK(back.external_inputs.at("p") == net.external_inputs.at("p"));
}

TEST_CASE("spike trains serialize as sorted arrays") {
    json j = spike_train_to_json(SpikeTrain{9, 1, 5});
    CHECK(j == json({1, 5, 9}));
    CHECK(spike_train_from_json(j) == SpikeTrain{1, 5, 9});
    CHECK_THROWS_AS(spike_train_from_json(json{{"x", 1}}), JsonError);
}

TEST_CASE("circuit JSON round trip") {
    auto [cell, ports] = build_memory_cell();
    json j = circuit_to_json(cell, ports);
    auto [back, back_ports] = circuit_from_json(j);
    CHECK(back.gates == cell.gates);
    CHECK(back_ports == ports);
    CHECK(back.wires.size() == cell.wires.size());

    // Drive both and compare behavior.
    for (Circuit* c : {&cell, &back}) {
        tick_inplace(*c, {{"write", 1}, {"erase", 0}});
        tick_inplace(*c, {{"write", 1}, {"erase", 0}});
        for (int i = 0; i < 5; ++i) tick_inplace(*c, {{"write", 0}, {"erase", 0}});
    }
    CHECK(cell.state == back.state);
}

TEST_CASE("cycle machine JSON round trip") {
    auto [m, spec] = build_cycle_nand();
    m.active["A"] = 1;
    json j = cycle_machine_to_json(m);
    CycleMachine back = cycle_machine_from_json(j);
    CHECK(back.graph == m.graph);
    CHECK(back.registered_cycles == m.registered_cycles);
    CHECK(back.node_freqs == m.node_freqs);
    CHECK(back.cycle_freqs == m.cycle_freqs);
    CHECK(back.intrinsic == m.intrinsic);
    CHECK(back.active == m.active);
}
