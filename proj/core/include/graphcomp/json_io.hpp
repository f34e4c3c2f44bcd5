#ifndef GRAPHCOMP_JSON_IO_HPP
#define GRAPHCOMP_JSON_IO_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "graphcomp/circuit.hpp"
#include "graphcomp/cycle_machine.hpp"
#include "graphcomp/gate_library.hpp"
#include "graphcomp/machine.hpp"
#include "graphcomp/sync_network.hpp"

namespace graphcomp {

inline constexpr int kSchemaVersion = 1;

/// Malformed document: message carries the offending field.
struct JsonError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

/// Persistable machine: an initial graph plus a registered rule name and
/// its parameters. Update rules are code registered under stable names,
/// never serialized.
struct MachineDoc {
    Graph graph;
    std::string rule;
    nlohmann::json rule_params = nlohmann::json::object();
};

nlohmann::json machine_doc_to_json(const MachineDoc& doc);
MachineDoc machine_doc_from_json(const nlohmann::json& j);

/// Builds the runnable machine named by doc.rule. Throws JsonError for an
/// unknown rule or bad parameters.
Machine instantiate_machine(const MachineDoc& doc);
std::vector<std::string> registered_rules();

nlohmann::json spike_train_to_json(const SpikeTrain& t);
SpikeTrain spike_train_from_json(const nlohmann::json& j);

nlohmann::json sync_network_to_json(const SyncNetwork& net);
SyncNetwork sync_network_from_json(const nlohmann::json& j);

nlohmann::json truth_table_report_to_json(const TruthTableReport& report);

nlohmann::json circuit_to_json(const Circuit& c, const PortMap& ports);
std::pair<Circuit, PortMap> circuit_from_json(const nlohmann::json& j);

nlohmann::json cycle_machine_to_json(const CycleMachine& m);
CycleMachine cycle_machine_from_json(const nlohmann::json& j);

}  // namespace graphcomp

#endif
