#ifndef GRAPHCOMP_TURING_HPP
#define GRAPHCOMP_TURING_HPP

#include <map>
#include <optional>

#include "graphcomp/machine.hpp"

namespace graphcomp {

enum class Move { L, R };

struct TmAction {
    int next_state = 0;
    int write_symbol = 0;
    Move move = Move::R;
};

/// Deterministic single-tape Turing machine. Symbol 0 is blank; halt
/// states have no outgoing transitions.
struct TuringSpec {
    std::set<int> states;
    std::set<int> tape_alphabet;
    std::map<std::pair<int, int>, TmAction> transition;
    std::set<int> halt_states;
    int initial_state = 0;

    void validate() const;
};

/// Output value reported when the head walks off either tape end.
inline constexpr std::int64_t kTapeOverflow = -1;

/// Node-based machine on a line of tape nodes. Each node label encodes
/// (symbol, head-present, head state); the update rule hands the head off
/// by activating the neighbor and deactivating itself. The output is the
/// number of 1-symbols on the tape once a halt state is active.
///
/// input_fn(n) writes n in unary when input_word is empty, otherwise it
/// always produces the given word.
Machine build_turing_machine_graph(const TuringSpec& tm, std::size_t tape_length,
                                   const std::vector<int>& input_word = {});

/// Decodes the tape symbols of a TM graph built by the machine above.
std::vector<int> tm_tape(const Graph& g, const TuringSpec& tm);

/// Head position and state, if a head is present (and no overflow).
std::optional<std::pair<std::size_t, int>> tm_head(const Graph& g, const TuringSpec& tm);

}  // namespace graphcomp

#endif
