#include "graphcomp/turing.hpp"

#include <algorithm>
#include <stdexcept>

namespace graphcomp {

namespace {

constexpr Label kOverflowLabel = -1;

struct Coding {
    std::vector<int> symbols;  // index -> symbol
    std::vector<int> states;   // index -> state

    explicit Coding(const TuringSpec& tm)
        : symbols(tm.tape_alphabet.begin(), tm.tape_alphabet.end()),
          states(tm.states.begin(), tm.states.end()) {}

    std::size_t sym_index(int s) const {
        return std::find(symbols.begin(), symbols.end(), s) - symbols.begin();
    }
    std::size_t state_index(int q) const {
        return std::find(states.begin(), states.end(), q) - states.begin();
    }

    Label encode(int symbol, std::optional<int> head_state) const {
        Label h = head_state ? static_cast<Label>(state_index(*head_state)) + 1 : 0;
        return static_cast<Label>(sym_index(symbol)) +
               static_cast<Label>(symbols.size()) * h;
    }
    int decode_symbol(Label l) const {
        return symbols[static_cast<std::size_t>(l) % symbols.size()];
    }
    std::optional<int> decode_head(Label l) const {
        auto h = static_cast<std::size_t>(l) / symbols.size();
        if (h == 0) return std::nullopt;
        return states[h - 1];
    }
};

}  // namespace

void TuringSpec::validate() const {
    if (!states.count(initial_state))
        throw std::invalid_argument("initial state not in state set");
    for (int h : halt_states)
        if (!states.count(h)) throw std::invalid_argument("halt state not in state set");
    for (const auto& [key, act] : transition) {
        if (halt_states.count(key.first))
            throw std::invalid_argument("halt state has an outgoing transition");
        if (!states.count(key.first) || !states.count(act.next_state))
            throw std::invalid_argument("transition references unknown state");
        if (!tape_alphabet.count(key.second) || !tape_alphabet.count(act.write_symbol))
            throw std::invalid_argument("transition references unknown symbol");
    }
    for (int q : states) {
        if (halt_states.count(q)) continue;
        for (int s : tape_alphabet)
            if (!transition.count({q, s}))
                throw std::invalid_argument("transition table not total on non-halt states");
    }
}

Machine build_turing_machine_graph(const TuringSpec& tm, std::size_t tape_length,
                                   const std::vector<int>& input_word) {
    tm.validate();
    if (tape_length == 0) throw std::invalid_argument("tape_length must be positive");
    if (input_word.size() > tape_length)
        throw std::invalid_argument("input word does not fit the tape");

    Coding coding(tm);
    const auto last = static_cast<NodeId>(tape_length - 1);

    Machine m;
    m.mode = MachineMode::node_based;
    m.rule_name = "turing";
    m.graph_type.require_symmetric_edges = true;

    m.update_rule = [tm, coding, last](const Graph& g) {
        Graph next = g;
        for (NodeId n = 0; n <= last; ++n) {
            Label own = g.node_label(n);
            if (own == kOverflowLabel) continue;
            int sym = coding.decode_symbol(own);
            std::optional<int> head = coding.decode_head(own);

            Label out = own;
            if (head && !tm.halt_states.count(*head)) {
                const TmAction& act = tm.transition.at({*head, sym});
                bool off_tape = (act.move == Move::L && n == 0) ||
                                (act.move == Move::R && n == last);
                out = off_tape ? kOverflowLabel : coding.encode(act.write_symbol, std::nullopt);
            }

            // A neighbor's head moving toward this node activates it.
            for (int d : {-1, +1}) {
                NodeId nb = n + d;
                if (nb < 0 || nb > last) continue;
                Label nb_label = g.node_label(nb);
                if (nb_label == kOverflowLabel) continue;
                std::optional<int> nb_head = coding.decode_head(nb_label);
                if (!nb_head || tm.halt_states.count(*nb_head)) continue;
                const TmAction& act =
                    tm.transition.at({*nb_head, coding.decode_symbol(nb_label)});
                bool toward_me = (d == -1 && act.move == Move::R) ||
                                 (d == +1 && act.move == Move::L);
                if (toward_me && out != kOverflowLabel)
                    out = coding.encode(coding.decode_symbol(out), act.next_state);
            }
            next.node_labels[n] = out;
        }
        return next;
    };

    m.input_fn = [tm, coding, tape_length, input_word](std::int64_t input) {
        std::vector<int> word = input_word;
        if (word.empty()) {
            if (input < 0 || static_cast<std::size_t>(input) > tape_length)
                throw DomainError("unary input does not fit the tape");
            word.assign(static_cast<std::size_t>(input), 1);
        }
        Graph g;
        for (std::size_t i = 0; i < tape_length; ++i) {
            int sym = i < word.size() ? word[i] : 0;
            std::optional<int> head =
                i == 0 ? std::optional<int>(tm.initial_state) : std::nullopt;
            g.add_node(static_cast<NodeId>(i), coding.encode(sym, head));
        }
        for (std::size_t i = 0; i + 1 < tape_length; ++i)
            g.add_undirected_edge(static_cast<NodeId>(i), static_cast<NodeId>(i + 1));
        return g;
    };

    m.output_fn = [tm, coding](const Graph& g) -> Output {
        std::int64_t ones = 0;
        bool halted = false;
        for (const auto& [n, l] : g.node_labels) {
            if (l == kOverflowLabel) return kTapeOverflow;
            if (coding.decode_symbol(l) == 1) ++ones;
            if (auto head = coding.decode_head(l); head && tm.halt_states.count(*head))
                halted = true;
        }
        if (!halted) return NOT_HALTED_YET;
        return ones;
    };

    return m;
}

std::vector<int> tm_tape(const Graph& g, const TuringSpec& tm) {
    Coding coding(tm);
    std::vector<int> tape;
    for (const auto& [n, l] : g.node_labels)
        tape.push_back(l == kOverflowLabel ? -1 : coding.decode_symbol(l));
    return tape;
}

std::optional<std::pair<std::size_t, int>> tm_head(const Graph& g, const TuringSpec& tm) {
    Coding coding(tm);
    for (const auto& [n, l] : g.node_labels) {
        if (l == kOverflowLabel) continue;
        if (auto head = coding.decode_head(l))
            return std::make_pair(static_cast<std::size_t>(n), *head);
    }
    return std::nullopt;
}

}  // namespace graphcomp
