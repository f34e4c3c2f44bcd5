#include <doctest.h>

#include <random>

#include "graphcomp/grid_ca.hpp"
#include "graphcomp/machine.hpp"
#include "graphcomp/turing.hpp"

using namespace graphcomp;

namespace {

// Independent flat-array Life oracle (B3/S23, dead boundary).
std::vector<Label> life_oracle_step(const std::vector<Label>& cells, int w, int h) {
    std::vector<Label> next(cells.size(), 0);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            int live = 0;
            for (int dy = -1; dy <= 1; ++dy)
                for (int dx = -1; dx <= 1; ++dx) {
                    if (dx == 0 && dy == 0) continue;
                    int nx = x + dx, ny = y + dy;
                    if (nx < 0 || ny < 0 || nx >= w || ny >= h) continue;
                    live += cells[ny * w + nx] == 1;
                }
            Label self = cells[y * w + x];
            next[y * w + x] = self == 1 ? (live == 2 || live == 3) : live == 3;
        }
    }
    return next;
}

// Independent direct Turing-machine interpreter on a bounded tape.
struct TmOracle {
    std::vector<int> tape;
    std::size_t head = 0;
    int state;
    std::size_t steps = 0;
    bool halted = false;
    bool overflow = false;

    TmOracle(const TuringSpec& tm, std::size_t tape_length, const std::vector<int>& word)
        : tape(tape_length, 0), state(tm.initial_state) {
        for (std::size_t i = 0; i < word.size(); ++i) tape[i] = word[i];
        halted = tm.halt_states.count(state) > 0;
    }

    void run(const TuringSpec& tm, std::size_t max_steps) {
        while (!halted && !overflow && steps < max_steps) {
            const TmAction& act = tm.transition.at({state, tape[head]});
            tape[head] = act.write_symbol;
            if (act.move == Move::L) {
                if (head == 0) {
                    overflow = true;
                    break;
                }
                --head;
            } else {
                if (head + 1 == tape.size()) {
                    overflow = true;
                    break;
                }
                ++head;
            }
            state = act.next_state;
            ++steps;
            halted = tm.halt_states.count(state) > 0;
        }
    }

    std::int64_t ones() const {
        std::int64_t n = 0;
        for (int s : tape) n += s == 1;
        return n;
    }
};

// Random total TM over states 0..n-1 plus halt state n, alphabet {0,1}.
TuringSpec random_tm(std::mt19937_64& rng, int n_states) {
    TuringSpec tm;
    for (int q = 0; q <= n_states; ++q) tm.states.insert(q);
    tm.tape_alphabet = {0, 1};
    tm.halt_states = {n_states};
    tm.initial_state = 0;
    std::uniform_int_distribution<int> next(0, n_states);  // halt state included
    std::uniform_int_distribution<int> bit(0, 1);
    for (int q = 0; q < n_states; ++q)
        for (int s : {0, 1})
            tm.transition[{q, s}] = {next(rng), bit(rng), bit(rng) ? Move::L : Move::R};
    return tm;
}

}  // namespace

TEST_CASE("graph-machine Life equals the flat-array oracle") {
    const int w = 8, h = 8;
    Machine m = build_grid_ca_machine(w, h, Neighborhood::moore_8, life_rule, "life");
    for (std::int64_t seed : {1, 2, 3, 4, 5}) {
        Graph g = m.input_fn(seed);
        std::vector<Label> flat = grid_states(g, w, h);
        for (int s = 0; s < 50; ++s) {
            g = step(m, g);
            flat = life_oracle_step(flat, w, h);
            REQUIRE(grid_states(g, w, h) == flat);
        }
    }
}

TEST_CASE("blinker oscillates with period 2") {
    Machine m = build_grid_ca_machine(5, 5, Neighborhood::moore_8, life_rule, "life");
    std::vector<Label> cells(25, 0);
    cells[11] = cells[12] = cells[13] = 1;  // horizontal triple in row 2
    Graph g0 = grid_graph(5, 5, Neighborhood::moore_8, cells);
    Graph g1 = step(m, g0);
    Graph g2 = step(m, g1);
    CHECK(g1 != g0);
    CHECK(g2 == g0);
}

TEST_CASE("glider translates by (1,1) every 4 steps") {
    const int w = 10, h = 10;
    Machine m = build_grid_ca_machine(w, h, Neighborhood::moore_8, life_rule, "life");
    std::vector<Label> cells(w * h, 0);
    auto at = [&](int x, int y) -> Label& { return cells[y * w + x]; };
    at(1, 0) = at(2, 1) = at(0, 2) = at(1, 2) = at(2, 2) = 1;
    Graph g = grid_graph(w, h, Neighborhood::moore_8, cells);
    Graph start = g;
    for (int s = 0; s < 4; ++s) g = step(m, g);
    std::vector<Label> before = grid_states(start, w, h);
    std::vector<Label> after = grid_states(g, w, h);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) {
            Label expected = (x >= 1 && y >= 1) ? before[(y - 1) * w + (x - 1)] : 0;
            REQUIRE(after[y * w + x] == expected);
        }
}

TEST_CASE("append-a-one TM matches hand-computed value and steps") {
    // State 0 scans right over 1s; on the first blank writes 1 and halts.
    TuringSpec tm;
    tm.states = {0, 1};
    tm.tape_alphabet = {0, 1};
    tm.halt_states = {1};
    tm.initial_state = 0;
    tm.transition[{0, 1}] = {0, 1, Move::R};
    tm.transition[{0, 0}] = {1, 1, Move::R};
    Machine m = build_turing_machine_graph(tm, 16);
    RunResult r = run(m, 3, 100);
    REQUIRE(r.halted());
    CHECK(r.as_halted().value == 4);
    CHECK(r.as_halted().steps == 4);
}

TEST_CASE("walking off the tape reports the overflow value") {
    TuringSpec tm;
    tm.states = {0, 1};
    tm.tape_alphabet = {0, 1};
    tm.halt_states = {1};
    tm.initial_state = 0;
    tm.transition[{0, 0}] = {0, 1, Move::R};  // run right forever
    tm.transition[{0, 1}] = {0, 1, Move::R};
    Machine m = build_turing_machine_graph(tm, 8);
    RunResult r = run(m, 0, 100);
    REQUIRE(r.halted());
    CHECK(r.as_halted().value == kTapeOverflow);
}

TEST_CASE("random halting TMs agree with the direct interpreter") {
    std::mt19937_64 rng(2024);
    const std::size_t tape_len = 24;
    const std::vector<int> word = {1, 1, 1};
    int found = 0, attempts = 0;
    while (found < 10 && attempts < 3000) {
        ++attempts;
        TuringSpec tm = random_tm(rng, 3);
        TmOracle oracle(tm, tape_len, word);
        oracle.run(tm, 200);
        if (!oracle.halted || oracle.overflow) continue;
        ++found;

        Machine m = build_turing_machine_graph(tm, tape_len, word);
        RunResult r = run(m, 0, 400);
        REQUIRE(r.halted());
        CHECK(r.as_halted().value == oracle.ones());
        CHECK(r.as_halted().steps == oracle.steps);

        // Final tape matches symbol-for-symbol.
        Graph g = m.input_fn(0);
        for (std::size_t s = 0; s < oracle.steps; ++s) g = step(m, g);
        CHECK(tm_tape(g, tm) == oracle.tape);
    }
    CHECK(found == 10);
}
