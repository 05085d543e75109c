#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "casforest/forest.hpp"

namespace casforest {

// One item of the alternating input stream: a character to compare, an
// error sum, or the inert flush sentinel '-'.
class Token {
public:
    enum class Kind : std::uint8_t { Character, Number, Blank };

    Token() = default;

    static Token character(char c) {
        Token t;
        t.kind_ = Kind::Character;
        t.symbol_ = c;
        return t;
    }

    // Sums ride an 8-bit channel; the schedule never produces more than
    // d + 1 + m, which SearchConfig caps at 255.
    static Token number(int v);

    static Token blank() { return Token{}; }

    Kind kind() const { return kind_; }
    char symbol() const { return symbol_; }
    int value() const { return value_; }

    // C:<sym>, N:<int> or B, as traces print them.
    std::string to_string() const;

    bool operator==(const Token& other) const = default;

private:
    Kind kind_ = Kind::Blank;
    char symbol_ = 0;
    std::uint8_t value_ = 0;
};

// Input schedule for one query of length l. Characters go in on odd ticks,
// error sums on even ticks, and m blanks flush the final sums out, for
// 2l + m ticks in total. The first m - 1 sums are poisoned to d + 1 so that
// an incomplete window can never reach an exit at or below d; from the
// first complete window on the injected sum is 0.
struct TickSchedule {
    int l = 0;
    int m = 0;
    int d = 0;

    int total_ticks() const { return 2 * l + m; }

    // tick is 1-based and must lie in 1..total_ticks().
    Token token_at(const Sequence& query, int tick) const;
};

// Initial contents of the per-node bit shift registers. Results never
// depend on this (the poisoned warm-up hides every stale bit); the knob
// exists so tests can prove that.
enum class BitInit { Zeros, Ones, Random };

// Outcome of streaming one query: which exits saw a sum <= d from a
// complete window, when each first fired, and bookkeeping for the timing
// and saturation properties.
struct RunResult {
    std::vector<char> potential;        // per exit id
    std::vector<int> first_fire_tick;   // per exit id, -1 = never
    int ticks = 0;
    int max_number = 0;                 // largest Number value seen anywhere
};

struct CasReportEntry {
    Motif motif;
    StringBits strings;
    bool verified = false;
};

// One entry per exit, sorted by motif.
struct CasReport {
    int n = 1;
    std::vector<CasReportEntry> entries;

    std::vector<Motif> verified_motifs() const;
};

// The forest as a synchronous array. Every node owns a symbol, a bit shift
// register as long as its level, and a one-token slot. Each tick every
// node takes its parent's pre-tick slot (roots take the injected token):
//
//   character c: shift (c != symbol) into the right end of the register,
//                dropping the leftmost bit, and hold c;
//   number v:    hold v + leftmost register bit; the register is untouched;
//   blank:       hold blank.
//
// An exit reads its leaf's pre-tick slot and, on a number <= d, records the
// string being processed. All reads happen before any write, exactly like
// one clock edge.
class SystolicSimulator {
public:
    explicit SystolicSimulator(const Forest& forest, BitInit init = BitInit::Zeros,
                               std::uint64_t seed = 0);

    // One synchronous tick with the given injected token.
    void step(const Token& injected);

    // Streams one query: exactly 2l + m ticks. Slots start blank; the bit
    // registers keep whatever an earlier run left behind, which the warm-up
    // poison makes unobservable. With a trace stream every tick appends the
    // post-tick state of every node.
    RunResult run_string(const Sequence& query, std::ostream* trace = nullptr);

    // Register and slot state, leftmost bit first; for traces and tests.
    std::string node_bits(int node_id) const;
    Token node_slot(int node_id) const { return slot_[node_id]; }

private:
    void reset_run();
    std::uint8_t leftmost(int node_id) const;
    void shift_in(int node_id, std::uint8_t bit);
    void write_trace_tick(std::ostream& trace, int tick, const Token& injected) const;

    const Forest* forest_;
    int d_;
    std::vector<int> parent_;
    std::vector<char> symbol_;
    std::vector<int> level_;
    std::vector<int> exit_leaf_;        // per exit id
    std::vector<std::uint32_t> bit_offset_;
    std::vector<std::uint16_t> cursor_;  // ring position of the leftmost bit
    std::vector<std::uint8_t> bits_;
    std::vector<Token> slot_;
    std::vector<Token> next_slot_;

    // per-run bookkeeping
    std::vector<char> potential_;
    std::vector<int> first_fire_;
    int run_tick_ = 0;
    int max_number_ = 0;
};

// Streams the queries as strings 2..n through one simulator, ORs every
// per-string result into the exit string bits, and reports one entry per
// exit. queries.size() must be n - 1. With a trace stream each query
// appends its own complete trace.
CasReport run_all(Forest& forest, std::span<const Sequence> queries,
                  std::ostream* trace = nullptr);

// One query against a fresh simulator, dumping the tick-by-tick state:
//   TICKS <total>
//   T <t> IN <token>
//   S <node-id> <bits leftmost first> <slot>   (one line per node, by id)
// A forest with no nodes produces the header only.
void trace(const Forest& forest, const Sequence& query, std::ostream& sink);

}  // namespace casforest
