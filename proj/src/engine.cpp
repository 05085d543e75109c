#include "casforest/engine.hpp"

#include <algorithm>
#include <ostream>
#include <random>

namespace casforest {

Token Token::number(int v) {
    if (v < 0 || v > 255) {
        throw CasError("number token " + std::to_string(v) + " outside 0..255");
    }
    Token t;
    t.kind_ = Kind::Number;
    t.value_ = static_cast<std::uint8_t>(v);
    return t;
}

std::string Token::to_string() const {
    switch (kind_) {
        case Kind::Character:
            return std::string("C:") + symbol_;
        case Kind::Number:
            return "N:" + std::to_string(value_);
        case Kind::Blank:
            return "B";
    }
    return "?";
}

Token TickSchedule::token_at(const Sequence& query, int tick) const {
    if (tick < 1 || tick > total_ticks()) {
        throw CasError("tick " + std::to_string(tick) + " outside schedule");
    }
    if (tick > 2 * l) {
        return Token::blank();
    }
    int k = (tick - 1) / 2;
    if (tick % 2 == 1) {
        return Token::character(query.symbols[k]);
    }
    return Token::number(k <= m - 2 ? d + 1 : 0);
}

std::vector<Motif> CasReport::verified_motifs() const {
    std::vector<Motif> out;
    for (const CasReportEntry& e : entries) {
        if (e.verified) {
            out.push_back(e.motif);
        }
    }
    return out;
}

SystolicSimulator::SystolicSimulator(const Forest& forest, BitInit init, std::uint64_t seed)
    : forest_(&forest), d_(forest.config.d) {
    const std::size_t count = forest.nodes.size();
    parent_.resize(count);
    symbol_.resize(count);
    level_.resize(count);
    bit_offset_.resize(count);
    cursor_.assign(count, 0);
    std::uint32_t offset = 0;
    for (std::size_t i = 0; i < count; ++i) {
        const ForestNode& node = forest.nodes[i];
        parent_[i] = node.parent;
        symbol_[i] = node.symbol;
        level_[i] = node.level;
        bit_offset_[i] = offset;
        offset += static_cast<std::uint32_t>(node.level);
    }
    switch (init) {
        case BitInit::Zeros:
            bits_.assign(offset, 0);
            break;
        case BitInit::Ones:
            bits_.assign(offset, 1);
            break;
        case BitInit::Random: {
            bits_.resize(offset);
            std::mt19937_64 rng(seed);
            for (auto& b : bits_) {
                b = static_cast<std::uint8_t>(rng() & 1);
            }
            break;
        }
    }
    slot_.assign(count, Token::blank());
    next_slot_.assign(count, Token::blank());
    exit_leaf_.reserve(forest.exits.size());
    for (const ExitNode& exit : forest.exits) {
        exit_leaf_.push_back(exit.leaf);
    }
    potential_.assign(forest.exits.size(), 0);
    first_fire_.assign(forest.exits.size(), -1);
}

std::uint8_t SystolicSimulator::leftmost(int node_id) const {
    return bits_[bit_offset_[node_id] + cursor_[node_id]];
}

void SystolicSimulator::shift_in(int node_id, std::uint8_t bit) {
    // ring register: overwrite the leftmost bit, which makes its right
    // neighbour the new leftmost
    bits_[bit_offset_[node_id] + cursor_[node_id]] = bit;
    cursor_[node_id] = static_cast<std::uint16_t>((cursor_[node_id] + 1) % level_[node_id]);
}

std::string SystolicSimulator::node_bits(int node_id) const {
    std::string out;
    int level = level_[node_id];
    for (int i = 0; i < level; ++i) {
        out.push_back('0' + bits_[bit_offset_[node_id] + (cursor_[node_id] + i) % level]);
    }
    return out;
}

void SystolicSimulator::step(const Token& injected) {
    ++run_tick_;
    if (injected.kind() == Token::Kind::Number) {
        max_number_ = std::max(max_number_, injected.value());
    }
    const std::size_t count = parent_.size();
    for (std::size_t i = 0; i < count; ++i) {
        const Token& received = parent_[i] < 0 ? injected : slot_[parent_[i]];
        switch (received.kind()) {
            case Token::Kind::Character:
                shift_in(static_cast<int>(i), received.symbol() != symbol_[i]);
                next_slot_[i] = received;
                break;
            case Token::Kind::Number: {
                int sum = received.value() + leftmost(static_cast<int>(i));
                max_number_ = std::max(max_number_, sum);
                next_slot_[i] = Token::number(sum);
                break;
            }
            case Token::Kind::Blank:
                next_slot_[i] = Token::blank();
                break;
        }
    }
    // exits read the pre-tick leaf slots, like any other child
    for (std::size_t e = 0; e < exit_leaf_.size(); ++e) {
        const Token& received = slot_[exit_leaf_[e]];
        if (received.kind() == Token::Kind::Number && received.value() <= d_) {
            potential_[e] = 1;
            if (first_fire_[e] < 0) {
                first_fire_[e] = run_tick_;
            }
        }
    }
    slot_.swap(next_slot_);
}

void SystolicSimulator::reset_run() {
    std::fill(slot_.begin(), slot_.end(), Token::blank());
    std::fill(next_slot_.begin(), next_slot_.end(), Token::blank());
    std::fill(potential_.begin(), potential_.end(), 0);
    std::fill(first_fire_.begin(), first_fire_.end(), -1);
    run_tick_ = 0;
    max_number_ = 0;
}

void SystolicSimulator::write_trace_tick(std::ostream& trace, int tick,
                                         const Token& injected) const {
    trace << "T " << tick << " IN " << injected.to_string() << '\n';
    for (std::size_t i = 0; i < parent_.size(); ++i) {
        trace << "S " << i << ' ' << node_bits(static_cast<int>(i)) << ' '
              << slot_[i].to_string() << '\n';
    }
}

RunResult SystolicSimulator::run_string(const Sequence& query, std::ostream* trace) {
    const SearchConfig& config = forest_->config;
    if (query.length() < static_cast<std::size_t>(config.m)) {
        throw CasError("query shorter than motif length: \"" + query.id + "\" has length " +
                       std::to_string(query.length()) + " < m = " + std::to_string(config.m));
    }
    for (char c : query.symbols) {
        if (!forest_->alphabet.contains(c)) {
            throw CasError(std::string("query symbol '") + c + "' is not in the alphabet");
        }
    }
    TickSchedule schedule{static_cast<int>(query.length()), config.m, config.d};
    reset_run();
    if (trace) {
        *trace << "TICKS " << schedule.total_ticks() << '\n';
    }
    const bool trace_ticks = trace && !parent_.empty();
    for (int tick = 1; tick <= schedule.total_ticks(); ++tick) {
        Token injected = schedule.token_at(query, tick);
        step(injected);
        if (trace_ticks) {
            write_trace_tick(*trace, tick, injected);
        }
    }
    RunResult result;
    result.potential = potential_;
    result.first_fire_tick = first_fire_;
    result.ticks = run_tick_;
    result.max_number = max_number_;
    return result;
}

CasReport run_all(Forest& forest, std::span<const Sequence> queries, std::ostream* trace) {
    forest.config.validate();
    if (queries.size() != static_cast<std::size_t>(forest.config.n) - 1) {
        throw CasError("expected " + std::to_string(forest.config.n - 1) + " query strings for n = " +
                       std::to_string(forest.config.n) + ", got " + std::to_string(queries.size()));
    }
    SystolicSimulator sim(forest);
    for (std::size_t q = 0; q < queries.size(); ++q) {
        RunResult result = sim.run_string(queries[q], trace);
        const int string_no = static_cast<int>(q) + 2;
        for (std::size_t e = 0; e < forest.exits.size(); ++e) {
            if (result.potential[e]) {
                forest.exits[e].strings.set(string_no);
            }
        }
    }
    CasReport report;
    report.n = forest.config.n;
    report.entries.reserve(forest.exits.size());
    for (const ExitNode& exit : forest.exits) {
        report.entries.push_back(CasReportEntry{exit.motif, exit.strings, exit.strings.all()});
    }
    std::sort(report.entries.begin(), report.entries.end(),
              [](const CasReportEntry& a, const CasReportEntry& b) { return a.motif < b.motif; });
    return report;
}

void trace(const Forest& forest, const Sequence& query, std::ostream& sink) {
    SystolicSimulator sim(forest);
    sim.run_string(query, &sink);
}

}  // namespace casforest
