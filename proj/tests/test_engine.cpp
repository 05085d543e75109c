#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <sstream>

#include "casforest/engine.hpp"
#include "casforest/forest_io.hpp"
#include "testing_util.hpp"

using namespace casforest;
using namespace casforest::testing;

namespace {

// The single path A -> C -> T with one exit, spelled the way the array
// diagrams draw it (root holds the first character).
const char* kSinglePathForward =
    "CAF1 m=3 d=1 n=4 alphabet=ACGT orientation=paper-literal\n"
    "N 0 1 A -\n"
    "N 1 2 C 0\n"
    "N 2 3 T 1\n"
    "X 0 2 ACT 1\n";

// Hand-stepped tick-by-tick state for query TCT against the path above,
// zero-initialized registers. Worth keeping bit-exact: it pins down the
// double-buffered update order, the ring registers and the poison schedule
// all at once.
const char* kGoldenTrace =
    "TICKS 9\n"
    "T 1 IN C:T\n"
    "S 0 1 C:T\n"
    "S 1 00 B\n"
    "S 2 000 B\n"
    "T 2 IN N:2\n"
    "S 0 1 N:3\n"
    "S 1 01 C:T\n"
    "S 2 000 B\n"
    "T 3 IN C:C\n"
    "S 0 1 C:C\n"
    "S 1 01 N:3\n"
    "S 2 000 C:T\n"
    "T 4 IN N:2\n"
    "S 0 1 N:3\n"
    "S 1 10 C:C\n"
    "S 2 000 N:3\n"
    "T 5 IN C:T\n"
    "S 0 1 C:T\n"
    "S 1 10 N:4\n"
    "S 2 001 C:C\n"
    "T 6 IN N:0\n"
    "S 0 1 N:1\n"
    "S 1 01 C:T\n"
    "S 2 001 N:4\n"
    "T 7 IN B\n"
    "S 0 1 B\n"
    "S 1 01 N:1\n"
    "S 2 010 C:T\n"
    "T 8 IN B\n"
    "S 0 1 B\n"
    "S 1 01 B\n"
    "S 2 010 N:1\n"
    "T 9 IN B\n"
    "S 0 1 B\n"
    "S 1 01 B\n"
    "S 2 010 B\n";

std::vector<Motif> fired_motifs(const Forest& f, const RunResult& r) {
    std::vector<Motif> out;
    for (std::size_t e = 0; e < f.exits.size(); ++e) {
        if (r.potential[e]) {
            out.push_back(f.exits[e].motif);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("tokens") {
    CHECK(Token{}.kind() == Token::Kind::Blank);
    CHECK(Token::blank().to_string() == "B");
    CHECK(Token::character('G').to_string() == "C:G");
    CHECK(Token::character('G').symbol() == 'G');
    CHECK(Token::number(0).to_string() == "N:0");
    CHECK(Token::number(255).value() == 255);
    CHECK(Token::number(3) == Token::number(3));
    CHECK(Token::number(3) != Token::number(4));
    CHECK(Token::number(3) != Token::character('A'));
    CHECK_THROWS_AS(Token::number(-1), CasError);
    CHECK_THROWS_AS(Token::number(256), CasError);
}

TEST_CASE("tick schedule") {
    TickSchedule sched{3, 3, 1};
    Sequence q{"q", "TCT"};
    CHECK(sched.total_ticks() == 9);
    std::vector<Token> expected = {
        Token::character('T'), Token::number(2),  // poison d + 1
        Token::character('C'), Token::number(2),  // poison d + 1
        Token::character('T'), Token::number(0),  // first complete window
        Token::blank(),        Token::blank(),       Token::blank(),
    };
    for (int t = 1; t <= 9; ++t) {
        CAPTURE(t);
        CHECK(sched.token_at(q, t) == expected[static_cast<std::size_t>(t - 1)]);
    }
    CHECK_THROWS_AS(sched.token_at(q, 0), CasError);
    CHECK_THROWS_AS(sched.token_at(q, 10), CasError);

    SUBCASE("m = 1 needs no poison") {
        TickSchedule one{2, 1, 1};
        Sequence ac{"q", "AC"};
        CHECK(one.total_ticks() == 5);
        CHECK(one.token_at(ac, 2) == Token::number(0));
        CHECK(one.token_at(ac, 4) == Token::number(0));
        CHECK(one.token_at(ac, 5) == Token::blank());
    }
}

TEST_CASE("golden trace of the single forward path") {
    Forest f = deserialize(kSinglePathForward);
    std::ostringstream sink;
    trace(f, Sequence{"q", "TCT"}, sink);
    CHECK(sink.str() == kGoldenTrace);
}

TEST_CASE("worked-example checkpoints") {
    Forest f = deserialize(kSinglePathForward);
    SystolicSimulator sim(f);
    TickSchedule sched{3, 3, 1};
    Sequence q{"q", "TCT"};
    for (int t = 1; t <= 9; ++t) {
        sim.step(sched.token_at(q, t));
        if (t == 2) {
            CHECK(sim.node_slot(0) == Token::number(3));
        }
        if (t == 5) {
            CHECK(sim.node_slot(1) == Token::number(4));
        }
    }
    SystolicSimulator fresh(f);
    RunResult r = fresh.run_string(q);
    REQUIRE(r.potential.size() == 1);
    CHECK(r.potential[0] == 1);
    CHECK(r.first_fire_tick[0] == 9);  // the sum 1 <= d reaches the exit on the last tick
    CHECK(r.ticks == 9);
}

TEST_CASE("potential exits against a reversed forest") {
    Forest f = build_forest(Sequence{"db", "ACT"}, SearchConfig{3, 1, 2});
    SystolicSimulator sim(f);
    SUBCASE("query TCT") {
        RunResult r = sim.run_string(Sequence{"q", "TCT"});
        CHECK(fired_motifs(f, r) == std::vector<Motif>{"ACT", "CCT", "GCT", "TCT"});
    }
    SUBCASE("query AAA") {
        RunResult r = sim.run_string(Sequence{"q", "AAA"});
        CHECK(fired_motifs(f, r) == std::vector<Motif>{"AAT", "ACA"});
    }
}

TEST_CASE("exits fire as their window's last character clears level m") {
    Forest f = build_forest(Sequence{"db", "ACT"}, SearchConfig{3, 0, 2});
    REQUIRE(f.exits.size() == 1);
    SystolicSimulator sim(f);
    RunResult r = sim.run_string(Sequence{"q", "ACTAAA"});
    CHECK(r.ticks == 15);
    CHECK(r.potential[0] == 1);
    CHECK(r.first_fire_tick[0] == 9);  // window ending at position 3: tick 2*3 + m

    SUBCASE("query equal to the motif fires on the last tick, 3m") {
        SystolicSimulator fresh(f);
        RunResult rr = fresh.run_string(Sequence{"q", "ACT"});
        CHECK(rr.ticks == 9);
        CHECK(rr.first_fire_tick[0] == 9);
    }
}

TEST_CASE("blank injection leaves every register untouched") {
    Forest f = build_forest(Sequence{"db", "TGACT"}, SearchConfig{5, 1, 2});
    SystolicSimulator sim(f);
    // a completed run leaves the pipeline drained: every slot Blank
    sim.run_string(Sequence{"q", "GACTC"});
    std::vector<std::string> before;
    for (std::size_t i = 0; i < f.nodes.size(); ++i) {
        before.push_back(sim.node_bits(static_cast<int>(i)));
        CHECK(sim.node_slot(static_cast<int>(i)) == Token::blank());
    }
    for (int t = 0; t < 4; ++t) {
        sim.step(Token::blank());
    }
    for (std::size_t i = 0; i < f.nodes.size(); ++i) {
        CHECK(sim.node_bits(static_cast<int>(i)) == before[i]);
        CHECK(sim.node_slot(static_cast<int>(i)) == Token::blank());
    }
}

TEST_CASE("every run takes exactly 2l + m ticks") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 30; ++trial) {
        std::uniform_int_distribution<int> m_pick(2, 10);
        const int m = m_pick(rng);
        std::uniform_int_distribution<int> l_pick(m, 200);
        const int l = l_pick(rng);
        SearchConfig config{m, std::min(2, m), 2};
        Forest f = build_forest(Sequence{"db", random_dna(rng, m)}, config);
        SystolicSimulator sim(f);
        RunResult r = sim.run_string(Sequence{"q", random_dna(rng, l)});
        CHECK(r.ticks == 2 * l + m);
        CHECK(r.max_number <= config.m + config.d + 1);
    }
}

TEST_CASE("results are independent of register initialization") {
    std::mt19937_64 rng(31);
    int nontrivial = 0;
    for (int trial = 0; trial < 15; ++trial) {
        CasInstance inst = random_instance(rng);
        Forest f = build_forest(inst.strings[0], inst.config, Orientation::MotifReversed,
                                inst.alphabet);
        SystolicSimulator zeros(f, BitInit::Zeros);
        SystolicSimulator ones(f, BitInit::Ones);
        SystolicSimulator random(f, BitInit::Random, 0xfeedULL + static_cast<unsigned>(trial));
        for (std::size_t q = 1; q < inst.strings.size(); ++q) {
            RunResult a = zeros.run_string(inst.strings[q]);
            RunResult b = ones.run_string(inst.strings[q]);
            RunResult c = random.run_string(inst.strings[q]);
            CHECK(a.potential == b.potential);
            CHECK(a.potential == c.potential);
            CHECK(a.first_fire_tick == b.first_fire_tick);
            CHECK(a.first_fire_tick == c.first_fire_tick);
            nontrivial += !f.exits.empty();
        }
    }
    CHECK(nontrivial > 0);
}

TEST_CASE("a simulator can be reused across runs") {
    Forest f = build_forest(Sequence{"db", "TGACTCGACC"}, SearchConfig{5, 1, 2});
    SystolicSimulator sim(f);
    Sequence q{"q", "TACTGCCTCG"};
    RunResult first = sim.run_string(q);
    RunResult second = sim.run_string(q);  // registers carry old bits, slots reset
    CHECK(first.potential == second.potential);
    CHECK(first.first_fire_tick == second.first_fire_tick);
}

TEST_CASE("run_all merges per-string potentials") {
    SUBCASE("query count must be n - 1") {
        Forest f = build_forest(Sequence{"db", "ACT"}, SearchConfig{3, 1, 3});
        std::vector<Sequence> one = {{"q1", "ACT"}};
        CHECK_THROWS_AS(run_all(f, one), CasError);
    }
    SUBCASE("n = 1 verifies every exit") {
        Forest f = build_forest(Sequence{"db", "ACT"}, SearchConfig{3, 1, 1});
        CasReport report = run_all(f, {});
        CHECK(report.n == 1);
        REQUIRE(report.entries.size() == 10);
        for (const CasReportEntry& e : report.entries) {
            CHECK(e.verified);
        }
        CHECK(report.verified_motifs().size() == 10);
        CHECK(std::is_sorted(report.entries.begin(), report.entries.end(),
                             [](const CasReportEntry& a, const CasReportEntry& b) {
                                 return a.motif < b.motif;
                             }));
    }
    SUBCASE("matches per-query fresh simulators") {
        std::mt19937_64 rng(41);
        for (int trial = 0; trial < 10; ++trial) {
            CasInstance inst = random_instance(rng);
            Forest shared = build_forest(inst.strings[0], inst.config,
                                         Orientation::MotifReversed, inst.alphabet);
            Forest fresh = shared;
            std::span<const Sequence> queries(inst.strings.begin() + 1, inst.strings.end());
            CasReport report = run_all(shared, queries);

            for (std::size_t q = 0; q < queries.size(); ++q) {
                SystolicSimulator sim(fresh);
                RunResult r = sim.run_string(queries[q]);
                for (std::size_t e = 0; e < fresh.exits.size(); ++e) {
                    if (r.potential[e]) {
                        fresh.exits[e].strings.set(static_cast<int>(q) + 2);
                    }
                }
            }
            std::vector<CasReportEntry> expected;
            for (const ExitNode& e : fresh.exits) {
                expected.push_back(CasReportEntry{e.motif, e.strings, e.strings.all()});
            }
            std::sort(expected.begin(), expected.end(),
                      [](const CasReportEntry& a, const CasReportEntry& b) {
                          return a.motif < b.motif;
                      });
            REQUIRE(report.entries.size() == expected.size());
            for (std::size_t i = 0; i < expected.size(); ++i) {
                CHECK(report.entries[i].motif == expected[i].motif);
                CHECK(report.entries[i].strings == expected[i].strings);
                CHECK(report.entries[i].verified == expected[i].verified);
            }
        }
    }
}

TEST_CASE("trace shape and determinism") {
    std::mt19937_64 rng(47);
    Forest f = build_forest(Sequence{"db", random_dna(rng, 8)}, SearchConfig{4, 1, 2});
    Sequence q{"q", random_dna(rng, 11)};
    std::ostringstream once;
    trace(f, q, once);
    std::ostringstream again;
    trace(f, q, again);
    CHECK(once.str() == again.str());

    const long long ticks = 2 * 11 + 4;
    const std::string transcript = once.str();
    const long long lines =
        static_cast<long long>(std::count(transcript.begin(), transcript.end(), '\n'));
    CHECK(lines == 1 + ticks * (static_cast<long long>(f.nodes.size()) + 1));
}

TEST_CASE("query order does not change the merged report") {
    std::vector<Sequence> strings = {{"db", "TGACTCGACC"},
                                     {"q1", "TACTGCCTCG"},
                                     {"q2", "CTGGCTAATA"},
                                     {"q3", "ATTCTGACT"}};
    SearchConfig config{5, 1, 4};
    Forest a = build_forest(strings[0], config);
    Forest b = build_forest(strings[0], config);
    std::vector<Sequence> forward(strings.begin() + 1, strings.end());
    std::vector<Sequence> backward(strings.rbegin(), strings.rend() - 1);
    CasReport ra = run_all(a, forward);
    CasReport rb = run_all(b, backward);
    REQUIRE(ra.entries.size() == rb.entries.size());
    for (std::size_t i = 0; i < ra.entries.size(); ++i) {
        CHECK(ra.entries[i].motif == rb.entries[i].motif);
        CHECK(ra.entries[i].verified == rb.entries[i].verified);
    }
}

TEST_CASE("empty forest still consumes the full schedule") {
    Forest f = deserialize("CAF1 m=3 d=1 n=1 alphabet=ACGT orientation=motif-reversed\n");
    std::ostringstream sink;
    trace(f, Sequence{"q", "TCT"}, sink);
    CHECK(sink.str() == "TICKS 9\n");
    SystolicSimulator sim(f);
    RunResult r = sim.run_string(Sequence{"q", "TCT"});
    CHECK(r.ticks == 9);
    CHECK(r.potential.empty());
}

TEST_CASE("query validation") {
    Forest f = build_forest(Sequence{"db", "ACT"}, SearchConfig{3, 1, 2});
    SystolicSimulator sim(f);
    Sequence shorter{"q", "AC"};
    CHECK_THROWS_AS(sim.run_string(shorter), CasError);
    Sequence outside{"q", "ACTN"};
    CHECK_THROWS_AS(sim.run_string(outside), CasError);
}
