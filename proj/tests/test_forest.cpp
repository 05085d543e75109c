#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "casforest/forest.hpp"
#include "casforest/neighborhood.hpp"
#include "testing_util.hpp"

using namespace casforest;
using namespace casforest::testing;

namespace {

// Structural invariants every built forest must satisfy.
void check_well_formed(const Forest& f) {
    const int m = f.config.m;
    for (std::size_t i = 0; i < f.nodes.size(); ++i) {
        const ForestNode& node = f.nodes[i];
        REQUIRE(node.id == static_cast<int>(i));
        REQUIRE(node.level >= 1);
        REQUIRE(node.level <= m);
        CHECK(f.alphabet.contains(node.symbol));
        if (node.parent < 0) {
            CHECK(node.level == 1);
        } else {
            CHECK(node.parent < node.id);  // breadth-first numbering
            CHECK(f.nodes[node.parent].level + 1 == node.level);
        }
        for (std::size_t k = 0; k + 1 < node.children.size(); ++k) {
            CHECK(f.nodes[node.children[k]].symbol < f.nodes[node.children[k + 1]].symbol);
        }
        for (int child : node.children) {
            CHECK(f.nodes[child].parent == node.id);
        }
        if (node.level == m) {
            CHECK(node.children.empty());
            CHECK(node.exit_id >= 0);
        } else {
            CHECK(!node.children.empty());
            CHECK(node.exit_id == -1);
        }
    }
    for (std::size_t r = 0; r < f.roots.size(); ++r) {
        CHECK(f.roots[r] == static_cast<int>(r));
        if (r + 1 < f.roots.size()) {
            CHECK(f.nodes[f.roots[r]].symbol < f.nodes[f.roots[r + 1]].symbol);
        }
    }
    for (std::size_t e = 0; e < f.exits.size(); ++e) {
        const ExitNode& exit = f.exits[e];
        REQUIRE(exit.id == static_cast<int>(e));
        REQUIRE(exit.leaf >= 0);
        REQUIRE(exit.leaf < static_cast<int>(f.nodes.size()));
        CHECK(f.nodes[exit.leaf].exit_id == exit.id);
        if (e + 1 < f.exits.size()) {
            CHECK(exit.leaf < f.exits[e + 1].leaf);
        }
        CHECK(exit.strings.size() == f.config.n);
        CHECK(exit.strings.test(1));  // the database string found its own windows
        CHECK(exit.strings.count() == 1);
        std::string path = f.path_string(exit.leaf);
        if (f.orientation == Orientation::MotifForward) {
            CHECK(path == exit.motif);
        } else {
            std::string reversed(exit.motif.rbegin(), exit.motif.rend());
            CHECK(path == reversed);
        }
    }
}

std::set<Motif> exit_motifs(const Forest& f) {
    std::set<Motif> out;
    for (const ExitNode& e : f.exits) {
        out.insert(e.motif);
    }
    return out;
}

std::set<Motif> union_of_balls(const Sequence& db, const SearchConfig& config) {
    std::set<Motif> out;
    for (const Motif& w : windows(db, config.m)) {
        for (const Motif& g : ball(w, config.d)) {
            out.insert(g);
        }
    }
    return out;
}

}  // namespace

TEST_CASE("single-window forest, both orientations") {
    Sequence db{"db", "ACT"};
    SearchConfig config{3, 1, 4};

    Forest forward = build_forest(db, config, Orientation::MotifForward);
    check_well_formed(forward);
    CHECK(node_counts(forward) == NodeCounts{21, 10});
    REQUIRE(forward.roots.size() == 4);
    CHECK(forward.nodes[forward.roots[0]].symbol == 'A');
    CHECK(forward.nodes[forward.roots[3]].symbol == 'T');

    Forest reversed = build_forest(db, config);
    check_well_formed(reversed);
    CHECK(reversed.orientation == Orientation::MotifReversed);
    CHECK(node_counts(reversed).exits == 10);
    // node count by the book: distinct prefixes of the reversed motifs
    std::vector<Motif> paths;
    for (const Motif& g : ball("ACT", 1)) {
        paths.emplace_back(g.rbegin(), g.rend());
    }
    CHECK(node_counts(reversed).processing == naive_trie_nodes(paths));
    // both orientations store motifs in database orientation
    CHECK(exit_motifs(forward) == exit_motifs(reversed));
    std::set<Motif> b;
    for (const Motif& g : ball("ACT", 1)) {
        b.insert(g);
    }
    CHECK(exit_motifs(forward) == b);
}

TEST_CASE("overlapping windows share prefixes, not leaves") {
    Sequence db{"db", "ACTT"};
    SearchConfig config{3, 1, 2};
    Forest f = build_forest(db, config);
    check_well_formed(f);
    CHECK(exit_motifs(f) == union_of_balls(db, config));
    CHECK(node_counts(f).exits == 18);  // |ball(ACT)| + |ball(CTT)| - |{CCT, ATT}|
}

TEST_CASE("exact matching forest at d = 0") {
    SUBCASE("distinct windows") {
        Sequence db{"db", "TGACTCGACC"};
        Forest f = build_forest(db, SearchConfig{5, 0, 4});
        check_well_formed(f);
        CHECK(node_counts(f).exits == 6);
        CHECK(exit_motifs(f) == std::set<Motif>{"TGACT", "GACTC", "ACTCG", "CTCGA", "TCGAC",
                                                "CGACC"});
    }
    SUBCASE("duplicate windows collapse to one leaf") {
        Sequence db{"db", "AAAA"};
        Forest f = build_forest(db, SearchConfig{2, 0, 1});
        check_well_formed(f);
        CHECK(node_counts(f) == NodeCounts{2, 1});
        CHECK(f.exits[0].motif == "AA");
    }
}

TEST_CASE("build validation") {
    Sequence db{"db", "ACT"};
    SearchConfig config{4, 1, 2};
    CHECK_THROWS_AS(build_forest(db, config), CasError);
    Sequence bad{"db", "ACXT"};
    CHECK_THROWS_AS(build_forest(bad, SearchConfig{2, 0, 1}), CasError);
}

TEST_CASE("random forests match the naive trie") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        std::uniform_int_distribution<int> m_pick(1, 5);
        const int m = m_pick(rng);
        std::uniform_int_distribution<int> d_pick(0, std::min(2, m));
        std::uniform_int_distribution<int> len_pick(m, 20);
        SearchConfig config{m, d_pick(rng), 3};
        Sequence db{"db", random_dna(rng, len_pick(rng))};
        Orientation orientation =
            (rng() & 1) ? Orientation::MotifReversed : Orientation::MotifForward;

        CAPTURE(db.symbols);
        CAPTURE(config.m);
        CAPTURE(config.d);
        Forest f = build_forest(db, config, orientation);
        check_well_formed(f);

        std::set<Motif> expected = union_of_balls(db, config);
        CHECK(exit_motifs(f) == expected);
        CHECK(node_counts(f).exits == static_cast<long long>(expected.size()));

        std::vector<Motif> paths;
        for (const Motif& motif : expected) {
            if (orientation == Orientation::MotifReversed) {
                paths.emplace_back(motif.rbegin(), motif.rend());
            } else {
                paths.push_back(motif);
            }
        }
        CHECK(node_counts(f).processing == naive_trie_nodes(paths));
    }
}

TEST_CASE("builds are deterministic") {
    Sequence db{"db", "TGACTCGACC"};
    SearchConfig config{5, 1, 4};
    Forest a = build_forest(db, config);
    Forest b = build_forest(db, config);
    REQUIRE(a.nodes.size() == b.nodes.size());
    for (std::size_t i = 0; i < a.nodes.size(); ++i) {
        CHECK(a.nodes[i].symbol == b.nodes[i].symbol);
        CHECK(a.nodes[i].parent == b.nodes[i].parent);
        CHECK(a.nodes[i].level == b.nodes[i].level);
    }
    REQUIRE(a.exits.size() == b.exits.size());
    for (std::size_t e = 0; e < a.exits.size(); ++e) {
        CHECK(a.exits[e].motif == b.exits[e].motif);
        CHECK(a.exits[e].leaf == b.exits[e].leaf);
    }
}
