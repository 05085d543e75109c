#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "casforest/sequence.hpp"
#include "casforest/string_bits.hpp"

namespace casforest {

// Which way a root-to-leaf path spells its motif.
//
// MotifReversed (the default): the root holds the motif's LAST character.
// The streaming dataflow sums, for the number following character c_k, the
// comparison of c_{k-j+1} against the level-j symbol, so a path spelling q
// accumulates hamming(window, reverse(q)). Storing reverse(M) on the path
// makes the exit fire exactly on windows within d of M.
//
// MotifForward: the root holds the first character, the way a trie is
// usually drawn. Exits then fire on reversed windows; kept selectable for
// tracing and for the orientation tests. Wire token: "paper-literal".
enum class Orientation { MotifReversed, MotifForward };

std::string_view orientation_token(Orientation o);
Orientation parse_orientation(std::string_view token);

// Processing element of the array. Levels run 1 (roots) to m (leaves);
// children carry distinct symbols and sit one level below their parent.
struct ForestNode {
    int id = -1;
    int level = 0;
    char symbol = 0;
    int parent = -1;  // -1 marks a root
    std::vector<int> children;
    int exit_id = -1;  // attached exit, leaves only
};

// Terminal element below one leaf. Records which strings found the leaf's
// motif a potential CAS solution; bit 1 (the database string) is set when
// the forest is built. The motif is stored in database orientation no
// matter how the path spells it.
struct ExitNode {
    int id = -1;
    int leaf = -1;
    Motif motif;
    StringBits strings;
};

struct NodeCounts {
    long long processing = 0;
    long long exits = 0;

    bool operator==(const NodeCounts& other) const = default;
};

// Prefix-shared trie over the union of the database windows' distance-d
// neighborhoods. Sharing is restricted to prefixes: distinct motifs always
// end at distinct leaves, so suffixes below diverging prefixes are never
// merged the way a reduced decision diagram would.
//
// Node ids are assigned breadth-first with roots and siblings in alphabet
// order; exits are numbered by leaf id. Immutable after build except the
// exit string bits, which only the engine's merge step flips.
struct Forest {
    SearchConfig config;
    Alphabet alphabet = Alphabet::dna();
    Orientation orientation = Orientation::MotifReversed;
    std::vector<int> roots;
    std::vector<ForestNode> nodes;  // id == index
    std::vector<ExitNode> exits;    // id == index

    // Symbols from the root down to the given leaf.
    std::string path_string(int leaf_id) const;
};

NodeCounts node_counts(const Forest& f);

// Builds the shared forest for db: every length-m window seeds its
// neighborhood, the union is inserted into one trie, and each distinct
// motif gets exactly one exit.
Forest build_forest(const Sequence& db, const SearchConfig& config,
                    Orientation orientation = Orientation::MotifReversed,
                    const Alphabet& alphabet = Alphabet::dna());

}  // namespace casforest
