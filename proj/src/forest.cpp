#include "casforest/forest.hpp"

#include <algorithm>
#include <deque>

#include "casforest/neighborhood.hpp"

namespace casforest {

std::string_view orientation_token(Orientation o) {
    switch (o) {
        case Orientation::MotifReversed:
            return "motif-reversed";
        case Orientation::MotifForward:
            return "paper-literal";
    }
    throw CasError("unknown orientation");
}

Orientation parse_orientation(std::string_view token) {
    if (token == "motif-reversed") {
        return Orientation::MotifReversed;
    }
    if (token == "paper-literal") {
        return Orientation::MotifForward;
    }
    throw CasError("unknown orientation \"" + std::string(token) +
                   "\" (expected motif-reversed or paper-literal)");
}

std::string Forest::path_string(int leaf_id) const {
    std::string path;
    for (int id = leaf_id; id >= 0; id = nodes[id].parent) {
        path.push_back(nodes[id].symbol);
    }
    std::reverse(path.begin(), path.end());
    return path;
}

NodeCounts node_counts(const Forest& f) {
    return NodeCounts{static_cast<long long>(f.nodes.size()),
                      static_cast<long long>(f.exits.size())};
}

namespace {

struct TrieNode {
    char symbol = 0;
    int level = 0;
    int parent = -1;
    std::vector<std::pair<char, int>> children;  // sorted by symbol
    Motif exit_motif;                            // leaves only
    bool has_exit = false;
};

int child_of(std::vector<TrieNode>& trie, int parent, char symbol, int level) {
    auto& kids = trie[parent].children;
    auto it = std::lower_bound(kids.begin(), kids.end(), symbol,
                               [](const auto& kv, char c) { return kv.first < c; });
    if (it != kids.end() && it->first == symbol) {
        return it->second;
    }
    int id = static_cast<int>(trie.size());
    kids.insert(it, {symbol, id});
    trie.push_back(TrieNode{symbol, level, parent, {}, {}, false});
    return id;
}

}  // namespace

Forest build_forest(const Sequence& db, const SearchConfig& config,
                    Orientation orientation, const Alphabet& alphabet) {
    config.validate();
    for (char c : db.symbols) {
        if (!alphabet.contains(c)) {
            throw CasError(std::string("database symbol '") + c + "' is not in the alphabet");
        }
    }

    // Temporary trie with a synthetic super-root at index 0.
    std::vector<TrieNode> trie(1);
    for (const Motif& generator : windows(db, config.m)) {
        for (const Motif& motif : ball(generator, config.d, alphabet)) {
            std::string path = motif;
            if (orientation == Orientation::MotifReversed) {
                std::reverse(path.begin(), path.end());
            }
            int node = 0;
            for (int level = 1; level <= config.m; ++level) {
                node = child_of(trie, node, path[level - 1], level);
            }
            if (!trie[node].has_exit) {
                trie[node].has_exit = true;
                trie[node].exit_motif = motif;
            }
        }
    }

    // Breadth-first renumbering; sibling order is already alphabetical.
    Forest forest;
    forest.config = config;
    forest.alphabet = alphabet;
    forest.orientation = orientation;

    std::vector<int> new_id(trie.size(), -1);
    std::deque<int> queue;
    for (const auto& [symbol, child] : trie[0].children) {
        queue.push_back(child);
    }
    while (!queue.empty()) {
        int old = queue.front();
        queue.pop_front();
        int id = static_cast<int>(forest.nodes.size());
        new_id[old] = id;
        const TrieNode& t = trie[old];
        ForestNode node;
        node.id = id;
        node.level = t.level;
        node.symbol = t.symbol;
        node.parent = t.parent == 0 ? -1 : new_id[t.parent];
        forest.nodes.push_back(node);
        if (node.parent < 0) {
            forest.roots.push_back(id);
        } else {
            forest.nodes[node.parent].children.push_back(id);
        }
        for (const auto& [symbol, child] : t.children) {
            queue.push_back(child);
        }
    }

    // Exits in leaf-id order, each with the database string's bit preset.
    for (std::size_t old = 1; old < trie.size(); ++old) {
        if (!trie[old].has_exit) {
            continue;
        }
        ForestNode& leaf = forest.nodes[new_id[old]];
        ExitNode exit;
        exit.leaf = leaf.id;
        exit.motif = trie[old].exit_motif;
        exit.strings = StringBits(config.n);
        exit.strings.set(1);
        leaf.exit_id = -2;  // placeholder until exits are sorted
        forest.exits.push_back(std::move(exit));
    }
    std::sort(forest.exits.begin(), forest.exits.end(),
              [](const ExitNode& a, const ExitNode& b) { return a.leaf < b.leaf; });
    for (std::size_t i = 0; i < forest.exits.size(); ++i) {
        forest.exits[i].id = static_cast<int>(i);
        forest.nodes[forest.exits[i].leaf].exit_id = static_cast<int>(i);
    }
    return forest;
}

}  // namespace casforest
