#include "casforest/forest_io.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <map>
#include <sstream>

namespace casforest {

void serialize(std::ostream& out, const Forest& f) {
    out << "CAF1 m=" << f.config.m << " d=" << f.config.d << " n=" << f.config.n
        << " alphabet=" << f.alphabet.symbols()
        << " orientation=" << orientation_token(f.orientation) << '\n';
    for (const ForestNode& node : f.nodes) {
        out << "N " << node.id << ' ' << node.level << ' ' << node.symbol << ' ';
        if (node.parent < 0) {
            out << '-';
        } else {
            out << node.parent;
        }
        out << '\n';
    }
    for (const ExitNode& exit : f.exits) {
        out << "X " << exit.id << ' ' << exit.leaf << ' ' << exit.motif << ' '
            << exit.strings.to_hex() << '\n';
    }
}

std::string serialize(const Forest& f) {
    std::ostringstream out;
    serialize(out, f);
    return out.str();
}

namespace {

[[noreturn]] void fail(int line_no, const std::string& msg) {
    throw CasError("forest file line " + std::to_string(line_no) + ": " + msg);
}

int parse_int(const std::string& tok, int line_no, const char* what) {
    try {
        std::size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size()) {
            throw std::invalid_argument(tok);
        }
        return v;
    } catch (const std::exception&) {
        fail(line_no, std::string("malformed ") + what + " \"" + tok + "\"");
    }
}

struct RawNode {
    int level = 0;
    char symbol = 0;
    int parent = -1;  // file id, -1 for roots
    int line_no = 0;
};

struct RawExit {
    int leaf = 0;  // file id
    Motif motif;
    std::string hex;
    int line_no = 0;
};

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok) {
        fields.push_back(tok);
    }
    return fields;
}

}  // namespace

Forest deserialize(std::istream& in) {
    std::string line;
    int line_no = 0;

    // header
    SearchConfig config;
    Alphabet alphabet = Alphabet::dna();
    Orientation orientation = Orientation::MotifReversed;
    bool have_header = false;
    while (!have_header && std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty() || line.front() == '#') {
            continue;
        }
        auto fields = split_fields(line);
        if (fields.empty()) {
            continue;
        }
        if (fields[0] != "CAF1") {
            fail(line_no, "unsupported format version \"" + fields[0] + "\" (expected CAF1)");
        }
        if (fields.size() != 6) {
            fail(line_no, "header needs m=, d=, n=, alphabet= and orientation= fields");
        }
        const char* keys[] = {"m=", "d=", "n=", "alphabet=", "orientation="};
        std::string values[5];
        for (int i = 0; i < 5; ++i) {
            const std::string& field = fields[i + 1];
            if (field.rfind(keys[i], 0) != 0) {
                fail(line_no, "expected \"" + std::string(keys[i]) + "\" at header field " +
                                  std::to_string(i + 2));
            }
            values[i] = field.substr(std::string(keys[i]).size());
        }
        config.m = parse_int(values[0], line_no, "m");
        config.d = parse_int(values[1], line_no, "d");
        config.n = parse_int(values[2], line_no, "n");
        try {
            config.validate();
            alphabet = Alphabet(values[3]);
            orientation = parse_orientation(values[4]);
        } catch (const CasError& e) {
            fail(line_no, e.what());
        }
        have_header = true;
    }
    if (!have_header) {
        throw CasError("forest file has no CAF1 header");
    }

    // element lines
    std::map<int, RawNode> raw_nodes;
    std::map<int, RawExit> raw_exits;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty() || line.front() == '#') {
            continue;
        }
        auto fields = split_fields(line);
        if (fields.empty()) {
            continue;
        }
        if (fields[0] == "N") {
            if (fields.size() != 5) {
                fail(line_no, "node line needs: N <id> <level> <symbol> <parent|->");
            }
            int id = parse_int(fields[1], line_no, "node id");
            RawNode node;
            node.level = parse_int(fields[2], line_no, "level");
            if (fields[3].size() != 1) {
                fail(line_no, "node symbol must be a single character");
            }
            node.symbol = fields[3][0];
            if (!alphabet.contains(node.symbol)) {
                fail(line_no, std::string("symbol '") + node.symbol + "' is not in the alphabet");
            }
            node.parent = fields[4] == "-" ? -1 : parse_int(fields[4], line_no, "parent id");
            node.line_no = line_no;
            if (!raw_nodes.emplace(id, node).second) {
                fail(line_no, "duplicate node id " + std::to_string(id));
            }
            if (node.level < 1 || node.level > config.m) {
                fail(line_no, "level " + std::to_string(node.level) + " outside 1.." +
                                  std::to_string(config.m));
            }
        } else if (fields[0] == "X") {
            if (fields.size() != 5) {
                fail(line_no, "exit line needs: X <id> <leaf-node-id> <motif> <bits>");
            }
            int id = parse_int(fields[1], line_no, "exit id");
            RawExit exit;
            exit.leaf = parse_int(fields[2], line_no, "leaf node id");
            exit.motif = fields[3];
            exit.hex = fields[4];
            exit.line_no = line_no;
            if (!raw_exits.emplace(id, exit).second) {
                fail(line_no, "duplicate exit id " + std::to_string(id));
            }
            if (exit.motif.size() != static_cast<std::size_t>(config.m)) {
                fail(line_no, "motif \"" + exit.motif + "\" is not length " +
                                  std::to_string(config.m));
            }
            for (char c : exit.motif) {
                if (!alphabet.contains(c)) {
                    fail(line_no, std::string("motif symbol '") + c + "' is not in the alphabet");
                }
            }
        } else {
            fail(line_no, "unknown line tag \"" + fields[0] + "\"");
        }
    }

    // structural checks against the file ids
    for (const auto& [id, node] : raw_nodes) {
        if (node.parent < 0) {
            if (node.level != 1) {
                fail(node.line_no, "root node " + std::to_string(id) + " must be level 1");
            }
            continue;
        }
        auto parent = raw_nodes.find(node.parent);
        if (parent == raw_nodes.end()) {
            fail(node.line_no, "node " + std::to_string(id) + " references missing node id " +
                                   std::to_string(node.parent));
        }
        if (node.level != parent->second.level + 1) {
            fail(node.line_no, "node " + std::to_string(id) + " at level " +
                                   std::to_string(node.level) + " under a level " +
                                   std::to_string(parent->second.level) + " parent");
        }
    }
    // distinct symbols among siblings (roots share the pseudo-parent -1)
    {
        std::map<std::pair<int, char>, int> seen;
        for (const auto& [id, node] : raw_nodes) {
            auto key = std::make_pair(node.parent, node.symbol);
            auto [it, fresh] = seen.emplace(key, id);
            if (!fresh) {
                fail(node.line_no, "nodes " + std::to_string(it->second) + " and " +
                                       std::to_string(id) + " are siblings with the same symbol '" +
                                       node.symbol + "'");
            }
        }
    }

    std::map<int, int> exit_of_leaf;  // file leaf id -> file exit id
    for (const auto& [id, exit] : raw_exits) {
        auto leaf = raw_nodes.find(exit.leaf);
        if (leaf == raw_nodes.end()) {
            fail(exit.line_no, "exit " + std::to_string(id) + " references missing node id " +
                                   std::to_string(exit.leaf));
        }
        if (leaf->second.level != config.m) {
            fail(exit.line_no, "exit " + std::to_string(id) + " attached to node " +
                                   std::to_string(exit.leaf) + " at level " +
                                   std::to_string(leaf->second.level) + ", want level " +
                                   std::to_string(config.m));
        }
        if (!exit_of_leaf.emplace(exit.leaf, id).second) {
            fail(exit.line_no, "leaf node " + std::to_string(exit.leaf) + " has two exits");
        }
    }

    // every leaf carries an exit, every interior node a child
    std::map<int, int> child_count;
    for (const auto& [id, node] : raw_nodes) {
        if (node.parent >= 0) {
            ++child_count[node.parent];
        }
    }
    for (const auto& [id, node] : raw_nodes) {
        if (node.level == config.m) {
            if (child_count.count(id)) {
                fail(node.line_no, "leaf node " + std::to_string(id) + " has children");
            }
            if (!exit_of_leaf.count(id)) {
                fail(node.line_no, "leaf node " + std::to_string(id) + " has no exit");
            }
        } else if (!child_count.count(id)) {
            fail(node.line_no, "node " + std::to_string(id) + " at level " +
                                   std::to_string(node.level) +
                                   " has no children (paths must reach level " +
                                   std::to_string(config.m) + ")");
        }
    }

    // motifs must spell their paths in the declared orientation
    for (const auto& [id, exit] : raw_exits) {
        std::string path;
        for (int at = exit.leaf; at >= 0; at = raw_nodes.at(at).parent) {
            path.push_back(raw_nodes.at(at).symbol);
        }
        // built leaf-upward: path is reversed w.r.t. root-to-leaf reading
        if (orientation == Orientation::MotifForward) {
            std::reverse(path.begin(), path.end());
        }
        if (path != exit.motif) {
            fail(exit.line_no, "exit " + std::to_string(id) + " motif \"" + exit.motif +
                                   "\" does not match its path");
        }
    }

    // rebuild with canonical breadth-first ids
    Forest forest;
    forest.config = config;
    forest.alphabet = alphabet;
    forest.orientation = orientation;

    std::map<int, std::vector<std::pair<char, int>>> children_of;  // file ids
    std::vector<std::pair<char, int>> root_list;
    for (const auto& [id, node] : raw_nodes) {
        if (node.parent < 0) {
            root_list.push_back({node.symbol, id});
        } else {
            children_of[node.parent].push_back({node.symbol, id});
        }
    }
    auto by_symbol = [](const auto& a, const auto& b) { return a.first < b.first; };
    std::sort(root_list.begin(), root_list.end(), by_symbol);
    for (auto& [id, kids] : children_of) {
        std::sort(kids.begin(), kids.end(), by_symbol);
    }

    std::map<int, int> new_id;
    std::deque<int> queue;
    for (const auto& [symbol, id] : root_list) {
        queue.push_back(id);
    }
    while (!queue.empty()) {
        int old = queue.front();
        queue.pop_front();
        const RawNode& raw = raw_nodes.at(old);
        int id = static_cast<int>(forest.nodes.size());
        new_id[old] = id;
        ForestNode node;
        node.id = id;
        node.level = raw.level;
        node.symbol = raw.symbol;
        node.parent = raw.parent < 0 ? -1 : new_id.at(raw.parent);
        forest.nodes.push_back(node);
        if (node.parent < 0) {
            forest.roots.push_back(id);
        } else {
            forest.nodes[node.parent].children.push_back(id);
        }
        for (const auto& [symbol, child] : children_of[old]) {
            queue.push_back(child);
        }
    }

    std::vector<std::pair<int, int>> exits_by_leaf;  // (new leaf id, file exit id)
    for (const auto& [file_leaf, file_exit] : exit_of_leaf) {
        exits_by_leaf.push_back({new_id.at(file_leaf), file_exit});
    }
    std::sort(exits_by_leaf.begin(), exits_by_leaf.end());
    for (const auto& [leaf, file_exit] : exits_by_leaf) {
        const RawExit& raw = raw_exits.at(file_exit);
        ExitNode exit;
        exit.id = static_cast<int>(forest.exits.size());
        exit.leaf = leaf;
        exit.motif = raw.motif;
        try {
            exit.strings = StringBits::from_hex(raw.hex, config.n);
        } catch (const CasError& e) {
            fail(raw.line_no, e.what());
        }
        if (!exit.strings.test(1)) {
            fail(raw.line_no, "exit " + std::to_string(file_exit) +
                                  " does not record the database string (bit 1)");
        }
        forest.nodes[leaf].exit_id = exit.id;
        forest.exits.push_back(std::move(exit));
    }
    return forest;
}

Forest deserialize(const std::string& text) {
    std::istringstream in(text);
    return deserialize(in);
}

Forest load_forest_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw CasError("cannot open forest file \"" + path + "\"");
    }
    return deserialize(in);
}

void save_forest_file(const std::string& path, const Forest& f) {
    std::ofstream out(path);
    if (!out) {
        throw CasError("cannot write forest file \"" + path + "\"");
    }
    serialize(out, f);
    out.flush();
    if (!out) {
        throw CasError("failed writing forest file \"" + path + "\"");
    }
}

}  // namespace casforest
