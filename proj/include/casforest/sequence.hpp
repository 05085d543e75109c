#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "casforest/error.hpp"

namespace casforest {

// Ordered symbol set. The order matters: neighborhood enumeration and child
// ordering inside the forest follow it, which keeps every output of the
// toolkit deterministic.
class Alphabet {
public:
    explicit Alphabet(std::string symbols);

    // The DNA alphabet A, C, G, T.
    static const Alphabet& dna();

    std::size_t size() const { return symbols_.size(); }
    const std::string& symbols() const { return symbols_; }
    bool contains(char c) const { return symbols_.find(c) != std::string::npos; }
    char symbol(std::size_t i) const { return symbols_.at(i); }

    bool operator==(const Alphabet& other) const = default;

private:
    std::string symbols_;
};

// A validated symbol string; `symbols` contains only characters of the
// alphabet it was parsed against.
struct Sequence {
    std::string id;
    std::string symbols;

    std::size_t length() const { return symbols.size(); }

    bool operator==(const Sequence& other) const = default;
};

// A candidate substring of length m.
using Motif = std::string;

// Search parameters shared by every stage: motif length m, allowed
// substitution count d, and the number of strings n counting the database
// string itself.
struct SearchConfig {
    int m = 1;
    int d = 0;
    int n = 1;

    // Throws CasError unless 1 <= m, 0 <= d <= m, n >= 1 and
    // m + d + 1 <= 255 (sums ride an 8-bit channel and must not saturate).
    void validate() const;

    bool operator==(const SearchConfig& other) const = default;
};

// Contiguous length-m windows of s, left to right; a sequence of length l
// has exactly l - m + 1 of them.
std::vector<Motif> windows(const Sequence& s, int m);

}  // namespace casforest
