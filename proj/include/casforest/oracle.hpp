#pragma once

#include <vector>

#include "casforest/sequence.hpp"

namespace casforest {

// A whole problem instance: n strings with strings[0] the database string.
struct CasInstance {
    std::vector<Sequence> strings;
    SearchConfig config;
    Alphabet alphabet = Alphabet::dna();

    // Throws CasError unless the config is valid, exactly n strings are
    // present, each is at least m long and each uses only alphabet symbols.
    void validate() const;
};

// True iff some length-|motif| window of s lies within Hamming distance d
// of motif. A string shorter than the motif has no windows and yields false.
bool oracle_potential(const Sequence& s, const Motif& motif, int d);

// Reference solver, by direct enumeration: candidates are the union of the
// distance-d neighborhoods of the database windows, and a candidate is a
// solution when every string of the instance has a window within d of it.
// Returned in lexicographic order.
std::vector<Motif> oracle_cas(const CasInstance& instance);

}  // namespace casforest
