#pragma once

#include <cstdint>
#include <vector>

#include "casforest/sequence.hpp"

namespace casforest {

// Number of positions where a and b differ; lengths must match.
std::size_t hamming(const Motif& a, const Motif& b);

// All motifs within hamming distance d of the generator g, g included.
// Enumeration order is fixed so forests and serializations are reproducible:
// increasing substitution count, substituted positions left to right,
// replacement symbols in alphabet order. Each motif is emitted exactly once.
std::vector<Motif> ball(const Motif& g, int d,
                        const Alphabet& alphabet = Alphabet::dna());

// |ball| in closed form: sum over i = 0..d of C(m, i) * (sigma - 1)^i.
std::uint64_t ball_size(int m, int d, int sigma);

}  // namespace casforest
