#pragma once

#include <iosfwd>
#include <vector>

#include "casforest/sequence.hpp"

namespace casforest {

// Reads FASTA records: lines beginning '>' start a record, everything else
// is sequence data. Whitespace is stripped, lowercase symbols are folded to
// uppercase, and any symbol outside the alphabet is rejected naming the
// record and its 1-based offset. Records without symbols are rejected.
// A header with no text gets the synthesized id "seq<k>" (k = file position).
std::vector<Sequence> parse_fasta(std::istream& in,
                                  const Alphabet& alphabet = Alphabet::dna());

// One record per ">id" line followed by a single sequence line.
// parse_fasta of the result reproduces the records exactly.
void write_fasta(std::ostream& out, const std::vector<Sequence>& seqs);

}  // namespace casforest
