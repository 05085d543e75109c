#include "casforest/sequence.hpp"

namespace casforest {

Alphabet::Alphabet(std::string symbols) : symbols_(std::move(symbols)) {
    if (symbols_.size() < 2) {
        throw CasError("alphabet needs at least 2 symbols");
    }
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        for (std::size_t j = i + 1; j < symbols_.size(); ++j) {
            if (symbols_[i] == symbols_[j]) {
                throw CasError(std::string("alphabet symbol '") + symbols_[i] +
                               "' is duplicated");
            }
        }
    }
}

const Alphabet& Alphabet::dna() {
    static const Alphabet a("ACGT");
    return a;
}

void SearchConfig::validate() const {
    if (m < 1) {
        throw CasError("motif length m must be at least 1");
    }
    if (d < 0 || d > m) {
        throw CasError("error bound d must satisfy 0 <= d <= m");
    }
    if (n < 1) {
        throw CasError("string count n must be at least 1");
    }
    if (m + d + 1 > 255) {
        throw CasError("m + d + 1 must fit the 8-bit sum channel (<= 255)");
    }
}

std::vector<Motif> windows(const Sequence& s, int m) {
    if (m < 1) {
        throw CasError("motif length m must be at least 1");
    }
    if (s.length() < static_cast<std::size_t>(m)) {
        throw CasError("sequence shorter than motif length: \"" + s.id +
                       "\" has length " + std::to_string(s.length()) +
                       " < m = " + std::to_string(m));
    }
    std::vector<Motif> out;
    out.reserve(s.length() - m + 1);
    for (std::size_t i = 0; i + m <= s.length(); ++i) {
        out.push_back(s.symbols.substr(i, m));
    }
    return out;
}

}  // namespace casforest
