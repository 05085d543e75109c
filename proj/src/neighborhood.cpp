#include "casforest/neighborhood.hpp"

#include <limits>

namespace casforest {

std::size_t hamming(const Motif& a, const Motif& b) {
    if (a.size() != b.size()) {
        throw CasError("hamming distance of unequal lengths (" +
                       std::to_string(a.size()) + " vs " + std::to_string(b.size()) + ")");
    }
    std::size_t dist = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        dist += a[i] != b[i];
    }
    return dist;
}

namespace {

// Substitutes `remaining` positions of work, none earlier than `start`, and
// emits every completed variant. Substituted positions always get a symbol
// different from the generator's, so no motif is produced twice.
void substitute(Motif& work, const Motif& g, const Alphabet& alphabet,
                std::size_t start, int remaining, std::vector<Motif>& out) {
    if (remaining == 0) {
        out.push_back(work);
        return;
    }
    for (std::size_t pos = start; pos + remaining <= work.size(); ++pos) {
        for (std::size_t s = 0; s < alphabet.size(); ++s) {
            char c = alphabet.symbol(s);
            if (c == g[pos]) {
                continue;
            }
            work[pos] = c;
            substitute(work, g, alphabet, pos + 1, remaining - 1, out);
        }
        work[pos] = g[pos];
    }
}

}  // namespace

std::vector<Motif> ball(const Motif& g, int d, const Alphabet& alphabet) {
    if (d < 0 || static_cast<std::size_t>(d) > g.size()) {
        throw CasError("neighborhood distance d = " + std::to_string(d) +
                       " outside 0..m for motif of length " + std::to_string(g.size()));
    }
    for (char c : g) {
        if (!alphabet.contains(c)) {
            throw CasError(std::string("motif symbol '") + c + "' is not in the alphabet");
        }
    }
    std::vector<Motif> out;
    Motif work = g;
    for (int count = 0; count <= d; ++count) {
        substitute(work, g, alphabet, 0, count, out);
    }
    return out;
}

std::uint64_t ball_size(int m, int d, int sigma) {
    if (m < 0 || d < 0 || d > m) {
        throw CasError("ball_size requires 0 <= d <= m");
    }
    if (sigma < 2) {
        throw CasError("ball_size requires sigma >= 2");
    }
    using u128 = unsigned __int128;
    const u128 limit = std::numeric_limits<std::uint64_t>::max();
    u128 total = 0;
    u128 binom = 1;  // C(m, i)
    u128 power = 1;  // (sigma - 1)^i
    for (int i = 0; i <= d; ++i) {
        if (i > 0) {
            binom = binom * static_cast<u128>(m - i + 1) / static_cast<u128>(i);
            power *= static_cast<u128>(sigma - 1);
        }
        if (binom > limit || power > limit) {
            throw CasError("ball size overflows 64 bits");
        }
        total += binom * power;
        if (total > limit) {
            throw CasError("ball size overflows 64 bits");
        }
    }
    return static_cast<std::uint64_t>(total);
}

}  // namespace casforest
