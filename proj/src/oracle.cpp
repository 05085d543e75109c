#include "casforest/oracle.hpp"

#include <set>

#include "casforest/error.hpp"
#include "casforest/neighborhood.hpp"

namespace casforest {

void CasInstance::validate() const {
    config.validate();
    if (strings.size() != static_cast<std::size_t>(config.n)) {
        throw CasError("instance has " + std::to_string(strings.size()) +
                       " strings but n = " + std::to_string(config.n));
    }
    for (const Sequence& s : strings) {
        if (s.length() < static_cast<std::size_t>(config.m)) {
            throw CasError("string \"" + s.id + "\" has length " + std::to_string(s.length()) +
                           " < m = " + std::to_string(config.m));
        }
        for (char c : s.symbols) {
            if (!alphabet.contains(c)) {
                throw CasError(std::string("string \"") + s.id + "\" contains symbol '" + c +
                               "' outside the alphabet");
            }
        }
    }
}

bool oracle_potential(const Sequence& s, const Motif& motif, int d) {
    const int m = static_cast<int>(motif.size());
    if (s.length() < static_cast<std::size_t>(m)) {
        return false;
    }
    for (const Motif& w : windows(s, m)) {
        if (hamming(w, motif) <= static_cast<std::size_t>(d)) {
            return true;
        }
    }
    return false;
}

std::vector<Motif> oracle_cas(const CasInstance& instance) {
    instance.validate();
    std::set<Motif> candidates;
    for (const Motif& w : windows(instance.strings[0], instance.config.m)) {
        for (Motif& g : ball(w, instance.config.d, instance.alphabet)) {
            candidates.insert(std::move(g));
        }
    }
    std::vector<Motif> solutions;
    for (const Motif& candidate : candidates) {
        bool everywhere = true;
        for (const Sequence& s : instance.strings) {
            if (!oracle_potential(s, candidate, instance.config.d)) {
                everywhere = false;
                break;
            }
        }
        if (everywhere) {
            solutions.push_back(candidate);
        }
    }
    return solutions;  // set iteration is already lexicographic
}

}  // namespace casforest
