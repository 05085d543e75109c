#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "casforest/error.hpp"

namespace casforest {

// Fixed-width bit vector indexed by string number, bit j for string j
// (1-based, bit 1 = least significant). Serialized as big-endian hex.
class StringBits {
public:
    StringBits() = default;

    explicit StringBits(int n) : n_(n), words_((n + 63) / 64, 0) {
        if (n < 1) {
            throw CasError("string bit vector needs at least 1 bit");
        }
    }

    int size() const { return n_; }

    void set(int j) {
        check(j);
        words_[(j - 1) / 64] |= std::uint64_t{1} << ((j - 1) % 64);
    }

    bool test(int j) const {
        check(j);
        return (words_[(j - 1) / 64] >> ((j - 1) % 64)) & 1;
    }

    // True iff bits 1..n are all set.
    bool all() const {
        for (int j = 1; j <= n_; ++j) {
            if (!test(j)) {
                return false;
            }
        }
        return true;
    }

    int count() const {
        int c = 0;
        for (std::uint64_t w : words_) {
            c += std::popcount(w);
        }
        return c;
    }

    std::string to_hex() const {
        static const char* digits = "0123456789abcdef";
        std::string out;
        for (auto it = words_.rbegin(); it != words_.rend(); ++it) {
            for (int shift = 60; shift >= 0; shift -= 4) {
                out.push_back(digits[(*it >> shift) & 0xf]);
            }
        }
        std::size_t first = out.find_first_not_of('0');
        if (first == std::string::npos) {
            return "0";
        }
        return out.substr(first);
    }

    static StringBits from_hex(const std::string& hex, int n) {
        if (hex.empty()) {
            throw CasError("empty string bit vector");
        }
        StringBits bits(n);
        for (char c : hex) {
            int digit;
            if (c >= '0' && c <= '9') {
                digit = c - '0';
            } else if (c >= 'a' && c <= 'f') {
                digit = c - 'a' + 10;
            } else if (c >= 'A' && c <= 'F') {
                digit = c - 'A' + 10;
            } else {
                throw CasError(std::string("invalid hex digit '") + c + "' in string bit vector");
            }
            // shift the whole vector left by 4, checking nothing falls off
            std::uint64_t carry = static_cast<std::uint64_t>(digit);
            for (std::uint64_t& w : bits.words_) {
                std::uint64_t next_carry = w >> 60;
                w = (w << 4) | carry;
                carry = next_carry;
            }
            if (carry != 0) {
                throw CasError("string bit vector \"" + hex + "\" does not fit " +
                               std::to_string(n) + " bits");
            }
        }
        // bits above n must be clear
        for (int j = n + 1; j <= static_cast<int>(bits.words_.size()) * 64; ++j) {
            if ((bits.words_[(j - 1) / 64] >> ((j - 1) % 64)) & 1) {
                throw CasError("string bit vector \"" + hex + "\" does not fit " +
                               std::to_string(n) + " bits");
            }
        }
        return bits;
    }

    bool operator==(const StringBits& other) const = default;

private:
    void check(int j) const {
        if (j < 1 || j > n_) {
            throw CasError("string index " + std::to_string(j) + " outside 1.." +
                           std::to_string(n_));
        }
    }

    int n_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace casforest
