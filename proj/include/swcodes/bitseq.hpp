#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace swcodes {

/// Finite binary sequence. Positions are 1-indexed throughout the API,
/// matching the usual coding-theory convention; storage is 0-indexed.
class BitSeq {
public:
    BitSeq() = default;
    explicit BitSeq(std::size_t len) : bits_(len, 0) {}
    BitSeq(std::initializer_list<int> bits);

    /// Parse from a string of '0'/'1' characters. Throws std::invalid_argument
    /// on any other character.
    static BitSeq from_string(std::string_view s);

    /// Value encoded MSB-first into `len` bits, so numeric order equals
    /// lexicographic order on the bit string. Requires len <= 64.
    static BitSeq from_uint(std::uint64_t value, int len);

    std::string to_string() const;
    std::uint64_t to_uint() const;  // requires size() <= 64

    std::size_t size() const { return bits_.size(); }
    bool empty() const { return bits_.empty(); }

    /// 1-indexed access.
    int bit(std::size_t pos) const;
    void set_bit(std::size_t pos, int value);

    void push_back(int value);
    void append(const BitSeq& other);

    BitSeq prefix(std::size_t len) const;
    BitSeq suffix(std::size_t len) const;
    /// 1-indexed start position.
    BitSeq slice(std::size_t pos, std::size_t len) const;

    BitSeq complemented() const;

    bool operator==(const BitSeq& other) const = default;

private:
    std::vector<std::uint8_t> bits_;
};

BitSeq concat(const BitSeq& x, const BitSeq& y);

/// Number of ones.
int weight(const BitSeq& x);

/// i-th subblock of size ell (1-indexed); x must split evenly into subblocks.
BitSeq subblock(const BitSeq& x, std::size_t i, std::size_t ell);

/// i-th window of size ell (1-indexed): x_i ... x_{i+ell-1}.
BitSeq window(const BitSeq& x, std::size_t i, std::size_t ell);

/// Complement the first t bits; t = 0 is the identity.
BitSeq flip_prefix(const BitSeq& x, std::size_t t);

/// x_1 y_1 x_2 y_2 ... x_n y_n; lengths must match.
BitSeq interleave(const BitSeq& x, const BitSeq& y);

}  // namespace swcodes
