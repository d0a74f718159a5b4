#include "swcodes/bitseq.hpp"

#include <stdexcept>

namespace swcodes {

BitSeq::BitSeq(std::initializer_list<int> bits) {
    bits_.reserve(bits.size());
    for (int b : bits) push_back(b);
}

BitSeq BitSeq::from_string(std::string_view s) {
    BitSeq out;
    out.bits_.reserve(s.size());
    for (char c : s) {
        if (c != '0' && c != '1')
            throw std::invalid_argument("BitSeq: invalid character '" + std::string(1, c) + "'");
        out.bits_.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return out;
}

BitSeq BitSeq::from_uint(std::uint64_t value, int len) {
    if (len < 0 || len > 64) throw std::invalid_argument("BitSeq::from_uint: len out of range");
    if (len < 64 && (value >> len) != 0)
        throw std::invalid_argument("BitSeq::from_uint: value does not fit");
    BitSeq out(static_cast<std::size_t>(len));
    for (int i = 0; i < len; ++i)
        out.bits_[static_cast<std::size_t>(i)] =
            static_cast<std::uint8_t>((value >> (len - 1 - i)) & 1u);
    return out;
}

std::string BitSeq::to_string() const {
    std::string s(bits_.size(), '0');
    for (std::size_t i = 0; i < bits_.size(); ++i) s[i] = static_cast<char>('0' + bits_[i]);
    return s;
}

std::uint64_t BitSeq::to_uint() const {
    if (bits_.size() > 64) throw std::invalid_argument("BitSeq::to_uint: sequence too long");
    std::uint64_t v = 0;
    for (std::uint8_t b : bits_) v = (v << 1) | b;
    return v;
}

int BitSeq::bit(std::size_t pos) const {
    if (pos < 1 || pos > bits_.size()) throw std::out_of_range("BitSeq::bit: position out of range");
    return bits_[pos - 1];
}

void BitSeq::set_bit(std::size_t pos, int value) {
    if (pos < 1 || pos > bits_.size())
        throw std::out_of_range("BitSeq::set_bit: position out of range");
    if (value != 0 && value != 1) throw std::invalid_argument("BitSeq::set_bit: value not a bit");
    bits_[pos - 1] = static_cast<std::uint8_t>(value);
}

void BitSeq::push_back(int value) {
    if (value != 0 && value != 1) throw std::invalid_argument("BitSeq::push_back: value not a bit");
    bits_.push_back(static_cast<std::uint8_t>(value));
}

void BitSeq::append(const BitSeq& other) {
    bits_.insert(bits_.end(), other.bits_.begin(), other.bits_.end());
}

BitSeq BitSeq::prefix(std::size_t len) const {
    if (len > bits_.size()) throw std::out_of_range("BitSeq::prefix: length exceeds size");
    BitSeq out;
    out.bits_.assign(bits_.begin(), bits_.begin() + static_cast<std::ptrdiff_t>(len));
    return out;
}

BitSeq BitSeq::suffix(std::size_t len) const {
    if (len > bits_.size()) throw std::out_of_range("BitSeq::suffix: length exceeds size");
    BitSeq out;
    out.bits_.assign(bits_.end() - static_cast<std::ptrdiff_t>(len), bits_.end());
    return out;
}

BitSeq BitSeq::slice(std::size_t pos, std::size_t len) const {
    if (pos < 1 || pos + len - 1 > bits_.size())
        throw std::out_of_range("BitSeq::slice: range out of bounds");
    BitSeq out;
    out.bits_.assign(bits_.begin() + static_cast<std::ptrdiff_t>(pos - 1),
                     bits_.begin() + static_cast<std::ptrdiff_t>(pos - 1 + len));
    return out;
}

BitSeq BitSeq::complemented() const {
    BitSeq out = *this;
    for (auto& b : out.bits_) b ^= 1u;
    return out;
}

BitSeq concat(const BitSeq& x, const BitSeq& y) {
    BitSeq out = x;
    out.append(y);
    return out;
}

int weight(const BitSeq& x) {
    int w = 0;
    for (std::size_t i = 1; i <= x.size(); ++i) w += x.bit(i);
    return w;
}

BitSeq subblock(const BitSeq& x, std::size_t i, std::size_t ell) {
    if (ell == 0 || x.size() % ell != 0)
        throw std::invalid_argument("subblock: length is not a multiple of ell");
    const std::size_t m = x.size() / ell;
    if (i < 1 || i > m) throw std::out_of_range("subblock: index out of range");
    return x.slice((i - 1) * ell + 1, ell);
}

BitSeq window(const BitSeq& x, std::size_t i, std::size_t ell) {
    if (ell == 0 || ell > x.size() || i < 1 || i > x.size() - ell + 1)
        throw std::out_of_range("window: index out of range");
    return x.slice(i, ell);
}

BitSeq flip_prefix(const BitSeq& x, std::size_t t) {
    if (t > x.size()) throw std::out_of_range("flip_prefix: t out of range");
    BitSeq out = x;
    for (std::size_t p = 1; p <= t; ++p) out.set_bit(p, 1 - out.bit(p));
    return out;
}

BitSeq interleave(const BitSeq& x, const BitSeq& y) {
    if (x.size() != y.size()) throw std::invalid_argument("interleave: length mismatch");
    BitSeq out;
    for (std::size_t i = 1; i <= x.size(); ++i) {
        out.push_back(x.bit(i));
        out.push_back(y.bit(i));
    }
    return out;
}

}  // namespace swcodes
