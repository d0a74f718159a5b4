#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "swcodes/params.hpp"

namespace swcodes {

/// Candidate flip-prefix lengths stepped by k over [0, domain_length]:
/// {0, domain_length} plus every multiple of step below domain_length.
struct Walk {
    int step = 0;
    int domain_length = 0;
    std::vector<int> indices;  // ascending; 0 and domain_length always present

    Walk(int domain_length, int step);

    std::size_t rank_of(int index) const;  // position within `indices`
};

/// Walk over a payload of the given length with the step clamped so the
/// target band [ceil(p1*len), floor(p2*len)] spans at least `step` integers
/// and therefore cannot be jumped over.
Walk make_profile_walk(const Rational& p1, const Rational& p2, int len);

/// Smallest t in the walk with weight(flip_prefix(x, t)) within [lo, hi].
/// Guaranteed to exist when the walk was built for this band; failure means a
/// parameter-validation bug and throws std::logic_error.
int find_walk_index(const BitSeq& x, const Walk& walk, int lo, int hi);

/// Bijection between walk ranks and balanced words of an even fixed length,
/// in lexicographic order.
class BalancedSuffixTable {
public:
    BalancedSuffixTable(std::size_t entries, int suffix_len);

    int suffix_len() const { return suffix_len_; }
    std::size_t size() const { return by_rank_.size(); }
    const BitSeq& suffix_for(std::size_t rank) const;
    std::size_t rank_for(const BitSeq& suffix) const;  // throws UnknownSuffixError

private:
    int suffix_len_;
    std::vector<BitSeq> by_rank_;
    std::unordered_map<std::uint64_t, std::size_t> rank_by_word_;
};

/// Subblock encoder with a balanced lookup-table suffix: each payload
/// subblock is prefix-flipped into the target band and the chosen walk index
/// is recorded as a balanced suffix, so the whole subblock keeps the band.
class KnuthTableCodec {
public:
    explicit KnuthTableCodec(CodeParams params);

    BitSeq encode(const BitSeq& payload) const;   // m * payload_subblock_len -> n
    BitSeq decode(const BitSeq& codeword) const;  // inverse

    BitSeq encode_subblock(const BitSeq& z) const;
    BitSeq decode_subblock(const BitSeq& y) const;

    const CodeParams& params() const { return params_; }
    const Walk& walk() const { return walk_; }
    int suffix_len() const { return table_.suffix_len(); }
    int payload_subblock_len() const { return payload_subblock_len_; }
    int payload_len() const { return payload_subblock_len_ * params_.m(); }
    int codeword_len() const { return params_.n; }
    int redundancy() const { return params_.n - payload_len(); }

private:
    CodeParams params_;
    int payload_subblock_len_;
    int target_lo_, target_hi_;
    Walk walk_;
    BalancedSuffixTable table_;
};

/// Subblock encoder with a self-describing suffix: the walk rank in binary
/// followed by its complement, decodable without a table.
class KnuthRankCodec {
public:
    explicit KnuthRankCodec(CodeParams params);

    BitSeq encode(const BitSeq& payload) const;   // m * payload_subblock_len -> n
    BitSeq decode(const BitSeq& codeword) const;

    const CodeParams& params() const { return params_; }
    const Walk& walk() const { return walk_; }
    int rank_bits() const { return rank_bits_; }  // suffix is 2 * rank_bits
    int payload_subblock_len() const { return payload_subblock_len_; }
    int payload_len() const { return payload_subblock_len_ * params_.m(); }
    int codeword_len() const { return params_.n; }
    int redundancy() const { return params_.n - payload_len(); }

private:
    CodeParams params_;
    int rank_bits_;
    int payload_subblock_len_;
    int target_lo_, target_hi_;
    Walk walk_;
};

/// One flag bit per subblock: a subblock below the minimum weight is emitted
/// complemented with flag 1, otherwise unchanged with flag 0.
class PolarityCodec {
public:
    explicit PolarityCodec(CodeParams params);  // requires b == ell, a < ell/2

    BitSeq encode(const BitSeq& payload) const;   // m * (ell - 1) -> n
    BitSeq decode(const BitSeq& codeword) const;

    const CodeParams& params() const { return params_; }
    int payload_len() const { return (params_.ell - 1) * params_.m(); }
    int codeword_len() const { return params_.n; }
    int redundancy() const { return params_.m(); }

private:
    CodeParams params_;
};

}  // namespace swcodes
