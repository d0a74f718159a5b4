#pragma once

#include <cstdint>

#include "swcodes/params.hpp"

namespace swcodes {

/// Number of length-ell words whose weight lies outside [lo, hi].
std::uint64_t count_forbidden(int ell, int lo, int hi);

/// Bijection between forbidden windows (weight outside [lo, hi]) and their
/// lexicographic ranks, emitted as fixed-width labels. Rank and unrank walk
/// binomial-coefficient accumulators; no table is materialized.
class WindowCodec {
public:
    WindowCodec(int ell, int lo, int hi, int label_bits);

    int ell() const { return ell_; }
    int label_bits() const { return label_bits_; }
    std::uint64_t forbidden_count() const { return forbidden_count_; }
    bool is_forbidden(const BitSeq& w) const;

    BitSeq rank(const BitSeq& w) const;          // label of a forbidden window
    BitSeq unrank(const BitSeq& label) const;    // inverse

private:
    int ell_, lo_, hi_, label_bits_;
    std::uint64_t forbidden_count_;
};

/// Bijection between length-(ell+1) words with a forbidden window and
/// length-(ell-2) words whose weight sits in the rescaled band; realizes the
/// terminal replacement step.
class TailCodec {
public:
    TailCodec(int ell, int lo, int hi, int target_lo, int target_hi);

    int ell() const { return ell_; }
    std::uint64_t offending_count() const { return offending_count_; }  // |G|
    std::uint64_t target_count() const { return target_count_; }
    int target_lo() const { return target_lo_; }
    int target_hi() const { return target_hi_; }
    bool is_offending(const BitSeq& y) const;  // some window forbidden

    BitSeq map(const BitSeq& y) const;      // ell+1 bits -> ell-2 bits
    BitSeq inverse(const BitSeq& t) const;  // recovers y exactly

private:
    std::uint64_t completions_in_g(const BitSeq& prefix) const;
    std::uint64_t rank_in_g(const BitSeq& y) const;
    BitSeq unrank_in_g(std::uint64_t r) const;
    std::uint64_t rank_in_target(const BitSeq& t) const;
    BitSeq unrank_in_target(std::uint64_t r) const;

    int ell_, lo_, hi_, target_lo_, target_hi_;
    std::uint64_t offending_count_, target_count_;
};

/// Sliding-window encoder with exactly one redundant bit: prepend 0, remove
/// forbidden windows left to right (each removal replaced by a one-bit-shorter
/// header), map the terminal length-(ell+1) case through the tail codec, then
/// pad by repeating the last window.
class SrtCodec {
public:
    explicit SrtCodec(CodeParams params);

    BitSeq encode(const BitSeq& payload) const;   // n-1 bits -> n bits
    BitSeq decode(const BitSeq& codeword) const;  // inverse on the image

    const CodeParams& params() const { return params_; }
    int pos_width() const { return pos_width_; }
    int label_bits() const { return label_bits_; }
    const WindowCodec& phi() const { return phi_; }
    const TailCodec& psi() const { return psi_; }
    int payload_len() const { return params_.n - 1; }
    int codeword_len() const { return params_.n; }

private:
    std::size_t first_forbidden_window(const BitSeq& y) const;  // 0 if none

    CodeParams params_;
    int pos_width_, label_bits_;
    WindowCodec phi_;
    TailCodec psi_;
};

}  // namespace swcodes
