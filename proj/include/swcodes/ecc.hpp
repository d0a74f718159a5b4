#pragma once

#include "swcodes/knuth.hpp"
#include "swcodes/srt.hpp"
#include "swcodes/vt.hpp"

namespace swcodes {

/// Subblock codec with per-subblock single-substitution correction: the inner
/// balanced-suffix encoder runs at a shortened subblock length and each
/// subblock is completed with its VT syndrome followed by the complement, so
/// the tag is balanced and a tag error is always detectable.
class SeccEccCodec {
public:
    explicit SeccEccCodec(CodeParams params);

    BitSeq encode(const BitSeq& payload) const;  // m * inner_payload_len -> n
    /// Corrects at most one substitution per subblock; when `corrections` is
    /// given it receives the number of subblocks where an error was repaired.
    BitSeq decode(const BitSeq& received, int* corrections = nullptr) const;

    const CodeParams& params() const { return params_; }
    const KnuthTableCodec& inner() const { return inner_; }
    int t_syn() const { return t_syn_; }
    int data_len() const { return data_len_; }  // ell - 2*t_syn
    int payload_subblock_len() const { return inner_.payload_subblock_len(); }
    int payload_len() const { return inner_.payload_len(); }
    int codeword_len() const { return params_.n; }
    int redundancy() const { return params_.n - payload_len(); }

private:
    CodeParams params_;
    int t_syn_;
    int data_len_;
    KnuthTableCodec inner_;
};

/// Sliding-window codec with per-block single-substitution correction: the
/// replacement encoder runs over a tightened weight band, then each length-ell
/// block is followed by its VT syndrome interleaved with the complement. The
/// interleaved tag keeps every straddling window inside the outer band.
class SwccEccCodec {
public:
    explicit SwccEccCodec(CodeParams params);

    BitSeq encode(const BitSeq& payload) const;  // n-1 -> n + 2*m*t_syn
    /// Corrects at most one substitution per block; when `corrections` is
    /// given it receives the number of blocks where an error was repaired.
    BitSeq decode(const BitSeq& received, int* corrections = nullptr) const;

    /// Widest inner band [lo, hi] such that every window straddling a tag
    /// stays within [a, b]; exact counterpart of the profile-tightening rule.
    static std::pair<int, int> derive_stage_band(int ell, int t_syn, int a, int b);

    const CodeParams& params() const { return params_; }
    const SrtCodec& stage() const { return stage_; }
    int t_syn() const { return t_syn_; }
    int block_len() const { return params_.ell + 2 * t_syn_; }
    int payload_len() const { return params_.n - 1; }
    int codeword_len() const { return params_.n + 2 * params_.m() * t_syn_; }
    int redundancy() const { return codeword_len() - payload_len(); }

private:
    CodeParams params_;
    int t_syn_;
    SrtCodec stage_;
};

}  // namespace swcodes
