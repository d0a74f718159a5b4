#pragma once

#include "swcodes/params.hpp"

namespace swcodes {

/// A VT syndrome value in Z_{2L} together with its fixed-width binary form.
struct VtTag {
    long long value = 0;      // in [0, 2L)
    int modulus_base = 0;     // L
    int width = 0;            // ceil(log2(2L))

    BitSeq to_bits() const;
    static VtTag from_bits(const BitSeq& bits, int modulus_base);
};

/// Bits needed for a value in Z_{2L}: ceil(log2(2L)).
int vt_tag_width(int modulus_base);

/// Syn(x) = sum of i*x_i over 1-indexed positions, reduced mod 2L.
VtTag vt_syndrome(const BitSeq& x, int modulus_base);

/// Recover the word with the expected syndrome from a received word that
/// differs from it in at most one position. Throws UndecodableError when the
/// syndrome difference is inconsistent with any single substitution.
BitSeq vt_correct(const BitSeq& received, const VtTag& expected, int modulus_base);

}  // namespace swcodes
