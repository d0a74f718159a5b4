#pragma once

#include <boost/rational.hpp>
#include <optional>
#include <stdexcept>
#include <string>

#include "swcodes/bitseq.hpp"

namespace swcodes {

using Rational = boost::rational<long long>;

/// Invalid or infeasible parameters, reported at construction time.
struct ParamError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A codeword that cannot have been produced by the matching encoder.
struct DecodeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UnknownSuffixError : DecodeError {
    using DecodeError::DecodeError;
};

struct MalformedCodewordError : DecodeError {
    using DecodeError::DecodeError;
};

/// Received word is not within the decoder's error model.
struct UndecodableError : DecodeError {
    using DecodeError::DecodeError;
};

/// Enumeration or state-space budget exceeded.
struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// ceil(f * len) and floor(f * len) in exact arithmetic.
long long ceil_mul(const Rational& f, long long len);
long long floor_mul(const Rational& f, long long len);

Rational parse_rational(const std::string& s);  // "num/den" or "num"

/// Code parameters: codeword length n, subblock/window length ell, and the
/// integer weight band [a, b] enforced on each subblock or window. An optional
/// fractional profile (p1, p2) with 0 <= p1 < 1/2 < p2 <= 1 drives the codecs
/// that rescale the band to shorter payload lengths.
struct CodeParams {
    int n = 0;
    int ell = 0;
    int a = 0;
    int b = 0;
    std::optional<Rational> p1;
    std::optional<Rational> p2;

    /// Band given explicitly; profile derived as (a/ell, b/ell) when it
    /// straddles 1/2, otherwise left unset.
    static CodeParams with_band(int n, int ell, int a, int b);

    /// Band derived from the profile: [ceil(p1*ell), floor(p2*ell)].
    static CodeParams with_profile(int n, int ell, Rational p1, Rational p2);

    /// Minimum-weight-only constraint (b = ell), for the polarity scheme.
    static CodeParams min_weight(int n, int ell, int a);

    bool has_profile() const { return p1.has_value() && p2.has_value(); }
    int m() const;  // number of subblocks; requires n % ell == 0

    /// Weight band [lo, hi] for a rescaled length, from the profile.
    std::pair<int, int> band_for(int len) const;

    void validate() const;  // throws ParamError
};

enum class ConstraintMode { Subblock, Window };

struct Membership {
    bool ok = false;
    /// 1-indexed subblock or window index of the first violation; 0 when ok.
    std::size_t first_violation = 0;
};

/// Verdict on whether every subblock (resp. sliding window) of x has weight
/// within [params.a, params.b].
Membership check_membership(const BitSeq& x, const CodeParams& params, ConstraintMode mode);

}  // namespace swcodes
