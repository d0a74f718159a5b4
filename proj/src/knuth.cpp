#include "swcodes/knuth.hpp"

#include <algorithm>
#include <bit>

#include "swcodes/combin.hpp"

namespace swcodes {

Walk::Walk(int domain_length, int step) : step(step), domain_length(domain_length) {
    if (domain_length < 1) throw ParamError("walk: domain length must be positive");
    if (step < 1) throw ParamError("walk: step must be at least 1");
    indices.push_back(0);
    for (int t = step; t < domain_length; t += step) indices.push_back(t);
    indices.push_back(domain_length);
}

std::size_t Walk::rank_of(int index) const {
    const auto it = std::lower_bound(indices.begin(), indices.end(), index);
    if (it == indices.end() || *it != index) throw std::logic_error("walk: index not a member");
    return static_cast<std::size_t>(it - indices.begin());
}

Walk make_profile_walk(const Rational& p1, const Rational& p2, int len) {
    const int lo = static_cast<int>(ceil_mul(p1, len));
    const int hi = static_cast<int>(floor_mul(p2, len));
    if (lo > hi) throw ParamError("walk: empty target band at length " + std::to_string(len));
    const int k = static_cast<int>(
        std::min<long long>(floor_mul(p2 - p1, len), hi - lo + 1));
    if (k < 1) throw ParamError("walk: step would be zero at length " + std::to_string(len));
    return Walk(len, k);
}

int find_walk_index(const BitSeq& x, const Walk& walk, int lo, int hi) {
    if (static_cast<std::size_t>(walk.domain_length) != x.size())
        throw std::logic_error("find_walk_index: walk domain does not match sequence");
    // Success is guaranteed only when the band spans at least `step` integers;
    // the scan itself is well defined either way.
    int w = weight(x);
    int prev = 0;
    for (int t : walk.indices) {
        // weight(f_t) from weight(f_prev): bits prev+1..t change 0<->1
        for (int p = prev + 1; p <= t; ++p) w += x.bit(static_cast<std::size_t>(p)) ? -1 : 1;
        prev = t;
        if (w >= lo && w <= hi) return t;
    }
    throw std::logic_error("find_walk_index: no balancing index found");
}

BalancedSuffixTable::BalancedSuffixTable(std::size_t entries, int suffix_len)
    : suffix_len_(suffix_len) {
    if (suffix_len < 2 || suffix_len % 2 != 0)
        throw ParamError("suffix table: suffix length must be even and positive");
    if (combin::choose(suffix_len, suffix_len / 2) < entries)
        throw ParamError("suffix table: not enough balanced words for the walk");
    by_rank_.reserve(entries);
    for (std::uint64_t v = 0; by_rank_.size() < entries; ++v) {
        if (std::popcount(v) != suffix_len / 2) continue;
        BitSeq word = BitSeq::from_uint(v, suffix_len);
        rank_by_word_.emplace(v, by_rank_.size());
        by_rank_.push_back(std::move(word));
    }
}

const BitSeq& BalancedSuffixTable::suffix_for(std::size_t rank) const {
    if (rank >= by_rank_.size()) throw std::logic_error("suffix table: rank out of range");
    return by_rank_[rank];
}

std::size_t BalancedSuffixTable::rank_for(const BitSeq& suffix) const {
    if (suffix.size() != static_cast<std::size_t>(suffix_len_))
        throw UnknownSuffixError("suffix table: wrong suffix length");
    const auto it = rank_by_word_.find(suffix.to_uint());
    if (it == rank_by_word_.end())
        throw UnknownSuffixError("suffix table: suffix " + suffix.to_string() + " not in table");
    return it->second;
}

namespace {

// Smallest even suffix length whose balanced words cover the walk built over
// the remaining payload length. The walk size shrinks as the suffix grows.
struct SuffixSearch {
    int suffix_len;
    int payload_len;
    int lo, hi;
    Walk walk;
};

SuffixSearch search_table_suffix(const CodeParams& params) {
    std::string last_failure = "no admissible suffix length";
    for (int r = 2; params.ell - r >= 2; r += 2) {
        const int payload = params.ell - r;
        try {
            const auto [lo, hi] = params.band_for(payload);
            Walk walk = make_profile_walk(*params.p1, *params.p2, payload);
            if (combin::choose(r, r / 2) >= walk.indices.size())
                return {r, payload, lo, hi, std::move(walk)};
            last_failure = "walk larger than the balanced suffix space";
        } catch (const ParamError& e) {
            last_failure = e.what();
        }
    }
    throw ParamError(std::string("table codec: ") + last_failure);
}

int ceil_log2(std::uint64_t v) {
    int bits = 0;
    while ((std::uint64_t{1} << bits) < v) ++bits;
    return bits;
}

}  // namespace

KnuthTableCodec::KnuthTableCodec(CodeParams params)
    : params_(std::move(params)), payload_subblock_len_(0), target_lo_(0), target_hi_(0),
      walk_(1, 1), table_(0, 2) {
    params_.validate();
    if (!params_.has_profile()) throw ParamError("table codec: fractional profile required");
    if (params_.ell % 2 != 0) throw ParamError("table codec: ell must be even");
    params_.m();  // subblock structure required
    SuffixSearch s = search_table_suffix(params_);
    payload_subblock_len_ = s.payload_len;
    target_lo_ = s.lo;
    target_hi_ = s.hi;
    walk_ = std::move(s.walk);
    table_ = BalancedSuffixTable(walk_.indices.size(), s.suffix_len);
}

BitSeq KnuthTableCodec::encode_subblock(const BitSeq& z) const {
    const int t = find_walk_index(z, walk_, target_lo_, target_hi_);
    BitSeq out = flip_prefix(z, static_cast<std::size_t>(t));
    out.append(table_.suffix_for(walk_.rank_of(t)));
    return out;
}

BitSeq KnuthTableCodec::decode_subblock(const BitSeq& y) const {
    if (y.size() != static_cast<std::size_t>(params_.ell))
        throw MalformedCodewordError("table codec: subblock length mismatch");
    const BitSeq suffix = y.suffix(static_cast<std::size_t>(table_.suffix_len()));
    const int t = walk_.indices[table_.rank_for(suffix)];
    return flip_prefix(y.prefix(static_cast<std::size_t>(payload_subblock_len_)),
                       static_cast<std::size_t>(t));
}

BitSeq KnuthTableCodec::encode(const BitSeq& payload) const {
    if (payload.size() != static_cast<std::size_t>(payload_len()))
        throw std::invalid_argument("table codec: payload length mismatch");
    BitSeq out;
    for (int i = 1; i <= params_.m(); ++i)
        out.append(encode_subblock(
            subblock(payload, static_cast<std::size_t>(i),
                     static_cast<std::size_t>(payload_subblock_len_))));
    return out;
}

BitSeq KnuthTableCodec::decode(const BitSeq& codeword) const {
    if (codeword.size() != static_cast<std::size_t>(params_.n))
        throw MalformedCodewordError("table codec: codeword length mismatch");
    BitSeq out;
    for (int i = 1; i <= params_.m(); ++i)
        out.append(decode_subblock(subblock(codeword, static_cast<std::size_t>(i),
                                            static_cast<std::size_t>(params_.ell))));
    return out;
}

KnuthRankCodec::KnuthRankCodec(CodeParams params)
    : params_(std::move(params)), rank_bits_(0), payload_subblock_len_(0), target_lo_(0),
      target_hi_(0), walk_(1, 1) {
    params_.validate();
    if (!params_.has_profile()) throw ParamError("rank codec: fractional profile required");
    if (params_.ell % 2 != 0) throw ParamError("rank codec: ell must be even");
    params_.m();
    const Rational d = *params_.p2 - *params_.p1;
    // ceil(log2(floor(1/(p2-p1)) + 1)), grown until the actual walk fits.
    int r = std::max(1, ceil_log2(static_cast<std::uint64_t>(
                            d.denominator() / d.numerator() + 1)));
    std::string last_failure = "no admissible rank width";
    for (; params_.ell - 2 * r >= 2; ++r) {
        const int payload = params_.ell - 2 * r;
        try {
            const auto [lo, hi] = params_.band_for(payload);
            Walk walk = make_profile_walk(*params_.p1, *params_.p2, payload);
            if ((std::uint64_t{1} << r) >= walk.indices.size()) {
                rank_bits_ = r;
                payload_subblock_len_ = payload;
                target_lo_ = lo;
                target_hi_ = hi;
                walk_ = std::move(walk);
                return;
            }
            last_failure = "walk larger than the rank space";
        } catch (const ParamError& e) {
            last_failure = e.what();
        }
    }
    throw ParamError(std::string("rank codec: ") + last_failure);
}

BitSeq KnuthRankCodec::encode(const BitSeq& payload) const {
    if (payload.size() != static_cast<std::size_t>(payload_len()))
        throw std::invalid_argument("rank codec: payload length mismatch");
    BitSeq out;
    for (int i = 1; i <= params_.m(); ++i) {
        const BitSeq z = subblock(payload, static_cast<std::size_t>(i),
                                  static_cast<std::size_t>(payload_subblock_len_));
        const int t = find_walk_index(z, walk_, target_lo_, target_hi_);
        const BitSeq gamma =
            BitSeq::from_uint(static_cast<std::uint64_t>(walk_.rank_of(t)), rank_bits_);
        out.append(flip_prefix(z, static_cast<std::size_t>(t)));
        out.append(gamma);
        out.append(gamma.complemented());
    }
    return out;
}

BitSeq KnuthRankCodec::decode(const BitSeq& codeword) const {
    if (codeword.size() != static_cast<std::size_t>(params_.n))
        throw MalformedCodewordError("rank codec: codeword length mismatch");
    BitSeq out;
    for (int i = 1; i <= params_.m(); ++i) {
        const BitSeq y = subblock(codeword, static_cast<std::size_t>(i),
                                  static_cast<std::size_t>(params_.ell));
        const BitSeq gamma =
            y.slice(static_cast<std::size_t>(payload_subblock_len_) + 1,
                    static_cast<std::size_t>(rank_bits_));
        const BitSeq gbar = y.suffix(static_cast<std::size_t>(rank_bits_));
        if (gbar != gamma.complemented())
            throw UnknownSuffixError("rank codec: suffix halves are not complementary");
        const std::uint64_t rank = gamma.to_uint();
        if (rank >= walk_.indices.size())
            throw UnknownSuffixError("rank codec: suffix rank out of range");
        out.append(flip_prefix(y.prefix(static_cast<std::size_t>(payload_subblock_len_)),
                               static_cast<std::size_t>(walk_.indices[rank])));
    }
    return out;
}

PolarityCodec::PolarityCodec(CodeParams params) : params_(std::move(params)) {
    params_.validate();
    params_.m();
    if (params_.b != params_.ell)
        throw ParamError("polarity codec: upper bound must equal ell");
    if (2 * params_.a >= params_.ell)
        throw ParamError("polarity codec: requires a < ell/2");
}

BitSeq PolarityCodec::encode(const BitSeq& payload) const {
    if (payload.size() != static_cast<std::size_t>(payload_len()))
        throw std::invalid_argument("polarity codec: payload length mismatch");
    BitSeq out;
    for (int i = 1; i <= params_.m(); ++i) {
        const BitSeq z = subblock(payload, static_cast<std::size_t>(i),
                                  static_cast<std::size_t>(params_.ell - 1));
        if (weight(z) < params_.a) {
            out.append(z.complemented());
            out.push_back(1);
        } else {
            out.append(z);
            out.push_back(0);
        }
    }
    return out;
}

BitSeq PolarityCodec::decode(const BitSeq& codeword) const {
    if (codeword.size() != static_cast<std::size_t>(params_.n))
        throw MalformedCodewordError("polarity codec: codeword length mismatch");
    BitSeq out;
    for (int i = 1; i <= params_.m(); ++i) {
        const BitSeq y = subblock(codeword, static_cast<std::size_t>(i),
                                  static_cast<std::size_t>(params_.ell));
        const BitSeq data = y.prefix(static_cast<std::size_t>(params_.ell - 1));
        out.append(y.bit(static_cast<std::size_t>(params_.ell)) ? data.complemented() : data);
    }
    return out;
}

}  // namespace swcodes
