#include "swcodes/ecc.hpp"

namespace swcodes {

namespace {

int checked_tag_width(const CodeParams& p, bool need_profile, const char* who) {
    p.validate();
    p.m();  // subblock structure required
    if (need_profile && !p.has_profile())
        throw ParamError(std::string(who) + ": fractional profile required");
    return vt_tag_width(p.ell);
}

CodeParams inner_knuth_params(const CodeParams& base, int data_len) {
    if (data_len < 4)
        throw ParamError("secc ecc: no room left for data after the syndrome tag");
    return CodeParams::with_profile(base.m() * data_len, data_len, *base.p1, *base.p2);
}

}  // namespace

SeccEccCodec::SeccEccCodec(CodeParams params)
    : params_(std::move(params)),
      t_syn_(checked_tag_width(params_, true, "secc ecc")),
      data_len_(params_.ell - 2 * t_syn_),
      inner_(inner_knuth_params(params_, data_len_)) {}

BitSeq SeccEccCodec::encode(const BitSeq& payload) const {
    if (payload.size() != static_cast<std::size_t>(payload_len()))
        throw std::invalid_argument("secc ecc: payload length mismatch");
    BitSeq out;
    for (int i = 1; i <= params_.m(); ++i) {
        const BitSeq z = inner_.encode_subblock(
            subblock(payload, static_cast<std::size_t>(i),
                     static_cast<std::size_t>(inner_.payload_subblock_len())));
        const BitSeq tag = vt_syndrome(z, params_.ell).to_bits();
        out.append(z);
        out.append(tag);
        out.append(tag.complemented());
    }
    return out;
}

BitSeq SeccEccCodec::decode(const BitSeq& received, int* corrections) const {
    if (received.size() != static_cast<std::size_t>(params_.n))
        throw MalformedCodewordError("secc ecc: codeword length mismatch");
    BitSeq out;
    int repaired = 0;
    for (int i = 1; i <= params_.m(); ++i) {
        const BitSeq block = subblock(received, static_cast<std::size_t>(i),
                                      static_cast<std::size_t>(params_.ell));
        BitSeq z = block.prefix(static_cast<std::size_t>(data_len_));
        const BitSeq p = block.slice(static_cast<std::size_t>(data_len_) + 1,
                                     static_cast<std::size_t>(t_syn_));
        const BitSeq q = block.suffix(static_cast<std::size_t>(t_syn_));
        if (q == p.complemented()) {
            // Clean tag: at most one flip sits in the data part.
            BitSeq fixed = vt_correct(z, VtTag::from_bits(p, params_.ell), params_.ell);
            if (fixed != z) ++repaired;
            z = std::move(fixed);
        } else {
            // Mismatched tag: the single flip hit the tag, so z is clean.
            ++repaired;
        }
        out.append(inner_.decode_subblock(z));
    }
    if (corrections) *corrections = repaired;
    return out;
}

std::pair<int, int> SwccEccCodec::derive_stage_band(int ell, int t_syn, int a, int b) {
    if (ell <= 2 * t_syn) throw ParamError("swcc ecc: tag does not fit inside one window");
    // A straddling window carries i tag bits (weight between floor(i/2) and
    // ceil(i/2)) and a contiguous ell-i segment of the inner word (weight
    // between max(0, lo-i) and min(hi, ell-i)).
    int lo = -1;
    for (int cand = a; cand <= ell && lo < 0; ++cand) {
        bool ok = true;
        for (int i = 1; i <= 2 * t_syn && ok; ++i)
            ok = std::max(0, cand - i) + i / 2 >= a;
        if (ok) lo = cand;
    }
    int hi = -1;
    for (int cand = b; cand >= 0 && hi < 0; --cand) {
        bool ok = true;
        for (int i = 1; i <= 2 * t_syn && ok; ++i)
            ok = std::min(cand, ell - i) + (i + 1) / 2 <= b;
        if (ok) hi = cand;
    }
    if (lo < 0 || hi < 0 || lo > hi)
        throw ParamError("swcc ecc: no inner band keeps straddling windows in [a, b]");
    return {lo, hi};
}

SwccEccCodec::SwccEccCodec(CodeParams params)
    : params_(std::move(params)),
      t_syn_(checked_tag_width(params_, false, "swcc ecc")),
      stage_([&] {
          const auto [lo, hi] = derive_stage_band(params_.ell, t_syn_, params_.a, params_.b);
          CodeParams inner = CodeParams::with_band(params_.n, params_.ell, lo, hi);
          if (!inner.has_profile())
              throw ParamError("swcc ecc: inner band does not straddle 1/2");
          return SrtCodec(inner);
      }()) {}

BitSeq SwccEccCodec::encode(const BitSeq& payload) const {
    if (payload.size() != static_cast<std::size_t>(payload_len()))
        throw std::invalid_argument("swcc ecc: payload length mismatch");
    const BitSeq y = stage_.encode(payload);
    BitSeq out;
    for (int i = 1; i <= params_.m(); ++i) {
        const BitSeq block = subblock(y, static_cast<std::size_t>(i),
                                      static_cast<std::size_t>(params_.ell));
        const BitSeq p = vt_syndrome(block, params_.ell).to_bits();
        out.append(block);
        out.append(interleave(p, p.complemented()));
    }
    return out;
}

BitSeq SwccEccCodec::decode(const BitSeq& received, int* corrections) const {
    if (received.size() != static_cast<std::size_t>(codeword_len()))
        throw MalformedCodewordError("swcc ecc: codeword length mismatch");
    BitSeq y;
    int repaired = 0;
    for (int i = 1; i <= params_.m(); ++i) {
        const BitSeq block = subblock(received, static_cast<std::size_t>(i),
                                      static_cast<std::size_t>(block_len()));
        BitSeq data = block.prefix(static_cast<std::size_t>(params_.ell));
        BitSeq p(static_cast<std::size_t>(t_syn_));
        BitSeq q(static_cast<std::size_t>(t_syn_));
        for (int j = 1; j <= t_syn_; ++j) {
            p.set_bit(static_cast<std::size_t>(j),
                      block.bit(static_cast<std::size_t>(params_.ell + 2 * j - 1)));
            q.set_bit(static_cast<std::size_t>(j),
                      block.bit(static_cast<std::size_t>(params_.ell + 2 * j)));
        }
        if (q == p.complemented()) {
            BitSeq fixed = vt_correct(data, VtTag::from_bits(p, params_.ell), params_.ell);
            if (fixed != data) ++repaired;
            data = std::move(fixed);
        } else {
            ++repaired;  // the flip hit the tag; data is clean
        }
        y.append(data);
    }
    if (corrections) *corrections = repaired;
    return stage_.decode(y);
}

}  // namespace swcodes
