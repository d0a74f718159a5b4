#include "swcodes/srt.hpp"

#include <algorithm>
#include <string>

#include "swcodes/combin.hpp"

namespace swcodes {

std::uint64_t count_forbidden(int ell, int lo, int hi) {
    if (ell < 0 || lo < 0 || lo > hi || hi > ell)
        throw ParamError("count_forbidden: need 0 <= lo <= hi <= ell");
    return combin::count_weight_outside(ell, lo, hi);
}

WindowCodec::WindowCodec(int ell, int lo, int hi, int label_bits)
    : ell_(ell), lo_(lo), hi_(hi), label_bits_(label_bits),
      forbidden_count_(count_forbidden(ell, lo, hi)) {
    if (label_bits < 1 || label_bits >= 64)
        throw ParamError("window codec: label width out of range");
    if (forbidden_count_ > (std::uint64_t{1} << label_bits))
        throw ParamError("window codec: forbidden set larger than the label space");
}

bool WindowCodec::is_forbidden(const BitSeq& w) const {
    if (w.size() != static_cast<std::size_t>(ell_))
        throw std::invalid_argument("window codec: window length mismatch");
    const int wt = weight(w);
    return wt < lo_ || wt > hi_;
}

BitSeq WindowCodec::rank(const BitSeq& w) const {
    if (!is_forbidden(w))
        throw std::invalid_argument("window codec: rank of a non-forbidden window");
    std::uint64_t r = 0;
    int prefix_weight = 0;
    for (int pos = 1; pos <= ell_; ++pos) {
        if (w.bit(static_cast<std::size_t>(pos))) {
            // forbidden completions if this bit were 0
            r += combin::count_weight_outside(ell_ - pos, lo_ - prefix_weight,
                                              hi_ - prefix_weight);
            ++prefix_weight;
        }
    }
    return BitSeq::from_uint(r, label_bits_);
}

BitSeq WindowCodec::unrank(const BitSeq& label) const {
    if (label.size() != static_cast<std::size_t>(label_bits_))
        throw std::invalid_argument("window codec: label width mismatch");
    std::uint64_t r = label.to_uint();
    if (r >= forbidden_count_)
        throw std::invalid_argument("window codec: label beyond the forbidden set");
    BitSeq w(static_cast<std::size_t>(ell_));
    int prefix_weight = 0;
    for (int pos = 1; pos <= ell_; ++pos) {
        const std::uint64_t with_zero = combin::count_weight_outside(
            ell_ - pos, lo_ - prefix_weight, hi_ - prefix_weight);
        if (r >= with_zero) {
            r -= with_zero;
            w.set_bit(static_cast<std::size_t>(pos), 1);
            ++prefix_weight;
        }
    }
    return w;
}

TailCodec::TailCodec(int ell, int lo, int hi, int target_lo, int target_hi)
    : ell_(ell), lo_(lo), hi_(hi), target_lo_(target_lo), target_hi_(target_hi),
      offending_count_(0), target_count_(0) {
    if (ell < 3 || ell > combin::kMaxN - 1) throw ParamError("tail codec: ell out of range");
    if (lo < 0 || lo > hi || hi > ell) throw ParamError("tail codec: invalid band");
    if (target_lo < 0 || target_lo > target_hi || target_hi > ell - 2)
        throw ParamError("tail codec: invalid target band");
    offending_count_ = completions_in_g(BitSeq());
    target_count_ = combin::count_weight_in(ell - 2, target_lo, target_hi);
    if (offending_count_ > target_count_)
        throw ParamError("tail codec: offending set larger than the target class");
    // Every image word must keep the full-length window in band once the
    // balanced prefix 10 is prepended.
    if (1 + target_lo < lo || 1 + target_hi > hi)
        throw ParamError("tail codec: target band breaks the replacement window");
}

bool TailCodec::is_offending(const BitSeq& y) const {
    if (y.size() != static_cast<std::size_t>(ell_ + 1))
        throw std::invalid_argument("tail codec: word length mismatch");
    const int w1 = weight(y.prefix(static_cast<std::size_t>(ell_)));
    const int w2 = w1 - y.bit(1) + y.bit(static_cast<std::size_t>(ell_ + 1));
    return w1 < lo_ || w1 > hi_ || w2 < lo_ || w2 > hi_;
}

// Number of words in G (some window forbidden) extending the given prefix to
// the full length ell+1. Word membership depends only on the first bit, the
// weight of the shared inner positions 2..ell, and the last bit.
std::uint64_t TailCodec::completions_in_g(const BitSeq& prefix) const {
    const int i = static_cast<int>(prefix.size());
    const auto bad = [&](int w) { return w < lo_ || w > hi_; };
    if (i == ell_ + 1) return is_offending(prefix) ? 1 : 0;
    const int inner_fixed_hi = std::min(i, ell_);
    int v = 0;
    for (int p = 2; p <= inner_fixed_hi; ++p) v += prefix.bit(static_cast<std::size_t>(p));
    const int free_inner = ell_ - std::max(i, 1);
    std::uint64_t total = 0;
    for (int u = 0; u <= free_inner; ++u) {
        const std::uint64_t ways = combin::choose(free_inner, u);
        for (int f = 0; f <= 1; ++f) {
            if (i >= 1 && f != prefix.bit(1)) continue;
            for (int t = 0; t <= 1; ++t)
                if (bad(f + v + u) || bad(v + u + t)) total += ways;
        }
    }
    return total;
}

std::uint64_t TailCodec::rank_in_g(const BitSeq& y) const {
    std::uint64_t r = 0;
    BitSeq prefix;
    for (int pos = 1; pos <= ell_ + 1; ++pos) {
        if (y.bit(static_cast<std::size_t>(pos))) {
            prefix.push_back(0);
            r += completions_in_g(prefix);
            prefix.set_bit(static_cast<std::size_t>(pos), 1);
        } else {
            prefix.push_back(0);
        }
    }
    return r;
}

BitSeq TailCodec::unrank_in_g(std::uint64_t r) const {
    BitSeq y;
    for (int pos = 1; pos <= ell_ + 1; ++pos) {
        y.push_back(0);
        const std::uint64_t with_zero = completions_in_g(y);
        if (r >= with_zero) {
            r -= with_zero;
            y.set_bit(static_cast<std::size_t>(pos), 1);
        }
    }
    if (r != 0 || !is_offending(y))
        throw std::invalid_argument("tail codec: rank beyond the offending set");
    return y;
}

std::uint64_t TailCodec::rank_in_target(const BitSeq& t) const {
    const int len = ell_ - 2;
    std::uint64_t r = 0;
    int prefix_weight = 0;
    for (int pos = 1; pos <= len; ++pos) {
        if (t.bit(static_cast<std::size_t>(pos))) {
            r += combin::count_weight_in(len - pos, target_lo_ - prefix_weight,
                                         target_hi_ - prefix_weight);
            ++prefix_weight;
        }
    }
    return r;
}

BitSeq TailCodec::unrank_in_target(std::uint64_t r) const {
    const int len = ell_ - 2;
    BitSeq t(static_cast<std::size_t>(len));
    int prefix_weight = 0;
    for (int pos = 1; pos <= len; ++pos) {
        const std::uint64_t with_zero = combin::count_weight_in(
            len - pos, target_lo_ - prefix_weight, target_hi_ - prefix_weight);
        if (r >= with_zero) {
            r -= with_zero;
            t.set_bit(static_cast<std::size_t>(pos), 1);
            ++prefix_weight;
        }
    }
    return t;
}

BitSeq TailCodec::map(const BitSeq& y) const {
    if (!is_offending(y))
        throw std::invalid_argument("tail codec: word has no forbidden window");
    return unrank_in_target(rank_in_g(y));
}

BitSeq TailCodec::inverse(const BitSeq& t) const {
    if (t.size() != static_cast<std::size_t>(ell_ - 2))
        throw MalformedCodewordError("tail codec: image length mismatch");
    const int wt = weight(t);
    if (wt < target_lo_ || wt > target_hi_)
        throw MalformedCodewordError("tail codec: image weight out of band");
    const std::uint64_t r = rank_in_target(t);
    if (r >= offending_count_)
        throw MalformedCodewordError("tail codec: image outside the map's range");
    return unrank_in_g(r);
}

namespace {

int position_width(int n) {
    int w = 1;
    while ((1LL << w) < static_cast<long long>(n) + 1) ++w;
    return w;
}

}  // namespace

SrtCodec::SrtCodec(CodeParams params)
    : params_(std::move(params)), pos_width_(0), label_bits_(0),
      phi_(1, 0, 0, 1), psi_(3, 0, 3, 0, 1) {
    params_.validate();
    if (!params_.has_profile())
        throw ParamError("replacement codec: fractional profile required (band must straddle 1/2)");
    // n == ell leaves a full-length forbidden window with no replacement move.
    if (params_.n < params_.ell + 1)
        throw ParamError("replacement codec: requires n >= ell + 1");
    pos_width_ = position_width(params_.n);
    label_bits_ = params_.ell - 3 - pos_width_;
    if (label_bits_ < 1)
        throw ParamError("replacement codec: header does not fit (ell too small for n)");
    const auto [tlo, thi] = params_.band_for(params_.ell - 2);
    phi_ = WindowCodec(params_.ell, params_.a, params_.b, label_bits_);
    psi_ = TailCodec(params_.ell, params_.a, params_.b, tlo, thi);
}

std::size_t SrtCodec::first_forbidden_window(const BitSeq& y) const {
    const auto ell = static_cast<std::size_t>(params_.ell);
    if (y.size() < ell) return 0;
    int w = weight(y.prefix(ell));
    for (std::size_t i = 1;; ++i) {
        if (w < params_.a || w > params_.b) return i;
        if (i == y.size() - ell + 1) break;
        w += y.bit(i + ell) - y.bit(i);
    }
    return 0;
}

BitSeq SrtCodec::encode(const BitSeq& payload) const {
    const auto n = static_cast<std::size_t>(params_.n);
    const auto ell = static_cast<std::size_t>(params_.ell);
    if (payload.size() != n - 1)
        throw std::invalid_argument("replacement codec: payload length mismatch");

    BitSeq y;
    y.push_back(0);
    y.append(payload);

    while (y.size() > ell + 1) {
        const std::size_t i = first_forbidden_window(y);
        if (i == 0) break;
        const BitSeq w = window(y, i, ell);
        BitSeq next{1, 1};
        next.append(BitSeq::from_uint(i, pos_width_));
        next.append(phi_.rank(w));
        next.append(y.slice(1, i - 1));
        next.append(y.suffix(y.size() - (i - 1) - ell));
        y = std::move(next);
    }
    if (y.size() == ell + 1 && first_forbidden_window(y) != 0) {
        BitSeq next{1, 0};
        next.append(psi_.map(y));
        y = std::move(next);
    }

    // Extension: repeat the last window; every new window is a cyclic shift.
    const BitSeq z = y.suffix(ell);
    while (y.size() < n) y.append(z);
    return y.prefix(n);
}

BitSeq SrtCodec::decode(const BitSeq& codeword) const {
    const auto n = static_cast<std::size_t>(params_.n);
    const auto ell = static_cast<std::size_t>(params_.ell);
    if (codeword.size() != n)
        throw MalformedCodewordError("replacement codec: codeword length mismatch");

    BitSeq c = codeword;
    for (std::size_t steps = 0; c.bit(1) != 0; ++steps) {
        if (steps > n) throw MalformedCodewordError("replacement codec: undo loop does not end");
        if (c.size() < 2) throw MalformedCodewordError("replacement codec: truncated header");
        if (c.bit(2) == 1) {
            if (c.size() < ell - 1)
                throw MalformedCodewordError("replacement codec: truncated header");
            const std::size_t i = c.slice(3, static_cast<std::size_t>(pos_width_)).to_uint();
            const BitSeq label =
                c.slice(3 + static_cast<std::size_t>(pos_width_),
                        static_cast<std::size_t>(label_bits_));
            const BitSeq rest = c.suffix(c.size() - (ell - 1));
            if (i < 1 || i > rest.size() + 1)
                throw MalformedCodewordError("replacement codec: window position out of range");
            BitSeq w;
            try {
                w = phi_.unrank(label);
            } catch (const std::invalid_argument& e) {
                throw MalformedCodewordError(std::string("replacement codec: ") + e.what());
            }
            BitSeq next = rest.prefix(i - 1);
            next.append(w);
            next.append(rest.suffix(rest.size() - (i - 1)));
            c = std::move(next);
        } else {
            if (c.size() < ell)
                throw MalformedCodewordError("replacement codec: truncated replacement");
            // Everything after the replaced prefix is extension padding.
            c = psi_.inverse(c.slice(3, ell - 2));
        }
    }
    if (c.size() < n) throw MalformedCodewordError("replacement codec: word too short");
    return c.slice(2, n - 1);
}

}  // namespace swcodes
