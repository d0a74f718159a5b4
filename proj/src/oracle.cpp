#include "swcodes/oracle.hpp"

#include <bit>
#include <cmath>
#include <limits>

namespace swcodes {

namespace {

BigInt big_choose(int n, int k) {
    if (k < 0 || k > n) return 0;
    BigInt r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

void validate_band(int n, int ell, int a, int b) {
    if (ell < 1 || ell > n) throw ParamError("oracle: need 1 <= ell <= n");
    if (a < 0 || a > b || b > ell) throw ParamError("oracle: need 0 <= a <= b <= ell");
}

}  // namespace

BigInt count_secc(int n, int ell, int a, int b) {
    validate_band(n, ell, a, b);
    if (n % ell != 0) throw ParamError("oracle: n is not a multiple of ell");
    BigInt per_block = 0;
    for (int w = a; w <= b; ++w) per_block += big_choose(ell, w);
    BigInt total = 1;
    for (int i = 0; i < n / ell; ++i) total *= per_block;
    return total;
}

BigInt count_swcc(int n, int ell, int a, int b, std::uint64_t max_states) {
    validate_band(n, ell, a, b);
    if (ell > 63 || (std::uint64_t{1} << (ell - 1)) > max_states)
        throw BudgetError("oracle: sliding-window state space exceeds the cap");
    const std::uint64_t states = std::uint64_t{1} << (ell - 1);

    // State: trailing ell-1 bits. Seed with every in-band first window, then
    // append one bit per step, keeping only transitions whose completed
    // window stays in band.
    std::vector<BigInt> dp(states);
    const std::uint64_t wmask = (std::uint64_t{1} << ell) - 1;
    for (std::uint64_t w = 0; w <= wmask; ++w) {
        const int wt = std::popcount(w);
        if (wt >= a && wt <= b) dp[w & (states - 1)] += 1;
    }
    for (int step = 0; step < n - ell; ++step) {
        std::vector<BigInt> next(states);
        for (std::uint64_t s = 0; s < states; ++s) {
            if (dp[s] == 0) continue;
            for (std::uint64_t c = 0; c <= 1; ++c) {
                const std::uint64_t win = (s << 1) | c;
                const int wt = std::popcount(win);
                if (wt >= a && wt <= b) next[win & (states - 1)] += dp[s];
            }
        }
        dp = std::move(next);
    }
    BigInt total = 0;
    for (const auto& v : dp) total += v;
    return total;
}

BoundReport verify_halfspace_bound(int n, int ell, int a, int b, std::uint64_t max_states) {
    validate_band(n, ell, a, b);
    BoundReport r;
    r.n = n;
    r.ell = ell;
    r.a = a;
    r.b = b;
    r.threshold = BigInt(1) << (n - 1);
    r.swcc_count = count_swcc(n, ell, a, b, max_states);
    r.swcc_holds = r.swcc_count >= r.threshold;
    if (n % ell == 0) {
        r.has_secc = true;
        r.secc_count = count_secc(n, ell, a, b);
        r.secc_holds = r.secc_count >= r.threshold;
    }
    const double p1 = static_cast<double>(a) / ell;
    const double p2 = static_cast<double>(b) / ell;
    r.margin_c = std::min(0.5 - p1, p2 - 0.5);
    if (r.margin_c > 0) {
        r.sufficient_ell = std::log(static_cast<double>(n)) / (r.margin_c * r.margin_c);
        r.sufficient_condition = static_cast<double>(ell) >= r.sufficient_ell;
    } else {
        r.sufficient_ell = std::numeric_limits<double>::infinity();
        r.sufficient_condition = false;
    }
    return r;
}

void enumerate_class(int n, int ell, int a, int b, ConstraintMode mode,
                     const std::function<void(const BitSeq&)>& visit, std::uint64_t budget) {
    validate_band(n, ell, a, b);
    if (mode == ConstraintMode::Subblock && n % ell != 0)
        throw ParamError("oracle: n is not a multiple of ell");
    if (n > 62 || (std::uint64_t{1} << n) > budget)
        throw BudgetError("oracle: enumeration budget exceeded");
    const CodeParams params = CodeParams::with_band(n, ell, a, b);
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
        const BitSeq x = BitSeq::from_uint(v, n);
        if (check_membership(x, params, mode).ok) visit(x);
    }
}

std::vector<BitSeq> collect_class(int n, int ell, int a, int b, ConstraintMode mode,
                                  std::uint64_t budget) {
    std::vector<BitSeq> out;
    enumerate_class(n, ell, a, b, mode, [&](const BitSeq& x) { out.push_back(x); }, budget);
    return out;
}

RateReport measure_rate(const std::string& scheme, int payload_bits, int codeword_bits,
                        int ell, int a, int b, ConstraintMode mode, std::uint64_t state_cap) {
    RateReport r;
    r.scheme = scheme;
    r.payload_bits = payload_bits;
    r.codeword_bits = codeword_bits;
    r.redundancy = codeword_bits - payload_bits;
    r.rate = static_cast<double>(payload_bits) / codeword_bits;
    try {
        const BigInt count = mode == ConstraintMode::Subblock
                                 ? count_secc(codeword_bits, ell, a, b)
                                 : count_swcc(codeword_bits, ell, a, b, state_cap);
        r.has_capacity = true;
        r.capacity_estimate = log2_big(count) / codeword_bits;
    } catch (const BudgetError&) {
        r.has_capacity = false;
    }
    return r;
}

double log2_big(const BigInt& v) {
    if (v <= 0) throw std::invalid_argument("log2_big: value must be positive");
    const std::size_t bits = boost::multiprecision::msb(v);
    if (bits <= 52) return std::log2(v.convert_to<double>());
    const BigInt top = v >> (bits - 52);
    return std::log2(top.convert_to<double>()) + static_cast<double>(bits - 52);
}

}  // namespace swcodes
