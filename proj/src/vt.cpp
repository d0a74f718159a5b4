#include "swcodes/vt.hpp"

namespace swcodes {

int vt_tag_width(int modulus_base) {
    if (modulus_base < 1) throw ParamError("vt: modulus base must be positive");
    int w = 1;
    while ((1LL << w) < 2LL * modulus_base) ++w;
    return w;
}

BitSeq VtTag::to_bits() const {
    return BitSeq::from_uint(static_cast<std::uint64_t>(value), width);
}

VtTag VtTag::from_bits(const BitSeq& bits, int modulus_base) {
    const int w = vt_tag_width(modulus_base);
    if (bits.size() != static_cast<std::size_t>(w))
        throw MalformedCodewordError("vt tag: width mismatch");
    const long long v = static_cast<long long>(bits.to_uint());
    if (v >= 2LL * modulus_base) throw MalformedCodewordError("vt tag: value out of range");
    return {v, modulus_base, w};
}

VtTag vt_syndrome(const BitSeq& x, int modulus_base) {
    const int w = vt_tag_width(modulus_base);
    if (x.size() > static_cast<std::size_t>(modulus_base))
        throw ParamError("vt: sequence longer than modulus base");
    long long sum = 0;
    const long long mod = 2LL * modulus_base;
    for (std::size_t i = 1; i <= x.size(); ++i)
        if (x.bit(i)) sum = (sum + static_cast<long long>(i)) % mod;
    return {sum, modulus_base, w};
}

BitSeq vt_correct(const BitSeq& received, const VtTag& expected, int modulus_base) {
    const long long mod = 2LL * modulus_base;
    const long long n = static_cast<long long>(received.size());
    if (n > modulus_base) throw ParamError("vt: sequence longer than modulus base");
    const long long d =
        ((expected.value - vt_syndrome(received, modulus_base).value) % mod + mod) % mod;
    if (d == 0) return received;
    BitSeq out = received;
    // A 0->1 substitution at p raised the syndrome by p, so d = 2L - p;
    // a 1->0 substitution lowered it, so d = p. The indicated bit value
    // disambiguates the single overlap point (d == n == L).
    if (d >= 1 && d <= n && received.bit(static_cast<std::size_t>(d)) == 0) {
        out.set_bit(static_cast<std::size_t>(d), 1);
        return out;
    }
    const long long p = mod - d;
    if (p >= 1 && p <= n && received.bit(static_cast<std::size_t>(p)) == 1) {
        out.set_bit(static_cast<std::size_t>(p), 0);
        return out;
    }
    throw UndecodableError("vt: syndrome difference not explained by one substitution");
}

}  // namespace swcodes
