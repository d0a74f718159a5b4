#include "swcodes/params.hpp"

namespace swcodes {

long long ceil_mul(const Rational& f, long long len) {
    const long long num = f.numerator() * len;
    const long long den = f.denominator();
    return num / den + (num % den != 0 && num > 0 ? 1 : 0);
}

long long floor_mul(const Rational& f, long long len) {
    const long long num = f.numerator() * len;
    const long long den = f.denominator();
    return num / den - (num % den != 0 && num < 0 ? 1 : 0);
}

Rational parse_rational(const std::string& s) {
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(std::stoll(s), 1);
        const long long num = std::stoll(s.substr(0, slash));
        const long long den = std::stoll(s.substr(slash + 1));
        if (den <= 0) throw ParamError("rational: denominator must be positive");
        return Rational(num, den);
    } catch (const std::logic_error&) {
        throw ParamError("rational: cannot parse '" + s + "'");
    }
}

CodeParams CodeParams::with_band(int n, int ell, int a, int b) {
    CodeParams p;
    p.n = n;
    p.ell = ell;
    p.a = a;
    p.b = b;
    if (ell > 0 && Rational(a, ell) < Rational(1, 2) && Rational(1, 2) < Rational(b, ell)) {
        p.p1 = Rational(a, ell);
        p.p2 = Rational(b, ell);
    }
    p.validate();
    return p;
}

CodeParams CodeParams::with_profile(int n, int ell, Rational p1, Rational p2) {
    CodeParams p;
    p.n = n;
    p.ell = ell;
    p.p1 = p1;
    p.p2 = p2;
    if (ell > 0) {
        p.a = static_cast<int>(ceil_mul(p1, ell));
        p.b = static_cast<int>(floor_mul(p2, ell));
    }
    p.validate();
    return p;
}

CodeParams CodeParams::min_weight(int n, int ell, int a) {
    return with_band(n, ell, a, ell);
}

int CodeParams::m() const {
    if (ell <= 0 || n % ell != 0) throw ParamError("params: n is not a multiple of ell");
    return n / ell;
}

std::pair<int, int> CodeParams::band_for(int len) const {
    if (!has_profile()) throw ParamError("params: fractional profile required");
    return {static_cast<int>(ceil_mul(*p1, len)), static_cast<int>(floor_mul(*p2, len))};
}

void CodeParams::validate() const {
    if (ell <= 0) throw ParamError("params: ell must be positive");
    if (n < ell) throw ParamError("params: ell must not exceed n");
    if (a < 0 || a > b || b > ell) throw ParamError("params: need 0 <= a <= b <= ell");
    if (p1.has_value() != p2.has_value())
        throw ParamError("params: p1 and p2 must be given together");
    if (has_profile()) {
        if (*p1 < Rational(0) || !(*p1 < Rational(1, 2)) || !(Rational(1, 2) < *p2) ||
            *p2 > Rational(1))
            throw ParamError("params: need 0 <= p1 < 1/2 < p2 <= 1");
        const auto [lo, hi] = band_for(ell);
        if (lo < a || hi > b) throw ParamError("params: profile band exceeds [a, b]");
    }
}

Membership check_membership(const BitSeq& x, const CodeParams& params, ConstraintMode mode) {
    params.validate();
    const auto ell = static_cast<std::size_t>(params.ell);
    if (mode == ConstraintMode::Subblock) {
        if (x.size() % ell != 0)
            throw ParamError("check_membership: length is not a multiple of ell");
        const std::size_t m = x.size() / ell;
        for (std::size_t i = 1; i <= m; ++i) {
            const int w = weight(subblock(x, i, ell));
            if (w < params.a || w > params.b) return {false, i};
        }
        return {true, 0};
    }
    if (x.size() < ell) throw ParamError("check_membership: sequence shorter than ell");
    // Sliding weight, one window per step.
    int w = weight(x.prefix(ell));
    for (std::size_t i = 1;; ++i) {
        if (w < params.a || w > params.b) return {false, i};
        if (i == x.size() - ell + 1) break;
        w += x.bit(i + ell) - x.bit(i);
    }
    return {true, 0};
}

}  // namespace swcodes
