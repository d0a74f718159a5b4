// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Each criterion is checked at the stated scale with tolerances
// pinned in code; brute-force reference counts live here, independent of the
// library's code paths.

#include <unistd.h>

#include <bit>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "swcodes/cli.hpp"
#include "swcodes/combin.hpp"
#include "swcodes/ecc.hpp"
#include "swcodes/knuth.hpp"
#include "swcodes/oracle.hpp"
#include "swcodes/srt.hpp"
#include "swcodes/vt.hpp"

using namespace swcodes;
namespace fs = std::filesystem;

namespace {

struct Harness {
    long long failures = 0;
    long long checks = 0;
    int reported = 0;

    void expect(bool ok, const std::string& what) {
        ++checks;
        if (!ok) {
            ++failures;
            if (reported < 10) {
                std::cerr << "    FAIL: " << what << '\n';
                ++reported;
            }
        }
    }
};

BitSeq random_bits(std::mt19937_64& rng, int len) {
    BitSeq x;
    for (int i = 0; i < len; ++i) x.push_back(static_cast<int>(rng() & 1));
    return x;
}

std::uint64_t brute_count(int n, int ell, int a, int b, bool subblocks) {
    std::uint64_t count = 0;
    const std::uint64_t mask = (std::uint64_t{1} << ell) - 1;
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
        bool ok = true;
        const int step = subblocks ? ell : 1;
        for (int i = 0; ok && i + ell <= n; i += step) {
            const int w = std::popcount((v >> (n - i - ell)) & mask);
            ok = w >= a && w <= b;
        }
        if (ok) ++count;
    }
    return count;
}

// ---- criterion 1 -----------------------------------------------------------

bool criterion1(Harness& h) {
    const std::pair<Rational, Rational> profiles[] = {
        {Rational(1, 4), Rational(3, 4)},
        {Rational(1, 3), Rational(2, 3)},
        {Rational(3, 8), Rational(5, 8)},
    };
    for (const auto& [p1, p2] : profiles) {
        for (int len = 6; len <= 16; len += 2) {
            const Walk walk = make_profile_walk(p1, p2, len);
            const int lo = static_cast<int>(ceil_mul(p1, len));
            const int hi = static_cast<int>(floor_mul(p2, len));
            for (std::uint32_t v = 0; v < (std::uint32_t{1} << len); ++v) {
                const BitSeq x = BitSeq::from_uint(v, len);
                int t = -1;
                try {
                    t = find_walk_index(x, walk, lo, hi);
                } catch (const std::logic_error&) {
                    h.expect(false, "no walk index at len " + std::to_string(len));
                    continue;
                }
                const int w = weight(flip_prefix(x, static_cast<std::size_t>(t)));
                h.expect(w >= lo && w <= hi,
                         "walk index misses the band at len " + std::to_string(len));
            }
        }
    }
    return h.failures == 0;
}

// ---- criterion 2 -----------------------------------------------------------

template <typename Codec>
void roundtrip_exhaustive(Harness& h, const Codec& codec, const std::string& name) {
    const int len = codec.payload_len();
    for (std::uint32_t v = 0; v < (std::uint32_t{1} << len); ++v) {
        const BitSeq x = BitSeq::from_uint(v, len);
        const BitSeq cw = codec.encode(x);
        h.expect(static_cast<int>(cw.size()) == codec.codeword_len(), name + ": length");
        h.expect(check_membership(cw, codec.params(), ConstraintMode::Subblock).ok,
                 name + ": membership");
        h.expect(codec.decode(cw) == x, name + ": round trip");
    }
}

template <typename Codec>
void roundtrip_random(Harness& h, const Codec& codec, int trials, std::mt19937_64& rng,
                      const std::string& name) {
    for (int i = 0; i < trials; ++i) {
        const BitSeq x = random_bits(rng, codec.payload_len());
        const BitSeq cw = codec.encode(x);
        h.expect(check_membership(cw, codec.params(), ConstraintMode::Subblock).ok,
                 name + ": membership");
        h.expect(codec.decode(cw) == x, name + ": round trip");
    }
}

bool criterion2(Harness& h) {
    const Rational q1(1, 4), q3(3, 4);

    // exhaustive single-subblock instances, payloads up to 12 bits
    const KnuthTableCodec s14(CodeParams::with_profile(14, 14, q1, q3));
    h.expect(s14.payload_len() == 10, "s ell=14 payload");
    h.expect(s14.redundancy() == 4, "s ell=14 redundancy");
    roundtrip_exhaustive(h, s14, "s ell=14");

    const KnuthTableCodec s14full(CodeParams::with_profile(14, 14, Rational(0), Rational(1)));
    h.expect(s14full.payload_len() == 12, "s ell=14 full-band payload");
    h.expect(s14full.redundancy() == 2, "s ell=14 full-band redundancy");
    roundtrip_exhaustive(h, s14full, "s ell=14 full band");

    const KnuthTableCodec s12(CodeParams::with_profile(12, 12, Rational(1, 3), Rational(2, 3)));
    h.expect(s12.payload_len() == 8, "s ell=12 payload");
    roundtrip_exhaustive(h, s12, "s ell=12");

    const KnuthRankCodec sp12(CodeParams::with_profile(12, 12, q1, q3));
    h.expect(sp12.payload_len() == 8, "s' ell=12 payload");
    h.expect(sp12.redundancy() == 4, "s' ell=12 redundancy");
    roundtrip_exhaustive(h, sp12, "s' ell=12");

    const KnuthRankCodec sp16(CodeParams::with_profile(16, 16, Rational(1, 3), Rational(2, 3)));
    h.expect(sp16.payload_len() == 12, "s' ell=16 payload");
    roundtrip_exhaustive(h, sp16, "s' ell=16");

    const PolarityCodec pol9(CodeParams::min_weight(9, 9, 4));
    roundtrip_exhaustive(h, pol9, "polarity ell=9");
    const PolarityCodec pol13(CodeParams::min_weight(13, 13, 6));
    h.expect(pol13.payload_len() == 12, "polarity ell=13 payload");
    roundtrip_exhaustive(h, pol13, "polarity ell=13");

    // randomized multi-subblock instances
    std::mt19937_64 rng(20240817);
    for (int m : {2, 3}) {
        roundtrip_random(h, KnuthTableCodec(CodeParams::with_profile(14 * m, 14, q1, q3)),
                         10000, rng, "s m=" + std::to_string(m));
        roundtrip_random(h, KnuthRankCodec(CodeParams::with_profile(12 * m, 12, q1, q3)),
                         10000, rng, "s' m=" + std::to_string(m));
        roundtrip_random(h, PolarityCodec(CodeParams::min_weight(7 * m, 7, 3)), 10000, rng,
                         "polarity m=" + std::to_string(m));
    }
    return h.failures == 0;
}

// ---- criterion 3 -----------------------------------------------------------

bool criterion3(Harness& h) {
    const SrtCodec codec(CodeParams::with_band(16, 10, 1, 9));
    for (std::uint32_t v = 0; v < (std::uint32_t{1} << 15); ++v) {
        const BitSeq x = BitSeq::from_uint(v, 15);
        const BitSeq cw = codec.encode(x);
        h.expect(cw.size() == 16, "output length");
        h.expect(check_membership(cw, codec.params(), ConstraintMode::Window).ok,
                 "window membership");
        h.expect(codec.decode(cw) == x, "round trip");
    }
    return h.failures == 0;
}

// ---- criterion 4 -----------------------------------------------------------

bool criterion4(Harness& h) {
    for (int ell : {6, 8, 10, 12}) {
        const std::pair<int, int> bands[] = {{1, ell - 1}, {2, ell - 2}};
        for (const auto& [a, b] : bands) {
            // Phi over the full forbidden set
            std::vector<BitSeq> forbidden;
            for (std::uint32_t v = 0; v < (std::uint32_t{1} << ell); ++v) {
                const BitSeq w = BitSeq::from_uint(v, ell);
                const int wt = weight(w);
                if (wt < a || wt > b) forbidden.push_back(w);
            }
            int bits = 1;
            while ((std::uint64_t{1} << bits) < forbidden.size()) ++bits;
            const WindowCodec phi(ell, a, b, bits);
            h.expect(phi.forbidden_count() == forbidden.size(), "phi count");
            for (std::size_t r = 0; r < forbidden.size(); ++r) {
                h.expect(phi.rank(forbidden[r]).to_uint() == r, "phi rank order");
                h.expect(phi.unrank(BitSeq::from_uint(r, bits)) == forbidden[r],
                         "phi unrank");
            }

            // Psi where the exact feasibility conditions hold
            const Rational p1(a, ell), p2(b, ell);
            const int tlo = static_cast<int>(ceil_mul(p1, ell - 2));
            const int thi = static_cast<int>(floor_mul(p2, ell - 2));
            std::vector<BitSeq> offending;
            for (std::uint32_t v = 0; v < (std::uint32_t{1} << (ell + 1)); ++v) {
                const BitSeq y = BitSeq::from_uint(v, ell + 1);
                const int w1 = weight(y.prefix(static_cast<std::size_t>(ell)));
                const int w2 = weight(y.suffix(static_cast<std::size_t>(ell)));
                if (w1 < a || w1 > b || w2 < a || w2 > b) offending.push_back(y);
            }
            std::uint64_t target_size = 0;
            for (int w = tlo; w <= thi; ++w) target_size += combin::choose(ell - 2, w);
            const bool feasible = tlo <= thi && offending.size() <= target_size &&
                                  1 + tlo >= a && 1 + thi <= b;
            try {
                const TailCodec psi(ell, a, b, tlo, thi);
                h.expect(feasible, "psi constructed despite infeasible counts");
                h.expect(psi.offending_count() == offending.size(), "psi |G|");
                for (std::size_t r = 0; r < offending.size(); ++r) {
                    const BitSeq t = psi.map(offending[r]);
                    const int wt = weight(t);
                    h.expect(wt >= tlo && wt <= thi, "psi image weight band");
                    h.expect(psi.inverse(t) == offending[r], "psi round trip");
                }
            } catch (const ParamError&) {
                h.expect(!feasible, "psi rejected feasible parameters");
            }
        }
    }
    return h.failures == 0;
}

// ---- criterion 5 -----------------------------------------------------------

bool criterion5(Harness& h) {
    h.expect(count_secc(12, 4, 1, 3) == 2744, "|S(12,4,[1,3])| = 2744");
    for (int n = 4; n <= 16; n += 2) {
        for (int ell = 2; ell <= n; ++ell) {
            if (n % ell != 0) continue;
            const std::vector<std::pair<int, int>> bands = {
                {1, ell - 1}, {0, ell}, {2, std::max(2, ell - 2)}};
            for (const auto& [a, b] : bands) {
                if (a > b || b > ell) continue;
                h.expect(count_secc(n, ell, a, b) == brute_count(n, ell, a, b, true),
                         "secc count n=" + std::to_string(n) + " ell=" + std::to_string(ell));
            }
        }
    }
    const struct { int n, ell, a, b; } swcc_cases[] = {
        {12, 6, 2, 4},  {16, 10, 1, 9}, {18, 6, 2, 5},
        {20, 12, 2, 10}, {20, 5, 1, 4},  {20, 20, 8, 12},
    };
    for (const auto& c : swcc_cases) {
        h.expect(count_swcc(c.n, c.ell, c.a, c.b) == brute_count(c.n, c.ell, c.a, c.b, false),
                 "swcc count n=" + std::to_string(c.n) + " ell=" + std::to_string(c.ell));
    }
    return h.failures == 0;
}

// ---- criterion 6 -----------------------------------------------------------

bool criterion6(Harness& h) {
    const BoundReport r1 = verify_halfspace_bound(16, 10, 1, 9);
    h.expect(r1.swcc_holds, "bound holds at (16,10,[1,9])");
    h.expect(!r1.sufficient_condition, "sufficient condition not met at (16,10,[1,9])");
    h.expect(r1.sufficient_ell > 10, "reported threshold exceeds ell");

    const BoundReport r2 = verify_halfspace_bound(20, 12, 2, 10);
    h.expect(r2.swcc_holds, "bound holds at (20,12,[2,10])");
    h.expect(!r2.sufficient_condition, "sufficient condition not met at (20,12,[2,10])");
    h.expect(r2.sufficient_ell > 12, "reported threshold exceeds ell");
    return h.failures == 0;
}

// ---- criterion 7 -----------------------------------------------------------

bool criterion7(Harness& h) {
    for (int n = 1; n <= 10; ++n) {
        for (std::uint32_t v = 0; v < (std::uint32_t{1} << n); ++v) {
            const BitSeq x = BitSeq::from_uint(v, n);
            const VtTag tag = vt_syndrome(x, n);
            for (std::size_t p = 0; p <= x.size(); ++p) {
                BitSeq y = x;
                if (p > 0) y.set_bit(p, 1 - y.bit(p));
                try {
                    h.expect(vt_correct(y, tag, n) == x, "single-substitution recovery");
                } catch (const UndecodableError&) {
                    h.expect(false, "undecodable within the error model");
                }
            }
        }
    }
    for (int n = 2; n <= 8; ++n) {
        for (std::uint32_t v = 0; v < (std::uint32_t{1} << n); ++v) {
            const BitSeq x = BitSeq::from_uint(v, n);
            const VtTag tag = vt_syndrome(x, n);
            for (std::size_t p = 1; p <= x.size(); ++p) {
                for (std::size_t q = p + 1; q <= x.size(); ++q) {
                    BitSeq y = x;
                    y.set_bit(p, 1 - y.bit(p));
                    y.set_bit(q, 1 - y.bit(q));
                    try {
                        h.expect(vt_correct(y, tag, n) != x,
                                 "double substitution silently accepted");
                    } catch (const UndecodableError&) {
                        // surfacing the model violation is the other valid outcome
                    }
                }
            }
        }
    }
    return h.failures == 0;
}

// ---- criterion 8 -----------------------------------------------------------

bool criterion8(Harness& h) {
    // S^ECC: one subblock, exhaustive payloads x exhaustive flip positions.
    const SeccEccCodec secc(CodeParams::with_profile(24, 24, Rational(1, 4), Rational(3, 4)));
    h.expect(secc.payload_len() == 8, "s-ecc payload is 8 bits");
    for (std::uint32_t v = 0; v < (std::uint32_t{1} << 8); ++v) {
        const BitSeq x = BitSeq::from_uint(v, 8);
        const BitSeq cw = secc.encode(x);
        h.expect(check_membership(cw, secc.params(), ConstraintMode::Subblock).ok,
                 "s-ecc membership");
        for (std::size_t p = 0; p <= cw.size(); ++p) {
            BitSeq y = cw;
            if (p > 0) y.set_bit(p, 1 - y.bit(p));
            try {
                h.expect(secc.decode(y) == x, "s-ecc single-flip recovery");
            } catch (const DecodeError&) {
                h.expect(false, "s-ecc decode error within the model");
            }
        }
    }

    // W^ECC: randomized payloads with random in-model corruption.
    const SwccEccCodec wecc(CodeParams::with_band(32, 16, 1, 15));
    const CodeParams outer_band =
        CodeParams::with_band(wecc.codeword_len(), 16, 1, 15);
    std::mt19937_64 rng(63);
    for (int trial = 0; trial < 1000; ++trial) {
        const BitSeq x = random_bits(rng, wecc.payload_len());
        BitSeq y = wecc.encode(x);
        h.expect(check_membership(y, outer_band, ConstraintMode::Window).ok,
                 "w-ecc output window membership");
        for (int blk = 0; blk < wecc.params().m(); ++blk) {
            if (rng() & 1) continue;
            const std::size_t p =
                static_cast<std::size_t>(blk * wecc.block_len()) + 1 +
                rng() % static_cast<std::size_t>(wecc.block_len());
            y.set_bit(p, 1 - y.bit(p));
        }
        try {
            h.expect(wecc.decode(y) == x, "w-ecc corrupted round trip");
        } catch (const DecodeError&) {
            h.expect(false, "w-ecc decode error within the model");
        }
    }
    return h.failures == 0;
}

// ---- criterion 9 -----------------------------------------------------------

bool criterion9(Harness& h) {
    const struct {
        int ell;
        Rational p1, p2;
    } cases[] = {
        {12, Rational(1, 12), Rational(11, 12)},
        {16, Rational(1, 16), Rational(15, 16)},
    };
    for (const auto& c : cases) {
        const int t_syn = vt_tag_width(c.ell);
        const int lo = static_cast<int>(ceil_mul(c.p1, c.ell));
        const int hi = static_cast<int>(floor_mul(c.p2, c.ell));
        const Rational p1t = (c.p1 + Rational(1, 2)) / 2;
        const Rational p2t = (c.p2 + Rational(1, 2)) / 2;
        const int xlo = static_cast<int>(ceil_mul(p1t, c.ell));
        const int xhi = static_cast<int>(floor_mul(p2t, c.ell));

        // Tag substring weight extremes per straddle width, over all tag
        // values and all substring offsets (prefixes are offset 0).
        std::vector<int> sub_min(2 * t_syn + 1, 1 << 20), sub_max(2 * t_syn + 1, -1);
        std::vector<int> pre_min = sub_min, pre_max = sub_max;
        for (std::uint32_t yv = 0; yv < (std::uint32_t{1} << t_syn); ++yv) {
            const BitSeq y = BitSeq::from_uint(yv, t_syn);
            const BitSeq z = interleave(y, y.complemented());
            for (int i = 1; i <= 2 * t_syn; ++i) {
                for (int off = 0; off + i <= 2 * t_syn; ++off) {
                    const int w = weight(z.slice(static_cast<std::size_t>(off) + 1,
                                                 static_cast<std::size_t>(i)));
                    sub_min[i] = std::min(sub_min[i], w);
                    sub_max[i] = std::max(sub_max[i], w);
                    if (off == 0) {
                        pre_min[i] = std::min(pre_min[i], w);
                        pre_max[i] = std::max(pre_max[i], w);
                    }
                }
            }
        }

        for (std::uint32_t xv = 0; xv < (std::uint32_t{1} << c.ell); ++xv) {
            const int xw = std::popcount(xv);
            if (xw < xlo || xw > xhi) continue;
            const BitSeq x = BitSeq::from_uint(xv, c.ell);
            std::vector<int> prefix_weight(static_cast<std::size_t>(c.ell) + 1, 0);
            for (int p = 1; p <= c.ell; ++p)
                prefix_weight[static_cast<std::size_t>(p)] =
                    prefix_weight[static_cast<std::size_t>(p - 1)] +
                    x.bit(static_cast<std::size_t>(p));

            for (int i = 1; i <= 2 * t_syn; ++i) {
                // block suffix followed by a tag prefix stays inside [lo, hi]
                const int suffix_w = xw - prefix_weight[static_cast<std::size_t>(i)];
                h.expect(suffix_w + pre_min[i] >= lo, "tag-straddle lower edge");
                h.expect(suffix_w + pre_max[i] <= hi, "tag-straddle upper edge");

                // any substring of x of length ell-i with any tag
                // substring of length i spliced in stays inside [lo, hi].
                for (int off = 0; off + (c.ell - i) <= c.ell; ++off) {
                    const int seg_w =
                        prefix_weight[static_cast<std::size_t>(off + c.ell - i)] -
                        prefix_weight[static_cast<std::size_t>(off)];
                    h.expect(seg_w + sub_min[i] >= lo, "tag-splice lower edge");
                    h.expect(seg_w + sub_max[i] <= hi, "tag-splice upper edge");
                }
            }
        }
    }
    return h.failures == 0;
}

// ---- criterion 10 ----------------------------------------------------------

std::string slurp(const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

bool criterion10(Harness& h) {
    const fs::path dir =
        fs::temp_directory_path() / ("swcodes-acceptance-" + std::to_string(::getpid()));
    fs::create_directories(dir);
    const auto file = [&](const char* name) { return (dir / name).string(); };

    {
        std::ofstream f(file("payload.txt"));
        f << "110000011001111100\n";
    }
    h.expect(cli::run({"encode", "--scheme", "polarity", "--n", "21", "--ell", "7", "--a",
                       "3", "--in", file("payload.txt"), "--out", file("cw.txt")}) == 0,
             "cli polarity encode status");
    h.expect(slurp(file("cw.txt")) == "001111101100101111000\n",
             "cli polarity encode output");
    h.expect(cli::run({"decode", "--scheme", "polarity", "--n", "21", "--ell", "7", "--a",
                       "3", "--in", file("cw.txt"), "--out", file("back.txt")}) == 0,
             "cli polarity decode status");
    h.expect(slurp(file("back.txt")) == "110000011001111100\n",
             "cli polarity decode output");

    {
        std::ofstream f(file("w.txt"));
        std::mt19937_64 rng(99);
        for (int i = 0; i < 50; ++i) {
            for (int j = 0; j < 31; ++j) f << (rng() & 1);
            f << '\n';
        }
    }
    h.expect(cli::run({"encode", "--scheme", "w-ecc", "--n", "32", "--ell", "16", "--a", "1",
                       "--b", "15", "--in", file("w.txt"), "--out", file("wcw.txt")}) == 0,
             "cli w-ecc encode status");
    for (const char* out : {"c1.txt", "c2.txt"}) {
        h.expect(cli::run({"corrupt", "--scheme", "w-ecc", "--n", "32", "--ell", "16", "--a",
                           "1", "--b", "15", "--model", "per-block", "--rate", "0.7",
                           "--seed", "20200513", "--in", file("wcw.txt"), "--out",
                           (dir / out).string()}) == 0,
                 "cli corrupt status");
    }
    h.expect(slurp(file("c1.txt")) == slurp(file("c2.txt")),
             "corrupt output is byte-reproducible");
    h.expect(slurp(file("c1.txt.flips")) == slurp(file("c2.txt.flips")),
             "corrupt sidecar is byte-reproducible");
    h.expect(!slurp(file("c1.txt.flips")).empty(), "sidecar written");
    h.expect(cli::run({"decode", "--scheme", "w-ecc", "--n", "32", "--ell", "16", "--a", "1",
                       "--b", "15", "--in", file("c1.txt"), "--out", file("wback.txt")}) == 0,
             "cli w-ecc decode status");
    h.expect(slurp(file("wback.txt")) == slurp(file("w.txt")),
             "cli w-ecc corrupted pipe recovers payloads");

    fs::remove_all(dir);
    return h.failures == 0;
}

struct Criterion {
    const char* name;
    std::function<bool(Harness&)> fn;
};

}  // namespace

int main() {
    const Criterion criteria[] = {
        {"C1 walk coverage exhaustiveness (even lengths 6..16, three profiles)", criterion1},
        {"C2 encoder S / S' / polarity round-trip and membership", criterion2},
        {"C3 encoder W one-bit redundancy, membership, round-trip (n=16, ell=10)", criterion3},
        {"C4 phi/psi bijectivity (ell in 6..12, bands [1,l-1], [2,l-2])", criterion4},
        {"C5 counting oracle agreement (product formula, window DP)", criterion5},
        {"C6 half-space bound check with sufficient-condition flag", criterion6},
        {"C7 VT decoder exhaustiveness (n <= 10; doubles n <= 8)", criterion7},
        {"C8 ECC end-to-end (S^ECC exhaustive, W^ECC randomized)", criterion8},
        {"C9 straddling-window weight safety, exhaustive (ell in {12,16})", criterion9},
        {"C10 CLI determinism and format", criterion10},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        Harness h;
        const auto start = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = c.fn(h);
        } catch (const std::exception& e) {
            std::cerr << "    EXCEPTION: " << e.what() << '\n';
            ok = false;
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("[%s] %s (%lld checks, %.2fs)\n", ok ? "PASS" : "FAIL", c.name, h.checks,
                    secs);
        if (!ok) ++failed;
    }
    if (failed) std::printf("%d criterion(s) failed\n", failed);
    return failed;
}
