#include "swcodes/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <variant>

#include "CLI11.hpp"
#include "json.hpp"
#include "swcodes/ecc.hpp"
#include "swcodes/knuth.hpp"
#include "swcodes/oracle.hpp"
#include "swcodes/srt.hpp"

namespace swcodes::cli {

namespace {

using nlohmann::json;

struct CliFailure {
    int code;
    std::string message;
};

[[noreturn]] void fail(int code, const std::string& message) { throw CliFailure{code, message}; }

// ---- parameter flags shared by the codec subcommands ----

struct ParamFlags {
    int n = 0;
    int ell = 0;
    std::optional<int> a, b;
    std::string p1, p2;

    void attach(CLI::App* cmd, bool need_n = true) {
        auto* n_opt = cmd->add_option("--n", n, "codeword length (bits)");
        if (need_n) n_opt->required();
        cmd->add_option("--ell", ell, "subblock/window length (bits)")->required();
        cmd->add_option("--a", a, "lower weight bound");
        cmd->add_option("--b", b, "upper weight bound");
        cmd->add_option("--p1", p1, "lower weight fraction, exact rational like 1/4");
        cmd->add_option("--p2", p2, "upper weight fraction, exact rational like 3/4");
    }

    CodeParams build(const std::string& scheme) const {
        if (scheme == "polarity") {
            if (!a) fail(kParamError, "polarity: --a is required");
            return CodeParams::min_weight(n, ell, *a);
        }
        if (!p1.empty() || !p2.empty()) {
            if (p1.empty() || p2.empty()) fail(kParamError, "--p1 and --p2 go together");
            return CodeParams::with_profile(n, ell, parse_rational(p1), parse_rational(p2));
        }
        if (!a || !b) fail(kParamError, "need either --a/--b or --p1/--p2");
        return CodeParams::with_band(n, ell, *a, *b);
    }
};

using Codec = std::variant<KnuthTableCodec, KnuthRankCodec, PolarityCodec, SrtCodec,
                           SeccEccCodec, SwccEccCodec>;

Codec build_codec(const std::string& scheme, const ParamFlags& flags) {
    const CodeParams params = flags.build(scheme);
    if (scheme == "s") return KnuthTableCodec(params);
    if (scheme == "s-prime") return KnuthRankCodec(params);
    if (scheme == "polarity") return PolarityCodec(params);
    if (scheme == "w") return SrtCodec(params);
    if (scheme == "s-ecc") return SeccEccCodec(params);
    if (scheme == "w-ecc") return SwccEccCodec(params);
    fail(kParamError, "unknown scheme '" + scheme + "'");
}

int codec_payload_len(const Codec& c) {
    return std::visit([](const auto& x) { return x.payload_len(); }, c);
}

int codec_codeword_len(const Codec& c) {
    return std::visit([](const auto& x) { return x.codeword_len(); }, c);
}

BitSeq codec_encode(const Codec& c, const BitSeq& payload) {
    return std::visit([&](const auto& x) { return x.encode(payload); }, c);
}

BitSeq codec_decode(const Codec& c, const BitSeq& word, int* corrections) {
    return std::visit(
        [&](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, SeccEccCodec> || std::is_same_v<T, SwccEccCodec>) {
                return x.decode(word, corrections);
            } else {
                if (corrections) *corrections = 0;
                return x.decode(word);
            }
        },
        c);
}

// Correction-block length used by the corrupt models.
int codec_block_len(const Codec& c, const std::string& scheme) {
    if (scheme == "w-ecc") return std::get<SwccEccCodec>(c).block_len();
    if (scheme == "w") return codec_codeword_len(c);  // no block structure
    return std::visit([](const auto& x) { return x.params().ell; }, c);
}

// ---- line-oriented I/O ----

struct LineIo {
    std::string in_path = "-";
    std::string out_path = "-";
    std::ifstream in_file;
    std::ofstream out_file;

    std::istream& in() {
        if (in_path == "-") return std::cin;
        if (!in_file.is_open()) {
            in_file.open(in_path);
            if (!in_file) fail(kIoError, "cannot open input file '" + in_path + "'");
        }
        return in_file;
    }

    std::ostream& out() {
        if (out_path == "-") return std::cout;
        if (!out_file.is_open()) {
            out_file.open(out_path);
            if (!out_file) fail(kIoError, "cannot open output file '" + out_path + "'");
        }
        return out_file;
    }

    void attach(CLI::App* cmd) {
        cmd->add_option("--in", in_path, "input file, one bitstring per line ('-' for stdin)");
        cmd->add_option("--out", out_path, "output file ('-' for stdout)");
    }
};

BitSeq parse_line(const std::string& line, std::size_t lineno, std::size_t expected_len) {
    for (char ch : line)
        if (ch != '0' && ch != '1')
            fail(kInputError, "line " + std::to_string(lineno) + ": invalid character '" +
                                  std::string(1, ch) + "'");
    if (line.size() != expected_len)
        fail(kInputError, "line " + std::to_string(lineno) + ": expected " +
                              std::to_string(expected_len) + " bits, got " +
                              std::to_string(line.size()));
    return BitSeq::from_string(line);
}

// ---- subcommand bodies ----

int run_encode(const std::string& scheme, const ParamFlags& flags, LineIo& io) {
    const Codec codec = build_codec(scheme, flags);
    std::cerr << "scheme=" << scheme << " payload=" << codec_payload_len(codec)
              << " codeword=" << codec_codeword_len(codec)
              << " redundancy=" << codec_codeword_len(codec) - codec_payload_len(codec)
              << " bits\n";
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(io.in(), line)) {
        ++lineno;
        const BitSeq payload =
            parse_line(line, lineno, static_cast<std::size_t>(codec_payload_len(codec)));
        io.out() << codec_encode(codec, payload).to_string() << '\n';
    }
    if (io.out_path != "-" && !io.out()) fail(kIoError, "write failed");
    return kOk;
}

int run_decode(const std::string& scheme, const ParamFlags& flags, LineIo& io, bool strict) {
    const Codec codec = build_codec(scheme, flags);
    const bool reports_corrections =
        std::holds_alternative<SeccEccCodec>(codec) || std::holds_alternative<SwccEccCodec>(codec);
    std::string line;
    std::size_t lineno = 0;
    int failures = 0;
    while (std::getline(io.in(), line)) {
        ++lineno;
        const BitSeq word =
            parse_line(line, lineno, static_cast<std::size_t>(codec_codeword_len(codec)));
        try {
            int corrections = 0;
            const BitSeq payload = codec_decode(codec, word, &corrections);
            io.out() << payload.to_string() << '\n';
            if (reports_corrections)
                std::cerr << "line " << lineno << ": " << corrections << " corrections\n";
        } catch (const DecodeError& e) {
            ++failures;
            std::cerr << "line " << lineno << ": " << e.what() << '\n';
            if (strict) fail(kDecodeError, "stopping at first decode failure (--strict)");
            io.out() << '\n';  // keep line correspondence
        }
    }
    if (io.out_path != "-" && !io.out()) fail(kIoError, "write failed");
    return failures == 0 ? kOk : kDecodeError;
}

int run_corrupt(const std::string& scheme, const ParamFlags& flags, LineIo& io,
                const std::string& model, double rate, std::uint64_t seed) {
    const Codec codec = build_codec(scheme, flags);
    const int block_len = codec_block_len(codec, scheme);
    const int word_len = codec_codeword_len(codec);
    if (rate < 0.0 || rate > 1.0) fail(kParamError, "corrupt: --rate must be in [0, 1]");
    if (io.out_path == "-")
        fail(kParamError, "corrupt: --out must be a file (a sidecar is written next to it)");
    std::ofstream sidecar(io.out_path + ".flips");
    if (!sidecar) fail(kIoError, "cannot open sidecar file");

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(io.in(), line)) {
        ++lineno;
        BitSeq word = parse_line(line, lineno, static_cast<std::size_t>(word_len));
        std::vector<std::size_t> flips;
        if (model == "per-block") {
            for (int start = 0; start < word_len; start += block_len) {
                const int len = std::min(block_len, word_len - start);
                if (coin(rng) < rate) {
                    std::uniform_int_distribution<int> pick(1, len);
                    flips.push_back(static_cast<std::size_t>(start + pick(rng)));
                }
            }
        } else if (model == "min-distance") {
            const int ell = std::visit([](const auto& x) { return x.params().ell; }, codec);
            for (int pos = 1; pos <= word_len;) {
                if (coin(rng) < rate) {
                    flips.push_back(static_cast<std::size_t>(pos));
                    pos += ell;
                } else {
                    ++pos;
                }
            }
        } else {
            fail(kParamError, "corrupt: unknown error model '" + model + "'");
        }
        sidecar << lineno << ':';
        for (std::size_t p : flips) {
            word.set_bit(p, 1 - word.bit(p));
            sidecar << ' ' << p;
        }
        sidecar << '\n';
        io.out() << word.to_string() << '\n';
    }
    if (!io.out() || !sidecar) fail(kIoError, "write failed");
    return kOk;
}

std::string class_label(ConstraintMode mode, int n, int ell, int a, int b) {
    std::ostringstream os;
    os << (mode == ConstraintMode::Subblock ? 'S' : 'W') << '(' << n << ',' << ell << ",[" << a
       << ',' << b << "])";
    return os.str();
}

int run_count(ConstraintMode mode, int n, int ell, int a, int b, std::uint64_t state_cap,
              bool as_json, LineIo& io) {
    const BigInt count = mode == ConstraintMode::Subblock ? count_secc(n, ell, a, b)
                                                          : count_swcc(n, ell, a, b, state_cap);
    if (as_json) {
        json j{{"mode", mode == ConstraintMode::Subblock ? "subblock" : "window"},
               {"n", n},
               {"ell", ell},
               {"a", a},
               {"b", b},
               {"count", count.str()}};
        io.out() << j.dump() << '\n';
    } else {
        io.out() << '|' << class_label(mode, n, ell, a, b) << "| = " << count.str() << '\n';
    }
    return kOk;
}

int run_enumerate(ConstraintMode mode, int n, int ell, int a, int b, std::uint64_t budget,
                  bool as_json, LineIo& io) {
    std::vector<std::string> words;
    enumerate_class(n, ell, a, b, mode,
                    [&](const BitSeq& x) { words.push_back(x.to_string()); }, budget);
    if (as_json) {
        io.out() << json(words).dump() << '\n';
    } else {
        for (const auto& w : words) io.out() << w << '\n';
    }
    return kOk;
}

int run_verify_bounds(int n, int ell, int a, int b, std::uint64_t state_cap, bool as_json,
                      LineIo& io) {
    const BoundReport r = verify_halfspace_bound(n, ell, a, b, state_cap);
    if (as_json) {
        json j{{"n", n},
               {"ell", ell},
               {"a", a},
               {"b", b},
               {"threshold", r.threshold.str()},
               {"swcc_count", r.swcc_count.str()},
               {"swcc_holds", r.swcc_holds},
               {"sufficient_condition_met", r.sufficient_condition},
               {"sufficient_ell", r.sufficient_ell}};
        if (r.has_secc) {
            j["secc_count"] = r.secc_count.str();
            j["secc_holds"] = r.secc_holds;
        }
        io.out() << j.dump() << '\n';
        return kOk;
    }
    io.out() << '|' << class_label(ConstraintMode::Window, n, ell, a, b)
             << "| = " << r.swcc_count.str() << " vs 2^" << n - 1 << " = " << r.threshold.str()
             << " : " << (r.swcc_holds ? "holds" : "fails") << '\n';
    if (r.has_secc)
        io.out() << '|' << class_label(ConstraintMode::Subblock, n, ell, a, b)
                 << "| = " << r.secc_count.str() << " vs 2^" << n - 1 << " = "
                 << r.threshold.str() << " : " << (r.secc_holds ? "holds" : "fails") << '\n';
    io.out() << "sufficient condition ell >= (1/c^2) ln n : "
             << (r.sufficient_condition ? "met" : "not met") << " (needs ell >= "
             << r.sufficient_ell << ", have " << ell << ")\n";
    return kOk;
}

int run_rate(const std::string& scheme, const ParamFlags& flags, std::uint64_t state_cap,
             bool as_json, LineIo& io) {
    const Codec codec = build_codec(scheme, flags);
    const CodeParams p = std::visit([](const auto& x) { return x.params(); }, codec);
    const bool window_class = scheme == "w" || scheme == "w-ecc";
    const RateReport r = measure_rate(
        scheme, codec_payload_len(codec), codec_codeword_len(codec), p.ell, p.a, p.b,
        window_class ? ConstraintMode::Window : ConstraintMode::Subblock, state_cap);
    if (as_json) {
        json j{{"scheme", r.scheme},
               {"payload_bits", r.payload_bits},
               {"codeword_bits", r.codeword_bits},
               {"redundancy", r.redundancy},
               {"rate", r.rate}};
        if (r.has_capacity) j["capacity_estimate"] = r.capacity_estimate;
        io.out() << j.dump() << '\n';
        return kOk;
    }
    io.out() << "scheme=" << r.scheme << " payload=" << r.payload_bits
             << " codeword=" << r.codeword_bits << " redundancy=" << r.redundancy
             << " rate=" << r.payload_bits << '/' << r.codeword_bits << " = " << r.rate;
    if (r.has_capacity) io.out() << " capacity~" << r.capacity_estimate;
    io.out() << '\n';
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args) {
    CLI::App app{"subblock- and sliding-window-constrained coding toolkit"};
    app.require_subcommand(1);

    const std::vector<std::string> schemes{"s", "s-prime", "polarity", "w", "s-ecc", "w-ecc"};
    std::string scheme;
    ParamFlags flags;
    LineIo io;
    bool strict = false;
    bool as_json = false;
    std::string model = "per-block";
    double rate = 1.0;
    std::uint64_t seed = 0;
    std::string mode_name = "window";
    std::uint64_t budget = std::uint64_t{1} << 22;
    std::uint64_t state_cap = std::uint64_t{1} << 21;

    const auto add_scheme = [&](CLI::App* cmd) {
        cmd->add_option("--scheme", scheme, "coding scheme")
            ->required()
            ->check(CLI::IsMember(schemes));
    };

    auto* enc = app.add_subcommand("encode", "encode payload lines into codewords");
    add_scheme(enc);
    flags.attach(enc);
    io.attach(enc);

    auto* dec = app.add_subcommand("decode", "decode codeword lines back to payloads");
    add_scheme(dec);
    flags.attach(dec);
    io.attach(dec);
    dec->add_flag("--strict", strict, "stop at the first undecodable line");

    auto* cor = app.add_subcommand("corrupt", "flip bits under a deterministic error model");
    add_scheme(cor);
    flags.attach(cor);
    io.attach(cor);
    cor->add_option("--model", model, "error model")
        ->check(CLI::IsMember({"per-block", "min-distance"}));
    cor->add_option("--rate", rate, "per-block (or per-site) flip probability");
    cor->add_option("--seed", seed, "RNG seed; fixed seed gives identical output");

    auto* cnt = app.add_subcommand("count", "exact class size");
    flags.attach(cnt);
    io.attach(cnt);
    cnt->add_option("--mode", mode_name, "subblock or window")
        ->check(CLI::IsMember({"subblock", "window"}));
    cnt->add_option("--state-cap", state_cap, "cap on the window DP state space");
    cnt->add_flag("--json", as_json, "machine-readable output");

    auto* enu = app.add_subcommand("enumerate", "list every class member lexicographically");
    flags.attach(enu);
    io.attach(enu);
    enu->add_option("--mode", mode_name, "subblock or window")
        ->check(CLI::IsMember({"subblock", "window"}));
    enu->add_option("--budget", budget, "cap on 2^n enumeration work");
    enu->add_flag("--json", as_json, "machine-readable output");

    auto* ver = app.add_subcommand("verify-bounds", "check the 2^(n-1) size bound by counting");
    flags.attach(ver);
    io.attach(ver);
    ver->add_option("--state-cap", state_cap, "cap on the window DP state space");
    ver->add_flag("--json", as_json, "machine-readable output");

    auto* rat = app.add_subcommand("rate", "redundancy accounting for a scheme");
    add_scheme(rat);
    flags.attach(rat);
    io.attach(rat);
    rat->add_option("--state-cap", state_cap, "cap on the window DP state space");
    rat->add_flag("--json", as_json, "machine-readable output");

    try {
        try {
            std::vector<std::string> reversed(args.rbegin(), args.rend());
            app.parse(reversed);
        } catch (const CLI::ParseError& e) {
            if (e.get_exit_code() == 0) {  // --help
                std::cout << app.help();
                return kOk;
            }
            fail(kParamError, e.what());
        }
        const auto need_band = [&]() -> std::pair<int, int> {
            if (!flags.a || !flags.b) fail(kParamError, "--a and --b are required here");
            return {*flags.a, *flags.b};
        };
        if (enc->parsed()) return run_encode(scheme, flags, io);
        if (dec->parsed()) return run_decode(scheme, flags, io, strict);
        if (cor->parsed()) return run_corrupt(scheme, flags, io, model, rate, seed);
        if (cnt->parsed()) {
            const auto [a, b] = need_band();
            const auto mode =
                mode_name == "subblock" ? ConstraintMode::Subblock : ConstraintMode::Window;
            return run_count(mode, flags.n, flags.ell, a, b, state_cap, as_json, io);
        }
        if (enu->parsed()) {
            const auto [a, b] = need_band();
            const auto mode =
                mode_name == "subblock" ? ConstraintMode::Subblock : ConstraintMode::Window;
            return run_enumerate(mode, flags.n, flags.ell, a, b, budget, as_json, io);
        }
        if (ver->parsed()) {
            const auto [a, b] = need_band();
            return run_verify_bounds(flags.n, flags.ell, a, b, state_cap, as_json, io);
        }
        if (rat->parsed()) return run_rate(scheme, flags, state_cap, as_json, io);
        fail(kParamError, "no subcommand given");
    } catch (const CliFailure& e) {
        std::cerr << "error: " << e.message << '\n';
        return e.code;
    } catch (const ParamError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kParamError;
    } catch (const BudgetError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kBudgetError;
    } catch (const DecodeError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kDecodeError;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kIoError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kParamError;
    }
}

int run(int argc, const char* const* argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args);
}

}  // namespace swcodes::cli
