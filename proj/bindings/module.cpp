#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "swcodes/ecc.hpp"
#include "swcodes/knuth.hpp"
#include "swcodes/oracle.hpp"
#include "swcodes/srt.hpp"
#include "swcodes/vt.hpp"

namespace py = pybind11;
using namespace swcodes;

namespace {

CodeParams make_params(const std::string& scheme, int n, int ell, std::optional<int> a,
                       std::optional<int> b, const std::string& p1, const std::string& p2) {
    if (scheme == "polarity") {
        if (!a) throw ParamError("polarity: 'a' is required");
        return CodeParams::min_weight(n, ell, *a);
    }
    if (!p1.empty() && !p2.empty())
        return CodeParams::with_profile(n, ell, parse_rational(p1), parse_rational(p2));
    if (a && b) return CodeParams::with_band(n, ell, *a, *b);
    throw ParamError("need either a/b or p1/p2");
}

template <typename F>
std::string with_codec(const std::string& scheme, int n, int ell, std::optional<int> a,
                       std::optional<int> b, const std::string& p1, const std::string& p2,
                       const std::string& bits, F&& op) {
    const CodeParams params = make_params(scheme, n, ell, a, b, p1, p2);
    const BitSeq in = BitSeq::from_string(bits);
    if (scheme == "s") return op(KnuthTableCodec(params), in);
    if (scheme == "s-prime") return op(KnuthRankCodec(params), in);
    if (scheme == "polarity") return op(PolarityCodec(params), in);
    if (scheme == "w") return op(SrtCodec(params), in);
    if (scheme == "s-ecc") return op(SeccEccCodec(params), in);
    if (scheme == "w-ecc") return op(SwccEccCodec(params), in);
    throw ParamError("unknown scheme '" + scheme + "'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "subblock- and sliding-window-constrained coding core";

    m.def(
        "encode",
        [](const std::string& scheme, const std::string& payload, int n, int ell,
           std::optional<int> a, std::optional<int> b, const std::string& p1,
           const std::string& p2) {
            return with_codec(scheme, n, ell, a, b, p1, p2, payload,
                              [](const auto& c, const BitSeq& x) {
                                  return c.encode(x).to_string();
                              });
        },
        py::arg("scheme"), py::arg("payload"), py::arg("n"), py::arg("ell"),
        py::arg("a") = std::nullopt, py::arg("b") = std::nullopt, py::arg("p1") = "",
        py::arg("p2") = "",
        "Encode a payload bitstring; scheme is one of s, s-prime, polarity, w, s-ecc, w-ecc.");

    m.def(
        "decode",
        [](const std::string& scheme, const std::string& codeword, int n, int ell,
           std::optional<int> a, std::optional<int> b, const std::string& p1,
           const std::string& p2) {
            return with_codec(scheme, n, ell, a, b, p1, p2, codeword,
                              [](const auto& c, const BitSeq& x) {
                                  return c.decode(x).to_string();
                              });
        },
        py::arg("scheme"), py::arg("codeword"), py::arg("n"), py::arg("ell"),
        py::arg("a") = std::nullopt, py::arg("b") = std::nullopt, py::arg("p1") = "",
        py::arg("p2") = "", "Decode a codeword bitstring (inverse of encode).");

    m.def(
        "payload_len",
        [](const std::string& scheme, int n, int ell, std::optional<int> a, std::optional<int> b,
           const std::string& p1, const std::string& p2) {
            const CodeParams params = make_params(scheme, n, ell, a, b, p1, p2);
            if (scheme == "s") return KnuthTableCodec(params).payload_len();
            if (scheme == "s-prime") return KnuthRankCodec(params).payload_len();
            if (scheme == "polarity") return PolarityCodec(params).payload_len();
            if (scheme == "w") return SrtCodec(params).payload_len();
            if (scheme == "s-ecc") return SeccEccCodec(params).payload_len();
            if (scheme == "w-ecc") return SwccEccCodec(params).payload_len();
            throw ParamError("unknown scheme '" + scheme + "'");
        },
        py::arg("scheme"), py::arg("n"), py::arg("ell"), py::arg("a") = std::nullopt,
        py::arg("b") = std::nullopt, py::arg("p1") = "", py::arg("p2") = "",
        "Payload bits consumed per codeword line.");

    m.def(
        "check_membership",
        [](const std::string& bits, int ell, int a, int b, const std::string& mode) {
            const BitSeq x = BitSeq::from_string(bits);
            const CodeParams params =
                CodeParams::with_band(static_cast<int>(x.size()), ell, a, b);
            const Membership v = check_membership(
                x, params, mode == "subblock" ? ConstraintMode::Subblock : ConstraintMode::Window);
            return py::make_tuple(v.ok, v.first_violation);
        },
        py::arg("bits"), py::arg("ell"), py::arg("a"), py::arg("b"), py::arg("mode") = "window",
        "Returns (ok, first_violation_index); the index is 1-based, 0 when ok.");

    m.def(
        "count_secc",
        [](int n, int ell, int a, int b) {
            return py::cast(count_secc(n, ell, a, b).str());  // str -> int below
        },
        py::arg("n"), py::arg("ell"), py::arg("a"), py::arg("b"));

    m.def(
        "count_swcc",
        [](int n, int ell, int a, int b, std::uint64_t state_cap) {
            return py::cast(count_swcc(n, ell, a, b, state_cap).str());
        },
        py::arg("n"), py::arg("ell"), py::arg("a"), py::arg("b"),
        py::arg("state_cap") = std::uint64_t{1} << 21);

    m.def(
        "enumerate_class",
        [](int n, int ell, int a, int b, const std::string& mode, std::uint64_t budget) {
            std::vector<std::string> out;
            enumerate_class(n, ell, a, b,
                            mode == "subblock" ? ConstraintMode::Subblock
                                               : ConstraintMode::Window,
                            [&](const BitSeq& x) { out.push_back(x.to_string()); }, budget);
            return out;
        },
        py::arg("n"), py::arg("ell"), py::arg("a"), py::arg("b"), py::arg("mode") = "window",
        py::arg("budget") = std::uint64_t{1} << 22);

    m.def(
        "verify_bounds",
        [](int n, int ell, int a, int b) {
            const BoundReport r = verify_halfspace_bound(n, ell, a, b);
            py::dict d;
            d["threshold"] = r.threshold.str();
            d["swcc_count"] = r.swcc_count.str();
            d["swcc_holds"] = r.swcc_holds;
            d["sufficient_condition_met"] = r.sufficient_condition;
            d["sufficient_ell"] = r.sufficient_ell;
            if (r.has_secc) {
                d["secc_count"] = r.secc_count.str();
                d["secc_holds"] = r.secc_holds;
            }
            return d;
        },
        py::arg("n"), py::arg("ell"), py::arg("a"), py::arg("b"));

    m.def(
        "vt_syndrome",
        [](const std::string& bits, int modulus_base) {
            return vt_syndrome(BitSeq::from_string(bits), modulus_base).value;
        },
        py::arg("bits"), py::arg("modulus_base"), "Sum of i*x_i mod 2L.");

    m.def(
        "vt_correct",
        [](const std::string& bits, long long expected, int modulus_base) {
            const VtTag tag{expected, modulus_base, vt_tag_width(modulus_base)};
            return vt_correct(BitSeq::from_string(bits), tag, modulus_base).to_string();
        },
        py::arg("bits"), py::arg("expected"), py::arg("modulus_base"),
        "Repair at most one substitution against the expected syndrome.");

    py::register_exception<ParamError>(m, "ParamError", PyExc_ValueError);
    py::register_exception<DecodeError>(m, "DecodeError", PyExc_ValueError);
    py::register_exception<BudgetError>(m, "BudgetError", PyExc_RuntimeError);
}
