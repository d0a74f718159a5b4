#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <functional>
#include <vector>

#include "swcodes/params.hpp"

namespace swcodes {

using BigInt = boost::multiprecision::cpp_int;

/// |S(n, ell, [a, b])| by the per-subblock product formula.
BigInt count_secc(int n, int ell, int a, int b);

/// |W(n, ell, [a, b])| by dynamic programming over the trailing ell-1 bits.
/// Throws BudgetError when 2^(ell-1) exceeds max_states.
BigInt count_swcc(int n, int ell, int a, int b, std::uint64_t max_states = std::uint64_t{1} << 21);

struct BoundReport {
    int n = 0, ell = 0, a = 0, b = 0;
    BigInt threshold;        // 2^(n-1)
    BigInt swcc_count;
    bool swcc_holds = false;
    bool has_secc = false;   // n divisible by ell
    BigInt secc_count;
    bool secc_holds = false;
    double margin_c = 0.0;           // min(1/2 - a/ell, b/ell - 1/2)
    double sufficient_ell = 0.0;     // (1/c^2) ln n
    bool sufficient_condition = false;
};

/// Checks the 2^(n-1) size bound by exact counting and reports separately
/// whether the sufficient condition ell >= (1/c^2) ln n happens to hold.
BoundReport verify_halfspace_bound(int n, int ell, int a, int b,
                                   std::uint64_t max_states = std::uint64_t{1} << 21);

/// Visit every member of the class in lexicographic order. Throws BudgetError
/// when 2^n exceeds the budget.
void enumerate_class(int n, int ell, int a, int b, ConstraintMode mode,
                     const std::function<void(const BitSeq&)>& visit,
                     std::uint64_t budget = std::uint64_t{1} << 22);

/// Convenience wrapper collecting the enumeration.
std::vector<BitSeq> collect_class(int n, int ell, int a, int b, ConstraintMode mode,
                                  std::uint64_t budget = std::uint64_t{1} << 22);

struct RateReport {
    std::string scheme;
    int payload_bits = 0;
    int codeword_bits = 0;
    int redundancy = 0;
    double rate = 0.0;               // payload / codeword
    bool has_capacity = false;
    double capacity_estimate = 0.0;  // log2(class size) / codeword_bits
};

/// Redundancy accounting for an encoder, compared against the exact class
/// size when counting it is affordable.
RateReport measure_rate(const std::string& scheme, int payload_bits, int codeword_bits,
                        int ell, int a, int b, ConstraintMode mode,
                        std::uint64_t state_cap = std::uint64_t{1} << 21);

/// log2 of a positive count, exact enough for reporting.
double log2_big(const BigInt& v);

}  // namespace swcodes
