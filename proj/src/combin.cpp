#include "swcodes/combin.hpp"

#include <algorithm>
#include <array>

namespace swcodes::combin {

namespace {

struct PascalTable {
    std::array<std::array<std::uint64_t, kMaxN + 1>, kMaxN + 1> c{};
    PascalTable() {
        for (int n = 0; n <= kMaxN; ++n) {
            c[n][0] = 1;
            for (int k = 1; k <= n; ++k)
                c[n][k] = c[n - 1][k - 1] + (k <= n - 1 ? c[n - 1][k] : 0);
        }
    }
};

const PascalTable& table() {
    static const PascalTable t;
    return t;
}

}  // namespace

std::uint64_t choose(int n, int k) {
    if (n < 0 || n > kMaxN) throw std::out_of_range("choose: n out of supported range");
    if (k < 0 || k > n) return 0;
    return table().c[n][k];
}

std::uint64_t count_weight_in(int len, int lo, int hi) {
    lo = std::max(lo, 0);
    hi = std::min(hi, len);
    std::uint64_t total = 0;
    for (int w = lo; w <= hi; ++w) total += choose(len, w);
    return total;
}

std::uint64_t count_weight_outside(int len, int lo, int hi) {
    if (len < 0 || len > kMaxN) throw std::out_of_range("count_weight_outside: len out of range");
    return (std::uint64_t{1} << len) - count_weight_in(len, lo, hi);
}

}  // namespace swcodes::combin
