#include "dchain/formulas.hpp"

#include <bit>
#include <ostream>
#include <stdexcept>
#include <string>

namespace dchain {

namespace {

constexpr std::uint64_t choose2(std::uint64_t i) { return i * (i - (i > 0 ? 1 : 0)) / 2; }

// 8n + 1 must not overflow.
constexpr std::uint64_t kMaxN = (UINT64_MAX - 1) / 8;

void require_positive(std::uint64_t n, const char* what) {
    if (n < 1) throw std::invalid_argument(std::string(what) + ": n must be at least 1");
    if (n > kMaxN) throw std::invalid_argument(std::string(what) + ": n too large");
}

}  // namespace

std::uint64_t isqrt(std::uint64_t n) {
    if (n < 2) return n;
    // Newton iteration from a power of two above the root.
    std::uint64_t x = std::uint64_t{1} << (std::bit_width(n) / 2 + 1);
    while (true) {
        const std::uint64_t y = (x + n / x) / 2;
        if (y >= x) break;
        x = y;
    }
    while (x * x > n) --x;
    while ((x + 1) <= UINT32_MAX && (x + 1) * (x + 1) <= n) ++x;
    return x;
}

std::uint64_t g_of(std::uint64_t n) {
    require_positive(n, "g_of");
    // C(i,2) <= n  <=>  (2i - 1)^2 <= 8n + 1.
    const std::uint64_t g = (isqrt(8 * n + 1) + 1) / 2;
    if (!(choose2(g) <= n && n < choose2(g + 1)))
        throw std::logic_error("g_of: bracketing check failed");
    return g;
}

std::uint64_t f_closed_form(std::uint64_t n) {
    require_positive(n, "f_closed_form");
    return n - (isqrt(8 * n + 1) - 1) / 2;
}

std::uint64_t f_of(std::uint64_t n) {
    const std::uint64_t f = n - g_of(n) + 1;
    if (f != f_closed_form(n)) throw std::logic_error("f_of: closed form disagrees with n - g + 1");
    return f;
}

int f_step(std::uint64_t n) {
    return static_cast<int>(f_of(n + 1) - f_of(n));
}

bool is_triangular_minus_one(std::uint64_t n) {
    const std::uint64_t m = n + 1;
    const std::uint64_t i = (isqrt(8 * m + 1) + 1) / 2;
    return choose2(i) == m;
}

std::uint64_t theorem_value(std::uint64_t k, std::uint64_t l) {
    if (k < 1) throw std::invalid_argument("theorem_value: k must be at least 1");
    if (l < 3) throw std::invalid_argument("theorem_value: l must be at least 3");
    if (k > l) throw std::invalid_argument("theorem_value: k must not exceed l");
    return k + f_of(l);
}

FormulaResult evaluate(std::uint64_t n) {
    return FormulaResult{n, f_of(n), g_of(n)};
}

void write_formula_table(std::uint64_t first, std::uint64_t last, std::ostream& out) {
    if (first < 1 || first > last) throw std::invalid_argument("formula table: bad range");
    out << "n,g,f\n";
    for (std::uint64_t n = first; n <= last; ++n) {
        const auto r = evaluate(n);
        out << r.n << ',' << r.g << ',' << r.f << '\n';
    }
}

}  // namespace dchain
