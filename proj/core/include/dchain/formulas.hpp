#pragma once

// Integer-exact closed forms for the chromatic number of D(C_n) and
// D(C_{k,l}). No floating point is used anywhere.

#include <cstdint>
#include <iosfwd>

namespace dchain {

/// floor(sqrt(n)), exact for all 64-bit inputs.
std::uint64_t isqrt(std::uint64_t n);

/// Largest positive i with C(i,2) <= n. Requires n >= 1.
std::uint64_t g_of(std::uint64_t n);

/// n - floor(sqrt(2n + 1/4) - 1/2), evaluated as n - floor((isqrt(8n+1) - 1) / 2).
std::uint64_t f_closed_form(std::uint64_t n);

/// f(n) = n - g(n) + 1; cross-checked against the closed form.
/// Meaningful as the chromatic number of D(C_n) for n >= 3.
std::uint64_t f_of(std::uint64_t n);

/// f(n+1) - f(n), which is 0 exactly when n + 1 is triangular.
int f_step(std::uint64_t n);

/// True iff n = C(i,2) - 1 for some positive integer i.
bool is_triangular_minus_one(std::uint64_t n);

/// k + f(l). Requires 1 <= k <= l and l >= 3.
std::uint64_t theorem_value(std::uint64_t k, std::uint64_t l);

struct FormulaResult {
    std::uint64_t n = 0;
    std::uint64_t f = 0;
    std::uint64_t g = 0;
};

FormulaResult evaluate(std::uint64_t n);

/// CSV with header "n,g,f" for n in [first, last].
void write_formula_table(std::uint64_t first, std::uint64_t last, std::ostream& out);

}  // namespace dchain
