#include "ic/formulas.hpp"

#include <cmath>
#include <string>

#include "ic/errors.hpp"
#include "ic/families.hpp"

namespace ic {

namespace {

ExactCount pow3(int e) { return boost::multiprecision::pow(ExactCount(3), static_cast<unsigned>(e)); }

void require(int n, int lo, const char* name) {
    if (n < lo) throw InputError(std::string(name) + " requires n >= " + std::to_string(lo) + ", got " + std::to_string(n));
}

}  // namespace

ExactCount f2(int n) {
    require(n, 4, "f2");
    switch (n % 3) {
        case 2: return pow3((n - 2) / 3);
        case 0: return 4 * pow3((n - 6) / 3);
        default: return 2 * pow3((n - 4) / 3);
    }
}

ExactCount f2_odd(int n) {
    require(n, 10, "f2_odd");
    switch (n % 6) {
        case 0: return 4 * pow3((n - 6) / 3);
        case 1: return 16 * pow3((n - 10) / 3);
        case 2: return 8 * pow3((n - 8) / 3);
        case 3: return 4 * pow3((n - 6) / 3);
        case 4: return 2 * pow3((n - 4) / 3);
        default: return pow3((n - 2) / 3);
    }
}

ExactCount f2_even(int n) {
    require(n, 10, "f2_even");
    // every admissible multiset has the same product; take the first
    ExactCount product = 1;
    const auto multisets = F_central_multisets(n, PathParity::even);
    for (int s : multisets.front()) product *= s;
    return product;
}

ExactCount m_lower(int n) {
    require(n, 12, "m_lower");
    switch (n % 3) {
        case 0: return pow3(n / 3) + 12 * n;
        case 1: return 4 * pow3((n - 4) / 3) + 12 * n + 51;
        default: return 2 * pow3((n - 2) / 3) + 12 * n - 36;
    }
}

double vertex_cycle_bound(int n, int d) {
    if (n < 1 || d < 0 || d >= n)
        throw InputError("vertex_cycle_bound needs 0 <= d < n, got n=" + std::to_string(n) + " d=" + std::to_string(d));
    const double pairs = 0.5 * d * (d - 1);
    return pairs * std::pow(3.0, (n - d - 1) / 3.0);
}

ExactCount short_cycle_mass(int n) {
    require(n, 1, "short_cycle_mass");
    const int top = (11 * n) / 100;
    ExactCount sum = 0;
    ExactCount binom = 1;
    for (int i = 1; i <= top; ++i) {
        binom = binom * (n - i + 1) / i;
        sum += binom;
    }
    return sum;
}

}  // namespace ic
