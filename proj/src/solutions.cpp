#include "partid/solutions.hpp"

#include <algorithm>
#include <stdexcept>

namespace partid {
namespace {

void require_base(std::size_t base) {
    if (base < 2) {
        throw std::invalid_argument("solution matrix base must be >= 2, got " + std::to_string(base));
    }
}

// Fills positions 0..level of `row`, choosing N_level first, then recursing
// on the remainder with the lower powers. powers[i] == base^i.
void enumerate_below(std::size_t remainder, std::size_t level, const std::vector<std::size_t>& powers,
                     SolutionRow& row, std::vector<SolutionRow>& out) {
    if (level == 0) {
        row[0] = remainder;
        SolutionRow trimmed = row;
        while (!trimmed.empty() && trimmed.back() == 0) {
            trimmed.pop_back();
        }
        out.push_back(std::move(trimmed));
        return;
    }
    const std::size_t power = powers[level];
    for (std::size_t k = 0; k * power <= remainder; ++k) {
        row[level] = k;
        enumerate_below(remainder - k * power, level - 1, powers, row, out);
    }
    row[level] = 0;
}

}  // namespace

bool canonical_less(const SolutionRow& a, const SolutionRow& b) {
    const std::size_t len = std::max(a.size(), b.size());
    for (std::size_t i = 0; i < len; ++i) {
        const std::size_t x = i < a.size() ? a[i] : 0;
        const std::size_t y = i < b.size() ? b[i] : 0;
        if (x != y) {
            return x < y;
        }
    }
    return false;
}

SolutionMatrix enumerate_solutions(std::size_t n, std::size_t base) {
    require_base(base);
    SolutionMatrix matrix{n, base, {}};
    if (n == 0) {
        matrix.rows.emplace_back();
        return matrix;
    }
    std::vector<std::size_t> powers{1};
    while (powers.back() <= n / base) {
        powers.push_back(powers.back() * base);
    }
    SolutionRow row(powers.size(), 0);
    enumerate_below(n, powers.size() - 1, powers, row, matrix.rows);
    std::sort(matrix.rows.begin(), matrix.rows.end(), canonical_less);
    return matrix;
}

BigInt count_solutions(std::size_t n, std::size_t base) {
    require_base(base);
    std::vector<BigInt> ways(n + 1);
    ways[0] = 1;
    for (std::size_t power = 1; power <= n; power *= base) {
        for (std::size_t m = power; m <= n; ++m) {
            ways[m] += ways[m - power];
        }
        if (power > n / base) {
            break;
        }
    }
    return ways[n];
}

SolutionMatrix gamma_support(std::size_t n, unsigned alpha) {
    if (alpha == 0) {
        throw std::invalid_argument("gamma_support: alpha must be >= 1");
    }
    const std::size_t scale = std::size_t{alpha} + 1;
    if (n % scale != 0) {
        return SolutionMatrix{n, 2, {}};
    }
    SolutionMatrix reduced = enumerate_solutions(n / scale, 2);
    reduced.n = n;
    return reduced;
}

}  // namespace partid
