#pragma once

#include <cstddef>
#include <vector>

#include "partid/statistic.hpp"

namespace partid {

/// One solution (N_0, N_1, ..., N_k) with trailing zeros trimmed.
using SolutionRow = std::vector<std::size_t>;

/// All non-negative solutions of n = sum_i base^i N_i, in ascending
/// lexicographic order on (N_0, N_1, ...) with missing entries read as 0.
struct SolutionMatrix {
    std::size_t n = 0;
    std::size_t base = 2;
    std::vector<SolutionRow> rows;

    std::size_t row_count() const { return rows.size(); }
    bool empty() const { return rows.empty(); }
};

/// Lexicographic comparison with missing trailing entries treated as zero.
bool canonical_less(const SolutionRow& a, const SolutionRow& b);

/// Throws std::invalid_argument for base < 2.
SolutionMatrix enumerate_solutions(std::size_t n, std::size_t base);

/// Number of partitions of n into powers of base, by DP.
BigInt count_solutions(std::size_t n, std::size_t base);

/// Rows of n = (alpha+1) sum_i 2^i N_i: the solutions of n/(alpha+1) in base 2
/// when (alpha+1) | n, otherwise an empty matrix. The returned matrix keeps
/// n as given and base 2.
SolutionMatrix gamma_support(std::size_t n, unsigned alpha);

}  // namespace partid
