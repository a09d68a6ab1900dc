#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "partid/partset.hpp"
#include "partid/statistic.hpp"

namespace partid {

/// Exact values of one statistic for n = 0..max_n.
struct CountTable {
    Statistic statistic;
    std::string set_label;
    std::vector<BigInt> values;

    std::size_t max_n() const { return values.size() - 1; }
    /// Throws std::out_of_range ("table too short") when n > max_n.
    const BigInt& at(std::size_t n) const;
};

/// Counts partitions of 0..max_n into parts from `set` by knapsack-style DP,
/// folding in each part with multiplicities 0..cap. Parity statistics run a
/// two-lane (even/odd number of parts) DP.
CountTable count(const Statistic& statistic, const PartSet& set, std::size_t max_n);

}  // namespace partid
