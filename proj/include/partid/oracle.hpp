#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "partid/partset.hpp"
#include "partid/statistic.hpp"

namespace partid::oracle {

/// A partition stored as (part, multiplicity) pairs, largest part first.
struct Partition {
    std::vector<std::pair<std::size_t, std::size_t>> multiplicities;

    std::size_t sum() const;
    std::size_t num_parts() const;
};

/// Every partition of n into parts of `set` with each multiplicity <= cap.
/// Deliberately naive: recursion from the largest part down.
std::vector<Partition> enumerate_partitions(const PartSet& set, std::size_t n, MultiplicityCap cap);

/// Default upper limit on n for brute_force.
inline constexpr std::size_t default_cap = 40;

/// Enumerates and aggregates. Throws std::out_of_range when n > cap.
BigInt brute_force(const Statistic& statistic, const PartSet& set, std::size_t n,
                   std::size_t cap = default_cap);

struct AgreementSummary {
    std::size_t comparisons = 0;
    std::vector<std::string> mismatches;

    bool ok() const { return mismatches.empty(); }
};

/// brute_force vs counting::count vs build_gf, for every statistic, the four
/// builtin sets, caps {1,2,3,4,unbounded} and n <= cap.
AgreementSummary agreement_suite(std::size_t cap = default_cap);

}  // namespace partid::oracle
