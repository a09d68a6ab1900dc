#include "partid/counting.hpp"

#include <stdexcept>

namespace partid {

const BigInt& CountTable::at(std::size_t n) const {
    if (n >= values.size()) {
        throw std::out_of_range("count table for " + statistic.name() + " on " + set_label +
                                " is too short: need n=" + std::to_string(n) + ", have max_n=" +
                                std::to_string(max_n()));
    }
    return values[n];
}

namespace {

// new[n] = sum_{k=0}^{K} sign^k old[n - k*part]
void fold_single_lane(std::vector<BigInt>& lane, std::size_t part, MultiplicityCap cap, int sign) {
    const std::size_t max_n = lane.size() - 1;
    std::vector<BigInt> next(lane);
    for (std::size_t n = part; n <= max_n; ++n) {
        const std::size_t kmax = cap.max_multiplicity(part, n);
        for (std::size_t k = 1; k <= kmax; ++k) {
            const BigInt& prev = lane[n - k * part];
            if (sign < 0 && k % 2 == 1) {
                next[n] -= prev;
            } else {
                next[n] += prev;
            }
        }
    }
    lane = std::move(next);
}

// Lanes track partitions with an even / odd number of parts.
void fold_parity_lanes(std::vector<BigInt>& even, std::vector<BigInt>& odd, std::size_t part,
                       MultiplicityCap cap) {
    const std::size_t max_n = even.size() - 1;
    std::vector<BigInt> next_even(even);
    std::vector<BigInt> next_odd(odd);
    for (std::size_t n = part; n <= max_n; ++n) {
        const std::size_t kmax = cap.max_multiplicity(part, n);
        for (std::size_t k = 1; k <= kmax; ++k) {
            const std::size_t r = n - k * part;
            if (k % 2 == 0) {
                next_even[n] += even[r];
                next_odd[n] += odd[r];
            } else {
                next_even[n] += odd[r];
                next_odd[n] += even[r];
            }
        }
    }
    even = std::move(next_even);
    odd = std::move(next_odd);
}

}  // namespace

CountTable count(const Statistic& statistic, const PartSet& set, std::size_t max_n) {
    CountTable table{statistic, set.label(), std::vector<BigInt>(max_n + 1)};
    const auto parts = set.enumerate(max_n);

    switch (statistic.weighting) {
    case Weighting::plain:
    case Weighting::alternating: {
        const int sign = statistic.weighting == Weighting::plain ? 1 : -1;
        table.values[0] = 1;
        for (std::size_t part : parts) {
            fold_single_lane(table.values, part, statistic.cap, sign);
        }
        break;
    }
    case Weighting::even_parts:
    case Weighting::odd_parts: {
        std::vector<BigInt> even(max_n + 1);
        std::vector<BigInt> odd(max_n + 1);
        even[0] = 1;
        for (std::size_t part : parts) {
            fold_parity_lanes(even, odd, part, statistic.cap);
        }
        table.values = statistic.weighting == Weighting::even_parts ? std::move(even) : std::move(odd);
        break;
    }
    }
    return table;
}

}  // namespace partid
