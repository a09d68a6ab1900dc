#include "partid/oracle.hpp"

#include <stdexcept>

#include "partid/counting.hpp"
#include "partid/series.hpp"

namespace partid::oracle {

std::size_t Partition::sum() const {
    std::size_t total = 0;
    for (auto [part, mult] : multiplicities) {
        total += part * mult;
    }
    return total;
}

std::size_t Partition::num_parts() const {
    std::size_t total = 0;
    for (auto [part, mult] : multiplicities) {
        total += mult;
    }
    return total;
}

namespace {

struct Enumerator {
    const std::vector<std::size_t>& parts;
    MultiplicityCap cap;
    std::vector<Partition>& out;
    Partition current;

    // Chooses a multiplicity for parts[index], then moves to the next smaller part.
    void run(std::size_t remaining, std::size_t index) {
        if (remaining == 0) {
            out.push_back(current);
            return;
        }
        if (index == 0) {
            return;
        }
        const std::size_t part = parts[index - 1];
        std::size_t limit = remaining / part;
        if (!cap.is_unbounded() && cap.limit() < limit) {
            limit = cap.limit();
        }
        for (std::size_t m = limit; m >= 1; --m) {
            current.multiplicities.emplace_back(part, m);
            run(remaining - m * part, index - 1);
            current.multiplicities.pop_back();
        }
        run(remaining, index - 1);
    }
};

}  // namespace

std::vector<Partition> enumerate_partitions(const PartSet& set, std::size_t n, MultiplicityCap cap) {
    const auto parts = set.enumerate(n);
    std::vector<Partition> out;
    Enumerator e{parts, cap, out, {}};
    e.run(n, parts.size());
    return out;
}

BigInt brute_force(const Statistic& statistic, const PartSet& set, std::size_t n, std::size_t cap) {
    if (n > cap) {
        throw std::out_of_range("brute_force: n=" + std::to_string(n) + " exceeds the oracle cap " +
                                std::to_string(cap));
    }
    BigInt total = 0;
    for (const auto& p : enumerate_partitions(set, n, statistic.cap)) {
        const bool even = p.num_parts() % 2 == 0;
        switch (statistic.weighting) {
        case Weighting::plain:
            total += 1;
            break;
        case Weighting::alternating:
            total += even ? 1 : -1;
            break;
        case Weighting::even_parts:
            total += even ? 1 : 0;
            break;
        case Weighting::odd_parts:
            total += even ? 0 : 1;
            break;
        }
    }
    return total;
}

AgreementSummary agreement_suite(std::size_t cap) {
    AgreementSummary summary;
    std::vector<MultiplicityCap> caps{MultiplicityCap::at_most(1), MultiplicityCap::at_most(2),
                                      MultiplicityCap::at_most(3), MultiplicityCap::at_most(4),
                                      MultiplicityCap::unbounded()};
    for (const auto& set : builtin_partsets()) {
        for (const auto& mc : caps) {
            for (auto w : {Weighting::plain, Weighting::alternating, Weighting::even_parts,
                           Weighting::odd_parts}) {
                const Statistic stat{w, mc};
                const CountTable table = count(stat, set, cap);
                const Series gf = build_gf(stat, set, cap);
                for (std::size_t n = 0; n <= cap; ++n) {
                    const BigInt brute = brute_force(stat, set, n, cap);
                    ++summary.comparisons;
                    if (brute != table.values[n] || brute != gf[n]) {
                        summary.mismatches.push_back(set.label() + " " + stat.name() + " cap=" +
                                                     mc.to_string() + " n=" + std::to_string(n) +
                                                     ": oracle=" + brute.get_str() + " dp=" +
                                                     table.values[n].get_str() + " series=" + gf[n].get_str());
                    }
                }
            }
        }
    }
    return summary;
}

}  // namespace partid::oracle
