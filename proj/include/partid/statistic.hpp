#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include <gmpxx.h>

namespace partid {

/// Exact integer used for every count and series coefficient.
using BigInt = mpz_class;

/// Upper bound on how many times a single part may repeat. Unbounded means
/// the ordinary (unrestricted) partition count.
class MultiplicityCap {
public:
    static MultiplicityCap unbounded() { return MultiplicityCap{}; }
    /// Throws std::invalid_argument for alpha == 0.
    static MultiplicityCap at_most(unsigned alpha);

    bool is_unbounded() const { return !limit_.has_value(); }
    /// Only meaningful when bounded.
    unsigned limit() const { return *limit_; }
    /// Largest multiplicity k allowed for part `part` in a number <= max_n.
    std::size_t max_multiplicity(std::size_t part, std::size_t max_n) const;

    std::string to_string() const;

    friend bool operator==(const MultiplicityCap&, const MultiplicityCap&) = default;

private:
    MultiplicityCap() = default;
    explicit MultiplicityCap(unsigned alpha) : limit_(alpha) {}
    std::optional<unsigned> limit_;
};

/// How a partition contributes to a count.
enum class Weighting {
    plain,        // +1 per partition
    alternating,  // (-1)^(number of parts)
    even_parts,   // 1 if the number of parts is even, else 0
    odd_parts,    // 1 if the number of parts is odd, else 0
};

/// A partition statistic: p^A, p^A_alpha, the signed counts, and E/O.
/// The number of parts is always counted with multiplicity.
struct Statistic {
    Weighting weighting;
    MultiplicityCap cap;

    static Statistic unrestricted() { return {Weighting::plain, MultiplicityCap::unbounded()}; }
    static Statistic bounded(unsigned alpha) { return {Weighting::plain, MultiplicityCap::at_most(alpha)}; }
    static Statistic signed_unrestricted() { return {Weighting::alternating, MultiplicityCap::unbounded()}; }
    static Statistic signed_bounded(unsigned alpha) { return {Weighting::alternating, MultiplicityCap::at_most(alpha)}; }
    static Statistic even_parts(MultiplicityCap cap) { return {Weighting::even_parts, cap}; }
    static Statistic odd_parts(MultiplicityCap cap) { return {Weighting::odd_parts, cap}; }

    bool is_signed() const { return weighting == Weighting::alternating; }

    /// Short name used by the CLI and reports, e.g. "p", "p_alpha", "pbar_alpha".
    std::string name() const;

    friend bool operator==(const Statistic&, const Statistic&) = default;
};

}  // namespace partid
