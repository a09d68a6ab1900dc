#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "partid/partset.hpp"
#include "partid/statistic.hpp"

namespace partid {

/// Truncated formal power series c_0 + c_1 q + ... + c_order q^order with
/// exact integer coefficients. Values are immutable once built.
class Series {
public:
    /// The zero series of the given order.
    explicit Series(std::size_t order) : coeffs_(order + 1) {}

    static Series zero(std::size_t order) { return Series(order); }
    static Series one(std::size_t order);
    /// q^exponent (zero if exponent > order).
    static Series monomial(std::size_t exponent, BigInt coeff, std::size_t order);
    /// Order is coeffs.size() - 1; throws std::invalid_argument when coeffs is empty.
    static Series from_coeffs(std::vector<BigInt> coeffs);

    std::size_t order() const { return coeffs_.size() - 1; }
    const BigInt& operator[](std::size_t i) const { return coeffs_[i]; }
    std::span<const BigInt> coeffs() const { return coeffs_; }

    friend bool operator==(const Series&, const Series&) = default;

private:
    std::vector<BigInt> coeffs_;
};

// All binary operations require equal orders and throw std::invalid_argument otherwise.
Series add(const Series& a, const Series& b);
Series sub(const Series& a, const Series& b);
/// Truncated Cauchy product.
Series mul(const Series& a, const Series& b);
/// Multiplicative inverse; requires a[0] == +1 or -1.
Series invert(const Series& a);

/// Substitutes q -> q^step: coefficient k moves to k*step, anything past the
/// order is dropped. step must be >= 1.
Series spread(const Series& a, std::size_t step);

/// sum_{k=0}^{alpha} sign^k q^{k*part}, truncated. An unbounded cap yields
/// invert(1 - sign*q^part). Throws for part < 1 or sign not in {-1, +1}.
Series factor(std::size_t part, MultiplicityCap cap, int sign, std::size_t order);

/// Generating function of a statistic over `set`, as the product of factor()
/// over every part <= order. The parity statistics are recovered from the
/// plain and alternating products as (P +- Pbar) / 2.
Series build_gf(const Statistic& statistic, const PartSet& set, std::size_t order);

/// prod_{i : unit*base^i <= order} spread(s, unit*base^i). Empty product is 1.
Series scale_product(const Series& s, std::size_t base, std::size_t unit = 1);

/// scale_product(build_gf(statistic, set, order), base).
Series product_over_scales(const Statistic& statistic, const PartSet& set, std::size_t base,
                           std::size_t order);

}  // namespace partid
