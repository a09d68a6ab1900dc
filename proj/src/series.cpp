#include "partid/series.hpp"

#include <stdexcept>
#include <string>

namespace partid {
namespace {

void require_same_order(const Series& a, const Series& b, const char* op) {
    if (a.order() != b.order()) {
        throw std::invalid_argument(std::string(op) + ": order mismatch (" +
                                    std::to_string(a.order()) + " vs " + std::to_string(b.order()) + ")");
    }
}

std::vector<std::size_t> nonzero_indices(const Series& a) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i <= a.order(); ++i) {
        if (sgn(a[i]) != 0) {
            idx.push_back(i);
        }
    }
    return idx;
}

}  // namespace

Series Series::one(std::size_t order) { return monomial(0, 1, order); }

Series Series::monomial(std::size_t exponent, BigInt coeff, std::size_t order) {
    Series s(order);
    if (exponent <= order) {
        s.coeffs_[exponent] = std::move(coeff);
    }
    return s;
}

Series Series::from_coeffs(std::vector<BigInt> coeffs) {
    if (coeffs.empty()) {
        throw std::invalid_argument("series needs at least one coefficient");
    }
    Series s(0);
    s.coeffs_ = std::move(coeffs);
    return s;
}

Series add(const Series& a, const Series& b) {
    require_same_order(a, b, "add");
    std::vector<BigInt> c(a.order() + 1);
    for (std::size_t i = 0; i < c.size(); ++i) {
        c[i] = a[i] + b[i];
    }
    return Series::from_coeffs(std::move(c));
}

Series sub(const Series& a, const Series& b) {
    require_same_order(a, b, "sub");
    std::vector<BigInt> c(a.order() + 1);
    for (std::size_t i = 0; i < c.size(); ++i) {
        c[i] = a[i] - b[i];
    }
    return Series::from_coeffs(std::move(c));
}

Series mul(const Series& a, const Series& b) {
    require_same_order(a, b, "mul");
    const std::size_t order = a.order();
    // Most factors in a product over parts are sparse; skip zero terms on both sides.
    const auto ia = nonzero_indices(a);
    const auto ib = nonzero_indices(b);
    std::vector<BigInt> c(order + 1);
    for (std::size_t i : ia) {
        for (std::size_t j : ib) {
            if (i + j > order) {
                break;
            }
            mpz_addmul(c[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
        }
    }
    return Series::from_coeffs(std::move(c));
}

Series invert(const Series& a) {
    if (a[0] != 1 && a[0] != -1) {
        throw std::invalid_argument("invert: constant term must be +1 or -1");
    }
    const std::size_t order = a.order();
    const int unit = a[0] > 0 ? 1 : -1;  // a[0]^{-1} == a[0]
    std::vector<std::size_t> tail;
    for (std::size_t i = 1; i <= order; ++i) {
        if (sgn(a[i]) != 0) {
            tail.push_back(i);
        }
    }
    std::vector<BigInt> b(order + 1);
    b[0] = unit;
    for (std::size_t n = 1; n <= order; ++n) {
        BigInt acc = 0;
        for (std::size_t i : tail) {
            if (i > n) {
                break;
            }
            mpz_addmul(acc.get_mpz_t(), a[i].get_mpz_t(), b[n - i].get_mpz_t());
        }
        b[n] = unit > 0 ? BigInt(-acc) : acc;
    }
    return Series::from_coeffs(std::move(b));
}

Series spread(const Series& a, std::size_t step) {
    if (step == 0) {
        throw std::invalid_argument("spread: step must be >= 1");
    }
    const std::size_t order = a.order();
    std::vector<BigInt> c(order + 1);
    for (std::size_t k = 0; k * step <= order; ++k) {
        c[k * step] = a[k];
    }
    return Series::from_coeffs(std::move(c));
}

Series factor(std::size_t part, MultiplicityCap cap, int sign, std::size_t order) {
    if (part < 1) {
        throw std::invalid_argument("factor: part must be >= 1");
    }
    if (sign != 1 && sign != -1) {
        throw std::invalid_argument("factor: sign must be +1 or -1");
    }
    if (cap.is_unbounded()) {
        std::vector<BigInt> denom(order + 1);
        denom[0] = 1;
        if (part <= order) {
            denom[part] = -sign;
        }
        return invert(Series::from_coeffs(std::move(denom)));
    }
    std::vector<BigInt> c(order + 1);
    for (std::size_t k = 0; k <= cap.limit() && k * part <= order; ++k) {
        c[k * part] = (sign < 0 && k % 2 == 1) ? -1 : 1;
    }
    return Series::from_coeffs(std::move(c));
}

namespace {

Series weighted_product(const PartSet& set, MultiplicityCap cap, int sign, std::size_t order) {
    Series acc = Series::one(order);
    for (std::size_t part : set.enumerate(order)) {
        acc = mul(acc, factor(part, cap, sign, order));
    }
    return acc;
}

Series halve(const Series& s) {
    std::vector<BigInt> c(s.order() + 1);
    for (std::size_t i = 0; i <= s.order(); ++i) {
        if (!mpz_divisible_ui_p(s[i].get_mpz_t(), 2)) {
            throw std::logic_error("build_gf: parity split produced an odd coefficient");
        }
        mpz_divexact_ui(c[i].get_mpz_t(), s[i].get_mpz_t(), 2);
    }
    return Series::from_coeffs(std::move(c));
}

}  // namespace

Series build_gf(const Statistic& statistic, const PartSet& set, std::size_t order) {
    switch (statistic.weighting) {
    case Weighting::plain:
        return weighted_product(set, statistic.cap, +1, order);
    case Weighting::alternating:
        return weighted_product(set, statistic.cap, -1, order);
    case Weighting::even_parts:
        return halve(add(weighted_product(set, statistic.cap, +1, order),
                         weighted_product(set, statistic.cap, -1, order)));
    case Weighting::odd_parts:
        return halve(sub(weighted_product(set, statistic.cap, +1, order),
                         weighted_product(set, statistic.cap, -1, order)));
    }
    throw std::logic_error("build_gf: unknown weighting");
}

Series scale_product(const Series& s, std::size_t base, std::size_t unit) {
    if (base < 2) {
        throw std::invalid_argument("scale_product: base must be >= 2");
    }
    if (unit < 1) {
        throw std::invalid_argument("scale_product: unit must be >= 1");
    }
    const std::size_t order = s.order();
    Series acc = Series::one(order);
    for (std::size_t step = unit; step <= order; step *= base) {
        acc = mul(acc, spread(s, step));
    }
    return acc;
}

Series product_over_scales(const Statistic& statistic, const PartSet& set, std::size_t base,
                           std::size_t order) {
    if (base < 2) {
        throw std::invalid_argument("product_over_scales: base must be >= 2");
    }
    return scale_product(build_gf(statistic, set, order), base);
}

}  // namespace partid
