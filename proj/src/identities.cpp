#include "partid/identities.hpp"

#include <stdexcept>

namespace partid {
namespace {

Series as_series(const std::vector<BigInt>& values, std::size_t order) {
    if (values.size() <= order) {
        throw std::out_of_range("table too short for series of order " + std::to_string(order));
    }
    return Series::from_coeffs(std::vector<BigInt>(values.begin(), values.begin() + order + 1));
}

void require_alpha(unsigned alpha) {
    if (alpha == 0) {
        throw std::invalid_argument("alpha must be >= 1");
    }
}

std::size_t base_for(unsigned alpha) { return std::size_t{alpha} + 1; }

}  // namespace

std::string to_string(IdentityId id) {
    switch (id) {
    case IdentityId::forward_binary:
        return "forward-binary";
    case IdentityId::forward_general:
        return "forward";
    case IdentityId::inverse:
        return "inverse";
    case IdentityId::signed_binary:
        return "signed-binary";
    case IdentityId::signed_general:
        return "signed-general";
    }
    return "?";
}

IdentityId parse_identity(std::string_view name) {
    for (auto id : {IdentityId::forward_binary, IdentityId::forward_general, IdentityId::inverse,
                    IdentityId::signed_binary, IdentityId::signed_general}) {
        if (to_string(id) == name) {
            return id;
        }
    }
    throw std::invalid_argument("unknown identity '" + std::string(name) + "'");
}

std::string to_string(EvalMode mode) {
    switch (mode) {
    case EvalMode::enumerative:
        return "enumerative";
    case EvalMode::convolution:
        return "convolution";
    case EvalMode::both:
        return "both";
    }
    return "?";
}

EvalMode parse_eval_mode(std::string_view name) {
    for (auto mode : {EvalMode::enumerative, EvalMode::convolution, EvalMode::both}) {
        if (to_string(mode) == name) {
            return mode;
        }
    }
    throw std::invalid_argument("unknown mode '" + std::string(name) + "'");
}

std::vector<ExpansionTerm> expand_terms(const SolutionMatrix& matrix, const CountTable& table) {
    std::vector<ExpansionTerm> terms;
    terms.reserve(matrix.rows.size());
    for (const auto& row : matrix.rows) {
        BigInt product = 1;
        for (std::size_t entry : row) {
            product *= table.at(entry);
        }
        terms.push_back({row, std::move(product)});
    }
    return terms;
}

BigInt sum_of_products(const SolutionMatrix& matrix, const CountTable& table) {
    BigInt total = 0;
    BigInt product;
    for (const auto& row : matrix.rows) {
        product = 1;
        for (std::size_t entry : row) {
            product *= table.at(entry);
            if (sgn(product) == 0) {
                break;
            }
        }
        total += product;
    }
    return total;
}

BigInt rhs_forward(std::size_t n, unsigned alpha, const CountTable& bounded_counts) {
    require_alpha(alpha);
    bounded_counts.at(n);
    return sum_of_products(enumerate_solutions(n, base_for(alpha)), bounded_counts);
}

const BigInt& GammaTable::at(std::size_t n) const {
    if (n >= values.size()) {
        throw std::out_of_range("gamma table is too short: need n=" + std::to_string(n) +
                                ", have max_n=" + std::to_string(max_n()));
    }
    return values[n];
}

GammaTable gamma_table(unsigned alpha, const CountTable& signed_counts, std::size_t max_n) {
    require_alpha(alpha);
    const std::size_t scale = base_for(alpha);
    signed_counts.at(max_n / scale);
    GammaTable gamma{alpha, signed_counts.set_label, std::vector<BigInt>(max_n + 1)};
    gamma.values[0] = 1;
    for (std::size_t n = scale; n <= max_n; n += scale) {
        gamma.values[n] = sum_of_products(gamma_support(n, alpha), signed_counts);
    }
    return gamma;
}

Series gamma_series(const Series& signed_gf, unsigned alpha) {
    require_alpha(alpha);
    return scale_product(signed_gf, 2, base_for(alpha));
}

GammaTable gamma_table_series(unsigned alpha, const CountTable& signed_counts, std::size_t max_n) {
    require_alpha(alpha);
    // Coefficients of Pbar beyond max_n / (alpha+1) never reach order max_n.
    const std::size_t needed = max_n / base_for(alpha);
    signed_counts.at(needed);
    std::vector<BigInt> padded(max_n + 1);
    for (std::size_t i = 0; i <= needed; ++i) {
        padded[i] = signed_counts.values[i];
    }
    Series g = gamma_series(Series::from_coeffs(std::move(padded)), alpha);
    GammaTable gamma{alpha, signed_counts.set_label, {}};
    gamma.values.assign(g.coeffs().begin(), g.coeffs().end());
    return gamma;
}

BigInt rhs_inverse(std::size_t n, unsigned alpha, const CountTable& unrestricted_counts,
                   const GammaTable& gamma) {
    require_alpha(alpha);
    unrestricted_counts.at(n);
    gamma.at(n);
    BigInt total = 0;
    for (std::size_t i = 0; i <= n; ++i) {
        if (sgn(gamma.values[i]) != 0) {
            mpz_addmul(total.get_mpz_t(), unrestricted_counts.values[n - i].get_mpz_t(),
                       gamma.values[i].get_mpz_t());
        }
    }
    return total;
}

BigInt rhs_signed(IdentityId identity, std::size_t n, unsigned alpha, const CountTable& table,
                  bool allow_odd_alpha) {
    table.at(n);
    switch (identity) {
    case IdentityId::signed_binary:
        return sum_of_products(enumerate_solutions(n, 2), table);
    case IdentityId::signed_general:
        require_alpha(alpha);
        if (alpha % 2 != 0 && !allow_odd_alpha) {
            throw std::invalid_argument("signed-general holds only for even alpha (got " +
                                        std::to_string(alpha) + "); pass --allow-odd-alpha to explore");
        }
        return sum_of_products(enumerate_solutions(n, base_for(alpha)), table);
    default:
        throw std::invalid_argument("rhs_signed: not a signed identity: " + to_string(identity));
    }
}

std::optional<std::size_t> VerificationReport::first_mismatch() const {
    for (const auto& r : records) {
        if (!r.equal) {
            return r.n;
        }
    }
    return std::nullopt;
}

VerificationReport verify(IdentityId identity, const PartSet& set, unsigned alpha, std::size_t max_n,
                          const VerifyOptions& options) {
    const auto started = std::chrono::steady_clock::now();
    require_alpha(alpha);

    VerificationReport report;
    report.identity = identity;
    report.set_label = set.label();
    report.alpha = alpha;
    report.max_n = max_n;
    report.mode = options.mode;

    if ((identity == IdentityId::forward_binary || identity == IdentityId::signed_binary) && alpha != 1) {
        throw std::invalid_argument(to_string(identity) + " is the base-2 case and requires alpha = 1");
    }
    if (identity == IdentityId::signed_general && alpha % 2 != 0) {
        if (!options.allow_odd_alpha) {
            throw std::invalid_argument("signed-general holds only for even alpha (got " +
                                        std::to_string(alpha) + "); pass --allow-odd-alpha to explore");
        }
        report.exploration = true;
    }
    if (options.mode == EvalMode::enumerative && max_n > options.enumeration_cap) {
        throw std::invalid_argument("enumerative mode is capped at n <= " +
                                    std::to_string(options.enumeration_cap) + " (requested " +
                                    std::to_string(max_n) + ")");
    }

    const bool run_enum = options.mode != EvalMode::convolution;
    const bool run_conv = options.mode != EvalMode::enumerative;
    const std::size_t enum_max = std::min(max_n, options.enumeration_cap);

    std::optional<CountTable> lhs_table;
    std::vector<std::optional<BigInt>> enum_rhs(max_n + 1);
    std::vector<std::optional<BigInt>> conv_rhs(max_n + 1);

    switch (identity) {
    case IdentityId::forward_binary:
    case IdentityId::forward_general:
    case IdentityId::signed_binary:
    case IdentityId::signed_general: {
        Statistic rhs_stat = Statistic::bounded(alpha);
        std::size_t base = base_for(alpha);
        if (identity == IdentityId::forward_binary || identity == IdentityId::forward_general) {
            lhs_table = count(Statistic::unrestricted(), set, max_n);
        } else if (identity == IdentityId::signed_binary) {
            lhs_table = count(Statistic::signed_bounded(1), set, max_n);
            rhs_stat = Statistic::signed_unrestricted();
            base = 2;
        } else {
            lhs_table = count(Statistic::signed_unrestricted(), set, max_n);
            rhs_stat = Statistic::signed_bounded(alpha);
        }
        const CountTable rhs_table = count(rhs_stat, set, max_n);
        if (run_enum) {
            for (std::size_t n = 0; n <= enum_max; ++n) {
                enum_rhs[n] = sum_of_products(enumerate_solutions(n, base), rhs_table);
            }
        }
        if (run_conv) {
            const Series product = scale_product(as_series(rhs_table.values, max_n), base);
            for (std::size_t n = 0; n <= max_n; ++n) {
                conv_rhs[n] = product[n];
            }
        }
        break;
    }
    case IdentityId::inverse: {
        lhs_table = count(Statistic::bounded(alpha), set, max_n);
        const CountTable unrestricted = count(Statistic::unrestricted(), set, max_n);
        const CountTable signed_counts = count(Statistic::signed_unrestricted(), set, max_n);
        if (run_enum) {
            const GammaTable gamma = gamma_table(alpha, signed_counts, enum_max);
            for (std::size_t n = 0; n <= enum_max; ++n) {
                enum_rhs[n] = rhs_inverse(n, alpha, unrestricted, gamma);
            }
        }
        if (run_conv) {
            const GammaTable gamma = gamma_table_series(alpha, signed_counts, max_n);
            const Series product = mul(as_series(unrestricted.values, max_n), as_series(gamma.values, max_n));
            for (std::size_t n = 0; n <= max_n; ++n) {
                conv_rhs[n] = product[n];
            }
        }
        break;
    }
    }

    for (std::size_t n = 0; n <= max_n; ++n) {
        if (!enum_rhs[n] && !conv_rhs[n]) {
            continue;
        }
        VerificationRecord record;
        record.n = n;
        record.lhs = lhs_table->values[n];
        record.rhs_enumerative = enum_rhs[n];
        record.rhs_convolution = conv_rhs[n];
        record.equal = (!enum_rhs[n] || *enum_rhs[n] == record.lhs) &&
                       (!conv_rhs[n] || *conv_rhs[n] == record.lhs);
        if (enum_rhs[n] && conv_rhs[n] && *enum_rhs[n] != *conv_rhs[n]) {
            report.evaluators_agree = false;
        }
        report.all_equal = report.all_equal && record.equal;
        report.records.push_back(std::move(record));
    }
    report.elapsed = std::chrono::steady_clock::now() - started;
    return report;
}

namespace {

SeriesCheck compare(std::string name, const Series& lhs, const Series& rhs) {
    SeriesCheck check{std::move(name), true, std::nullopt};
    for (std::size_t i = 0; i <= lhs.order(); ++i) {
        if (lhs[i] != rhs[i]) {
            check.holds = false;
            check.first_mismatch = i;
            break;
        }
    }
    return check;
}

}  // namespace

std::vector<SeriesCheck> series_checks(const PartSet& set, unsigned alpha, std::size_t order) {
    require_alpha(alpha);
    const std::size_t base = base_for(alpha);
    const Series unrestricted = build_gf(Statistic::unrestricted(), set, order);
    const Series signed_gf = build_gf(Statistic::signed_unrestricted(), set, order);

    std::vector<SeriesCheck> checks;
    checks.push_back(compare("P = prod_i P_alpha(q^(alpha+1)^i)", unrestricted,
                             scale_product(build_gf(Statistic::bounded(alpha), set, order), base)));
    checks.push_back(compare("Pbar_1 = prod_i Pbar(q^2^i)",
                             build_gf(Statistic::signed_bounded(1), set, order),
                             scale_product(signed_gf, 2)));
    if (alpha % 2 == 0) {
        checks.push_back(compare("Pbar = prod_i Pbar_alpha(q^(alpha+1)^i)", signed_gf,
                                 scale_product(build_gf(Statistic::signed_bounded(alpha), set, order),
                                               base)));
    }
    checks.push_back(compare("P_alpha = P * Gamma_alpha", build_gf(Statistic::bounded(alpha), set, order),
                             mul(unrestricted, gamma_series(signed_gf, alpha))));
    return checks;
}

}  // namespace partid
