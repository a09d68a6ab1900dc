#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "partid/counting.hpp"
#include "partid/partset.hpp"
#include "partid/series.hpp"
#include "partid/solutions.hpp"
#include "partid/statistic.hpp"

namespace partid {

/// The part-set-independent identities.
///
///   forward_binary   p(n)        = sum_rows prod p_1(a_ij),      base 2
///   forward_general  p(n)        = sum_rows prod p_alpha(a_ij),  base alpha+1
///   inverse          p_alpha(n)  = sum_i p(n-i) Gamma_alpha(i)
///   signed_binary    pbar_1(n)   = sum_rows prod pbar(a_ij),     base 2
///   signed_general   pbar(n)     = sum_rows prod pbar_alpha(a_ij), base alpha+1, alpha even
enum class IdentityId { forward_binary, forward_general, inverse, signed_binary, signed_general };

/// CLI spelling: "forward-binary", "forward", "inverse", "signed-binary", "signed-general".
std::string to_string(IdentityId id);
/// Throws std::invalid_argument for unknown names.
IdentityId parse_identity(std::string_view name);

/// Thrown when two evaluators that must agree do not. This is a bug in this
/// library, never a property of the input.
class InvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// One row of a sum-of-products expansion and the product it contributes.
struct ExpansionTerm {
    SolutionRow row;
    BigInt value;
};

/// prod_j table(row_j) for every row; entries equal to 0 contribute table(0) = 1.
std::vector<ExpansionTerm> expand_terms(const SolutionMatrix& matrix, const CountTable& table);
BigInt sum_of_products(const SolutionMatrix& matrix, const CountTable& table);

/// Right-hand side of the forward identity via the base-(alpha+1) solution matrix.
BigInt rhs_forward(std::size_t n, unsigned alpha, const CountTable& bounded_counts);

/// Gamma_alpha(0..max_n); Gamma is nonzero only at multiples of alpha+1.
struct GammaTable {
    unsigned alpha = 1;
    std::string set_label;
    std::vector<BigInt> values;

    std::size_t max_n() const { return values.size() - 1; }
    const BigInt& at(std::size_t n) const;
};

/// Gamma from its definition: sum over gamma_support rows of prod pbar(b_ij).
GammaTable gamma_table(unsigned alpha, const CountTable& signed_counts, std::size_t max_n);
/// Gamma as coefficients of prod_i Pbar(q^{2^i (alpha+1)}).
GammaTable gamma_table_series(unsigned alpha, const CountTable& signed_counts, std::size_t max_n);
/// The same product built from an arbitrary signed generating function.
Series gamma_series(const Series& signed_gf, unsigned alpha);

BigInt rhs_inverse(std::size_t n, unsigned alpha, const CountTable& unrestricted_counts,
                   const GammaTable& gamma);

/// signed_binary ignores alpha (base 2). signed_general rejects odd alpha
/// unless `allow_odd_alpha` is set.
BigInt rhs_signed(IdentityId identity, std::size_t n, unsigned alpha, const CountTable& table,
                  bool allow_odd_alpha = false);

enum class EvalMode { enumerative, convolution, both };
std::string to_string(EvalMode mode);
EvalMode parse_eval_mode(std::string_view name);

struct VerifyOptions {
    EvalMode mode = EvalMode::both;
    /// Largest n evaluated through solution matrices.
    std::size_t enumeration_cap = 60;
    /// Permit signed_general with odd alpha. Such runs are explorations:
    /// inequalities are expected and reported, not treated as failures.
    bool allow_odd_alpha = false;
};

struct VerificationRecord {
    std::size_t n = 0;
    BigInt lhs;
    std::optional<BigInt> rhs_enumerative;
    std::optional<BigInt> rhs_convolution;
    bool equal = false;

    /// The convolution value when computed, else the enumerative one.
    const BigInt& rhs() const { return rhs_convolution ? *rhs_convolution : *rhs_enumerative; }
};

struct VerificationReport {
    IdentityId identity = IdentityId::forward_general;
    std::string set_label;
    unsigned alpha = 1;
    std::size_t max_n = 0;
    EvalMode mode = EvalMode::both;
    bool exploration = false;
    std::vector<VerificationRecord> records;
    bool all_equal = true;
    /// False if the enumerative and convolution paths disagree anywhere.
    bool evaluators_agree = true;
    std::chrono::nanoseconds elapsed{0};

    std::optional<std::size_t> first_mismatch() const;
};

/// Evaluates LHS (counting DP) and RHS (solution matrices and/or series
/// convolution) for n = 0..max_n.
///
/// Throws std::invalid_argument for alpha == 0, signed_general with odd alpha
/// without the exploration flag, forward_binary/signed_binary with alpha != 1,
/// and enumerative-only mode with max_n above the enumeration cap.
VerificationReport verify(IdentityId identity, const PartSet& set, unsigned alpha, std::size_t max_n,
                          const VerifyOptions& options = {});

/// A named coefficient-wise series equality.
struct SeriesCheck {
    std::string name;
    bool holds = false;
    std::optional<std::size_t> first_mismatch;
};

/// The generating-function forms of the identities at a fixed order:
/// scale factorizations of P, Pbar_1 and (alpha even) Pbar, and P_alpha = P * Gamma.
std::vector<SeriesCheck> series_checks(const PartSet& set, unsigned alpha, std::size_t order);

}  // namespace partid
