#pragma once

#include <optional>
#include <string>
#include <vector>

#include <simperm/bigint.hpp>
#include <simperm/error.hpp>

namespace simperm {

enum class AsymptoticsErrc { bad_argument, claim_violation, precision_loss };

using AsymptoticsError = Error<AsymptoticsErrc>;

// An exact rational carrying a certified bound on its distance from the
// quantity it approximates.
class HighPrecision {
public:
    HighPrecision() = default;
    HighPrecision(BigRational value, BigRational error_bound);

    static HighPrecision exact(const BigRational& value) { return {value, 0}; }

    const BigRational& value() const noexcept { return m_value; }
    const BigRational& error_bound() const noexcept { return m_error; }

    // Certified interval [value - error, value + error].
    BigRational lower() const { return m_value - m_error; }
    BigRational upper() const { return m_value + m_error; }

    HighPrecision operator*(const BigRational& exact_factor) const;
    HighPrecision operator*(const HighPrecision& other) const;
    HighPrecision operator-(const BigRational& exact_term) const;
    // Throws precision_loss if the interval contains zero.
    HighPrecision reciprocal() const;
    HighPrecision abs() const;

    double to_double() const;
    // Scientific notation with the given number of significant digits.
    std::string to_string(int significant = 6) const;

private:
    BigRational m_value = 0;
    BigRational m_error = 0;
};

// Working precision for every expansion, in decimal digits.
inline constexpr int default_digits = 30;

/// e^-2 from the partial sum of sum_k (-2)^k / k!, rounded to `digits` decimals.
/// The error bound covers the alternating tail and the rounding.
HighPrecision exp_neg2(int digits = default_digits);

/// (n!/e^2) (1 - 4/n + 2/(n(n-1))) truncated after `order` correction terms
/// (order 0 gives n!/e^2). Requires n >= 2.
HighPrecision simple_asymptotic(int n, int order, int digits = default_digits);

// (n!/e^2) (1 - 2/(n(n-1))), Kaplansky's count of permutations with no block of length 2.
HighPrecision kaplansky_asymptotic(int n, int digits = default_digits);

// (n!/e^2) (1 - 4/(n(n-1))), permutations with no minimal block of length <= 4.
HighPrecision f4_asymptotic(int n, int digits = default_digits);

struct ErrorRow {
    int n = 0;
    BigInt exact;
    HighPrecision approx;
    // |exact - approx| / exact; empty when exact = 0.
    std::optional<HighPrecision> relative_error;
    // n^3 (exact - approx) / (n!/e^2): the unexplained part of the bracket, scaled
    // by the order of the first omitted term.
    HighPrecision scaled_residual;

    bool exact_zero() const noexcept { return exact == 0; }
};

ErrorRow make_error_row(int n, const BigInt& exact, const HighPrecision& approx, int digits = default_digits);

/// Rows for s_n against the order-2 expansion, for first_n <= n <= last_n.
std::vector<ErrorRow> simple_asymptotic_check(int first_n, int last_n);
/// Rows for [t^n] f_2 against Kaplansky's expansion.
std::vector<ErrorRow> kaplansky_check(int first_n, int last_n);
/// Rows for [t^n] f_4 against its three-term expansion.
std::vector<ErrorRow> f4_asymptotic_check(int first_n, int last_n);

// One exhaustive count against its closed form.
struct BootstrapRow {
    int n = 0;
    std::string claim;
    std::uint64_t counted = 0;
    BigInt predicted;
};

/// Brute force over permutations of length n <= n_max (<= 8):
///   containing a simple block of length n-1:            4 s_{n-1}  (n >= 4)
///   containing a simple block of length n-2:           18 s_{n-2}  (n >= 5)
///   ... and also a block of length 2:                   8 s_{n-2}  (n >= 5)
/// A simple block is a block whose pattern is simple. Below those lengths the
/// short blocks overlap and the counts do not apply. Throws claim_violation.
std::vector<BootstrapRow> bootstrap_check(int n_max);

} // namespace simperm
