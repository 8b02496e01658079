#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <simperm/bigint.hpp>
#include <simperm/error.hpp>

namespace simperm {

enum class SeriesErrc {
    bad_order,
    non_unit_divisor,
    composition_constant_term_nonzero,
    not_revertible,
    divisibility_violation,
    identity_violation,
};

using SeriesError = Error<SeriesErrc>;

// Power series with exact integer coefficients, known up to and including x^order.
// Binary arithmetic truncates to the smaller order. There is deliberately no
// operator==: comparisons name the order they hold to (see first_mismatch).
class TruncSeries {
public:
    explicit TruncSeries(int order);
    TruncSeries(std::vector<BigInt> coeffs, int order);

    static TruncSeries x(int order);
    static TruncSeries constant(const BigInt& c, int order);

    int order() const noexcept { return m_order; }
    std::span<const BigInt> coeffs() const noexcept { return m_coeffs; }

    // Coefficient of x^k; throws bad_order if k is beyond the known order.
    const BigInt& operator[](int k) const;
    BigInt& operator[](int k);

    // Lowest k with a nonzero coefficient, or order() + 1 for the zero series.
    int valuation() const noexcept;

    TruncSeries truncated(int order) const;
    // Same coefficients with the order raised; the new coefficients are zero.
    TruncSeries zero_extended(int order) const;
    // Known to order() - 1.
    TruncSeries derivative() const;
    // Multiply by x^k; the order grows by k.
    TruncSeries shifted(int k) const;

    TruncSeries operator-() const;
    TruncSeries& operator+=(const TruncSeries& other);
    TruncSeries& operator-=(const TruncSeries& other);
    TruncSeries& operator*=(const BigInt& c);

    friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
    friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
    friend TruncSeries operator*(TruncSeries a, const BigInt& c) { return a *= c; }
    friend TruncSeries operator*(const BigInt& c, TruncSeries a) { return a *= c; }
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);

    std::string to_string(const std::string& var = "x") const;

private:
    std::vector<BigInt> m_coeffs;
    int m_order;
};

// First k <= order where a and b differ, if any. Throws bad_order if either
// series is known to less than order.
std::optional<int> first_mismatch(const TruncSeries& a, const TruncSeries& b, int order);

/// a / b. A constant term of +-1 keeps the division in the integers. Any other
/// nonzero constant term goes through exact rationals and the quotient must come
/// out integral; otherwise (or for a zero constant term) throws non_unit_divisor.
TruncSeries divide(const TruncSeries& a, const TruncSeries& b);

/// outer(inner), requires inner(0) = 0.
TruncSeries compose(const TruncSeries& outer, const TruncSeries& inner);

TruncSeries power(TruncSeries base, unsigned exponent);

/// Compositional inverse by order-doubling Newton iteration,
/// g <- g - (f(g) - x) / f'(g). Requires f(0) = 0 and [x^1]f = +-1.
TruncSeries revert(const TruncSeries& f);

// F(x) = sum_{k>=1} k! x^k.
TruncSeries factorial_series(int order);

// Com_n = [x^n] F^<-1>(x) through the Lagrange form
//   n Com_n = [x^(n-1)] B(x)^n,  B = sum_k (-1)^k (2! x + 3! x^2 + ...)^k.
// Throws divisibility_violation if the right side is not a multiple of n.
BigInt lagrange_com(int n);

// I(x) = F / (1 + F): plus-indecomposable permutations.
TruncSeries indecomposable_series(int order);

// S(t) = t - 2t^2/(1+t) - F^<-1>(t), with [t^1..t^3] checked to vanish.
TruncSeries simple_series(int order);

// Same, reusing an already computed compositional inverse of F.
TruncSeries simple_series_from_inverse(const TruncSeries& comtet);

// x - 2x^2/(1+x) - simple_part(x): the weight of a collapsed marked part at v = -1.
TruncSeries marked_part_weight(const TruncSeries& simple_part);

/// f_m(x) = F(x - 2x^2/(1+x) - S_m(x)) with S_m = sum_{j=4}^m s_j x^j: the
/// generating function of permutations without a minimal block of length <= m.
TruncSeries f_m_series(int m, int order);

// Polynomial in v with a power series in x per v-degree, stored densely in x and
// sparsely in v.
class BivariatePoly {
public:
    explicit BivariatePoly(int x_order);

    int x_order() const noexcept { return m_x_order; }

    BigInt coeff(int i, int j) const;
    void add_to(int i, int j, const BigInt& c);

    // [x^i] as a dense polynomial in v (index = v-degree).
    std::vector<BigInt> x_slice(int i) const;
    TruncSeries evaluate_v(const BigInt& v) const;
    int max_v_degree() const;

    BivariatePoly& operator+=(const BivariatePoly& other);
    friend BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b);

private:
    int m_x_order;
    std::vector<std::map<int, BigInt>> m_rows;
};

/// F_m(x, v) = sum_k k! (x + 2v x^2/(1 - v x) + v S_m(x))^k truncated at x-order.
BivariatePoly bivariate_F_m(int m, int x_order);

struct IdentityCheck {
    std::string name;
    int order = 0;
    std::optional<int> first_failing_order;

    bool passed() const noexcept { return !first_failing_order.has_value(); }
};

struct IdentityReport {
    std::vector<IdentityCheck> checks;

    bool ok() const noexcept;
    // Throws identity_violation naming the first failed identity and order.
    void require() const;
};

/// The differential equations, denominators cleared:
///   F:     x + xF + x^2 F' = F
///   I:     x^2 I' = -I^2 + (1 + x) I - x
///   C:     C' (x - (1 + x) C) = C^2
///   theta: (1 + x) theta theta' = -x^2 + (1 + 2x) theta,  theta = x - (1 + x) C
IdentityReport check_ode_identities(int order);

/// The substitution-decomposition equations:
///   F = x + 2 I F + S(F)
///   I = x + I F + S(F)
///   S(F) = (F - F^2)/(1 + F) - x
///   I (1 + F) = F
///   F(x - 2x^2/(1+x) - S(x)) = x
IdentityReport check_structure_identities(int order);

} // namespace simperm
