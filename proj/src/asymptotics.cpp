#include <algorithm>
#include <cmath>
#include <numeric>

#include <simperm/asymptotics.hpp>
#include <simperm/permutation.hpp>
#include <simperm/sequences.hpp>

namespace simperm {

namespace {

BigRational abs_q(const BigRational& q) { return q < 0 ? BigRational(-q) : q; }

BigInt pow10(int e)
{
    BigInt r = 1;
    for (int i = 0; i < e; ++i) {
        r *= 10;
    }
    return r;
}

// Nearest integer, ties away from zero.
BigInt round_q(const BigRational& q)
{
    const BigInt num = numerator(q);
    const BigInt den = denominator(q);
    const BigInt twice = 2 * num + (num >= 0 ? den : BigInt(-den));
    return twice / (2 * den);
}

BigRational exact_fraction(const BigInt& num, const BigInt& den) { return BigRational(num, den); }

// (n!/e^2) * bracket.
HighPrecision expansion(int n, const BigRational& bracket, int digits)
{
    if (n < 2) {
        throw AsymptoticsError(AsymptoticsErrc::bad_argument, "expansions need n >= 2");
    }
    return exp_neg2(digits) * (BigRational(factorial(static_cast<unsigned>(n))) * bracket);
}

BigRational inverse_pair(int n) { return exact_fraction(1, BigInt(n) * (n - 1)); }

} // namespace

HighPrecision::HighPrecision(BigRational value, BigRational error_bound)
    : m_value(std::move(value)), m_error(std::move(error_bound))
{
    if (m_error < 0) {
        throw AsymptoticsError(AsymptoticsErrc::bad_argument, "negative error bound");
    }
}

HighPrecision HighPrecision::operator*(const BigRational& exact_factor) const
{
    return {m_value * exact_factor, m_error * abs_q(exact_factor)};
}

HighPrecision HighPrecision::operator*(const HighPrecision& other) const
{
    return {m_value * other.m_value,
            abs_q(m_value) * other.m_error + abs_q(other.m_value) * m_error + m_error * other.m_error};
}

HighPrecision HighPrecision::operator-(const BigRational& exact_term) const { return {m_value - exact_term, m_error}; }

HighPrecision HighPrecision::reciprocal() const
{
    const auto mag = abs_q(m_value);
    if (mag <= m_error) {
        throw AsymptoticsError(AsymptoticsErrc::precision_loss, "reciprocal of an interval containing zero");
    }
    return {1 / m_value, m_error / (mag * (mag - m_error))};
}

HighPrecision HighPrecision::abs() const { return {abs_q(m_value), m_error}; }

double HighPrecision::to_double() const { return m_value.convert_to<double>(); }

std::string HighPrecision::to_string(int significant) const
{
    if (m_value == 0) {
        return "0";
    }
    const auto mag = abs_q(m_value);
    int e = static_cast<int>(std::floor(std::log10(mag.convert_to<double>())));
    auto scaled_at = [&](int exp10) {
        const int shift = significant - 1 - exp10;
        const BigRational factor = shift >= 0 ? BigRational(pow10(shift)) : BigRational(1, pow10(-shift));
        return round_q(mag * factor);
    };
    BigInt digits = scaled_at(e);
    // log10 in double can be off by one near powers of ten, and rounding can carry.
    if (digits >= pow10(significant)) {
        digits = scaled_at(++e);
    } else if (digits < pow10(significant - 1)) {
        digits = scaled_at(--e);
    }
    std::string d = to_decimal(digits);
    std::string out = m_value < 0 ? "-" : "";
    out += d.substr(0, 1);
    if (d.size() > 1) {
        out += "." + d.substr(1);
    }
    return out + "e" + (e >= 0 ? "+" : "-") + (std::abs(e) < 10 ? "0" : "") + std::to_string(std::abs(e));
}

HighPrecision exp_neg2(int digits)
{
    if (digits < 1) {
        throw AsymptoticsError(AsymptoticsErrc::bad_argument, "at least one digit is required");
    }
    const BigRational tolerance(1, pow10(digits + 2));
    BigRational sum = 0;
    BigRational term = 1; // (-2)^k / k!
    int k = 0;
    for (;; ++k) {
        sum += term;
        const BigRational next = term * BigRational(-2, k + 1);
        // From k >= 2 the terms shrink in magnitude, so the alternating tail is
        // bounded by the first omitted term.
        if (k >= 2 && abs_q(next) <= tolerance) {
            const BigInt scale = pow10(digits);
            const BigRational rounded(round_q(sum * BigRational(scale)), scale);
            return {rounded, abs_q(rounded - sum) + abs_q(next)};
        }
        term = next;
    }
}

HighPrecision simple_asymptotic(int n, int order, int digits)
{
    if (order < 0 || order > 2) {
        throw AsymptoticsError(AsymptoticsErrc::bad_argument, "expansion order must be 0, 1 or 2");
    }
    if (n < 2) {
        throw AsymptoticsError(AsymptoticsErrc::bad_argument, "expansions need n >= 2");
    }
    BigRational bracket = 1;
    if (order >= 1) {
        bracket -= exact_fraction(4, n);
    }
    if (order >= 2) {
        bracket += 2 * inverse_pair(n);
    }
    return expansion(n, bracket, digits);
}

HighPrecision kaplansky_asymptotic(int n, int digits)
{
    return expansion(n, 1 - 2 * inverse_pair(std::max(n, 2)), digits);
}

HighPrecision f4_asymptotic(int n, int digits)
{
    return expansion(n, 1 - 4 * inverse_pair(std::max(n, 2)), digits);
}

ErrorRow make_error_row(int n, const BigInt& exact, const HighPrecision& approx, int digits)
{
    ErrorRow row;
    row.n = n;
    row.exact = exact;
    row.approx = approx;
    // exact - approx, carrying approx's uncertainty.
    const HighPrecision diff(BigRational(exact) - approx.value(), approx.error_bound());
    if (exact != 0) {
        row.relative_error = diff.abs() * BigRational(1, exact < 0 ? BigInt(-exact) : exact);
    }
    const auto main_term = exp_neg2(digits) * BigRational(factorial(static_cast<unsigned>(n)));
    row.scaled_residual = diff * main_term.reciprocal() * BigRational(BigInt(n) * n * n);
    return row;
}

std::vector<ErrorRow> simple_asymptotic_check(int first_n, int last_n)
{
    first_n = std::max(first_n, 2);
    std::vector<ErrorRow> rows;
    if (last_n < first_n) {
        return rows;
    }
    const auto s = s_sequence(last_n, SMethod::series);
    for (int n = first_n; n <= last_n; ++n) {
        rows.push_back(make_error_row(n, s.at(n), simple_asymptotic(n, 2)));
    }
    return rows;
}

std::vector<ErrorRow> kaplansky_check(int first_n, int last_n)
{
    first_n = std::max(first_n, 2);
    std::vector<ErrorRow> rows;
    if (last_n < first_n) {
        return rows;
    }
    const auto f2 = f_m_sequence(2, std::max(last_n, 2));
    for (int n = first_n; n <= last_n; ++n) {
        rows.push_back(make_error_row(n, f2.at(n), kaplansky_asymptotic(n)));
    }
    return rows;
}

std::vector<ErrorRow> f4_asymptotic_check(int first_n, int last_n)
{
    first_n = std::max(first_n, 2);
    std::vector<ErrorRow> rows;
    if (last_n < first_n) {
        return rows;
    }
    const auto f4 = f_m_sequence(4, std::max(last_n, 4));
    for (int n = first_n; n <= last_n; ++n) {
        rows.push_back(make_error_row(n, f4.at(n), f4_asymptotic(n)));
    }
    return rows;
}

std::vector<BootstrapRow> bootstrap_check(int n_max)
{
    if (n_max > marking_cap) {
        throw AsymptoticsError(AsymptoticsErrc::bad_argument,
                               "bootstrap counts are exhaustive; n_max must be <= " + std::to_string(marking_cap));
    }
    std::vector<BootstrapRow> rows;
    if (n_max < 4) {
        return rows;
    }
    const auto s = s_sequence(n_max, SMethod::series);
    for (int n = 4; n <= n_max; ++n) {
        std::uint64_t with_long = 0;
        std::uint64_t with_second = 0;
        std::uint64_t with_second_and_pair = 0;
        std::vector<int> v(static_cast<std::size_t>(n));
        std::iota(v.begin(), v.end(), 1);
        do {
            const Permutation p(v);
            bool long_block = false;
            bool second_block = false;
            bool pair = false;
            for (const auto& b : blocks(p)) {
                const int len = b.length();
                if (len == 2) {
                    pair = true;
                }
                if (len != n - 1 && len != n - 2) {
                    continue;
                }
                const auto segment = p.values().subspan(static_cast<std::size_t>(b.start - 1), static_cast<std::size_t>(len));
                if (is_simple(pattern_of(segment))) {
                    (len == n - 1 ? long_block : second_block) = true;
                }
            }
            with_long += long_block ? 1 : 0;
            with_second += second_block ? 1 : 0;
            with_second_and_pair += (second_block && pair) ? 1 : 0;
        } while (std::next_permutation(v.begin(), v.end()));

        rows.push_back({n, "simple block of length n-1 = 4 s_(n-1)", with_long, 4 * s.at(n - 1)});
        if (n >= 5) {
            rows.push_back({n, "simple block of length n-2 = 18 s_(n-2)", with_second, 18 * s.at(n - 2)});
            rows.push_back({n, "simple block of length n-2 and a block of length 2 = 8 s_(n-2)", with_second_and_pair,
                            8 * s.at(n - 2)});
        }
    }
    for (const auto& r : rows) {
        if (BigInt(r.counted) != r.predicted) {
            throw AsymptoticsError(AsymptoticsErrc::claim_violation,
                                   "n = " + std::to_string(r.n) + ", " + r.claim + ": counted " + std::to_string(r.counted)
                                       + ", predicted " + to_decimal(r.predicted));
        }
    }
    return rows;
}

} // namespace simperm
