#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

#include <simperm/series.hpp>

namespace simperm {

namespace {

void require_order(int order)
{
    if (order < 0) {
        throw SeriesError(SeriesErrc::bad_order, "negative truncation order " + std::to_string(order));
    }
}

std::size_t idx(int k) { return static_cast<std::size_t>(k); }

} // namespace

TruncSeries::TruncSeries(int order) : m_order(order)
{
    require_order(order);
    m_coeffs.resize(idx(order) + 1);
}

TruncSeries::TruncSeries(std::vector<BigInt> coeffs, int order) : m_coeffs(std::move(coeffs)), m_order(order)
{
    require_order(order);
    m_coeffs.resize(idx(order) + 1);
}

TruncSeries TruncSeries::x(int order)
{
    TruncSeries r(order);
    if (order >= 1) {
        r.m_coeffs[1] = 1;
    }
    return r;
}

TruncSeries TruncSeries::constant(const BigInt& c, int order)
{
    TruncSeries r(order);
    r.m_coeffs[0] = c;
    return r;
}

const BigInt& TruncSeries::operator[](int k) const
{
    if (k < 0 || k > m_order) {
        throw SeriesError(SeriesErrc::bad_order,
                          "coefficient " + std::to_string(k) + " requested from series of order " + std::to_string(m_order));
    }
    return m_coeffs[idx(k)];
}

BigInt& TruncSeries::operator[](int k)
{
    return const_cast<BigInt&>(std::as_const(*this)[k]);
}

int TruncSeries::valuation() const noexcept
{
    for (int k = 0; k <= m_order; ++k) {
        if (m_coeffs[idx(k)] != 0) {
            return k;
        }
    }
    return m_order + 1;
}

TruncSeries TruncSeries::truncated(int order) const
{
    if (order > m_order) {
        throw SeriesError(SeriesErrc::bad_order, "cannot truncate order " + std::to_string(m_order) + " series to "
                                                     + std::to_string(order));
    }
    return TruncSeries(std::vector<BigInt>(m_coeffs.begin(), m_coeffs.begin() + order + 1), order);
}

TruncSeries TruncSeries::zero_extended(int order) const
{
    if (order < m_order) {
        return truncated(order);
    }
    return TruncSeries(m_coeffs, order);
}

TruncSeries TruncSeries::derivative() const
{
    if (m_order == 0) {
        throw SeriesError(SeriesErrc::bad_order, "derivative of an order 0 series is unknown");
    }
    TruncSeries r(m_order - 1);
    for (int k = 1; k <= m_order; ++k) {
        r.m_coeffs[idx(k - 1)] = m_coeffs[idx(k)] * k;
    }
    return r;
}

TruncSeries TruncSeries::shifted(int k) const
{
    TruncSeries r(m_order + k);
    std::copy(m_coeffs.begin(), m_coeffs.end(), r.m_coeffs.begin() + k);
    return r;
}

TruncSeries TruncSeries::operator-() const
{
    TruncSeries r(*this);
    for (auto& c : r.m_coeffs) {
        c = -c;
    }
    return r;
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& other)
{
    m_order = std::min(m_order, other.m_order);
    m_coeffs.resize(idx(m_order) + 1);
    for (int k = 0; k <= m_order; ++k) {
        m_coeffs[idx(k)] += other.m_coeffs[idx(k)];
    }
    return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& other)
{
    m_order = std::min(m_order, other.m_order);
    m_coeffs.resize(idx(m_order) + 1);
    for (int k = 0; k <= m_order; ++k) {
        m_coeffs[idx(k)] -= other.m_coeffs[idx(k)];
    }
    return *this;
}

TruncSeries& TruncSeries::operator*=(const BigInt& c)
{
    for (auto& a : m_coeffs) {
        a *= c;
    }
    return *this;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b)
{
    const int order = std::min(a.order(), b.order());
    TruncSeries r(order);
    for (int i = a.valuation(); i <= order; ++i) {
        const auto& ai = a.m_coeffs[idx(i)];
        if (ai == 0) {
            continue;
        }
        for (int j = 0; i + j <= order; ++j) {
            add_product(r.m_coeffs[idx(i + j)], ai, b.m_coeffs[idx(j)]);
        }
    }
    return r;
}

std::string TruncSeries::to_string(const std::string& var) const
{
    std::string out;
    for (int k = 0; k <= m_order; ++k) {
        const auto& c = m_coeffs[idx(k)];
        if (c == 0) {
            continue;
        }
        const bool negative = c < 0;
        const BigInt mag = negative ? BigInt(-c) : c;
        if (out.empty()) {
            out += negative ? "-" : "";
        } else {
            out += negative ? " - " : " + ";
        }
        if (k == 0 || mag != 1) {
            out += to_decimal(mag);
        }
        if (k >= 1) {
            out += var;
        }
        if (k >= 2) {
            out += "^" + std::to_string(k);
        }
    }
    if (out.empty()) {
        out = "0";
    }
    return out + " + O(" + var + "^" + std::to_string(m_order + 1) + ")";
}

std::optional<int> first_mismatch(const TruncSeries& a, const TruncSeries& b, int order)
{
    if (a.order() < order || b.order() < order) {
        throw SeriesError(SeriesErrc::bad_order, "comparison to order " + std::to_string(order)
                                                     + " needs both series known that far");
    }
    for (int k = 0; k <= order; ++k) {
        if (a[k] != b[k]) {
            return k;
        }
    }
    return std::nullopt;
}

TruncSeries divide(const TruncSeries& a, const TruncSeries& b)
{
    const int order = std::min(a.order(), b.order());
    const BigInt& b0 = b[0];
    if (b0 == 0) {
        throw SeriesError(SeriesErrc::non_unit_divisor, "divisor has zero constant term");
    }
    TruncSeries q(order);
    if (b0 == 1 || b0 == -1) {
        for (int k = 0; k <= order; ++k) {
            BigInt acc = a[k];
            for (int j = 1; j <= k; ++j) {
                if (b[j] != 0) {
                    acc -= b[j] * q[k - j];
                }
            }
            q[k] = acc * b0;
        }
        return q;
    }

    std::vector<BigRational> qr(static_cast<std::size_t>(order) + 1);
    for (int k = 0; k <= order; ++k) {
        BigRational acc(a[k]);
        for (int j = 1; j <= k; ++j) {
            acc -= BigRational(b[j]) * qr[idx(k - j)];
        }
        qr[idx(k)] = acc / BigRational(b0);
        if (denominator(qr[idx(k)]) != 1) {
            throw SeriesError(SeriesErrc::non_unit_divisor, "quotient has a non-integral coefficient at order "
                                                                + std::to_string(k));
        }
        q[k] = numerator(qr[idx(k)]);
    }
    return q;
}

TruncSeries compose(const TruncSeries& outer, const TruncSeries& inner)
{
    if (inner[0] != 0) {
        throw SeriesError(SeriesErrc::composition_constant_term_nonzero,
                          "inner series of a composition must have zero constant term");
    }
    const int order = std::min(outer.order(), inner.order());
    // Horner: h_k = a_k + inner * h_{k+1}. h_k is later multiplied by inner^k, so
    // only its first order - k + 1 coefficients matter.
    std::vector<BigInt> h{outer[order]};
    for (int k = order - 1; k >= 0; --k) {
        const int len = order - k;
        std::vector<BigInt> next(idx(len) + 1);
        next[0] = outer[k];
        for (int i = 1; i <= len; ++i) {
            const auto& ci = inner[i];
            if (ci == 0) {
                continue;
            }
            for (int j = 0; i + j <= len; ++j) {
                add_product(next[idx(i + j)], ci, h[idx(j)]);
            }
        }
        h = std::move(next);
    }
    return TruncSeries(std::move(h), order);
}

TruncSeries power(TruncSeries base, unsigned exponent)
{
    TruncSeries result = TruncSeries::constant(1, base.order());
    while (exponent > 0) {
        if (exponent & 1u) {
            result = result * base;
        }
        exponent >>= 1;
        if (exponent > 0) {
            base = base * base;
        }
    }
    return result;
}

TruncSeries revert(const TruncSeries& f)
{
    const int order = f.order();
    if (f[0] != 0) {
        throw SeriesError(SeriesErrc::not_revertible, "series to revert must have zero constant term");
    }
    if (order == 0) {
        return TruncSeries(0);
    }
    const BigInt& lead = f[1];
    if (lead != 1 && lead != -1) {
        throw SeriesError(SeriesErrc::not_revertible, "linear coefficient " + to_decimal(lead) + " is not a unit");
    }

    TruncSeries g = TruncSeries::x(1) * lead; // 1/lead == lead for a unit
    int precision = 1;
    while (precision < order) {
        precision = std::min(2 * precision, order);
        g = g.zero_extended(precision);
        const auto fp = f.truncated(precision);
        const auto residual = compose(fp, g) - TruncSeries::x(precision);
        // [x^precision] f' is not known here, but it only reaches the quotient at
        // orders above precision because the residual has positive valuation.
        const auto slope = compose(fp.derivative().zero_extended(precision), g);
        g -= divide(residual, slope);
    }
    return g;
}

TruncSeries factorial_series(int order)
{
    TruncSeries f(order);
    BigInt k_fact = 1;
    for (int k = 1; k <= order; ++k) {
        k_fact *= k;
        f[k] = k_fact;
    }
    return f;
}

BigInt lagrange_com(int n)
{
    if (n < 1) {
        throw SeriesError(SeriesErrc::bad_order, "Com_n is defined for n >= 1");
    }
    const int order = n - 1;
    // 1 + 2! x + 3! x^2 + ... ; B is its reciprocal.
    TruncSeries one_plus_g(order);
    BigInt fact = 1;
    for (int j = 0; j <= order; ++j) {
        fact *= j + 1;
        one_plus_g[j] = fact;
    }
    const auto b = divide(TruncSeries::constant(1, order), one_plus_g);
    const BigInt scaled = power(b, static_cast<unsigned>(n))[order];
    if (scaled % n != 0) {
        throw SeriesError(SeriesErrc::divisibility_violation,
                          "[x^" + std::to_string(order) + "] B^" + std::to_string(n) + " = " + to_decimal(scaled)
                              + " is not divisible by " + std::to_string(n));
    }
    return scaled / n;
}

TruncSeries indecomposable_series(int order)
{
    const auto f = factorial_series(order);
    return divide(f, TruncSeries::constant(1, order) + f);
}

TruncSeries simple_series_from_inverse(const TruncSeries& comtet)
{
    const int order = comtet.order();
    const auto t = TruncSeries::x(order);
    const auto one_plus_t = TruncSeries::constant(1, order) + t;
    auto s = t - divide((t * t) * BigInt(2), one_plus_t) - comtet;
    for (int k = 0; k <= std::min(order, 3); ++k) {
        if (s[k] != 0) {
            throw std::logic_error("t - 2t^2/(1+t) - F^<-1>(t) has nonzero coefficient at t^" + std::to_string(k));
        }
    }
    return s;
}

TruncSeries simple_series(int order)
{
    return simple_series_from_inverse(revert(factorial_series(order)));
}

TruncSeries marked_part_weight(const TruncSeries& simple_part)
{
    const int order = simple_part.order();
    const auto x = TruncSeries::x(order);
    return x - divide((x * x) * BigInt(2), TruncSeries::constant(1, order) + x) - simple_part;
}

TruncSeries f_m_series(int m, int order)
{
    if (m < 2 || m > order) {
        throw SeriesError(SeriesErrc::bad_order, "f_m needs 2 <= m <= order, got m = " + std::to_string(m)
                                                     + ", order = " + std::to_string(order));
    }
    const auto s_m = simple_series(m).zero_extended(order);
    return compose(factorial_series(order), marked_part_weight(s_m));
}

BivariatePoly::BivariatePoly(int x_order) : m_x_order(x_order)
{
    require_order(x_order);
    m_rows.resize(idx(x_order) + 1);
}

BigInt BivariatePoly::coeff(int i, int j) const
{
    if (i < 0 || i > m_x_order) {
        throw SeriesError(SeriesErrc::bad_order, "x-degree " + std::to_string(i) + " beyond x-order");
    }
    const auto& row = m_rows[idx(i)];
    const auto it = row.find(j);
    return it == row.end() ? BigInt(0) : it->second;
}

void BivariatePoly::add_to(int i, int j, const BigInt& c)
{
    if (i < 0 || i > m_x_order || j < 0) {
        throw SeriesError(SeriesErrc::bad_order, "term out of range");
    }
    auto& row = m_rows[idx(i)];
    auto& slot = row[j];
    slot += c;
    if (slot == 0) {
        row.erase(j);
    }
}

std::vector<BigInt> BivariatePoly::x_slice(int i) const
{
    if (i < 0 || i > m_x_order) {
        throw SeriesError(SeriesErrc::bad_order, "x-degree " + std::to_string(i) + " beyond x-order");
    }
    const auto& row = m_rows[idx(i)];
    std::vector<BigInt> out(row.empty() ? 0 : idx(row.rbegin()->first) + 1);
    for (const auto& [j, c] : row) {
        out[idx(j)] = c;
    }
    return out;
}

TruncSeries BivariatePoly::evaluate_v(const BigInt& v) const
{
    TruncSeries out(m_x_order);
    for (int i = 0; i <= m_x_order; ++i) {
        const auto slice = x_slice(i);
        BigInt acc = 0;
        for (auto it = slice.rbegin(); it != slice.rend(); ++it) {
            acc = acc * v + *it;
        }
        out[i] = acc;
    }
    return out;
}

int BivariatePoly::max_v_degree() const
{
    int d = 0;
    for (const auto& row : m_rows) {
        if (!row.empty()) {
            d = std::max(d, row.rbegin()->first);
        }
    }
    return d;
}

BivariatePoly& BivariatePoly::operator+=(const BivariatePoly& other)
{
    m_x_order = std::min(m_x_order, other.m_x_order);
    m_rows.resize(idx(m_x_order) + 1);
    for (int i = 0; i <= m_x_order; ++i) {
        for (const auto& [j, c] : other.m_rows[idx(i)]) {
            add_to(i, j, c);
        }
    }
    return *this;
}

BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b)
{
    const int order = std::min(a.m_x_order, b.m_x_order);
    BivariatePoly r(order);
    for (int i1 = 0; i1 <= order; ++i1) {
        for (const auto& [j1, c1] : a.m_rows[idx(i1)]) {
            for (int i2 = 0; i1 + i2 <= order; ++i2) {
                for (const auto& [j2, c2] : b.m_rows[idx(i2)]) {
                    r.add_to(i1 + i2, j1 + j2, c1 * c2);
                }
            }
        }
    }
    return r;
}

BivariatePoly bivariate_F_m(int m, int x_order)
{
    if (m < 2) {
        throw SeriesError(SeriesErrc::bad_order, "F_m needs m >= 2");
    }
    // Weight of one collapsed part: x (a point), 2 v^(j-1) x^j (a monotone run of
    // length j >= 2 carrying j - 1 marks) and v s_j x^j (a simple block, one mark).
    BivariatePoly u(x_order);
    if (x_order >= 1) {
        u.add_to(1, 0, 1);
    }
    for (int j = 2; j <= x_order; ++j) {
        u.add_to(j, j - 1, 2);
    }
    const int simple_order = std::min(m, x_order);
    if (simple_order >= 4) {
        const auto s = simple_series(simple_order);
        for (int j = 4; j <= simple_order; ++j) {
            u.add_to(j, 1, s[j]);
        }
    }

    // Horner over k! with a zero constant term.
    BivariatePoly result(x_order);
    for (int k = x_order; k >= 1; --k) {
        BivariatePoly term(x_order);
        term.add_to(0, 0, factorial(static_cast<unsigned>(k)));
        result += term;
        result = result * u;
    }
    return result;
}

bool IdentityReport::ok() const noexcept
{
    return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.passed(); });
}

void IdentityReport::require() const
{
    for (const auto& c : checks) {
        if (!c.passed()) {
            throw SeriesError(SeriesErrc::identity_violation,
                              "identity '" + c.name + "' fails at order " + std::to_string(*c.first_failing_order));
        }
    }
}

namespace {

IdentityCheck compare(std::string name, const TruncSeries& lhs, const TruncSeries& rhs, int order)
{
    return {std::move(name), order, first_mismatch(lhs, rhs, order)};
}

} // namespace

IdentityReport check_ode_identities(int order)
{
    if (order < 2) {
        throw SeriesError(SeriesErrc::bad_order, "identity checks need order >= 2");
    }
    const auto one = TruncSeries::constant(1, order);
    const auto x = TruncSeries::x(order);
    const auto f = factorial_series(order);

    IdentityReport report;
    report.checks.push_back(compare("F ODE: x + xF + x^2 F' = F", x + f.shifted(1) + f.derivative().shifted(2), f, order));

    const auto i = indecomposable_series(order);
    report.checks.push_back(compare("I ODE: x^2 I' = -I^2 + (1+x) I - x", i.derivative().shifted(2),
                                    -(i * i) + (one + x) * i - x, order));

    const auto c = revert(f);
    const auto theta = x - (one + x) * c;
    report.checks.push_back(compare("C ODE: C' (x - (1+x) C) = C^2", c.derivative() * theta, c * c, order - 1));

    report.checks.push_back(compare("theta ODE: (1+x) theta theta' = -x^2 + (1+2x) theta",
                                    (one + x) * theta * theta.derivative(),
                                    -(x * x) + (one + x * BigInt(2)) * theta, order - 1));
    return report;
}

IdentityReport check_structure_identities(int order)
{
    if (order < 2) {
        throw SeriesError(SeriesErrc::bad_order, "identity checks need order >= 2");
    }
    const auto one = TruncSeries::constant(1, order);
    const auto x = TruncSeries::x(order);
    const auto f = factorial_series(order);
    const auto i = indecomposable_series(order);
    const auto s = simple_series(order);
    const auto s_of_f = compose(s, f);

    IdentityReport report;
    report.checks.push_back(compare("F = x + 2 I F + S(F)", x + (i * f) * BigInt(2) + s_of_f, f, order));
    report.checks.push_back(compare("I = x + I F + S(F)", x + i * f + s_of_f, i, order));
    report.checks.push_back(compare("S(F) = (F - F^2)/(1 + F) - x", divide(f - f * f, one + f) - x, s_of_f, order));
    report.checks.push_back(compare("F - 2F^2/(1+F) - S(F) = x", f - divide((f * f) * BigInt(2), one + f) - s_of_f, x, order));
    report.checks.push_back(compare("I (1 + F) = F", i * (one + f), f, order));
    report.checks.push_back(compare("F = I/(1 - I)", divide(i, one - i), f, order));
    report.checks.push_back(compare("f_inf: F(x - 2x^2/(1+x) - S(x)) = x", compose(f, marked_part_weight(s)), x, order));
    return report;
}

} // namespace simperm
