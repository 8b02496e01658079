#include <stdexcept>
#include <string>

#include <simperm/congruence.hpp>

namespace simperm {

namespace {

void require_prime(unsigned p)
{
    bool prime = p >= 2;
    for (unsigned d = 2; prime && d * d <= p; ++d) {
        prime = p % d != 0;
    }
    if (!prime) {
        throw CongruenceError(CongruenceErrc::not_prime, std::to_string(p) + " is not prime");
    }
}

// Least non-negative residue.
BigInt mod(const BigInt& a, const BigInt& m)
{
    BigInt r = a % m;
    if (r < 0) {
        r += m;
    }
    return r;
}

} // namespace

unsigned ord_p(unsigned p, const BigInt& n)
{
    require_prime(p);
    if (n == 0) {
        throw CongruenceError(CongruenceErrc::zero_input, "ord_p(0) is undefined");
    }
    BigInt m = n;
    unsigned e = 0;
    while (m % p == 0) {
        m /= p;
        ++e;
    }
    return e;
}

unsigned ord_p_factorial(unsigned p, unsigned m)
{
    require_prime(p);
    unsigned total = 0;
    for (unsigned long long q = p; q <= m; q *= p) {
        total += static_cast<unsigned>(m / q);
    }
    return total;
}

FactorialLemma factorial_lemma(unsigned m)
{
    return {ord_p_factorial(2, m + 1), (m + 1) / 2, m == 0 || ord_p_factorial(3, m) <= m - 1};
}

unsigned ord_p_binomial_legendre(unsigned p, unsigned long long a, unsigned long long b)
{
    const auto v = [p](unsigned long long k) { return ord_p_factorial(p, static_cast<unsigned>(k)); };
    return v(a + b) - v(a) - v(b);
}

unsigned ord_p_binomial_kummer(unsigned p, unsigned long long a, unsigned long long b)
{
    require_prime(p);
    unsigned carries = 0;
    unsigned long long carry = 0;
    for (auto x = a, y = b; x > 0 || y > 0 || carry > 0; x /= p, y /= p) {
        carry = (x % p + y % p + carry) >= p ? 1 : 0;
        carries += static_cast<unsigned>(carry);
    }
    const auto legendre = ord_p_binomial_legendre(p, a, b);
    if (carries != legendre) {
        throw std::logic_error("carry count " + std::to_string(carries) + " differs from Legendre valuation "
                               + std::to_string(legendre));
    }
    return carries;
}

bool no_adjacent_ones(unsigned long long m) { return (m & (m >> 1)) == 0; }

bool binomial_3m_m_is_odd(unsigned long long m)
{
    const bool by_carries = ord_p_binomial_kummer(2, m, 2 * m) == 0;
    const bool by_legendre = ord_p_binomial_legendre(2, m, 2 * m) == 0;
    const bool by_digits = no_adjacent_ones(m);
    if (by_carries != by_legendre || by_carries != by_digits) {
        throw CongruenceError(CongruenceErrc::theorem_violation,
                              "parity criteria for C(3m, m) disagree at m = " + std::to_string(m));
    }
    return by_carries;
}

std::vector<ValuationReport> check_ord2_theorem(const SequenceTable& com, int n_max)
{
    std::vector<ValuationReport> out;
    const int last = std::min(n_max, com.max_index());
    for (int n = 1; n <= last; ++n) {
        ValuationReport r;
        r.n = n;
        r.lower_bound = static_cast<unsigned>(n / 2);
        const auto m = static_cast<unsigned long long>(n / 2);
        r.equality_predicted = no_adjacent_ones(m);
        if (binomial_3m_m_is_odd(m) != r.equality_predicted) {
            throw CongruenceError(CongruenceErrc::theorem_violation, "parity bridge fails at n = " + std::to_string(n));
        }
        if (com.at(n) != 0) {
            r.valuation = ord_p(2, com.at(n));
            r.equality_observed = *r.valuation == r.lower_bound;
        }
        if (!r.holds()) {
            throw CongruenceError(CongruenceErrc::theorem_violation,
                                  "n = " + std::to_string(n) + ": ord_2(Com_n) = " + std::to_string(*r.valuation)
                                      + ", bound " + std::to_string(r.lower_bound) + ", equality predicted "
                                      + (r.equality_predicted ? "yes" : "no"));
        }
        out.push_back(r);
    }
    return out;
}

CongruenceReport check_power2_congruence(const SequenceTable& s, int n_max)
{
    CongruenceReport report{"s_n = 2 mod 2^((n-1)/2) (n odd), -2 mod 2^(n/2) (n even)", 3, 3, 0};
    const int last = std::min(n_max, s.max_index());
    for (int n = 3; n <= last; ++n) {
        const bool odd = n % 2 == 1;
        const BigInt modulus = BigInt(1) << static_cast<unsigned>(odd ? (n - 1) / 2 : n / 2);
        const BigInt target = odd ? 2 : -2;
        if (mod(s.at(n) - target, modulus) != 0) {
            throw CongruenceError(CongruenceErrc::congruence_violation,
                                  "s_" + std::to_string(n) + " = " + to_decimal(s.at(n)) + " is not "
                                      + to_decimal(target) + " mod " + to_decimal(modulus));
        }
        report.last_n = n;
        ++report.checked;
    }
    return report;
}

BigInt catalan(unsigned n) { return binomial(2 * n, n) / (n + 1); }

std::vector<CongruenceReport> check_catalan_mod3(const SequenceTable& com, const SequenceTable& s, int n_max)
{
    CongruenceReport com_report{"Com_n = C_(n-1) mod 3", 1, 1, 0};
    CongruenceReport s_report{"s_n = -C_(n-1) + (-1)^n mod 3", 3, 3, 0};
    const BigInt three = 3;
    for (int n = 1; n <= std::min(n_max, com.max_index()); ++n) {
        const auto c = catalan(static_cast<unsigned>(n - 1));
        if (mod(com.at(n) - c, three) != 0) {
            throw CongruenceError(CongruenceErrc::congruence_violation,
                                  "Com_" + std::to_string(n) + " is not C_" + std::to_string(n - 1) + " mod 3");
        }
        com_report.last_n = n;
        ++com_report.checked;
    }
    for (int n = 3; n <= std::min(n_max, s.max_index()); ++n) {
        const auto c = catalan(static_cast<unsigned>(n - 1));
        const BigInt sign = n % 2 == 0 ? 1 : -1;
        if (mod(s.at(n) + c - sign, three) != 0) {
            throw CongruenceError(CongruenceErrc::congruence_violation,
                                  "s_" + std::to_string(n) + " is not -C_" + std::to_string(n - 1) + " + (-1)^n mod 3");
        }
        s_report.last_n = n;
        ++s_report.checked;
    }
    return {com_report, s_report};
}

std::vector<ScanRow> scan_prime(const SequenceTable& com, unsigned p)
{
    require_prime(p);
    std::vector<ScanRow> out;
    for (int n = 1; n <= com.max_index(); ++n) {
        ScanRow row{n, std::nullopt, 0};
        if (com.at(n) != 0) {
            row.valuation = ord_p(p, com.at(n));
        }
        row.residue = static_cast<unsigned>(mod(com.at(n), BigInt(p)));
        out.push_back(row);
    }
    return out;
}

} // namespace simperm
