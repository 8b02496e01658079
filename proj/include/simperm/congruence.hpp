#pragma once

#include <optional>
#include <string>
#include <vector>

#include <simperm/bigint.hpp>
#include <simperm/error.hpp>
#include <simperm/sequences.hpp>

namespace simperm {

enum class CongruenceErrc {
    zero_input,
    not_prime,
    bad_argument,
    theorem_violation,
    congruence_violation,
};

using CongruenceError = Error<CongruenceErrc>;

// Largest e with p^e | n. Throws zero_input for n = 0 and not_prime unless p is prime.
unsigned ord_p(unsigned p, const BigInt& n);

// Legendre: ord_p(m!) = floor(m/p) + floor(m/p^2) + ...
unsigned ord_p_factorial(unsigned p, unsigned m);

// ord_2((m+1)!) >= ceil(m/2), with equality iff m = 1 or 2; and ord_3(m!) <= m - 1.
struct FactorialLemma {
    unsigned ord2_of_next_factorial;
    unsigned ceil_half;
    bool ord3_within_bound;

    bool equality() const noexcept { return ord2_of_next_factorial == ceil_half; }
};

FactorialLemma factorial_lemma(unsigned m);

// Number of carries when adding a and b in base p. Checked internally against
// ord_p((a+b)! / (a! b!)) from Legendre's formula.
unsigned ord_p_binomial_kummer(unsigned p, unsigned long long a, unsigned long long b);

// ord_p of C(a+b, a) from three factorial valuations.
unsigned ord_p_binomial_legendre(unsigned p, unsigned long long a, unsigned long long b);

// True iff the binary expansion of m has no two adjacent ones.
bool no_adjacent_ones(unsigned long long m);

/// Parity of C(3m, m) three ways: carries of m + 2m, Legendre valuations and the
/// binary digit criterion. Throws theorem_violation if they disagree; returns
/// whether C(3m, m) is odd.
bool binomial_3m_m_is_odd(unsigned long long m);

struct ValuationReport {
    int n = 0;
    std::optional<unsigned> valuation; // empty when Com_n = 0
    unsigned lower_bound = 0;          // ceil((n - 1) / 2)
    bool equality_predicted = false;   // floor(n/2) has no adjacent binary ones
    bool equality_observed = false;

    bool holds() const noexcept
    {
        return !valuation || (*valuation >= lower_bound && equality_predicted == equality_observed);
    }
};

/// ord_2(Com_n) >= ceil((n-1)/2), with equality iff C(3m, m) is odd for
/// m = floor(n/2). Checks every n <= min(n_max, com.max_index()); throws
/// theorem_violation on the first failure. Com_n = 0 is reported without a
/// valuation and skipped.
std::vector<ValuationReport> check_ord2_theorem(const SequenceTable& com, int n_max);

struct CongruenceReport {
    std::string name;
    int first_n = 0;
    int last_n = 0;
    int checked = 0;
};

/// s_n = 2 mod 2^((n-1)/2) for odd n and s_n = -2 mod 2^(n/2) for even n, 3 <= n <= n_max.
CongruenceReport check_power2_congruence(const SequenceTable& s, int n_max);

BigInt catalan(unsigned n);

/// Com_n = C_{n-1} mod 3 for 1 <= n <= n_max and s_n = -C_{n-1} + (-1)^n mod 3
/// for 3 <= n <= n_max.
std::vector<CongruenceReport> check_catalan_mod3(const SequenceTable& com, const SequenceTable& s, int n_max);

// Exploratory: ord_p(Com_n) for 1 <= n <= com.max_index(); nothing is asserted.
struct ScanRow {
    int n;
    std::optional<unsigned> valuation;
    unsigned residue; // Com_n mod p, in [0, p)
};

std::vector<ScanRow> scan_prime(const SequenceTable& com, unsigned p);

} // namespace simperm
