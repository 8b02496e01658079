#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <simperm/bigint.hpp>
#include <simperm/error.hpp>
#include <simperm/permutation.hpp>

namespace simperm {

enum class SequenceErrc {
    too_large,
    method_disagreement,
    no_simple_of_length_3,
    cross_check_failure,
    bijection_violation,
    bound_violation,
    bad_argument,
};

using SequenceError = Error<SequenceErrc>;

enum class Provenance { series, brute_force, relation };

std::string to_string(Provenance p);
Provenance provenance_from_string(const std::string& text);

// An integer sequence indexed 1..max_index() with no gaps, tagged with how it
// was obtained.
class SequenceTable {
public:
    SequenceTable(std::string name, Provenance provenance, std::vector<BigInt> values_from_1 = {});

    const std::string& name() const noexcept { return m_name; }
    Provenance provenance() const noexcept { return m_provenance; }
    int max_index() const noexcept { return static_cast<int>(m_values.size()); }

    const BigInt& at(int n) const;
    void push_back(BigInt value) { m_values.push_back(std::move(value)); }
    std::span<const BigInt> values() const noexcept { return m_values; }

    // Throws cross_check_failure at the first index both tables cover where they
    // disagree, naming the sequence, index and both values.
    void require_agreement(const SequenceTable& other) const;

private:
    std::string m_name;
    Provenance m_provenance;
    std::vector<BigInt> m_values;
};

// Exhaustive enumeration guards. 11! permutations already take minutes.
inline constexpr int brute_force_cap = 10;
inline constexpr int marking_cap = 8;

struct BruteForceOptions {
    unsigned jobs = 1;
    bool allow_large = false;
};

// Unranks the rank-th permutation of {1..n} in lexicographic order.
std::vector<int> unrank_permutation(int n, std::uint64_t rank);

/// Counts permutations of length n satisfying pred. The lexicographic rank range
/// is split into contiguous slices, one per job; the total does not depend on
/// the number of jobs.
std::uint64_t count_permutations(int n, const std::function<bool(const Permutation&)>& pred,
                                 const BruteForceOptions& options = {});

enum class SMethod { series, relation };

/// s_1..s_max with s_1 = 1, s_2 = 2, s_3 = 0. series: coefficients of
/// t - 2t^2/(1+t) - F^<-1>(t). relation: s_n = -Com_n + (-1)^(n+1) 2.
SequenceTable s_sequence(int max_n, SMethod method);

// Both methods; throws method_disagreement if they differ.
SequenceTable s_sequence_checked(int max_n);

// Com_n from Newton reversion of F.
SequenceTable com_sequence(int max_n);
// Com_n from the Lagrange-inversion lemma, one n at a time.
SequenceTable com_sequence_lagrange(int max_n);

SequenceTable i_sequence(int max_n);
SequenceTable f_m_sequence(int m, int max_n);

std::uint64_t brute_count_simple(int n, const BruteForceOptions& options = {});
std::uint64_t brute_count_plus_indecomposable(int n, const BruteForceOptions& options = {});

// Simple permutations of length n, in lexicographic order, one at a time.
class SimplePermutationStream {
public:
    explicit SimplePermutationStream(int n, bool allow_large = false);

    std::optional<Permutation> next();

private:
    std::vector<int> m_current;
    bool m_done;
};

std::vector<Permutation> enumerate_simple(int n);

struct RandomSimple {
    Permutation perm;
    std::uint64_t attempts;
};

/// Rejection sampling: uniform permutations from a seeded Mersenne twister until
/// one is simple. Throws no_simple_of_length_3 for n = 3.
RandomSimple random_simple(int n, std::uint64_t seed);

// sum over |pi| = n of (1 + v)^{|B_m(pi)|}.
struct MarkingPolynomial {
    std::vector<BigInt> by_block_count; // [k]: permutations with exactly k blocks in B_m
    std::vector<BigInt> in_v;           // [j]: coefficient of v^j

    BigInt at(const BigInt& v) const;
};

MarkingPolynomial brute_F_m(int n, int m);

// p_{n,k} and the overcount bound s_k (n-k+1) (n-k+1)!.
struct MinBlockCount {
    std::uint64_t count;
    BigInt bound;
};

/// Throws bound_violation if count exceeds the bound.
MinBlockCount count_with_min_block(int n, int k);

struct MarkedBijectionReport {
    std::uint64_t pairs_checked = 0;
    std::vector<std::uint64_t> pairs_by_length; // [n] for n = 0..n_max
};

/// Every permutation of length <= n_max with every subset of its minimal blocks:
/// marked_decompose, marked_compose back, and |M| = r + l - s. Throws
/// bijection_violation on the first failure.
MarkedBijectionReport verify_marked_bijection(int n_max);

struct CrossValidationReport {
    std::vector<std::string> checks;
};

/// The master consistency gate: s_n by series, relation and brute force; i_n by
/// series and brute force; Com_n by Newton and Lagrange; f_m and F_m(x, v)
/// against exhaustive marking counts for n <= 8, m in {2, 3, 4}.
CrossValidationReport cross_validate(int n_series, int n_brute, const BruteForceOptions& options = {});

} // namespace simperm
