#include <algorithm>
#include <numeric>
#include <random>
#include <thread>

#include <simperm/sequences.hpp>
#include <simperm/series.hpp>

namespace simperm {

std::string to_string(Provenance p)
{
    switch (p) {
        case Provenance::series:
            return "series";
        case Provenance::brute_force:
            return "brute_force";
        case Provenance::relation:
            return "relation";
    }
    return "unknown";
}

Provenance provenance_from_string(const std::string& text)
{
    if (text == "series") {
        return Provenance::series;
    }
    if (text == "brute_force") {
        return Provenance::brute_force;
    }
    if (text == "relation") {
        return Provenance::relation;
    }
    throw SequenceError(SequenceErrc::bad_argument, "unknown provenance '" + text + "'");
}

SequenceTable::SequenceTable(std::string name, Provenance provenance, std::vector<BigInt> values_from_1)
    : m_name(std::move(name)), m_provenance(provenance), m_values(std::move(values_from_1))
{
}

const BigInt& SequenceTable::at(int n) const
{
    if (n < 1 || n > max_index()) {
        throw SequenceError(SequenceErrc::bad_argument, m_name + " has no entry at index " + std::to_string(n));
    }
    return m_values[static_cast<std::size_t>(n - 1)];
}

void SequenceTable::require_agreement(const SequenceTable& other) const
{
    const int common = std::min(max_index(), other.max_index());
    for (int n = 1; n <= common; ++n) {
        if (at(n) != other.at(n)) {
            throw SequenceError(SequenceErrc::cross_check_failure,
                                m_name + "[" + std::to_string(n) + "]: " + to_decimal(at(n)) + " (" + to_string(m_provenance)
                                    + ") vs " + to_decimal(other.at(n)) + " (" + to_string(other.m_provenance) + ")");
        }
    }
}

namespace {

void check_brute_force_size(int n, int cap, bool allow_large)
{
    if (n < 1) {
        throw SequenceError(SequenceErrc::bad_argument, "length must be at least 1");
    }
    if (n > 20 || (n > cap && !allow_large)) {
        throw SequenceError(SequenceErrc::too_large, "exhaustive enumeration of length " + std::to_string(n)
                                                         + " exceeds the cap of " + std::to_string(cap));
    }
}

std::uint64_t factorial_u64(int n)
{
    std::uint64_t r = 1;
    for (int k = 2; k <= n; ++k) {
        r *= static_cast<std::uint64_t>(k);
    }
    return r;
}

template <typename Visit>
void for_each_permutation(int n, Visit&& visit)
{
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    do {
        visit(Permutation(v));
    } while (std::next_permutation(v.begin(), v.end()));
}

} // namespace

std::vector<int> unrank_permutation(int n, std::uint64_t rank)
{
    std::vector<int> pool(static_cast<std::size_t>(n));
    std::iota(pool.begin(), pool.end(), 1);
    std::vector<int> out;
    for (int remaining = n; remaining >= 1; --remaining) {
        const auto block = factorial_u64(remaining - 1);
        const auto digit = static_cast<std::size_t>(rank / block);
        rank %= block;
        out.push_back(pool[digit]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(digit));
    }
    return out;
}

std::uint64_t count_permutations(int n, const std::function<bool(const Permutation&)>& pred,
                                 const BruteForceOptions& options)
{
    check_brute_force_size(n, brute_force_cap, options.allow_large);
    const std::uint64_t total = factorial_u64(n);
    const std::uint64_t jobs = std::clamp<std::uint64_t>(options.jobs, 1, total);

    std::vector<std::uint64_t> partial(jobs, 0);
    auto work = [&](std::uint64_t job) {
        const std::uint64_t lo = total * job / jobs;
        const std::uint64_t hi = total * (job + 1) / jobs;
        auto v = unrank_permutation(n, lo);
        std::uint64_t count = 0;
        for (std::uint64_t r = lo; r < hi; ++r) {
            if (pred(Permutation(v))) {
                ++count;
            }
            std::next_permutation(v.begin(), v.end());
        }
        partial[job] = count;
    };

    if (jobs == 1) {
        work(0);
    } else {
        std::vector<std::jthread> workers;
        for (std::uint64_t j = 0; j < jobs; ++j) {
            workers.emplace_back(work, j);
        }
    }
    return std::accumulate(partial.begin(), partial.end(), std::uint64_t{0});
}

SequenceTable s_sequence(int max_n, SMethod method)
{
    if (max_n < 1) {
        throw SequenceError(SequenceErrc::bad_argument, "sequence length must be at least 1");
    }
    const BigInt fixed[] = {1, 2, 0};
    std::vector<BigInt> values;
    for (int n = 1; n <= std::min(max_n, 3); ++n) {
        values.push_back(fixed[n - 1]);
    }
    if (method == SMethod::series) {
        const auto s = simple_series(max_n);
        for (int n = 4; n <= max_n; ++n) {
            values.push_back(s[n]);
        }
        return SequenceTable("s", Provenance::series, std::move(values));
    }
    const auto c = revert(factorial_series(max_n));
    for (int n = 4; n <= max_n; ++n) {
        values.push_back(-c[n] + (n % 2 == 1 ? 2 : -2));
    }
    return SequenceTable("s", Provenance::relation, std::move(values));
}

SequenceTable s_sequence_checked(int max_n)
{
    auto by_series = s_sequence(max_n, SMethod::series);
    const auto by_relation = s_sequence(max_n, SMethod::relation);
    try {
        by_series.require_agreement(by_relation);
    } catch (const SequenceError& e) {
        throw SequenceError(SequenceErrc::method_disagreement, e.what());
    }
    return by_series;
}

SequenceTable com_sequence(int max_n)
{
    const auto c = revert(factorial_series(max_n));
    SequenceTable t("com", Provenance::series);
    for (int n = 1; n <= max_n; ++n) {
        t.push_back(c[n]);
    }
    return t;
}

SequenceTable com_sequence_lagrange(int max_n)
{
    SequenceTable t("com", Provenance::relation);
    for (int n = 1; n <= max_n; ++n) {
        t.push_back(lagrange_com(n));
    }
    return t;
}

SequenceTable i_sequence(int max_n)
{
    const auto i = indecomposable_series(max_n);
    SequenceTable t("i", Provenance::series);
    for (int n = 1; n <= max_n; ++n) {
        t.push_back(i[n]);
    }
    return t;
}

SequenceTable f_m_sequence(int m, int max_n)
{
    const auto f = f_m_series(m, std::max(m, max_n));
    SequenceTable t("f" + std::to_string(m), Provenance::series);
    for (int n = 1; n <= max_n; ++n) {
        t.push_back(f[n]);
    }
    return t;
}

std::uint64_t brute_count_simple(int n, const BruteForceOptions& options)
{
    return count_permutations(n, [](const Permutation& p) { return is_simple(p); }, options);
}

std::uint64_t brute_count_plus_indecomposable(int n, const BruteForceOptions& options)
{
    return count_permutations(n, [](const Permutation& p) { return is_plus_indecomposable(p); }, options);
}

SimplePermutationStream::SimplePermutationStream(int n, bool allow_large) : m_done(false)
{
    check_brute_force_size(n, brute_force_cap, allow_large);
    m_current.resize(static_cast<std::size_t>(n));
    std::iota(m_current.begin(), m_current.end(), 1);
}

std::optional<Permutation> SimplePermutationStream::next()
{
    while (!m_done) {
        Permutation candidate(m_current);
        m_done = !std::next_permutation(m_current.begin(), m_current.end());
        if (is_simple(candidate)) {
            return candidate;
        }
    }
    return std::nullopt;
}

std::vector<Permutation> enumerate_simple(int n)
{
    std::vector<Permutation> out;
    SimplePermutationStream stream(n);
    while (auto p = stream.next()) {
        out.push_back(std::move(*p));
    }
    return out;
}

RandomSimple random_simple(int n, std::uint64_t seed)
{
    if (n < 1) {
        throw SequenceError(SequenceErrc::bad_argument, "length must be at least 1");
    }
    if (n == 3) {
        throw SequenceError(SequenceErrc::no_simple_of_length_3, "there are no simple permutations of length 3");
    }
    std::mt19937_64 gen(seed);
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    for (std::uint64_t attempts = 1;; ++attempts) {
        std::shuffle(v.begin(), v.end(), gen);
        Permutation p(v);
        if (is_simple(p)) {
            return {std::move(p), attempts};
        }
    }
}

BigInt MarkingPolynomial::at(const BigInt& v) const
{
    BigInt acc = 0;
    for (auto it = in_v.rbegin(); it != in_v.rend(); ++it) {
        acc = acc * v + *it;
    }
    return acc;
}

MarkingPolynomial brute_F_m(int n, int m)
{
    check_brute_force_size(n, marking_cap, false);
    if (m < 2) {
        throw SequenceError(SequenceErrc::bad_argument, "m must be at least 2");
    }
    MarkingPolynomial poly;
    for_each_permutation(n, [&](const Permutation& p) {
        const auto k = minimal_blocks(p, m).size();
        if (poly.by_block_count.size() <= k) {
            poly.by_block_count.resize(k + 1);
        }
        poly.by_block_count[k] += 1;
    });
    // (1 + v)^k expanded binomially.
    poly.in_v.resize(poly.by_block_count.size());
    for (std::size_t k = 0; k < poly.by_block_count.size(); ++k) {
        for (std::size_t j = 0; j <= k; ++j) {
            poly.in_v[j] += poly.by_block_count[k] * binomial(static_cast<unsigned>(k), static_cast<unsigned>(j));
        }
    }
    return poly;
}

MinBlockCount count_with_min_block(int n, int k)
{
    check_brute_force_size(n, marking_cap, false);
    if (k < 2) {
        throw SequenceError(SequenceErrc::bad_argument, "minimal blocks have length at least 2");
    }
    std::uint64_t count = 0;
    if (k <= n) {
        for_each_permutation(n, [&](const Permutation& p) {
            const auto mb = minimal_blocks(p, k);
            if (std::any_of(mb.begin(), mb.end(), [&](const Block& b) { return b.length() == k; })) {
                ++count;
            }
        });
    }
    MinBlockCount out{count, 0};
    if (k <= n) {
        const auto free = static_cast<unsigned>(n - k + 1);
        out.bound = s_sequence(k, SMethod::series).at(k) * free * factorial(free);
    }
    if (BigInt(out.count) > out.bound) {
        throw SequenceError(SequenceErrc::bound_violation, "p_{" + std::to_string(n) + "," + std::to_string(k) + "} = "
                                                               + std::to_string(count) + " exceeds "
                                                               + to_decimal(out.bound));
    }
    return out;
}

MarkedBijectionReport verify_marked_bijection(int n_max)
{
    check_brute_force_size(n_max, marking_cap, false);
    MarkedBijectionReport report;
    report.pairs_by_length.assign(static_cast<std::size_t>(n_max) + 1, 0);

    auto fail = [](const Permutation& p, const std::string& what) {
        throw SequenceError(SequenceErrc::bijection_violation, "marked " + p.to_string() + ": " + what);
    };
    for (int n = 1; n <= n_max; ++n) {
        for_each_permutation(n, [&](const Permutation& p) {
            const auto all = minimal_blocks(p);
            const std::uint64_t subsets = std::uint64_t{1} << all.size();
            for (std::uint64_t mask = 0; mask < subsets; ++mask) {
                std::vector<Block> marks;
                for (std::size_t b = 0; b < all.size(); ++b) {
                    if (mask >> b & 1u) {
                        marks.push_back(all[b]);
                    }
                }
                const auto image = marked_decompose(p, marks);
                if (static_cast<int>(marks.size()) != image.r + image.l - image.s) {
                    fail(p, "|M| = " + std::to_string(marks.size()) + " but r + l - s = "
                                + std::to_string(image.r + image.l - image.s));
                }
                if (inflate(image.skeleton, image.parts) != p) {
                    fail(p, "image " + image.to_string() + " does not inflate back");
                }
                const auto back = marked_compose(image.skeleton, image.parts);
                if (back.perm != p || back.marks != marks) {
                    fail(p, "image " + image.to_string() + " does not recover the marking");
                }
                ++report.pairs_checked;
                ++report.pairs_by_length[static_cast<std::size_t>(n)];
            }
        });
    }

    // Counting the other side: F_m(x, 1) enumerates the sequences (sigma; alpha)
    // by total length, so equal counts plus the round trip give a bijection.
    const auto sequences = bivariate_F_m(std::max(n_max, 2), n_max).evaluate_v(1);
    for (int n = 1; n <= n_max; ++n) {
        if (sequences[n] != report.pairs_by_length[static_cast<std::size_t>(n)]) {
            throw SequenceError(SequenceErrc::bijection_violation,
                                "length " + std::to_string(n) + ": " + std::to_string(report.pairs_by_length[static_cast<std::size_t>(n)])
                                    + " marked permutations but " + to_decimal(sequences[n]) + " decomposition sequences");
        }
    }
    return report;
}

namespace {

std::vector<BigInt> trimmed(std::vector<BigInt> v)
{
    while (!v.empty() && v.back() == 0) {
        v.pop_back();
    }
    return v;
}

} // namespace

CrossValidationReport cross_validate(int n_series, int n_brute, const BruteForceOptions& options)
{
    if (n_series < 1 || n_brute < 1) {
        throw SequenceError(SequenceErrc::bad_argument, "cross validation ranges must be positive");
    }
    CrossValidationReport report;
    const auto s = s_sequence(n_series, SMethod::series);
    s.require_agreement(s_sequence(n_series, SMethod::relation));
    report.checks.push_back("s_n series = relation, n <= " + std::to_string(n_series));

    SequenceTable s_brute("s", Provenance::brute_force);
    for (int n = 1; n <= n_brute; ++n) {
        s_brute.push_back(brute_count_simple(n, options));
    }
    s_sequence(std::max(n_series, n_brute), SMethod::series).require_agreement(s_brute);
    report.checks.push_back("s_n series = brute force, n <= " + std::to_string(n_brute));

    const int n_lagrange = std::min(n_series, 40);
    com_sequence(n_lagrange).require_agreement(com_sequence_lagrange(n_lagrange));
    report.checks.push_back("Com_n Newton = Lagrange, n <= " + std::to_string(n_lagrange));

    const int n_small = std::min(n_brute, marking_cap);
    SequenceTable i_brute("i", Provenance::brute_force);
    for (int n = 1; n <= n_small; ++n) {
        i_brute.push_back(brute_count_plus_indecomposable(n, options));
    }
    i_sequence(n_small).require_agreement(i_brute);
    report.checks.push_back("i_n series = brute force, n <= " + std::to_string(n_small));

    for (const int m : {2, 3, 4}) {
        const auto fm = f_m_sequence(m, marking_cap);
        const auto bivariate = bivariate_F_m(m, marking_cap);
        SequenceTable fm_brute(fm.name(), Provenance::brute_force);
        for (int n = 1; n <= marking_cap; ++n) {
            const auto poly = brute_F_m(n, m);
            fm_brute.push_back(poly.at(-1));
            const auto expected = trimmed(poly.in_v);
            const auto got = trimmed(bivariate.x_slice(n));
            if (expected != got) {
                const std::size_t len = std::max(expected.size(), got.size());
                for (std::size_t j = 0; j < len; ++j) {
                    const BigInt e = j < expected.size() ? expected[j] : BigInt(0);
                    const BigInt g = j < got.size() ? got[j] : BigInt(0);
                    if (e != g) {
                        throw SequenceError(SequenceErrc::cross_check_failure,
                                            "F" + std::to_string(m) + " [x^" + std::to_string(n) + " v^" + std::to_string(j)
                                                + "]: " + to_decimal(g) + " (series) vs " + to_decimal(e) + " (brute_force)");
                    }
                }
            }
        }
        fm.require_agreement(fm_brute);
        report.checks.push_back("f" + std::to_string(m) + " and F" + std::to_string(m)
                                + "(x, v) = exhaustive marking counts, n <= " + std::to_string(marking_cap));
    }
    return report;
}

} // namespace simperm
