#pragma once

// Reference implementations for the tests. Each one is deliberately naive and
// shares no code path with the library routine it checks.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include <simperm/bigint.hpp>

namespace oracle {

using simperm::BigInt;

// O(n^3): every proper non-singleton segment, its values sorted and checked
// for consecutiveness.
inline bool is_simple(const std::vector<int>& p)
{
    const int n = static_cast<int>(p.size());
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (i == 0 && j == n - 1) {
                continue;
            }
            std::vector<int> seg(p.begin() + i, p.begin() + j + 1);
            std::sort(seg.begin(), seg.end());
            bool consecutive = true;
            for (std::size_t k = 1; k < seg.size(); ++k) {
                consecutive = consecutive && seg[k] == seg[k - 1] + 1;
            }
            if (consecutive) {
                return false;
            }
        }
    }
    return true;
}

// Segments [i, j] (0-based, inclusive) whose values form a range.
inline bool is_block(const std::vector<int>& p, int i, int j)
{
    const auto [lo, hi] = std::minmax_element(p.begin() + i, p.begin() + j + 1);
    return *hi - *lo == j - i;
}

inline bool is_plus_indecomposable(const std::vector<int>& p)
{
    int running_max = 0;
    for (std::size_t k = 0; k + 1 < p.size(); ++k) {
        running_max = std::max(running_max, p[k]);
        if (running_max == static_cast<int>(k) + 1) {
            return false;
        }
    }
    return true;
}

// Number of blocks of length 2..m (0-based [i, j]) that contain no shorter
// non-singleton block.
inline int count_minimal_blocks(const std::vector<int>& p, int m)
{
    const int n = static_cast<int>(p.size());
    int count = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n && j - i + 1 <= m; ++j) {
            if (!is_block(p, i, j)) {
                continue;
            }
            bool minimal = true;
            for (int a = i; a <= j && minimal; ++a) {
                for (int b = a + 1; b <= j && minimal; ++b) {
                    if ((a != i || b != j) && is_block(p, a, b)) {
                        minimal = false;
                    }
                }
            }
            count += minimal ? 1 : 0;
        }
    }
    return count;
}

template <typename Fn>
void for_each_permutation(int n, Fn&& fn)
{
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    do {
        fn(v);
    } while (std::next_permutation(v.begin(), v.end()));
}

// Schoolbook product, truncated at `order`.
inline std::vector<BigInt> mul(const std::vector<BigInt>& a, const std::vector<BigInt>& b, int order)
{
    std::vector<BigInt> r(static_cast<std::size_t>(order) + 1);
    for (std::size_t i = 0; i < a.size() && i <= static_cast<std::size_t>(order); ++i) {
        for (std::size_t j = 0; j < b.size() && i + j <= static_cast<std::size_t>(order); ++j) {
            r[i + j] += a[i] * b[j];
        }
    }
    return r;
}

// sum_k f_k g^k by explicit powers.
inline std::vector<BigInt> compose(const std::vector<BigInt>& f, const std::vector<BigInt>& g, int order)
{
    std::vector<BigInt> result(static_cast<std::size_t>(order) + 1);
    std::vector<BigInt> gk(static_cast<std::size_t>(order) + 1);
    gk[0] = 1;
    for (std::size_t k = 0; k < f.size() && k <= static_cast<std::size_t>(order); ++k) {
        for (int i = 0; i <= order; ++i) {
            result[static_cast<std::size_t>(i)] += f[k] * gk[static_cast<std::size_t>(i)];
        }
        gk = mul(gk, g, order);
    }
    return result;
}

// Reversion one coefficient at a time: with g known below n, [x^n] f(g) = 0
// forces g_n = -[x^n] f(g with g_n = 0) / f_1. Requires f_0 = 0, f_1 = +-1.
inline std::vector<BigInt> revert(const std::vector<BigInt>& f, int order)
{
    std::vector<BigInt> g(static_cast<std::size_t>(order) + 1);
    g[1] = f[1];
    for (int n = 2; n <= order; ++n) {
        const auto fg = compose(f, g, n);
        g[static_cast<std::size_t>(n)] = -fg[static_cast<std::size_t>(n)] * f[1];
    }
    return g;
}

// Repeated division.
inline unsigned valuation(unsigned p, BigInt n)
{
    if (n < 0) {
        n = -n;
    }
    unsigned e = 0;
    while (n != 0 && n % p == 0) {
        n /= p;
        ++e;
    }
    return e;
}

inline BigInt binomial(unsigned n, unsigned k)
{
    // Pascal's rule row by row; independent of mpz_bin_uiui.
    std::vector<BigInt> row{1};
    for (unsigned i = 1; i <= n; ++i) {
        std::vector<BigInt> next(row.size() + 1);
        next.front() = 1;
        next.back() = 1;
        for (std::size_t j = 1; j < row.size(); ++j) {
            next[j] = row[j - 1] + row[j];
        }
        row = std::move(next);
    }
    return k <= n ? row[k] : BigInt(0);
}

// Segner's recurrence C_{n+1} = sum C_i C_{n-i}.
inline std::vector<BigInt> catalan_upto(int n)
{
    std::vector<BigInt> c(static_cast<std::size_t>(n) + 1);
    c[0] = 1;
    for (int k = 1; k <= n; ++k) {
        for (int i = 0; i < k; ++i) {
            c[static_cast<std::size_t>(k)] += c[static_cast<std::size_t>(i)] * c[static_cast<std::size_t>(k - 1 - i)];
        }
    }
    return c;
}

// Least non-negative residue.
inline BigInt mod(const BigInt& a, const BigInt& m)
{
    BigInt r = a % m;
    return r < 0 ? BigInt(r + m) : r;
}

} // namespace oracle
