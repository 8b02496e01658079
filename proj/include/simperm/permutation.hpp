#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <simperm/error.hpp>

namespace simperm {

enum class PermErrc {
    empty,
    malformed,
    not_a_bijection,
    arity_mismatch,
    not_a_minimal_block,
    invalid_marked_part,
};

using PermutationError = Error<PermErrc>;

// A permutation of {1..n} in one-line notation, n >= 1. Positions and values
// are 1-based everywhere in the public interface.
class Permutation {
public:
    // Throws PermutationError unless values is a bijection on {1..n}.
    explicit Permutation(std::vector<int> values);

    static Permutation identity(int n);
    static Permutation reversed_identity(int n);

    int size() const noexcept { return static_cast<int>(m_values.size()); }
    int operator()(int position) const { return m_values[static_cast<std::size_t>(position - 1)]; }
    std::span<const int> values() const noexcept { return m_values; }

    bool is_identity() const noexcept;
    bool is_reversed_identity() const noexcept;

    // Contiguous digits when n <= 9 ("2413"), space separated otherwise.
    std::string to_string() const;

    friend auto operator<=>(const Permutation&, const Permutation&) = default;
    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> m_values;
};

// Segment start..end (positions) whose values form the range lo..hi.
struct Block {
    int start = 1;
    int end = 1;
    int lo = 1;
    int hi = 1;

    int length() const noexcept { return end - start + 1; }
    bool contains(const Block& other) const noexcept { return start <= other.start && other.end <= end; }
    bool overlaps(const Block& other) const noexcept { return start <= other.end && other.start <= end; }

    friend auto operator<=>(const Block&, const Block&) = default;
    friend bool operator==(const Block&, const Block&) = default;
};

std::string to_string(const Block& block);

// sigma[alpha_1, ..., alpha_k].
struct Decomposition {
    Permutation skeleton;
    std::vector<Permutation> parts;

    // "(3142)[12, 1, 1, 2413]"
    std::string to_string() const;
};

/// Accepts whitespace- or comma-separated integers, or a single contiguous
/// run of digits when every value is at most 9 ("2413").
Permutation parse_permutation(std::string_view text);

// The permutation order-isomorphic to an arbitrary sequence of distinct ints.
Permutation pattern_of(std::span<const int> values);

/// Every block of p, singletons and the full block included, sorted by (start, end).
std::vector<Block> blocks(const Permutation& p);

/// O(n^2): each left endpoint is scanned with a running min/max. Lengths 1 and 2
/// count as simple.
bool is_simple(const Permutation& p);

// First non-trivial block in (start, end) order, if any; a certificate of
// non-simplicity.
std::optional<Block> proper_block_witness(const Permutation& p);

/// sigma[alpha_1, ..., alpha_k]: part i fills a segment, segments in the order of
/// sigma's positions, value ranges stacked in the order of sigma's values.
Permutation inflate(const Permutation& skeleton, std::span<const Permutation> parts);

bool is_plus_indecomposable(const Permutation& p);
bool is_minus_indecomposable(const Permutation& p);

/// Substitution decomposition with a simple skeleton. When the skeleton is 12
/// (resp. 21) the first part is the smallest possible, hence plus (resp. minus)
/// indecomposable. A singleton decomposes as (1)[1].
Decomposition decompose(const Permutation& p);

/// B_m(p): non-singleton blocks of length <= m that contain no smaller
/// non-singleton block, sorted by (start, end).
std::vector<Block> minimal_blocks(const Permutation& p, int m);

// All minimal blocks, i.e. minimal_blocks(p, p.size()).
std::vector<Block> minimal_blocks(const Permutation& p);

// Image of a marked permutation: sigma with parts in {1} u B1 u B2, where B1 are
// simple permutations of length >= 4 and B2 monotone runs of length >= 2.
struct MarkedDecomposition {
    Permutation skeleton;
    std::vector<Permutation> parts;
    int r = 0; // parts in B1
    int s = 0; // parts in B2
    int l = 0; // total length of the B2 parts

    std::string to_string() const;
};

struct MarkedPermutation {
    Permutation perm;
    std::vector<Block> marks; // sorted by (start, end)
};

/// Collapses marked minimal blocks of length >= 4 and marked clusters (maximal
/// chains of marked length-2 minimal blocks overlapping in one position) to
/// single points. Marks are treated as a set; throws not_a_minimal_block if a
/// mark is not a minimal block of p.
MarkedDecomposition marked_decompose(const Permutation& p, std::span<const Block> marks);

/// Inverse of marked_decompose. Throws invalid_marked_part if a part is not in
/// {1} u B1 u B2.
MarkedPermutation marked_compose(const Permutation& skeleton, std::span<const Permutation> parts);

} // namespace simperm
