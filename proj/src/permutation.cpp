#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>
#include <string>

#include <simperm/permutation.hpp>

namespace simperm {

Permutation::Permutation(std::vector<int> values) : m_values(std::move(values))
{
    const auto n = m_values.size();
    if (n == 0) {
        throw PermutationError(PermErrc::empty, "permutation has no entries");
    }
    std::vector<bool> seen(n + 1, false);
    for (const int v : m_values) {
        if (v < 1 || static_cast<std::size_t>(v) > n) {
            throw PermutationError(PermErrc::not_a_bijection,
                                   "value " + std::to_string(v) + " out of range 1.." + std::to_string(n));
        }
        if (seen[static_cast<std::size_t>(v)]) {
            throw PermutationError(PermErrc::not_a_bijection, "value " + std::to_string(v) + " repeated");
        }
        seen[static_cast<std::size_t>(v)] = true;
    }
}

Permutation Permutation::identity(int n)
{
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
}

Permutation Permutation::reversed_identity(int n)
{
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.rbegin(), v.rend(), 1);
    return Permutation(std::move(v));
}

bool Permutation::is_identity() const noexcept
{
    for (std::size_t i = 0; i < m_values.size(); ++i) {
        if (m_values[i] != static_cast<int>(i) + 1) {
            return false;
        }
    }
    return true;
}

bool Permutation::is_reversed_identity() const noexcept
{
    const auto n = m_values.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (m_values[i] != static_cast<int>(n - i)) {
            return false;
        }
    }
    return true;
}

std::string Permutation::to_string() const
{
    std::string out;
    const bool contiguous = size() <= 9;
    for (std::size_t i = 0; i < m_values.size(); ++i) {
        if (!contiguous && i > 0) {
            out += ' ';
        }
        out += std::to_string(m_values[i]);
    }
    return out;
}

std::string to_string(const Block& block)
{
    return "positions " + std::to_string(block.start) + ".." + std::to_string(block.end) + ", values "
           + std::to_string(block.lo) + ".." + std::to_string(block.hi);
}

std::string Decomposition::to_string() const
{
    std::string out = "(" + skeleton.to_string() + ")[";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i > 0) {
            out += ", ";
        }
        out += parts[i].to_string();
    }
    return out + "]";
}

Permutation parse_permutation(std::string_view text)
{
    std::vector<std::string> tokens;
    std::string current;
    for (const char c : text) {
        if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
            if (!current.empty()) {
                tokens.push_back(std::move(current));
                current.clear();
            }
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            current += c;
        } else {
            throw PermutationError(PermErrc::malformed, std::string("unexpected character '") + c + "'");
        }
    }
    if (!current.empty()) {
        tokens.push_back(std::move(current));
    }
    if (tokens.empty()) {
        throw PermutationError(PermErrc::empty, "no values given");
    }

    std::vector<int> values;
    if (tokens.size() == 1 && tokens[0].size() > 1) {
        for (const char c : tokens[0]) {
            values.push_back(c - '0');
        }
    } else {
        for (const auto& t : tokens) {
            if (t.size() > 9) {
                throw PermutationError(PermErrc::malformed, "value '" + t + "' too large");
            }
            values.push_back(std::stoi(t));
        }
    }
    return Permutation(std::move(values));
}

Permutation pattern_of(std::span<const int> values)
{
    std::vector<std::size_t> order(values.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    std::vector<int> out(values.size());
    for (std::size_t rank = 0; rank < order.size(); ++rank) {
        out[order[rank]] = static_cast<int>(rank) + 1;
    }
    return Permutation(std::move(out));
}

std::vector<Block> blocks(const Permutation& p)
{
    const int n = p.size();
    std::vector<Block> out;
    for (int i = 1; i <= n; ++i) {
        int lo = p(i);
        int hi = p(i);
        for (int j = i; j <= n; ++j) {
            lo = std::min(lo, p(j));
            hi = std::max(hi, p(j));
            if (hi - lo == j - i) {
                out.push_back({i, j, lo, hi});
            }
        }
    }
    return out;
}

std::optional<Block> proper_block_witness(const Permutation& p)
{
    const int n = p.size();
    for (int i = 1; i <= n; ++i) {
        int lo = p(i);
        int hi = p(i);
        for (int j = i + 1; j <= n; ++j) {
            lo = std::min(lo, p(j));
            hi = std::max(hi, p(j));
            if (hi - lo == j - i && !(i == 1 && j == n)) {
                return Block{i, j, lo, hi};
            }
        }
    }
    return std::nullopt;
}

bool is_simple(const Permutation& p)
{
    return !proper_block_witness(p).has_value();
}

Permutation inflate(const Permutation& skeleton, std::span<const Permutation> parts)
{
    const int k = skeleton.size();
    if (static_cast<int>(parts.size()) != k) {
        throw PermutationError(PermErrc::arity_mismatch, "skeleton of length " + std::to_string(k) + " given "
                                                             + std::to_string(parts.size()) + " parts");
    }
    // offset[v] = total length of the parts sitting below skeleton value v.
    std::vector<int> length_by_value(static_cast<std::size_t>(k) + 1, 0);
    for (int i = 1; i <= k; ++i) {
        length_by_value[static_cast<std::size_t>(skeleton(i))] = parts[static_cast<std::size_t>(i - 1)].size();
    }
    std::vector<int> offset(static_cast<std::size_t>(k) + 1, 0);
    for (int v = 2; v <= k; ++v) {
        offset[static_cast<std::size_t>(v)]
            = offset[static_cast<std::size_t>(v - 1)] + length_by_value[static_cast<std::size_t>(v - 1)];
    }

    std::vector<int> out;
    for (int i = 1; i <= k; ++i) {
        const int base = offset[static_cast<std::size_t>(skeleton(i))];
        for (const int v : parts[static_cast<std::size_t>(i - 1)].values()) {
            out.push_back(base + v);
        }
    }
    return Permutation(std::move(out));
}

namespace {

// Smallest j < n such that the first j values are {1..j}, or 0.
int smallest_plus_prefix(const Permutation& p)
{
    int hi = 0;
    for (int j = 1; j < p.size(); ++j) {
        hi = std::max(hi, p(j));
        if (hi == j) {
            return j;
        }
    }
    return 0;
}

// Smallest j < n such that the first j values are {n-j+1..n}, or 0.
int smallest_minus_prefix(const Permutation& p)
{
    const int n = p.size();
    int lo = n + 1;
    for (int j = 1; j < n; ++j) {
        lo = std::min(lo, p(j));
        if (lo == n - j + 1) {
            return j;
        }
    }
    return 0;
}

Permutation segment_pattern(const Permutation& p, int start, int end)
{
    return pattern_of(p.values().subspan(static_cast<std::size_t>(start - 1), static_cast<std::size_t>(end - start + 1)));
}

Decomposition split_two(const Permutation& p, int j, Permutation skeleton)
{
    std::vector<Permutation> parts;
    parts.push_back(segment_pattern(p, 1, j));
    parts.push_back(segment_pattern(p, j + 1, p.size()));
    return {std::move(skeleton), std::move(parts)};
}

} // namespace

bool is_plus_indecomposable(const Permutation& p)
{
    return smallest_plus_prefix(p) == 0;
}

bool is_minus_indecomposable(const Permutation& p)
{
    return smallest_minus_prefix(p) == 0;
}

Decomposition decompose(const Permutation& p)
{
    const int n = p.size();
    if (n == 1) {
        return {p, {p}};
    }
    if (const int j = smallest_plus_prefix(p); j > 0) {
        return split_two(p, j, Permutation({1, 2}));
    }
    if (const int j = smallest_minus_prefix(p); j > 0) {
        return split_two(p, j, Permutation({2, 1}));
    }

    // Neither sum nor skew sum: the maximal proper blocks are pairwise disjoint
    // and partition 1..n.
    std::vector<Block> proper;
    for (const auto& b : blocks(p)) {
        if (b.length() < n) {
            proper.push_back(b);
        }
    }
    std::vector<Block> maximal;
    for (const auto& b : proper) {
        const bool dominated = std::any_of(proper.begin(), proper.end(),
                                           [&](const Block& c) { return c != b && c.contains(b); });
        if (!dominated) {
            maximal.push_back(b);
        }
    }
    std::sort(maximal.begin(), maximal.end());

    std::vector<int> representatives;
    std::vector<Permutation> parts;
    int expected_start = 1;
    for (const auto& b : maximal) {
        if (b.start != expected_start) {
            throw std::logic_error("maximal proper blocks of " + p.to_string() + " do not partition it");
        }
        expected_start = b.end + 1;
        representatives.push_back(b.lo);
        parts.push_back(segment_pattern(p, b.start, b.end));
    }
    Decomposition d{pattern_of(representatives), std::move(parts)};
    if (!is_simple(d.skeleton)) {
        throw std::logic_error("skeleton of " + p.to_string() + " is not simple");
    }
    return d;
}

std::vector<Block> minimal_blocks(const Permutation& p, int m)
{
    std::vector<Block> candidates;
    for (const auto& b : blocks(p)) {
        if (b.length() >= 2 && b.length() <= m) {
            candidates.push_back(b);
        }
    }
    // Every sub-block of a candidate is itself a candidate, so minimality can be
    // decided within the list.
    std::vector<Block> out;
    for (const auto& b : candidates) {
        const bool has_smaller = std::any_of(candidates.begin(), candidates.end(),
                                             [&](const Block& c) { return c != b && b.contains(c); });
        if (has_smaller) {
            continue;
        }
        if (!is_simple(segment_pattern(p, b.start, b.end))) {
            throw std::logic_error("minimal block with non-simple pattern in " + p.to_string());
        }
        out.push_back(b);
    }
    return out;
}

std::vector<Block> minimal_blocks(const Permutation& p)
{
    return minimal_blocks(p, p.size());
}

std::string MarkedDecomposition::to_string() const
{
    return Decomposition{skeleton, parts}.to_string();
}

MarkedDecomposition marked_decompose(const Permutation& p, std::span<const Block> marks)
{
    std::vector<Block> marked(marks.begin(), marks.end());
    std::sort(marked.begin(), marked.end());
    marked.erase(std::unique(marked.begin(), marked.end()), marked.end());

    const auto minimal = minimal_blocks(p);
    for (const auto& b : marked) {
        if (!std::binary_search(minimal.begin(), minimal.end(), b)) {
            throw PermutationError(PermErrc::not_a_minimal_block,
                                   "mark (" + to_string(b) + ") is not a minimal block of " + p.to_string());
        }
    }

    // Collapsed segments, in position order. Marked length-2 blocks sharing an
    // endpoint chain into one marked cluster.
    struct Segment {
        int start;
        int end;
        bool cluster;
    };
    std::vector<Segment> segments;
    for (const auto& b : marked) {
        if (b.length() >= 4) {
            segments.push_back({b.start, b.end, false});
        } else if (!segments.empty() && segments.back().cluster && segments.back().end == b.start) {
            segments.back().end = b.end;
        } else {
            segments.push_back({b.start, b.end, true});
        }
    }
    std::sort(segments.begin(), segments.end(), [](const Segment& a, const Segment& b) { return a.start < b.start; });

    MarkedDecomposition out{Permutation({1}), {}, 0, 0, 0};
    std::vector<int> representatives;
    std::size_t next = 0;
    for (int pos = 1; pos <= p.size();) {
        if (next < segments.size() && segments[next].start == pos) {
            const auto& seg = segments[next++];
            auto part = segment_pattern(p, seg.start, seg.end);
            if (seg.cluster) {
                out.s += 1;
                out.l += part.size();
            } else {
                out.r += 1;
            }
            representatives.push_back(
                *std::min_element(p.values().begin() + seg.start - 1, p.values().begin() + seg.end));
            out.parts.push_back(std::move(part));
            pos = seg.end + 1;
        } else {
            representatives.push_back(p(pos));
            out.parts.push_back(Permutation({1}));
            ++pos;
        }
    }
    out.skeleton = pattern_of(representatives);
    return out;
}

MarkedPermutation marked_compose(const Permutation& skeleton, std::span<const Permutation> parts)
{
    for (const auto& part : parts) {
        const bool b1 = part.size() >= 4 && is_simple(part);
        const bool b2 = part.size() >= 2 && (part.is_identity() || part.is_reversed_identity());
        if (part.size() != 1 && !b1 && !b2) {
            throw PermutationError(PermErrc::invalid_marked_part,
                                   "part " + part.to_string() + " is neither 1, a simple permutation of length >= 4, "
                                                                "nor a monotone run");
        }
    }
    auto perm = inflate(skeleton, parts);

    std::vector<Block> marks;
    int start = 1;
    for (const auto& part : parts) {
        const int end = start + part.size() - 1;
        auto block_at = [&](int a, int b) {
            const auto seg = perm.values().subspan(static_cast<std::size_t>(a - 1), static_cast<std::size_t>(b - a + 1));
            return Block{a, b, *std::min_element(seg.begin(), seg.end()), *std::max_element(seg.begin(), seg.end())};
        };
        if (part.size() >= 4 && is_simple(part)) {
            marks.push_back(block_at(start, end));
        } else if (part.size() >= 2) {
            for (int a = start; a < end; ++a) {
                marks.push_back(block_at(a, a + 1));
            }
        }
        start = end + 1;
    }
    std::sort(marks.begin(), marks.end());
    return {std::move(perm), std::move(marks)};
}

} // namespace simperm
