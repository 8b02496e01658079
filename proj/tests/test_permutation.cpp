#include <doctest.h>

#include <random>

#include <simperm/permutation.hpp>
#include <simperm/sequences.hpp>

#include "oracles.hpp"

using namespace simperm;

namespace {

Permutation P(const char* text) { return parse_permutation(text); }

std::vector<int> vec(const Permutation& p) { return {p.values().begin(), p.values().end()}; }

PermErrc error_code(auto&& fn)
{
    try {
        fn();
    } catch (const PermutationError& e) {
        return e.code();
    }
    FAIL("expected PermutationError");
    return PermErrc::empty;
}

} // namespace

TEST_CASE("parse_permutation")
{
    CHECK(vec(P("2413")) == std::vector<int>{2, 4, 1, 3});
    CHECK(vec(P("1")) == std::vector<int>{1});
    CHECK(vec(P("10 2 3 4 5 6 7 8 9 1")).front() == 10);
    CHECK(vec(P("3,1, 2")) == std::vector<int>{3, 1, 2});
    CHECK(P("10 2 3 4 5 6 7 8 9 1").to_string() == "10 2 3 4 5 6 7 8 9 1");
    CHECK(P("58317462").to_string() == "58317462");

    CHECK(error_code([] { P("10 2 3 4 5 6 7 8 9 2"); }) == PermErrc::not_a_bijection);
    CHECK(error_code([] { P("1123"); }) == PermErrc::not_a_bijection);
    CHECK(error_code([] { P("   "); }) == PermErrc::empty);
    CHECK(error_code([] { P("12a"); }) == PermErrc::malformed);
    CHECK(error_code([] { P("0 1"); }) == PermErrc::not_a_bijection);
}

TEST_CASE("blocks")
{
    const auto b = blocks(P("2647513"));
    CHECK(std::find(b.begin(), b.end(), Block{2, 5, 4, 7}) != b.end());
    CHECK(blocks(P("1")).size() == 1);
    CHECK(blocks(P("2413")).size() == 5);

    // Against the segment-by-segment oracle for every permutation of length <= 6.
    for (int n = 1; n <= 6; ++n) {
        oracle::for_each_permutation(n, [&](const std::vector<int>& v) {
            std::size_t expected = 0;
            for (int i = 0; i < n; ++i) {
                for (int j = i; j < n; ++j) {
                    expected += oracle::is_block(v, i, j) ? 1 : 0;
                }
            }
            REQUIRE(blocks(Permutation(v)).size() == expected);
        });
    }
}

TEST_CASE("is_simple: examples")
{
    CHECK(is_simple(P("58317462")));
    CHECK_FALSE(is_simple(P("123")));
    CHECK(is_simple(P("24153")));
    CHECK(is_simple(P("1")));
    CHECK(is_simple(P("12")));
    CHECK(is_simple(P("21")));
    CHECK_FALSE(is_simple(P("2647513")));
    CHECK_FALSE(proper_block_witness(P("3142")));

    const auto w = proper_block_witness(P("2647513"));
    REQUIRE(w);
    CHECK(w->length() > 1);
    CHECK(w->length() < 7);
}

TEST_CASE("is_simple: exhaustive against the O(n^3) oracle, n <= 8")
{
    for (int n = 1; n <= 8; ++n) {
        oracle::for_each_permutation(n, [&](const std::vector<int>& v) { REQUIRE(is_simple(Permutation(v)) == oracle::is_simple(v)); });
    }
}

TEST_CASE("is_simple: 10^4 random permutations of length 50 against the oracle")
{
    std::mt19937_64 rng(20240613);
    std::vector<int> v(50);
    std::iota(v.begin(), v.end(), 1);
    int simple = 0;
    for (int trial = 0; trial < 10000; ++trial) {
        std::shuffle(v.begin(), v.end(), rng);
        const Permutation p(v);
        const bool expected = oracle::is_simple(v);
        REQUIRE(is_simple(p) == expected);
        if (const auto w = proper_block_witness(p)) {
            REQUIRE(oracle::is_block(v, w->start - 1, w->end - 1));
            REQUIRE(w->length() > 1);
            REQUIRE(w->length() < 50);
        }
        simple += expected ? 1 : 0;
    }
    // Both branches are exercised: roughly e^-2 of the draws are simple.
    CHECK(simple > 1000);
    CHECK(simple < 2000);
}

TEST_CASE("inflate")
{
    const std::vector<Permutation> parts{P("12"), P("1"), P("1"), P("2413")};
    CHECK(inflate(P("3142"), parts) == P("67183524"));
    const std::vector<Permutation> two{P("1234"), P("12")};
    CHECK(inflate(P("21"), two) == P("345612"));
    const std::vector<Permutation> ones(5, P("1"));
    CHECK(inflate(P("25314"), ones) == P("25314"));

    const std::vector<Permutation> short_parts{P("1")};
    CHECK(error_code([&] { inflate(P("21"), short_parts); }) == PermErrc::arity_mismatch);
}

TEST_CASE("decompose: examples")
{
    CHECK(decompose(P("67183524")).to_string() == "(3142)[12, 1, 1, 2413]");
    CHECK(decompose(P("123")).to_string() == "(12)[1, 12]");
    CHECK(decompose(P("321")).to_string() == "(21)[1, 21]");
    CHECK(decompose(P("1")).to_string() == "(1)[1]");
    CHECK(decompose(P("345612")).to_string() == "(21)[1234, 12]");

    const auto d = decompose(P("58317462"));
    CHECK(d.skeleton == P("58317462"));
    CHECK(std::all_of(d.parts.begin(), d.parts.end(), [](const Permutation& q) { return q.size() == 1; }));
}

TEST_CASE("decompose: inflation round trip and uniqueness conditions, n <= 7")
{
    for (int n = 1; n <= 7; ++n) {
        oracle::for_each_permutation(n, [&](const std::vector<int>& v) {
            const Permutation p(v);
            const auto d = decompose(p);
            REQUIRE(inflate(d.skeleton, d.parts) == p);
            REQUIRE(oracle::is_simple(vec(d.skeleton)));
            if (n >= 2) {
                REQUIRE(d.skeleton.size() >= 2);
            }
            if (d.skeleton == P("12")) {
                REQUIRE(oracle::is_plus_indecomposable(vec(d.parts[0])));
            } else if (d.skeleton == P("21")) {
                // Minus-indecomposable: the reverse-complement is plus-indecomposable.
                auto flipped = vec(d.parts[0]);
                for (auto& x : flipped) {
                    x = static_cast<int>(flipped.size()) + 1 - x;
                }
                REQUIRE(oracle::is_plus_indecomposable(flipped));
            }
        });
    }
}

TEST_CASE("plus and minus indecomposability")
{
    CHECK_FALSE(is_plus_indecomposable(P("123")));
    CHECK(is_minus_indecomposable(P("123")));
    CHECK(is_plus_indecomposable(P("1")));
    CHECK(is_minus_indecomposable(P("1")));
    for (int n = 1; n <= 7; ++n) {
        oracle::for_each_permutation(n, [&](const std::vector<int>& v) {
            REQUIRE(is_plus_indecomposable(Permutation(v)) == oracle::is_plus_indecomposable(v));
        });
    }
}

TEST_CASE("minimal_blocks")
{
    const auto p = P("5672413");
    CHECK(minimal_blocks(p, 2) == std::vector<Block>{{1, 2, 5, 6}, {2, 3, 6, 7}});
    CHECK(minimal_blocks(p, 4) == std::vector<Block>{{1, 2, 5, 6}, {2, 3, 6, 7}, {4, 7, 1, 4}});
    CHECK(minimal_blocks(P("58317462"), 7).empty());

    for (int n = 1; n <= 7; ++n) {
        oracle::for_each_permutation(n, [&](const std::vector<int>& v) {
            const Permutation q(v);
            for (int m = 2; m <= n; ++m) {
                const auto mb = minimal_blocks(q, m);
                REQUIRE(static_cast<int>(mb.size()) == oracle::count_minimal_blocks(v, m));
                for (const auto& b : mb) {
                    const std::vector<int> seg(v.begin() + b.start - 1, v.begin() + b.end);
                    REQUIRE(oracle::is_simple(vec(pattern_of(seg))));
                }
            }
        });
    }
}

TEST_CASE("marked_decompose and marked_compose")
{
    SUBCASE("the running example")
    {
        const auto p = P("345612");
        const std::vector<Block> marks{{1, 2, 3, 4}, {2, 3, 4, 5}, {3, 4, 5, 6}, {5, 6, 1, 2}};
        const auto image = marked_decompose(p, marks);
        CHECK(image.to_string() == "(21)[1234, 12]");
        CHECK(image.r == 0);
        CHECK(image.s == 2);
        CHECK(image.l == 6);
        const auto back = marked_compose(image.skeleton, image.parts);
        CHECK(back.perm == p);
        CHECK(back.marks == marks);
    }
    SUBCASE("a whole monotone permutation collapses to one point")
    {
        const std::vector<Block> marks{{1, 2, 1, 2}, {2, 3, 2, 3}};
        const auto image = marked_decompose(P("123"), marks);
        CHECK(image.skeleton == P("1"));
        CHECK(image.parts == std::vector<Permutation>{P("123")});
        CHECK(image.r + image.l - image.s == 2);
    }
    SUBCASE("no marks")
    {
        const auto image = marked_decompose(P("2413"), {});
        CHECK(image.skeleton == P("2413"));
        CHECK(image.r + image.s + image.l == 0);
    }
    SUBCASE("a simple minimal block")
    {
        const std::vector<Block> marks{{4, 7, 1, 4}};
        const auto image = marked_decompose(P("5672413"), marks);
        CHECK(image.to_string() == "(2341)[1, 1, 1, 2413]");
        CHECK(image.r == 1);
    }
    SUBCASE("errors")
    {
        const std::vector<Block> not_minimal{{1, 3, 1, 3}};
        CHECK(error_code([&] { marked_decompose(P("123"), not_minimal); }) == PermErrc::not_a_minimal_block);
        const std::vector<Permutation> bad_parts{P("132"), P("1")};
        CHECK(error_code([&] { marked_compose(P("12"), bad_parts); }) == PermErrc::invalid_marked_part);
    }
}

TEST_CASE("marked bijection, exhaustive for n <= 5")
{
    const auto report = verify_marked_bijection(5);
    CHECK(report.pairs_checked > 0);
    // Pairs (pi, M) over length 1: just (1, {}).
    CHECK(report.pairs_by_length[1] == 1);
    // Length 2: 12 and 21, each with its single minimal block marked or not.
    CHECK(report.pairs_by_length[2] == 4);
}
