#include <doctest.h>

#include <set>

#include <simperm/sequences.hpp>
#include <simperm/series.hpp>

#include "oracles.hpp"

using namespace simperm;

namespace {

SequenceErrc error_code(auto&& fn)
{
    try {
        fn();
    } catch (const SequenceError& e) {
        return e.code();
    }
    FAIL("expected SequenceError");
    return SequenceErrc::bad_argument;
}

const std::vector<long> s_known{1, 2, 0, 2, 6, 46, 338, 2926, 28146, 298526, 3454434, 43286526};

} // namespace

TEST_CASE("s_n by both methods")
{
    for (const auto method : {SMethod::series, SMethod::relation}) {
        const auto s = s_sequence(12, method);
        REQUIRE(s.max_index() == 12);
        for (int n = 1; n <= 12; ++n) {
            CHECK(s.at(n) == s_known[static_cast<std::size_t>(n - 1)]);
        }
    }
    CHECK(s_sequence(20, SMethod::relation).at(20) == BigInt("264111424634864638"));
    CHECK_NOTHROW(s_sequence_checked(60));
    CHECK(s_sequence(3, SMethod::series).at(3) == 0);
    CHECK(s_sequence(1, SMethod::series).max_index() == 1);
}

TEST_CASE("Com_n")
{
    const auto com = com_sequence(12);
    const std::vector<long> abs_com{1, 2, 2, 4, 4, 48, 336, 2928, 28144, 298528, 3454432, 43286528};
    for (int n = 1; n <= 12; ++n) {
        CHECK(abs(com.at(n)) == abs_com[static_cast<std::size_t>(n - 1)]);
    }
    CHECK_NOTHROW(com_sequence(40).require_agreement(com_sequence_lagrange(40)));
    CHECK(com_sequence_lagrange(5).provenance() == Provenance::relation);
}

TEST_CASE("SequenceTable cross-check contract")
{
    auto s = s_sequence(10, SMethod::series);
    const auto relation = s_sequence(10, SMethod::relation);
    CHECK_NOTHROW(s.require_agreement(relation));

    std::vector<BigInt> corrupted(s.values().begin(), s.values().end());
    corrupted[6] += 1;
    const SequenceTable bad("s", Provenance::brute_force, corrupted);
    try {
        s.require_agreement(bad);
        FAIL("corruption not detected");
    } catch (const SequenceError& e) {
        CHECK(e.code() == SequenceErrc::cross_check_failure);
        const std::string what = e.what();
        CHECK(what.find("s") != std::string::npos);
        CHECK(what.find("7") != std::string::npos);
        CHECK(what.find("338") != std::string::npos);
        CHECK(what.find("339") != std::string::npos);
    }
    CHECK(error_code([&] { (void)s.at(11); }) == SequenceErrc::bad_argument);
    CHECK(provenance_from_string(to_string(Provenance::brute_force)) == Provenance::brute_force);
}

TEST_CASE("brute-force counts")
{
    CHECK(brute_count_simple(4) == 2);
    CHECK(brute_count_simple(5) == 6);
    const auto s = s_sequence(8, SMethod::series);
    for (int n = 1; n <= 8; ++n) {
        REQUIRE(BigInt(brute_count_simple(n)) == s.at(n));
    }
    // Worker count does not change the total.
    CHECK(brute_count_simple(8, {1, false}) == brute_count_simple(8, {5, false}));
    CHECK(brute_count_plus_indecomposable(8, {3, false}) == indecomposable_series(8)[8]);
    CHECK(error_code([] { brute_count_simple(11); }) == SequenceErrc::too_large);

    const auto i = i_sequence(8);
    for (int n = 1; n <= 8; ++n) {
        CHECK(BigInt(brute_count_plus_indecomposable(n)) == i.at(n));
    }
}

TEST_CASE("unrank_permutation is lexicographic")
{
    std::uint64_t rank = 0;
    oracle::for_each_permutation(5, [&](const std::vector<int>& v) { REQUIRE(unrank_permutation(5, rank++) == v); });
}

TEST_CASE("enumerate_simple")
{
    CHECK(enumerate_simple(3).empty());
    const auto four = enumerate_simple(4);
    REQUIRE(four.size() == 2);
    CHECK(four[0].to_string() == "2413");
    CHECK(four[1].to_string() == "3142");
    const auto five = enumerate_simple(5);
    std::vector<std::string> names;
    for (const auto& p : five) {
        names.push_back(p.to_string());
    }
    CHECK(names == std::vector<std::string>{"24153", "25314", "31524", "35142", "41352", "42513"});

    for (int n = 1; n <= 8; ++n) {
        const auto all = enumerate_simple(n);
        REQUIRE(all.size() == brute_count_simple(n));
        REQUIRE(std::is_sorted(all.begin(), all.end()));
        for (const auto& p : all) {
            REQUIRE(oracle::is_simple({p.values().begin(), p.values().end()}));
        }
    }
    CHECK(error_code([] { SimplePermutationStream(11); }) == SequenceErrc::too_large);
}

TEST_CASE("random_simple")
{
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto r = random_simple(4, seed);
        CHECK((r.perm.to_string() == "2413" || r.perm.to_string() == "3142"));
    }
    CHECK(random_simple(30, 99).perm == random_simple(30, 99).perm);
    CHECK(random_simple(1, 5).perm.to_string() == "1");
    CHECK(random_simple(2, 5).perm.size() == 2);
    CHECK(error_code([] { random_simple(3, 0); }) == SequenceErrc::no_simple_of_length_3);

    // Acceptance rate at n = 9 against s_9 / 9! = 0.0776.
    std::uint64_t attempts = 0;
    const int draws = 2000;
    for (int k = 0; k < draws; ++k) {
        const auto r = random_simple(9, static_cast<std::uint64_t>(k));
        REQUIRE(is_simple(r.perm));
        attempts += r.attempts;
    }
    const double rate = static_cast<double>(draws) / static_cast<double>(attempts);
    CHECK(rate == doctest::Approx(28146.0 / 362880.0).epsilon(0.1));

    // Uniformity over the six simple permutations of length 5.
    std::map<std::string, int> hits;
    for (std::uint64_t seed = 0; seed < 6000; ++seed) {
        ++hits[random_simple(5, seed).perm.to_string()];
    }
    CHECK(hits.size() == 6);
    for (const auto& [perm, count] : hits) {
        CHECK_MESSAGE(count > 800, perm);
        CHECK_MESSAGE(count < 1200, perm);
    }
}

TEST_CASE("brute_F_m")
{
    const auto p32 = brute_F_m(3, 2);
    // 2 (1+v)^2 + 4 (1+v): two permutations with two blocks of B_2, four with one.
    CHECK(p32.by_block_count == std::vector<BigInt>{0, 4, 2});
    CHECK(p32.in_v == std::vector<BigInt>{6, 8, 2});
    CHECK(p32.at(-1) == 0);
    // A simple permutation of length <= m is itself a minimal block, so B_4 is
    // never empty at length 4 (consistent with f_infinity = x).
    CHECK(brute_F_m(4, 4).at(-1) == 0);
    CHECK(brute_F_m(5, 4).at(-1) == 6);
    CHECK(error_code([] { brute_F_m(9, 2); }) == SequenceErrc::too_large);
}

TEST_CASE("f_m sequences")
{
    const auto f2 = f_m_sequence(2, 10);
    CHECK(f2.name() == "f2");
    CHECK(f2.at(4) == 2);
    for (int n = 1; n <= 8; ++n) {
        CHECK(f2.at(n) == brute_F_m(n, 2).at(-1));
    }
}

TEST_CASE("count_with_min_block")
{
    CHECK(count_with_min_block(4, 4).count == 2);
    const auto c84 = count_with_min_block(8, 4);
    CHECK(c84.bound == 1200);
    CHECK(BigInt(c84.count) <= c84.bound);
    for (int n = 3; n <= 8; ++n) {
        CHECK(count_with_min_block(n, 3).count == 0);
    }
    for (int n = 2; n <= 8; ++n) {
        for (int k = 2; k <= n; ++k) {
            const auto c = count_with_min_block(n, k);
            REQUIRE(BigInt(c.count) <= c.bound);
        }
    }
}

TEST_CASE("marked bijection and cross validation")
{
    const auto t2 = verify_marked_bijection(6);
    CHECK(t2.pairs_checked == 3633);
    const auto smoke = cross_validate(10, 4);
    CHECK_FALSE(smoke.checks.empty());
    CHECK_NOTHROW(cross_validate(20, 8, {4, false}));
}
