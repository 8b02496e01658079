#include <doctest.h>

#include <algorithm>

#include <simperm/asymptotics.hpp>
#include <simperm/sequences.hpp>

using namespace simperm;

namespace {

// Every asserted comparison keeps at least this multiple of the error bound as slack.
constexpr int slack = 10;

bool certainly_below(const HighPrecision& x, const BigRational& bound) { return x.value() + slack * x.error_bound() < bound; }
bool certainly_above(const HighPrecision& x, const BigRational& bound) { return x.value() - slack * x.error_bound() > bound; }

} // namespace

TEST_CASE("exp_neg2")
{
    const auto e6 = exp_neg2(6);
    CHECK(e6.to_string(6) == "1.35335e-01");
    CHECK(e6.error_bound() < BigRational(1, 1000000));

    const auto e1 = exp_neg2(1);
    CHECK(e1.value() == BigRational(1, 10));
    CHECK(e1.error_bound() < BigRational(1, 20));

    // e^-2 * e^2 = 1, with e^2 from its own series sum_k 2^k / k!.
    BigRational e2 = 0;
    BigRational term = 1;
    for (int k = 0; k < 80; ++k) {
        e2 += term;
        term *= BigRational(2, k + 1);
    }
    const auto e30 = exp_neg2(30);
    const auto product = e30 * e2;
    CHECK(abs(product.value() - 1) <= product.error_bound() + term * 4);
    CHECK(e30.error_bound() < BigRational(1, BigInt("1000000000000000000000000000000")));
}

TEST_CASE("HighPrecision arithmetic")
{
    const HighPrecision a(BigRational(3, 2), BigRational(1, 100));
    CHECK((a * BigRational(-2)).error_bound() == BigRational(2, 100));
    CHECK(a.lower() == BigRational(149, 100));
    CHECK((a - BigRational(1)).value() == BigRational(1, 2));
    CHECK(a.reciprocal().value() == BigRational(2, 3));
    CHECK_THROWS_AS(HighPrecision(BigRational(1, 1000), BigRational(1, 100)).reciprocal(), AsymptoticsError);
    CHECK_THROWS_AS(HighPrecision(1, -1), AsymptoticsError);
    CHECK(HighPrecision::exact(BigRational(-12345, 10)).to_string(3) == "-1.23e+03");
    CHECK(HighPrecision::exact(BigRational(999, 1000)).to_string(2) == "1.0e+00");
}

TEST_CASE("s_20 against the three-term expansion")
{
    const auto s20 = s_sequence(20, SMethod::series).at(20);
    const auto row = make_error_row(20, s20, simple_asymptotic(20, 2));
    REQUIRE(row.relative_error);
    CHECK(certainly_above(*row.relative_error, BigRational(385, 100000)));
    CHECK(certainly_below(*row.relative_error, BigRational(394, 100000)));

    // The leading term alone does worse. (The two-term truncation happens to land
    // closer than the three-term one at n = 20: 2.67e-3.)
    const auto order0 = make_error_row(20, s20, simple_asymptotic(20, 0));
    const auto order1 = make_error_row(20, s20, simple_asymptotic(20, 1));
    CHECK(order0.relative_error->value() > row.relative_error->value());
    CHECK(order1.relative_error->value() < row.relative_error->value());

    // Degenerate small input still evaluates: the bracket is 1 - 2 + 1 = 0.
    CHECK(simple_asymptotic(2, 2).value() == 0);
    CHECK_THROWS_AS(simple_asymptotic(20, 3), AsymptoticsError);
    CHECK_THROWS_AS(simple_asymptotic(1, 0), AsymptoticsError);
}

TEST_CASE("three-term expansion over 15 <= n <= 40")
{
    const auto rows = simple_asymptotic_check(15, 40);
    REQUIRE(rows.size() == 26);

    // Below 1e-2 from n = 16 on. At n = 15 the error is 1.17e-2, just above.
    for (const auto& r : rows) {
        if (r.n >= 16) {
            CHECK_MESSAGE(certainly_below(*r.relative_error, BigRational(1, 100)), "n = " << r.n);
        }
    }
    CHECK(certainly_above(*rows.front().relative_error, BigRational(1, 100)));

    // Trend: median of successive ratios below 1.
    std::vector<BigRational> ratios;
    for (std::size_t k = 1; k < rows.size(); ++k) {
        ratios.push_back(rows[k].relative_error->value() / rows[k - 1].relative_error->value());
    }
    std::nth_element(ratios.begin(), ratios.begin() + static_cast<long>(ratios.size() / 2), ratios.end());
    CHECK(ratios[ratios.size() / 2] < 1);

    // O(n^-3): the scaled residual stays in a bounded band.
    for (const auto& r : rows) {
        CHECK(abs(r.scaled_residual.value()) < 50);
        CHECK(abs(r.scaled_residual.value()) > 5);
    }
}

TEST_CASE("Kaplansky and f_4 expansions")
{
    const auto kap = kaplansky_check(2, 40);
    CHECK(kap.front().n == 2);
    CHECK(kap.front().exact_zero());
    CHECK_FALSE(kap.front().relative_error);
    const auto& k20 = kap[18];
    const auto& k40 = kap[38];
    REQUIRE(k20.n == 20);
    REQUIRE(k40.n == 40);
    CHECK(abs(k40.scaled_residual.value()) <= 2 * abs(k20.scaled_residual.value()));
    CHECK(kaplansky_check(8, 8).front().scaled_residual.value() != 0);

    const auto f4 = f4_asymptotic_check(4, 40);
    CHECK(f4.front().n == 4);
    const auto& f20 = f4[16];
    const auto& f40 = f4[36];
    REQUIRE(f20.n == 20);
    REQUIRE(f40.n == 40);
    CHECK(f40.relative_error->value() < f20.relative_error->value());
    // n = 30: the bracket's residual is C n^-3 for a modest fitted C.
    CHECK(abs(f4[26].scaled_residual.value()) < 20);
}

TEST_CASE("bootstrap block-count claims")
{
    const auto rows = bootstrap_check(8);
    auto find = [&](int n, const std::string& prefix) {
        return *std::find_if(rows.begin(), rows.end(), [&](const BootstrapRow& r) { return r.n == n && r.claim.starts_with(prefix); });
    };
    CHECK(find(6, "simple block of length n-1").counted == 24);
    CHECK(find(7, "simple block of length n-2 =").counted == 108);
    CHECK(find(7, "simple block of length n-2 and").counted == 48);
    CHECK(find(8, "simple block of length n-1").counted == 1352);
    for (const auto& r : rows) {
        CHECK(BigInt(r.counted) == r.predicted);
    }
    CHECK_THROWS_AS(bootstrap_check(9), AsymptoticsError);
}
