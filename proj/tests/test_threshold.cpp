#include <doctest.h>

#include <cmath>
#include <random>

#include "coauth/errors.hpp"
#include "coauth/rng.hpp"
#include "coauth/threshold.hpp"

using namespace coauth;

TEST_SUITE_BEGIN("threshold");

namespace {

AuthorCountDistribution with_moments(double mean, double sd) {
    AuthorCountDistribution d;
    d.n = 100;
    d.mean = mean;
    d.sd = sd;
    return d;
}

std::map<std::uint32_t, std::size_t> random_histogram(std::mt19937_64& rng) {
    std::map<std::uint32_t, std::size_t> h;
    const std::size_t k = 1 + uniform_index(rng, 8);
    for (std::size_t i = 0; i < k; ++i)
        h[std::uint32_t(1 + uniform_index(rng, 60))] += 1 + uniform_index(rng, 40);
    return h;
}

} // namespace

TEST_CASE("normality check is a skewness gate") {
    auto symmetric = distribution_from_histogram({{3, 10}, {4, 20}, {5, 10}});
    CHECK(symmetric.skewness == doctest::Approx(0.0));
    CHECK(normality_check(symmetric));

    auto skewed = distribution_from_histogram({{1, 100}, {156, 1}});
    CHECK_FALSE(normality_check(skewed));

    AuthorCountDistribution tiny;
    tiny.n = 2;
    CHECK_THROWS_AS(normality_check(tiny), std::invalid_argument);
}

TEST_CASE("empirical rule cutoff is mean + 2 sd") {
    CHECK(empirical_rule_cutoff(with_moments(10, 2)) == doctest::Approx(14.0));
    CHECK(empirical_rule_cutoff(with_moments(4, 0)) == doctest::Approx(4.0));
    CHECK(empirical_rule_cutoff(with_moments(5.46, 6.37)) == doctest::Approx(18.20));
}

TEST_CASE("chebyshev cutoff is mean + k sd") {
    CHECK(chebyshev_cutoff(with_moments(5.46, 6.37), 3.0) == doctest::Approx(24.57));
    CHECK(chebyshev_cutoff(with_moments(0, 1), 3.0) == doctest::Approx(3.0));
    CHECK(chebyshev_cutoff(with_moments(10, 5), 2.0) == doctest::Approx(20.0));
    CHECK_THROWS_AS(chebyshev_cutoff(with_moments(1, 1), 1.0), std::invalid_argument);
    CHECK_THROWS_AS(chebyshev_cutoff(with_moments(1, 1), 0.5), std::invalid_argument);
}

TEST_CASE("cumulative cutoff scans the ranked histogram") {
    auto d = distribution_from_histogram({{1, 9}, {100, 1}});
    auto c = cumulative_cutoff(d, 0.90);
    CHECK(c.cutoff == 1);
    CHECK(c.achieved == doctest::Approx(0.9));

    auto half = cumulative_cutoff(distribution_from_histogram({{2, 1}, {3, 1}}), 0.5);
    CHECK(half.cutoff == 2);
    CHECK(half.achieved == doctest::Approx(0.5));

    CHECK_THROWS_AS(cumulative_cutoff(d, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(cumulative_cutoff(d, 1.0), std::invalid_argument);
}

TEST_CASE("cumulative cutoff is monotone in coverage") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 50; ++trial) {
        auto d = distribution_from_histogram(random_histogram(rng));
        std::uint32_t last = 0;
        for (double cov : {0.1, 0.3, 0.5, 0.7, 0.9, 0.99}) {
            auto c = cumulative_cutoff(d, cov);
            CHECK(c.cutoff >= last);
            CHECK(c.achieved >= cov);
            last = c.cutoff;
        }
    }
}

TEST_CASE("chebyshev guarantee holds on the empirical distribution") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 50; ++trial) {
        auto d = distribution_from_histogram(random_histogram(rng));
        for (double k : {1.5, 2.0, 3.0}) {
            const double bound = chebyshev_cutoff(d, k);
            std::size_t within = 0;
            for (auto [value, count] : d.histogram)
                if (double(value) <= bound) within += count;
            CHECK(double(within) / double(d.n) >= 1.0 - 1.0 / (k * k));
        }
    }
}

TEST_CASE("select_threshold picks the branch and reconciles") {
    // Narrow symmetric distribution: empirical branch.
    auto narrow = distribution_from_histogram({{4, 10}, {5, 30}, {6, 10}});
    auto rn = select_threshold(narrow);
    CHECK(rn.is_normal);
    CHECK(rn.method_used == "empirical");
    CHECK(rn.empirical_cutoff.has_value());
    CHECK_FALSE(rn.chebyshev_cutoff.has_value());

    // {1:9, 100:1}: chebyshev branch; run the sub-operations by hand.
    auto skewed = distribution_from_histogram({{1, 9}, {100, 1}});
    auto rs = select_threshold(skewed);
    CHECK_FALSE(rs.is_normal);
    CHECK(rs.method_used == "chebyshev");
    const double disp = std::floor(chebyshev_cutoff(skewed, 3.0));
    const auto cum = cumulative_cutoff(skewed, 0.90);
    CHECK(rs.cumulative_cutoff == cum.cutoff);
    const double expected = std::abs(disp - double(cum.cutoff)) <= 2.0
                                ? double(cum.cutoff)
                                : std::min(disp, double(cum.cutoff));
    CHECK(rs.recommended_cutoff == std::uint32_t(expected));
    CHECK(rs.recommended_cutoff >= 1);
    CHECK(rs.cumulative_coverage >= 0.90);
}

TEST_CASE("select_threshold reconciliation adopts the nearby cumulative value") {
    // Dispersion floor and cumulative cutoff differ by <= 2: cumulative wins.
    // mean 5.46, sd 6.37 -> chebyshev 24.57 -> floor 24; cumulative at 25
    // would be adopted. Build a histogram that lands in that window.
    std::map<std::uint32_t, std::size_t> h;
    h[1] = 400;
    h[4] = 300;
    h[8] = 200;
    h[25] = 95;
    h[60] = 45;
    auto d = distribution_from_histogram(h);
    auto r = select_threshold(d, 0.90);
    const double disp = std::floor(r.dispersion_cutoff());
    if (std::abs(disp - double(r.cumulative_cutoff)) <= 2.0)
        CHECK(r.recommended_cutoff == r.cumulative_cutoff);
    else
        CHECK(r.recommended_cutoff ==
              std::uint32_t(std::min(disp, double(r.cumulative_cutoff))));
}

TEST_CASE("select_threshold is deterministic") {
    auto d = distribution_from_histogram({{2, 50}, {3, 30}, {9, 10}, {40, 3}});
    auto a = select_threshold(d);
    auto b = select_threshold(d);
    CHECK(a.recommended_cutoff == b.recommended_cutoff);
    CHECK(a.cumulative_coverage == b.cumulative_coverage);
    CHECK(to_json_string(a) == to_json_string(b));
}

TEST_SUITE_END();
