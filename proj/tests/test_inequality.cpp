#include "doctest.h"

#include <stdexcept>

#include <cmath>

#include "regionpath/inequality.hpp"

using namespace regionpath;

namespace {

// Literal triple loop, the arbitration oracle for the closed form.
std::uint64_t brute_anti_triples(std::uint64_t n) {
    std::uint64_t count = 0;
    for (std::uint64_t a = 1; a <= n; ++a) {
        for (std::uint64_t b = a + 1; b <= n; ++b) {
            for (std::uint64_t c = b + 1; c <= n; ++c) {
                if (a + b < c) ++count;
            }
        }
    }
    return count;
}

}  // namespace

TEST_CASE("check_split orients by cardinality before comparing sums") {
    CHECK(check_split({{5}, {1, 1}}) == SplitOutcome::Anti);
    CHECK(check_split({{1, 2}, {2, 2}}) == SplitOutcome::Holds);
    // Orientation: the one-element side {4} outweighs {1, 2}.
    CHECK(check_split({{1, 2}, {4}}) == SplitOutcome::Anti);
    // Ties count as holds.
    CHECK(check_split({{3}, {1, 2}}) == SplitOutcome::Holds);
    CHECK_THROWS_AS(check_split({{}, {1}}), std::invalid_argument);
}

TEST_CASE("anti triple counts match brute force") {
    CHECK(anti_triples_exact(4) == 1);
    CHECK(anti_triples_exact(5) == 3);
    for (std::uint64_t n = 3; n <= 120; ++n) {
        CHECK(anti_triples_exact(n) == brute_anti_triples(n));
    }
    CHECK_THROWS_AS(anti_triples_exact(2), std::invalid_argument);
}

TEST_CASE("triangle probabilities at n=170") {
    const AntiStats small = anti_probability(5);
    CHECK(small.anti_triples == 3);
    CHECK(small.rho == doctest::Approx(0.3));

    const AntiStats big = anti_probability(170);
    CHECK(big.rho > 0.46);
    CHECK(big.rho < 0.50);
    CHECK(big.rho == doctest::Approx(0.4955621302));
    CHECK(big.rho_assign > 0.15);
    CHECK(big.rho_assign < 0.18);
    CHECK(big.rho_equal == doctest::Approx(0.0088757396));

    // rho = (3/n) phi ties the series form to the ratio form.
    for (std::uint64_t n : {5ull, 17ull, 170ull, 333ull}) {
        const AntiStats s = anti_probability(n);
        CHECK(s.rho == doctest::Approx((3.0 / static_cast<double>(n)) * s.phi));
        CHECK(s.rho_assign == doctest::Approx(s.rho / 3.0));
    }
}

TEST_CASE("rho grows with n and stays below one half") {
    double prev = 0.0;
    for (std::uint64_t n = 3; n <= 500; ++n) {
        const double rho = anti_probability(n).rho;
        CHECK(rho >= prev);
        CHECK(rho <= 0.5);
        prev = rho;
    }
}

TEST_CASE("monte carlo estimates converge to the closed form") {
    const double exact5 = anti_probability(5).rho;
    const double mc5 = triangle_monte_carlo(5, 1'000'000, 99);
    CHECK(std::abs(mc5 - exact5) < 0.002);

    const double exact170 = anti_probability(170).rho;
    const double mc170 = triangle_monte_carlo(170, 1'000'000, 99);
    CHECK(std::abs(mc170 - exact170) < 0.005);

    CHECK(triangle_monte_carlo(170, 10'000, 7) == triangle_monte_carlo(170, 10'000, 7));
}

TEST_CASE("split histogram shape at A_max=170, E=169") {
    const AntiHistogram h = split_histogram(170, 169, 1000, 42);
    REQUIRE(h.rate_by_length.size() == 84);
    CHECK(h.trials == 1000);

    // The largest member cannot beat the sum of 168 others.
    CHECK(h.rate_by_length[0] == 0.0);
    // Below the onset the event is vanishingly rare.
    for (std::uint32_t len = 1; len <= 60; ++len) {
        CHECK(h.rate_by_length[len - 1] < 0.005);
    }
    for (double rate : h.rate_by_length) {
        CHECK(rate >= 0.0);
        CHECK(rate <= 1.0);
    }
    // Near-balanced split: a size-84 group beats the size-85 complement with
    // probability ~Phi(-0.134) = 0.447; allow 3-sigma Monte Carlo spread.
    CHECK(h.rate_by_length[83] > 0.40);
    CHECK(h.rate_by_length[83] < 0.50);

    // Monotone trend with 2-sigma slack for local inversions.
    for (std::size_t i = 1; i < h.rate_by_length.size(); ++i) {
        const double r = h.rate_by_length[i - 1];
        const double sigma = std::sqrt(r * (1.0 - r) / static_cast<double>(h.trials)) + 1e-9;
        CHECK(h.rate_by_length[i] >= r - 2.0 * sigma);
    }

    const AntiHistogram again = split_histogram(170, 169, 1000, 42);
    CHECK(again.rate_by_length == h.rate_by_length);
}

TEST_CASE("split histogram rejects bad parameters") {
    CHECK_THROWS_AS(split_histogram(170, 2, 10, 1), std::invalid_argument);
    CHECK_THROWS_AS(split_histogram(10, 20, 10, 1), std::invalid_argument);
    CHECK_THROWS_AS(split_histogram(170, 169, 0, 1), std::invalid_argument);
}
