#include "regionpath/inequality.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "regionpath/rng.hpp"

namespace regionpath {

SplitOutcome check_split(const GroupSplit& s) {
    if (s.a1.empty() || s.a2.empty()) {
        throw std::invalid_argument("both groups must be non-empty");
    }
    const double sum1 = std::accumulate(s.a1.begin(), s.a1.end(), 0.0);
    const double sum2 = std::accumulate(s.a2.begin(), s.a2.end(), 0.0);
    const bool first_is_smaller = s.a1.size() <= s.a2.size();
    const double small = first_is_smaller ? sum1 : sum2;
    const double large = first_is_smaller ? sum2 : sum1;
    return small > large ? SplitOutcome::Anti : SplitOutcome::Holds;
}

std::uint64_t anti_triples_exact(std::uint64_t n) {
    if (n < 3) throw std::invalid_argument("anti_triples_exact needs n >= 3");
    std::uint64_t total = 0;
    for (std::uint64_t i = 1; n >= 2 * i + 2; ++i) {
        const std::uint64_t a = n - 2 * i - 1;
        const std::uint64_t b = n - 2 * i;
        total += a * b / 2;
    }
    return total;
}

AntiStats anti_probability(std::uint64_t n) {
    AntiStats stats;
    stats.n = n;
    stats.anti_triples = anti_triples_exact(n);
    const double choose3 = static_cast<double>(n) * static_cast<double>(n - 1) *
                           static_cast<double>(n - 2) / 6.0;
    stats.rho = static_cast<double>(stats.anti_triples) / choose3;
    stats.rho_assign = stats.rho / 3.0;
    // phi is the bracketed series of the closed form, so rho = (3/n) phi.
    stats.phi = 2.0 * static_cast<double>(stats.anti_triples) /
                (static_cast<double>(n - 1) * static_cast<double>(n - 2));

    // Equal-pair variant: x1 = x2 = x with 2x < y, counted as sum of n - 2x.
    std::uint64_t equal_pairs = 0;
    for (std::uint64_t x = 1; 2 * x < n; ++x) equal_pairs += n - 2 * x;
    stats.rho_equal = static_cast<double>(equal_pairs) / choose3;
    return stats;
}

double triangle_monte_carlo(std::uint64_t n, std::uint64_t trials, std::uint64_t seed) {
    if (n < 3) throw std::invalid_argument("triangle_monte_carlo needs n >= 3");
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");
    SplitMix64 rng(seed);
    std::uint64_t anti = 0;
    for (std::uint64_t t = 0; t < trials; ++t) {
        const std::uint64_t a = rng.below(n) + 1;
        std::uint64_t b = a;
        while (b == a) b = rng.below(n) + 1;
        std::uint64_t c = a;
        while (c == a || c == b) c = rng.below(n) + 1;
        const std::uint64_t top = std::max(a, std::max(b, c));
        if (a + b + c - top < top) ++anti;
    }
    return static_cast<double>(anti) / static_cast<double>(trials);
}

AntiHistogram split_histogram(std::uint32_t a_max, std::uint32_t e, std::uint64_t trials,
                              std::uint64_t seed) {
    if (e < 3) throw std::invalid_argument("polygon needs at least 3 edges");
    if (e > a_max) throw std::invalid_argument("cannot sample more distinct values than the array holds");
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");

    const std::uint32_t max_len = (e - 1) / 2;
    std::vector<std::uint64_t> anti_count(max_len, 0);

    std::vector<std::uint32_t> values(a_max);
    for (std::uint32_t i = 0; i < a_max; ++i) values[i] = i + 1;

    for (std::uint64_t trial = 0; trial < trials; ++trial) {
        SplitMix64 rng(derive_seed(seed, trial));
        for (std::uint32_t len = 1; len <= max_len; ++len) {
            // A full shuffle makes the first e entries a fresh uniform sample
            // and their order a uniform split at once.
            rng.shuffle(values);
            std::uint64_t small = 0;
            std::uint64_t large = 0;
            for (std::uint32_t i = 0; i < e; ++i) {
                if (i < len) {
                    small += values[i];
                } else {
                    large += values[i];
                }
            }
            if (small > large) ++anti_count[len - 1];
        }
    }

    AntiHistogram hist;
    hist.array_max = a_max;
    hist.edge_count = e;
    hist.trials = trials;
    hist.rate_by_length.reserve(max_len);
    for (std::uint64_t c : anti_count) {
        hist.rate_by_length.push_back(static_cast<double>(c) / static_cast<double>(trials));
    }
    return hist;
}

}  // namespace regionpath
