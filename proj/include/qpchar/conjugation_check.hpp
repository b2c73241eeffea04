#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qpchar/partitions.hpp"

namespace qpchar {

/// Partition with length in [0, max_length] and parts in [1, max_part].
inline Partition random_partition(std::mt19937_64& rng, std::uint32_t max_part = 12,
                                  std::uint32_t max_length = 12) {
    std::uniform_int_distribution<std::uint32_t> length(0, max_length);
    std::uniform_int_distribution<std::uint32_t> part(1, max_part);
    std::vector<std::uint32_t> parts(length(rng));
    for (auto& x : parts) x = part(rng);
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

struct ConjugationReport {
    std::uint64_t trials = 0;
    std::uint64_t passed = 0;
    std::optional<std::string> first_failure;

    bool ok() const { return passed == trials; }
};

namespace detail {

inline std::string show(const Partition& p) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < p.length(); ++i) os << (i ? "," : "") << p[i];
    os << ')';
    return os.str();
}

}  // namespace detail

/**
 * Seeded randomized check of the charge-type / dual-charge-type exponent
 * conversions: conjugation is an involution preserving size, the same-color
 * energy equals the sum of squared dual entries, and the cross-color energy
 * equals the (3s, 3s-1, 3s-2)-grouped dual form.
 */
inline ConjugationReport check_exponent_identities(std::uint64_t trials, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    ConjugationReport report;
    report.trials = trials;
    for (std::uint64_t t = 0; t < trials; ++t) {
        const Partition p = random_partition(rng);
        const Partition n1 = random_partition(rng);
        const Partition n2 = random_partition(rng);
        const Partition pc = conjugate(p);
        std::string failure;
        if (conjugate(pc) != p || pc.sum() != p.sum())
            failure = "conjugation of " + detail::show(p);
        else if (diag_energy_from_charges(p) != diag_energy_from_dual(pc))
            failure = "diagonal energy of " + detail::show(p);
        else if (mixed_energy_from_charges(n1, n2) !=
                 mixed_energy_from_dual({conjugate(n1), conjugate(n2)}))
            failure = "mixed energy of " + detail::show(n1) + ", " + detail::show(n2);
        if (failure.empty())
            ++report.passed;
        else if (!report.first_failure)
            report.first_failure = "trial " + std::to_string(t) + ": " + failure;
    }
    return report;
}

}  // namespace qpchar
