#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <vector>

#include "qpchar/module_spec.hpp"
#include "qpchar/partitions.hpp"
#include "qpchar/series.hpp"

namespace qpchar {

namespace detail {

/**
 * Depth-first search over dual-charge-types with total exponent <= budget.
 *
 * The exponent splits into blocks: r1^(s)^2 plus, for the three r2 entries
 * j in {3s-2, 3s-1, 3s}, the terms x_j^2 - r1^(s) x_j; r2 entries past 3 len(r1)
 * contribute x_j^2. Each block is at least r1^(s)^2 / 4, which bounds r1, and
 * the per-entry minima give an admissible lower bound for the unfilled suffix
 * of r2.
 */
class DualChargeSearch {
public:
    DualChargeSearch(const ModuleSpec& spec, std::uint64_t budget)
        : cap1_(spec.color1_cap().value_or(std::numeric_limits<std::uint32_t>::max())),
          cap2_(spec.color2_cap().value_or(std::numeric_limits<std::uint32_t>::max())),
          budget_(static_cast<std::int64_t>(budget)) {}

    std::vector<DualChargeType> run() {
        out_.clear();
        r1_.clear();
        descend_r1(std::numeric_limits<std::uint32_t>::max(), 0);
        return std::move(out_);
    }

private:
    // Color-1 block weight seen by r2 entry j (zero-based).
    std::int64_t weight(std::size_t j) const {
        return j / 3 < r1_.size() ? r1_[j / 3] : 0;
    }

    static std::int64_t min_entry_cost(std::int64_t w, std::int64_t max_value) {
        auto cost = [w](std::int64_t x) { return x * x - w * x; };
        const std::int64_t lo = std::min(max_value, w / 2);
        const std::int64_t hi = std::min(max_value, (w + 1) / 2);
        return std::min({std::int64_t{0}, cost(lo), cost(hi)});
    }

    // Lower bound on what r2 entries j, j+1, ... (each <= max_value) can add.
    std::int64_t suffix_bound(std::size_t j, std::int64_t max_value) const {
        std::int64_t total = 0;
        const std::size_t end = std::min<std::size_t>(cap2_, 3 * r1_.size());
        for (std::size_t jj = j; jj < end; ++jj) total += min_entry_cost(weight(jj), max_value);
        return total;
    }

    void descend_r1(std::uint32_t max_part, std::int64_t square_sum) {
        r2_.clear();
        descend_r2(square_sum, std::numeric_limits<std::uint32_t>::max());
        if (r1_.size() >= cap1_) return;
        for (std::uint32_t x = 1; x <= max_part; ++x) {
            const std::int64_t next = square_sum + std::int64_t{x} * x;
            if (next > 4 * budget_) break;
            r1_.push_back(x);
            descend_r1(x, next);
            r1_.pop_back();
        }
    }

    void descend_r2(std::int64_t exponent, std::uint32_t max_part) {
        if (exponent <= budget_) {
            out_.push_back({Partition(r1_), Partition(r2_)});
        }
        const std::size_t j = r2_.size();
        if (j >= cap2_) return;
        const std::int64_t w = weight(j);
        for (std::uint32_t x = 1; x <= max_part; ++x) {
            const std::int64_t next = exponent + std::int64_t{x} * x - w * x;
            if (next + suffix_bound(j + 1, x) > budget_) {
                // Past w the entry cost grows with x while the suffix bound is flat.
                if (x > w) break;
                continue;
            }
            r2_.push_back(x);
            descend_r2(next, x);
            r2_.pop_back();
        }
    }

    std::uint32_t cap1_;
    std::uint32_t cap2_;
    std::int64_t budget_;
    std::vector<std::uint32_t> r1_;
    std::vector<std::uint32_t> r2_;
    std::vector<DualChargeType> out_;
};

}  // namespace detail

/// All dual-charge-types admissible for spec whose total exponent is at most trunc.
inline std::vector<DualChargeType> enumerate_dual_charge_types(const ModuleSpec& spec,
                                                               unsigned trunc) {
    return detail::DualChargeSearch(spec, trunc).run();
}

/// Fermionic sum of q^{quadratic form} / prod (q)_{r^(t) - r^(t+1)} y1^{r1} y2^{r2}.
inline TruncatedSeries character_fermionic(const ModuleSpec& spec, unsigned trunc) {
    TruncatedSeries out(trunc);
    for (const auto& d : enumerate_dual_charge_types(spec, trunc)) {
        const auto exponent = static_cast<unsigned>(total_exponent(d));
        const unsigned room = trunc - exponent;
        std::vector<Integer> denom(room + 1);
        denom[0] = 1;
        for (const Partition* r : {&d.r1, &d.r2}) {
            for (std::size_t t = 0; t < r->length(); ++t) {
                const unsigned gap = (*r)[t] - (*r)[t + 1];
                if (gap == 0 || room == 0) continue;
                denom = detail::univariate_product(denom,
                                                   detail::inverse_qpoch_coefficients(room, gap));
            }
        }
        const auto y1 = static_cast<std::uint32_t>(d.r1.sum());
        const auto y2 = static_cast<std::uint32_t>(d.r2.sum());
        for (unsigned i = 0; i <= room; ++i) out.add_term({exponent + i, y1, y2}, denom[i]);
    }
    return out;
}

}  // namespace qpchar
