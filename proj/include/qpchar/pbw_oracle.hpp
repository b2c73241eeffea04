#pragma once

#include <array>
#include <cstdint>
#include <string_view>
#include <vector>

#include "qpchar/series.hpp"

namespace qpchar {

/// Positive root a alpha_1 + b alpha_2 of G2, i.e. the monomial y1^a y2^b.
struct PositiveRoot {
    std::string_view name;
    std::uint32_t a;
    std::uint32_t b;
};

/// The six positive roots in PBW generator order.
inline constexpr std::array<PositiveRoot, 6> positive_roots{{
    {"a2", 0, 1},
    {"a1", 1, 0},
    {"a1+a2", 1, 1},
    {"a1+2a2", 1, 2},
    {"a1+3a2", 1, 3},
    {"2a1+3a2", 2, 3},
}};

/// prod over positive roots and m >= 1 of 1 / (1 - q^m y1^a y2^b).
inline TruncatedSeries product_side(unsigned trunc) {
    auto out = make_one(trunc);
    for (const auto& root : positive_roots)
        for (unsigned m = 1; m <= trunc; ++m)
            out *= geometric_inverse_factor(trunc, m, root.a, root.b);
    return out;
}

namespace detail {

// Counts PBW monomials by direct recursion: for each root in order, a weakly
// ordered list of energies (negated modes), largest first.
class PbwCounter {
public:
    explicit PbwCounter(unsigned trunc)
        : trunc_(trunc),
          y1_span_(2 * trunc + 1),
          y2_span_(3 * trunc + 1),
          counts_(std::size_t{trunc + 1} * y1_span_ * y2_span_, 0) {}

    void run() { place(0, trunc_, 0, 0, 0); }

    TruncatedSeries result() const {
        TruncatedSeries out(trunc_);
        for (std::uint32_t q = 0; q <= trunc_; ++q)
            for (std::uint32_t a = 0; a < y1_span_; ++a)
                for (std::uint32_t b = 0; b < y2_span_; ++b)
                    if (auto c = counts_[index(q, a, b)]; c != 0) out.add_term({q, a, b}, Integer(c));
        return out;
    }

private:
    std::size_t index(std::uint32_t q, std::uint32_t a, std::uint32_t b) const {
        return (std::size_t{q} * y1_span_ + a) * y2_span_ + b;
    }

    // root_index: current root; max_energy: cap for the next factor of this root.
    void place(std::size_t root_index, unsigned max_energy, std::uint32_t q, std::uint32_t a,
               std::uint32_t b) {
        if (root_index == positive_roots.size()) {
            ++counts_[index(q, a, b)];
            return;
        }
        // Close this root and move on; the next root may use the whole leftover budget.
        place(root_index + 1, trunc_ - q, q, a, b);
        const auto& root = positive_roots[root_index];
        for (unsigned e = 1; e <= max_energy && q + e <= trunc_; ++e)
            place(root_index, e, q + e, a + root.a, b + root.b);
    }

    unsigned trunc_;
    std::uint32_t y1_span_;
    std::uint32_t y2_span_;
    std::vector<std::uint64_t> counts_;
};

}  // namespace detail

/// Character of the free PBW basis, counted monomial by monomial.
inline TruncatedSeries pbw_enumerated(unsigned trunc) {
    detail::PbwCounter counter(trunc);
    counter.run();
    return counter.result();
}

}  // namespace qpchar
