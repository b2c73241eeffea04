#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

namespace qpchar {

/// Weakly decreasing finite sequence of positive integers. Reads past the end give 0.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<std::uint32_t> parts) : parts_(std::move(parts)) {
        for (std::size_t t = 0; t < parts_.size(); ++t) {
            if (parts_[t] == 0) throw std::invalid_argument("partition parts must be positive");
            if (t > 0 && parts_[t] > parts_[t - 1])
                throw std::invalid_argument("partition parts must be weakly decreasing");
        }
    }

    Partition(std::initializer_list<std::uint32_t> parts)
        : Partition(std::vector<std::uint32_t>(parts)) {}

    std::size_t length() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }

    /// Zero-based access with the finite-support convention.
    std::uint32_t operator[](std::size_t t) const noexcept {
        return t < parts_.size() ? parts_[t] : 0;
    }

    std::uint64_t sum() const noexcept {
        return std::accumulate(parts_.begin(), parts_.end(), std::uint64_t{0});
    }

    std::span<const std::uint32_t> parts() const noexcept { return parts_; }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<std::uint32_t> parts_;
};

/// r1 and r2 list, for each color, how many quasi-particles have charge at least t.
struct DualChargeType {
    Partition r1;
    Partition r2;

    friend bool operator==(const DualChargeType&, const DualChargeType&) = default;
    friend auto operator<=>(const DualChargeType&, const DualChargeType&) = default;
};

/// Transpose of the Young diagram.
inline Partition conjugate(const Partition& p) {
    if (p.empty()) return {};
    std::vector<std::uint32_t> out(p[0], 0);
    for (std::uint32_t part : p.parts())
        for (std::uint32_t t = 0; t < part; ++t) ++out[t];
    return Partition(std::move(out));
}

/// Minimal same-color energy of a charge-type: each particle pays its charge plus
/// twice the min of its charge with every earlier (larger-or-equal) charge.
inline std::uint64_t diag_energy_from_charges(const Partition& charges) {
    std::uint64_t total = 0;
    const auto n = charges.parts();
    for (std::size_t p = 0; p < n.size(); ++p) {
        total += n[p];
        for (std::size_t q = 0; q < p; ++q) total += 2ull * std::min(n[p], n[q]);
    }
    return total;
}

inline std::uint64_t diag_energy_from_dual(const Partition& r) {
    std::uint64_t total = 0;
    for (std::uint64_t x : r.parts()) total += x * x;
    return total;
}

/// Sum over all (color-2, color-1) particle pairs of min{n2, 3 n1}.
inline std::uint64_t mixed_energy_from_charges(const Partition& n1, const Partition& n2) {
    std::uint64_t total = 0;
    for (std::uint64_t b : n2.parts())
        for (std::uint64_t a : n1.parts()) total += std::min(b, 3 * a);
    return total;
}

/// Sum over s of r1^(s) * (r2^(3s-2) + r2^(3s-1) + r2^(3s)), one-based indices.
inline std::uint64_t mixed_energy_from_dual(const DualChargeType& d) {
    std::uint64_t total = 0;
    for (std::size_t s = 0; s < d.r1.length(); ++s)
        total += std::uint64_t{d.r1[s]} * (std::uint64_t{d.r2[3 * s]} + d.r2[3 * s + 1] + d.r2[3 * s + 2]);
    return total;
}

/// Quadratic form in the q-exponent of a fermionic summand. Positive definite, so
/// the unsigned subtraction never wraps.
inline std::uint64_t total_exponent(const DualChargeType& d) {
    return diag_energy_from_dual(d.r1) + diag_energy_from_dual(d.r2) - mixed_energy_from_dual(d);
}

}  // namespace qpchar
