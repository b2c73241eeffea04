#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <vector>

#include "qpchar/module_spec.hpp"
#include "qpchar/partitions.hpp"
#include "qpchar/series.hpp"

namespace qpchar {

struct QuasiParticle {
    std::uint32_t charge = 1;
    std::int64_t mode = -1;

    friend bool operator==(const QuasiParticle&, const QuasiParticle&) = default;
};

/**
 * Quasi-particle monomial b(alpha_2) b(alpha_1).
 *
 * Index 0 of each color holds p = 1, the particle with the largest charge;
 * charges weakly decrease along the vector.
 */
struct QPMonomial {
    std::vector<QuasiParticle> color1;
    std::vector<QuasiParticle> color2;

    std::int64_t energy() const {
        std::int64_t e = 0;
        for (const auto& x : color1) e -= x.mode;
        for (const auto& x : color2) e -= x.mode;
        return e;
    }

    Partition charge_type(int color) const {
        const auto& v = color == 1 ? color1 : color2;
        std::vector<std::uint32_t> n;
        n.reserve(v.size());
        for (const auto& x : v) n.push_back(x.charge);
        return Partition(std::move(n));
    }

    DualChargeType dual_charge_type() const {
        return {conjugate(charge_type(1)), conjugate(charge_type(2))};
    }

    SeriesKey key() const {
        std::uint32_t r1 = 0, r2 = 0;
        for (const auto& x : color1) r1 += x.charge;
        for (const auto& x : color2) r2 += x.charge;
        return {static_cast<std::uint32_t>(energy()), r1, r2};
    }

    friend bool operator==(const QPMonomial&, const QPMonomial&) = default;
};

namespace detail {

inline bool charges_well_formed(const std::vector<QuasiParticle>& v) {
    for (std::size_t p = 0; p < v.size(); ++p) {
        if (v[p].charge == 0) return false;
        if (p > 0 && v[p].charge > v[p - 1].charge) return false;
    }
    return true;
}

/// Interaction of a color-2 particle of charge n with every color-1 particle.
inline std::int64_t cross_interaction(const std::vector<QuasiParticle>& color1, std::int64_t n) {
    std::int64_t total = 0;
    for (const auto& x : color1) total += std::min<std::int64_t>(3 * std::int64_t{x.charge}, n);
    return total;
}

/// Same-color interaction of particle p with the particles before it.
inline std::int64_t self_interaction(const std::vector<QuasiParticle>& v, std::size_t p) {
    std::int64_t total = 0;
    for (std::size_t q = 0; q < p; ++q) total += 2 * std::int64_t{std::min(v[p].charge, v[q].charge)};
    return total;
}

}  // namespace detail

/// Membership in the difference-condition set for spec. Malformed charge sequences are rejected.
inline bool is_valid(const QPMonomial& b, const ModuleSpec& spec) {
    if (!detail::charges_well_formed(b.color1) || !detail::charges_well_formed(b.color2))
        return false;
    if (auto cap = spec.color1_cap(); cap && !b.color1.empty() && b.color1.front().charge > *cap)
        return false;
    if (auto cap = spec.color2_cap(); cap && !b.color2.empty() && b.color2.front().charge > *cap)
        return false;

    const auto& c1 = b.color1;
    for (std::size_t p = 0; p < c1.size(); ++p) {
        const std::int64_t n = c1[p].charge;
        if (c1[p].mode > -n - detail::self_interaction(c1, p)) return false;
        if (p + 1 < c1.size() && c1[p + 1].charge == c1[p].charge &&
            c1[p + 1].mode > c1[p].mode - 2 * n)
            return false;
    }
    const auto& c2 = b.color2;
    for (std::size_t p = 0; p < c2.size(); ++p) {
        const std::int64_t n = c2[p].charge;
        const std::int64_t bound =
            -n + detail::cross_interaction(c1, n) - detail::self_interaction(c2, p);
        if (c2[p].mode > bound) return false;
        if (p + 1 < c2.size() && c2[p + 1].charge == c2[p].charge &&
            c2[p + 1].mode > c2[p].mode - 2 * n)
            return false;
    }
    return true;
}

namespace detail {

/**
 * Exhaustive generator of canonical basis monomials with energy <= budget.
 *
 * Charge-types are searched first: color 1 by its own minimal energy (which is
 * at most four times the budget, by positive definiteness of the quadratic form),
 * then color 2 with the exact lower bound for the particles still to be placed.
 * For a fixed charge-type, modes are walked downward from their upper bounds.
 */
template <class Visitor>
class BasisSearch {
public:
    BasisSearch(const ModuleSpec& spec, unsigned budget, Visitor& visit)
        : cap1_(spec.color1_cap().value_or(std::numeric_limits<std::uint32_t>::max())),
          cap2_(spec.color2_cap().value_or(std::numeric_limits<std::uint32_t>::max())),
          budget_(budget),
          visit_(visit) {}

    void run() { grow_color1(std::numeric_limits<std::uint32_t>::max(), 0); }

private:
    // Minimal energy cost of the color-2 particle at one-based slot p with charge n.
    std::int64_t slot_cost(std::size_t p, std::int64_t n) const {
        return n * static_cast<std::int64_t>(2 * p - 1) - cross_interaction(mono_.color1, n);
    }

    void grow_color1(std::uint32_t max_charge, std::int64_t energy1) {
        prepare_color2_bounds();
        // The remaining budget may be negative here: color-2 interaction can pay it back.
        const std::int64_t room = static_cast<std::int64_t>(budget_) - energy1;
        const std::int64_t first_max = room + 3 * color1_charge_ - suffix_min(2, plateau_);
        mono_.color2.clear();
        grow_color2(std::min<std::int64_t>(cap2_, first_max), energy1);

        const std::size_t p = mono_.color1.size();
        for (std::uint32_t n = 1; n <= max_charge && n <= cap1_; ++n) {
            mono_.color1.push_back({n, 0});
            const std::int64_t cost = n + self_interaction(mono_.color1, p);
            const std::int64_t next = energy1 + cost;
            if (next > 4 * static_cast<std::int64_t>(budget_)) {
                mono_.color1.pop_back();
                break;
            }
            color1_charge_ += n;
            grow_color1(n, next);
            color1_charge_ -= n;
            mono_.color1.pop_back();
        }
    }

    // Table of min(0, min_{n' <= n} slot_cost(q, n')) for the current color-1 charges.
    // Beyond n = 3 max(color-1 charge) every slot cost increases in n, so the table
    // is flat there.
    void prepare_color2_bounds() {
        const std::int64_t ell = static_cast<std::int64_t>(mono_.color1.size());
        plateau_ = mono_.color1.empty() ? 1 : 3 * std::int64_t{mono_.color1.front().charge};
        // Slots with 2q - 1 >= ell never cost less than zero.
        const std::size_t slots = static_cast<std::size_t>((ell + 1) / 2 + 1);
        best_.assign(slots + 2, std::vector<std::int64_t>(plateau_ + 1, 0));
        for (std::size_t q = 1; q <= slots; ++q) {
            std::int64_t running = 0;
            for (std::int64_t n = 1; n <= plateau_; ++n) {
                running = std::min(running, slot_cost(q, n));
                best_[q][n] = running;
            }
        }
    }

    // Lower bound on the total cost of color-2 slots q, q+1, ... all with charge <= n.
    std::int64_t suffix_min(std::size_t q, std::int64_t n) const {
        std::int64_t total = 0;
        const std::int64_t col = std::min(n, plateau_);
        for (std::size_t s = q; s < best_.size(); ++s) total += best_[s][col];
        return total;
    }

    void grow_color2(std::int64_t max_charge, std::int64_t energy) {
        if (energy <= static_cast<std::int64_t>(budget_)) enumerate_modes();
        const std::size_t p = mono_.color2.size() + 1;
        for (std::int64_t n = 1; n <= max_charge; ++n) {
            const std::int64_t next = energy + slot_cost(p, n);
            if (next + suffix_min(p + 1, n) > static_cast<std::int64_t>(budget_)) continue;
            mono_.color2.push_back({static_cast<std::uint32_t>(n), 0});
            grow_color2(n, next);
            mono_.color2.pop_back();
        }
    }

    // Charges fixed; walk the modes.
    void enumerate_modes() {
        slots_.clear();
        for (std::size_t p = 0; p < mono_.color1.size(); ++p) {
            const std::int64_t n = mono_.color1[p].charge;
            slots_.push_back({&mono_.color1[p], -n - self_interaction(mono_.color1, p),
                              p > 0 && mono_.color1[p - 1].charge == mono_.color1[p].charge});
        }
        for (std::size_t p = 0; p < mono_.color2.size(); ++p) {
            const std::int64_t n = mono_.color2[p].charge;
            slots_.push_back({&mono_.color2[p],
                              -n + cross_interaction(mono_.color1, n) -
                                  self_interaction(mono_.color2, p),
                              p > 0 && mono_.color2[p - 1].charge == mono_.color2[p].charge});
        }
        // rest_[i]: minimal energy of slots i, i+1, ...
        rest_.assign(slots_.size() + 1, 0);
        for (std::size_t i = slots_.size(); i-- > 0;) rest_[i] = rest_[i + 1] - slots_[i].upper;
        assign_mode(0, 0);
    }

    void assign_mode(std::size_t i, std::int64_t energy) {
        if (i == slots_.size()) {
            visit_(static_cast<const QPMonomial&>(mono_));
            return;
        }
        auto& slot = slots_[i];
        std::int64_t top = slot.upper;
        if (slot.chained) top = std::min(top, slots_[i - 1].particle->mode - 2 * std::int64_t{slot.particle->charge});
        for (std::int64_t m = top;; --m) {
            const std::int64_t e = energy - m;
            if (e + rest_[i + 1] > static_cast<std::int64_t>(budget_)) break;
            slot.particle->mode = m;
            assign_mode(i + 1, e);
        }
    }

    struct Slot {
        QuasiParticle* particle;
        std::int64_t upper;
        bool chained;  // same color and charge as the previous slot
    };

    std::uint32_t cap1_;
    std::uint32_t cap2_;
    unsigned budget_;
    Visitor& visit_;
    QPMonomial mono_;
    std::int64_t color1_charge_ = 0;
    std::int64_t plateau_ = 1;
    std::vector<std::vector<std::int64_t>> best_;
    std::vector<Slot> slots_;
    std::vector<std::int64_t> rest_;
};

}  // namespace detail

/// Calls visit(const QPMonomial&) once for every basis monomial of energy <= trunc.
template <class Visitor>
void for_each_basis_monomial(const ModuleSpec& spec, unsigned trunc, Visitor&& visit) {
    detail::BasisSearch<std::remove_reference_t<Visitor>> search(spec, trunc, visit);
    search.run();
}

/// Character obtained by counting basis monomials per (energy, color-type).
inline TruncatedSeries enumerate_basis(const ModuleSpec& spec, unsigned trunc) {
    std::map<SeriesKey, std::uint64_t> counts;
    for_each_basis_monomial(spec, trunc, [&](const QPMonomial& b) { ++counts[b.key()]; });
    TruncatedSeries out(trunc);
    for (const auto& [k, c] : counts) out.add_term(k, Integer(c));
    return out;
}

}  // namespace qpchar
