#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace qpchar {

using Integer = boost::multiprecision::cpp_int;

/// Grading triple: q-degree (energy), y1-degree and y2-degree (color-type).
struct SeriesKey {
    std::uint32_t q_deg = 0;
    std::uint32_t y1_deg = 0;
    std::uint32_t y2_deg = 0;

    friend auto operator<=>(const SeriesKey&, const SeriesKey&) = default;
};

struct TruncationMismatch : std::invalid_argument {
    TruncationMismatch(unsigned a, unsigned b)
        : std::invalid_argument("truncation mismatch: " + std::to_string(a) + " vs " +
                                std::to_string(b)) {}
};

struct OutOfTruncation : std::out_of_range {
    OutOfTruncation(std::uint32_t q_deg, unsigned trunc)
        : std::out_of_range("q-degree " + std::to_string(q_deg) + " exceeds truncation " +
                            std::to_string(trunc)) {}
};

struct NonPositiveExponent : std::invalid_argument {
    explicit NonPositiveExponent(long m)
        : std::invalid_argument("geometric factor needs a positive q-exponent, got " +
                                std::to_string(m)) {}
};

/**
 * Exact power series in q, y1, y2 truncated at a fixed q-degree.
 *
 * Terms live in a sorted map keyed lexicographically by (q, y1, y2); zero
 * coefficients are never stored, so structural equality is semantic equality.
 * Binary operations demand equal truncation.
 */
class TruncatedSeries {
public:
    using TermMap = std::map<SeriesKey, Integer>;

    explicit TruncatedSeries(unsigned trunc) : trunc_(trunc) {}

    static TruncatedSeries zero(unsigned trunc) { return TruncatedSeries(trunc); }

    static TruncatedSeries one(unsigned trunc) {
        TruncatedSeries s(trunc);
        s.terms_.emplace(SeriesKey{}, Integer(1));
        return s;
    }

    /// c * q^k.q y1^k.y1 y2^k.y2, or zero when k.q exceeds the truncation.
    static TruncatedSeries monomial(unsigned trunc, SeriesKey key, Integer c = 1) {
        TruncatedSeries s(trunc);
        s.add_term(key, std::move(c));
        return s;
    }

    unsigned truncation() const noexcept { return trunc_; }
    const TermMap& terms() const& noexcept { return terms_; }
    // Iterating the terms of a temporary would dangle.
    const TermMap& terms() const&& = delete;
    std::size_t size() const noexcept { return terms_.size(); }
    bool empty() const noexcept { return terms_.empty(); }

    Integer coeff(SeriesKey key) const {
        if (key.q_deg > trunc_) throw OutOfTruncation(key.q_deg, trunc_);
        auto it = terms_.find(key);
        return it == terms_.end() ? Integer(0) : it->second;
    }

    /// Accumulate c into the coefficient at key; keys beyond the truncation are dropped.
    void add_term(SeriesKey key, const Integer& c) {
        if (key.q_deg > trunc_ || c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(key, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    TruncatedSeries& operator+=(const TruncatedSeries& rhs) {
        check_same(rhs);
        for (const auto& [k, c] : rhs.terms_) add_term(k, c);
        return *this;
    }

    friend TruncatedSeries operator+(TruncatedSeries lhs, const TruncatedSeries& rhs) {
        lhs += rhs;
        return lhs;
    }

    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        a.check_same(b);
        TruncatedSeries out(a.trunc_);
        // Both maps iterate in increasing q, so the inner loop stops at the first overflow.
        for (const auto& [ka, ca] : a.terms_) {
            const std::uint32_t room = a.trunc_ - ka.q_deg;
            for (const auto& [kb, cb] : b.terms_) {
                if (kb.q_deg > room) break;
                out.add_term({ka.q_deg + kb.q_deg, ka.y1_deg + kb.y1_deg, ka.y2_deg + kb.y2_deg},
                             ca * cb);
            }
        }
        return out;
    }

    TruncatedSeries& operator*=(const TruncatedSeries& rhs) { return *this = *this * rhs; }

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    void check_same(const TruncatedSeries& other) const {
        if (trunc_ != other.trunc_) throw TruncationMismatch(trunc_, other.trunc_);
    }

    unsigned trunc_;
    TermMap terms_;
};

inline TruncatedSeries make_zero(unsigned trunc) { return TruncatedSeries::zero(trunc); }
inline TruncatedSeries make_one(unsigned trunc) { return TruncatedSeries::one(trunc); }
inline TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) { return a + b; }
inline TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) { return a * b; }
inline Integer coeff(const TruncatedSeries& s, SeriesKey key) { return s.coeff(key); }

/// 1 / (1 - q^m y1^a y2^b), expanded up to q^trunc.
inline TruncatedSeries geometric_inverse_factor(unsigned trunc, long m, std::uint32_t a,
                                                std::uint32_t b) {
    if (m < 1) throw NonPositiveExponent(m);
    TruncatedSeries s(trunc);
    const auto step = static_cast<std::uint32_t>(m);
    for (std::uint32_t j = 0; j * step <= trunc; ++j) s.add_term({j * step, j * a, j * b}, 1);
    return s;
}

namespace detail {

/// Coefficients of 1/(q)_r up to q^trunc: partitions into parts of size at most r.
inline std::vector<Integer> inverse_qpoch_coefficients(unsigned trunc, unsigned r) {
    std::vector<Integer> c(trunc + 1);
    c[0] = 1;
    for (unsigned part = 1; part <= r && part <= trunc; ++part)
        for (unsigned d = part; d <= trunc; ++d) c[d] += c[d - part];
    return c;
}

/// Truncated product of two univariate coefficient vectors of equal length.
inline std::vector<Integer> univariate_product(const std::vector<Integer>& a,
                                               const std::vector<Integer>& b) {
    std::vector<Integer> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; i + j < out.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

}  // namespace detail

/// 1/(q)_r with (q)_0 = 1.
inline TruncatedSeries qpoch_inverse(unsigned trunc, unsigned r) {
    const auto c = detail::inverse_qpoch_coefficients(trunc, r);
    TruncatedSeries s(trunc);
    for (unsigned d = 0; d <= trunc; ++d) s.add_term({d, 0, 0}, c[d]);
    return s;
}

/// One serialized term: degrees plus the coefficient as a decimal string.
struct SeriesRecord {
    std::uint32_t q_deg;
    std::uint32_t y1_deg;
    std::uint32_t y2_deg;
    std::string coeff;

    friend bool operator==(const SeriesRecord&, const SeriesRecord&) = default;
};

inline std::vector<SeriesRecord> to_records(const TruncatedSeries& s) {
    std::vector<SeriesRecord> out;
    out.reserve(s.size());
    for (const auto& [k, c] : s.terms()) out.push_back({k.q_deg, k.y1_deg, k.y2_deg, c.str()});
    return out;
}

inline TruncatedSeries from_records(unsigned trunc, const std::vector<SeriesRecord>& records) {
    TruncatedSeries s(trunc);
    for (const auto& r : records) s.add_term({r.q_deg, r.y1_deg, r.y2_deg}, Integer(r.coeff));
    return s;
}

/// First key (in lexicographic order) where the two series differ, if any.
struct SeriesMismatch {
    SeriesKey key;
    Integer lhs;
    Integer rhs;
};

inline std::optional<SeriesMismatch> first_mismatch(const TruncatedSeries& a,
                                                    const TruncatedSeries& b) {
    if (a.truncation() != b.truncation()) throw TruncationMismatch(a.truncation(), b.truncation());
    auto ia = a.terms().begin(), ib = b.terms().begin();
    const auto ea = a.terms().end(), eb = b.terms().end();
    while (ia != ea || ib != eb) {
        if (ib == eb || (ia != ea && ia->first < ib->first)) return SeriesMismatch{ia->first, ia->second, 0};
        if (ia == ea || ib->first < ia->first) return SeriesMismatch{ib->first, 0, ib->second};
        if (ia->second != ib->second) return SeriesMismatch{ia->first, ia->second, ib->second};
        ++ia;
        ++ib;
    }
    return std::nullopt;
}

/// Coefficientwise a <= b.
inline bool dominated_by(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.truncation() != b.truncation()) throw TruncationMismatch(a.truncation(), b.truncation());
    for (const auto& [k, c] : a.terms()) {
        auto it = b.terms().find(k);
        const Integer rhs = it == b.terms().end() ? Integer(0) : it->second;
        if (c > rhs) return false;
    }
    for (const auto& [k, c] : b.terms())
        if (c < 0 && !a.terms().contains(k)) return false;
    return true;
}

}  // namespace qpchar
