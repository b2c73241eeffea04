#include <map>
#include <set>
#include <tuple>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qpchar/fermionic.hpp"
#include "qpchar/qp_enum.hpp"

namespace qpchar {
namespace {

const ModuleSpec L1 = ModuleSpec::standard(1);
const ModuleSpec L2 = ModuleSpec::standard(2);
const ModuleSpec N = ModuleSpec::verma();

QPMonomial mono(std::vector<QuasiParticle> c1, std::vector<QuasiParticle> c2) {
    return {std::move(c1), std::move(c2)};
}

TEST(IsValid, SingleColorOneParticle) {
    EXPECT_TRUE(is_valid(mono({{1, -1}}, {}), L1));
    EXPECT_TRUE(is_valid(mono({{1, -1}}, {}), N));
    EXPECT_FALSE(is_valid(mono({{1, 0}}, {}), N));
}

TEST(IsValid, ColorTwoModeMayBeNonNegative) {
    // m_{1,2} <= -1 + min{3, 1} = 0
    EXPECT_TRUE(is_valid(mono({{1, -1}}, {{1, 0}}), L1));
    EXPECT_FALSE(is_valid(mono({{1, -1}}, {{1, 1}}), L1));
    EXPECT_FALSE(is_valid(mono({}, {{1, 0}}), L1));
}

TEST(IsValid, EqualChargesNeedGap) {
    EXPECT_FALSE(is_valid(mono({}, {{1, -1}, {1, -1}}), L1));
    EXPECT_FALSE(is_valid(mono({}, {{1, -1}, {1, -2}}), L1));
    EXPECT_TRUE(is_valid(mono({}, {{1, -1}, {1, -3}}), L1));
    EXPECT_FALSE(is_valid(mono({{1, -1}, {1, -2}}, {}), N));
    EXPECT_TRUE(is_valid(mono({{1, -1}, {1, -3}}, {}), N));
}

TEST(IsValid, ChargeCaps) {
    EXPECT_FALSE(is_valid(mono({{2, -2}}, {}), L1));
    EXPECT_TRUE(is_valid(mono({{2, -2}}, {}), L2));
    EXPECT_TRUE(is_valid(mono({}, {{3, -3}}), L1));
    EXPECT_FALSE(is_valid(mono({}, {{4, -4}}), L1));
    EXPECT_TRUE(is_valid(mono({}, {{4, -4}}), N));
}

TEST(IsValid, RejectsMalformedChargeOrder) {
    EXPECT_FALSE(is_valid(mono({{1, -1}, {2, -9}}, {}), N));
    EXPECT_FALSE(is_valid(mono({}, {{0, -5}}), N));
}

TEST(IsValid, HighestRootAtEnergyOne) {
    // q y1^2 y2^3: two charge-1 color-1 particles and one charge-3 color-2 particle,
    // m_{1,2} <= -3 + min{3,3} + min{3,3} = 3.
    const auto b = mono({{1, -1}, {1, -3}}, {{3, 3}});
    EXPECT_TRUE(is_valid(b, L1));
    EXPECT_TRUE(is_valid(b, N));
    EXPECT_EQ(b.energy(), 1);
    EXPECT_EQ(b.key(), (SeriesKey{1, 2, 3}));
    EXPECT_FALSE(is_valid(mono({{1, -1}, {1, -3}}, {{3, 4}}), N));
    // A charge-2 color-1 particle needs m <= -2.
    EXPECT_FALSE(is_valid(mono({{2, -1}}, {{3, 0}}), N));
    EXPECT_TRUE(is_valid(mono({{2, -2}}, {{3, 0}}), N));
}

TEST(IsValid, CrossInteractionUsesEveryColorOneParticle) {
    // bound for the color-2 particle: -2 + min{3,2} + min{3,2} = 2
    EXPECT_TRUE(is_valid(mono({{1, -1}, {1, -3}}, {{2, 2}}), N));
    EXPECT_FALSE(is_valid(mono({{1, -1}, {1, -3}}, {{2, 3}}), N));
}

TEST(QPMonomial, DerivedQuantities) {
    const auto b = mono({{2, -2}, {1, -5}}, {{3, 1}, {1, -4}});
    EXPECT_EQ(b.energy(), 2 + 5 - 1 + 4);
    EXPECT_EQ(b.charge_type(1), (Partition{2, 1}));
    EXPECT_EQ(b.charge_type(2), (Partition{3, 1}));
    EXPECT_EQ(b.dual_charge_type(), (DualChargeType{Partition{2, 1}, Partition{2, 1, 1}}));
    EXPECT_EQ(b.key(), (SeriesKey{10, 3, 4}));
}

TEST(EnumerateBasis, LevelOneDegreeOne) {
    TruncatedSeries expected = make_one(1);
    for (auto [a, b] : {std::pair{1u, 0u}, {0u, 1u}, {1u, 1u}, {1u, 2u}, {1u, 3u}, {2u, 3u}})
        expected.add_term({1, a, b}, 1);
    EXPECT_EQ(enumerate_basis(L1, 1), expected);
    EXPECT_EQ(enumerate_basis(N, 1), expected);
    EXPECT_EQ(enumerate_basis(L1, 0), make_one(0));
}

TEST(EnumerateBasis, SpotValues) {
    const auto l1 = enumerate_basis(L1, 3);
    EXPECT_EQ(coeff(l1, {2, 0, 2}), 1);
    EXPECT_EQ(coeff(l1, {1, 1, 1}), 1);
    EXPECT_EQ(coeff(l1, {2, 2, 0}), 0);
    const auto n = enumerate_basis(N, 3);
    EXPECT_EQ(coeff(n, {1, 2, 3}), 1);
    EXPECT_EQ(coeff(n, {2, 1, 1}), 2);
    EXPECT_EQ(coeff(n, {2, 2, 0}), 1);
}

TEST(EnumerateBasis, TheOnlyDegreeTwoY2SquaredMonomial) {
    std::vector<QPMonomial> hits;
    for_each_basis_monomial(L1, 2, [&](const QPMonomial& b) {
        if (b.key() == SeriesKey{2, 0, 2}) hits.push_back(b);
    });
    ASSERT_EQ(hits.size(), 1u);
    EXPECT_EQ(hits[0], mono({}, {{2, -2}}));
}

TEST(EnumerateBasis, MatchesBoxOracle) {
    // The boxes are wide enough that enlarging them changes nothing (checked below).
    EXPECT_EQ(enumerate_basis(L1, 5), oracle::box_basis_character(5, {1, 3, -18, 18}));
    EXPECT_EQ(enumerate_basis(L2, 5), oracle::box_basis_character(5, {2, 6, -20, 20}));
    EXPECT_EQ(enumerate_basis(ModuleSpec::standard(3), 4),
              oracle::box_basis_character(4, {3, 9, -16, 16}));
    EXPECT_EQ(enumerate_basis(N, 3), oracle::box_basis_character(3, {5, 10, -16, 16}));
}

TEST(EnumerateBasis, BoxOracleIsStableUnderEnlargement) {
    EXPECT_EQ(oracle::box_basis_character(5, {1, 3, -18, 18}),
              oracle::box_basis_character(5, {1, 3, -30, 30}));
    EXPECT_EQ(oracle::box_basis_character(3, {5, 10, -16, 16}),
              oracle::box_basis_character(3, {6, 12, -16, 16}));
}

TEST(EnumerateBasis, EveryMonomialRevalidates) {
    for (const auto& spec : {L1, L2, N}) {
        std::set<std::vector<std::tuple<int, std::uint32_t, std::int64_t>>> seen;
        std::uint64_t total = 0;
        for_each_basis_monomial(spec, 6, [&](const QPMonomial& b) {
            ++total;
            EXPECT_TRUE(is_valid(b, spec));
            EXPECT_LE(b.energy(), 6);
            EXPECT_GE(b.energy(), static_cast<std::int64_t>(total_exponent(b.dual_charge_type())));
            std::vector<std::tuple<int, std::uint32_t, std::int64_t>> flat;
            for (const auto& x : b.color1) flat.emplace_back(1, x.charge, x.mode);
            for (const auto& x : b.color2) flat.emplace_back(2, x.charge, x.mode);
            seen.insert(std::move(flat));
        });
        EXPECT_EQ(seen.size(), total) << "duplicate monomial for " << spec.name();
    }
}

TEST(EnumerateBasis, MinimalEnergyEqualsTotalExponent) {
    for (const auto& spec : {L1, L2, N}) {
        std::map<DualChargeType, std::int64_t> minimal;
        for_each_basis_monomial(spec, 6, [&](const QPMonomial& b) {
            auto [it, fresh] = minimal.try_emplace(b.dual_charge_type(), b.energy());
            if (!fresh) it->second = std::min(it->second, b.energy());
        });
        const auto types = enumerate_dual_charge_types(spec, 6);
        EXPECT_EQ(minimal.size(), types.size());
        for (const auto& t : types) {
            ASSERT_TRUE(minimal.contains(t));
            EXPECT_EQ(minimal[t], static_cast<std::int64_t>(total_exponent(t)));
        }
    }
}

TEST(EnumerateBasis, AgreesWithFermionicThroughDegreeTen) {
    for (unsigned d = 0; d <= 10; ++d)
        for (const auto& spec : {L1, L2, N})
            EXPECT_EQ(enumerate_basis(spec, d), character_fermionic(spec, d))
                << spec.name() << " d=" << d;
}

TEST(EnumerateBasis, MonotoneInLevel) {
    for (unsigned d = 0; d <= 6; ++d) {
        const auto a = enumerate_basis(L1, d), b = enumerate_basis(L2, d),
                   c = enumerate_basis(ModuleSpec::standard(3), d), n = enumerate_basis(N, d);
        EXPECT_TRUE(dominated_by(a, b));
        EXPECT_TRUE(dominated_by(b, c));
        EXPECT_TRUE(dominated_by(c, n));
    }
}

}  // namespace
}  // namespace qpchar
