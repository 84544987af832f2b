// Copyright 2026 The bicx Authors.
// SPDX-License-Identifier: Apache-2.0
//
// Acceptance suite: twelve criteria, one test each, one PASS/FAIL line each.
// Everything is exact rational arithmetic; expected tables are written out
// here rather than taken from the library.
#include <cstdio>
#include <map>
#include <set>

#include <gtest/gtest.h>

#include "bicx/bicx.hpp"

namespace {

using bicx::ConjTag;
using bicx::ConjugateProductKind;
using bicx::Rational;
using B = bicx::Bicomplex<Rational>;
using V = bicx::Vec4<Rational>;
using M = bicx::Mat4<Rational>;

// Pinned parameters. Every comparison below is exact equality: the
// tolerance is zero by construction, not by choice of epsilon.
constexpr int kSamples = 1000;
constexpr int kZeroDivisorSamples = 200;

std::uint64_t seed()
{
    return bicx::seed_from_env();
}

// Caps the number of messages a failing property loop produces.
class Budget {
  public:
    bool spend() { return used_++ < 5; }
    int failures() const { return used_; }

  private:
    int used_ = 0;
};

//---------------------------------------------------------------------------//
// Independent oracles
//---------------------------------------------------------------------------//
V oracle_map(ConjTag t, const V& v)
{
    const auto& [a, b, c, d] = v.c;
    switch (t) {
        case ConjTag::D0: return {a, b, c, d};
        case ConjTag::D1: return {a, b, -c, -d};
        case ConjTag::D2: return {a, -b, c, -d};
        case ConjTag::D3: return {a, -b, -c, d};
        case ConjTag::D4: return {a, -c, -b, d};
        case ConjTag::D5: return {a, c, b, d};
        case ConjTag::P6: return {a, -c, b, -d};
        case ConjTag::P7: return {a, c, -b, -d};
    }
    return v;
}

M oracle_matrix(ConjTag t)
{
    M m;
    for (std::size_t col = 0; col < 4; ++col) {
        V e;
        e[col] = 1;
        const V img = oracle_map(t, e);
        for (std::size_t row = 0; row < 4; ++row) {
            m.m[row][col] = img[row];
        }
    }
    return m;
}

// v -> v - 2 (v.a)/(a.a) a, as a matrix.
M oracle_reflection(const V& a)
{
    M m = M::identity();
    const Rational aa = dot(a, a);
    for (std::size_t r = 0; r < 4; ++r) {
        for (std::size_t c = 0; c < 4; ++c) {
            m.m[r][c] -= 2 * a[r] * a[c] / aa;
        }
    }
    return m;
}

M oracle_named(const std::string& name)
{
    static const std::map<std::string, V> normals{
        {"R_i1", V{0, 1, 0, 0}}, {"R_i2", V{0, 0, 1, 0}}, {"R_j1", V{0, 0, 0, 1}},
        {"R_a4", V{0, 1, 1, 0}}, {"R_a5", V{0, 1, -1, 0}},
    };
    return oracle_reflection(normals.at(name));
}

using Table = std::array<std::array<std::string, 8>, 8>;

// Composition table, entry [r][c] = r o c.
const Table kConjTable{{
    {"dag0", "dag1", "dag2", "dag3", "dag4", "dag5", "pdag6", "pdag7"},
    {"dag1", "dag0", "dag3", "dag2", "pdag6", "pdag7", "dag4", "dag5"},
    {"dag2", "dag3", "dag0", "dag1", "pdag7", "pdag6", "dag5", "dag4"},
    {"dag3", "dag2", "dag1", "dag0", "dag5", "dag4", "pdag7", "pdag6"},
    {"dag4", "pdag7", "pdag6", "dag5", "dag0", "dag3", "dag2", "dag1"},
    {"dag5", "pdag6", "pdag7", "dag4", "dag3", "dag0", "dag1", "dag2"},
    {"pdag6", "dag5", "dag4", "pdag7", "dag1", "dag2", "dag3", "dag0"},
    {"pdag7", "dag4", "dag5", "pdag6", "dag2", "dag1", "dag0", "dag3"},
}};

const std::array<std::array<std::string, 4>, 4> kFirstFour{{
    {"dag0", "dag1", "dag2", "dag3"},
    {"dag1", "dag0", "dag3", "dag2"},
    {"dag2", "dag3", "dag0", "dag1"},
    {"dag3", "dag2", "dag1", "dag0"},
}};

// Rows and columns ordered Id, x, a^2x, a^2, a^3x, ax, a, a^3.
const Table kD8Table{{
    {"Id", "x", "a^2x", "a^2", "a^3x", "ax", "a", "a^3"},
    {"x", "Id", "a^2", "a^2x", "a", "a^3", "a^3x", "ax"},
    {"a^2x", "a^2", "Id", "x", "a^3", "a", "ax", "a^3x"},
    {"a^2", "a^2x", "x", "Id", "ax", "a^3x", "a^3", "a"},
    {"a^3x", "a^3", "a", "ax", "Id", "a^2", "a^2x", "x"},
    {"ax", "a", "a^3", "a^3x", "a^2", "Id", "x", "a^2x"},
    {"a", "ax", "a^3x", "a^3", "x", "a^2x", "a^2", "Id"},
    {"a^3", "a^3x", "ax", "a", "a^2x", "x", "Id", "a^2"},
}};

const std::map<ConjTag, unsigned> kOrders{{ConjTag::D0, 1}, {ConjTag::D1, 2}, {ConjTag::D2, 2}, {ConjTag::D3, 2},
                                          {ConjTag::D4, 2}, {ConjTag::D5, 2}, {ConjTag::P6, 4}, {ConjTag::P7, 4}};

const std::set<std::set<std::string>> kSubgroups{
    {"dag0"},
    {"dag0", "dag1"},
    {"dag0", "dag2"},
    {"dag0", "dag3"},
    {"dag0", "dag4"},
    {"dag0", "dag5"},
    {"dag0", "dag1", "dag2", "dag3"},
    {"dag0", "dag3", "dag4", "dag5"},
    {"dag0", "dag3", "pdag6", "pdag7"},
    {"dag0", "dag1", "dag2", "dag3", "dag4", "dag5", "pdag6", "pdag7"},
};

const std::set<std::set<std::string>> kD8Subgroups{
    {"Id", "x", "a^2", "a^2x"},
    {"Id", "ax", "a^2", "a^3x"},
    {"Id", "a", "a^2", "a^3"},
    {"Id", "x"},
    {"Id", "a^2x"},
    {"Id", "a^2"},
    {"Id", "a^3x"},
    {"Id", "ax"},
    {"Id"},
    {"Id", "x", "a^2x", "a^2", "a^3x", "ax", "a", "a^3"},
};

std::string name(ConjTag t)
{
    return std::string(bicx::tag_name(t));
}

bool is_real(const B& s)
{
    const V v = bicx::to_vec4(s);
    return v[1] == 0 && v[2] == 0 && v[3] == 0;
}

//---------------------------------------------------------------------------//
// Criteria
//---------------------------------------------------------------------------//
TEST(Acceptance, Criterion01_Enumeration)
{
    const auto found = bicx::enumerate_unit_homomorphisms();
    ASSERT_EQ(found.size(), 8U);
    std::set<ConjTag> tags;
    for (const auto& u : found) {
        const auto t = bicx::tag_of(u);
        ASSERT_TRUE(t.has_value());
        EXPECT_EQ(u.matrix(), oracle_matrix(*t)) << name(*t);
        tags.insert(*t);
    }
    EXPECT_EQ(tags.size(), 8U);
}

TEST(Acceptance, Criterion02_Classification)
{
    std::map<unsigned, int> multiset;
    for (ConjTag t : bicx::all_tags) {
        EXPECT_EQ(bicx::order(t), kOrders.at(t)) << name(t);
        ++multiset[bicx::order(t)];
    }
    EXPECT_EQ(multiset, (std::map<unsigned, int>{{1, 1}, {2, 5}, {4, 2}}));
    EXPECT_EQ(bicx::classify_n_involutions(2).size(), 6U);
    EXPECT_EQ(bicx::classify_n_involutions(3).size(), 1U);
    EXPECT_EQ(bicx::classify_n_involutions(4).size(), 8U);
    EXPECT_EQ(bicx::classify_n_involutions(8).size(), 8U);
}

TEST(Acceptance, Criterion03_SquareRootsOfMinusOne)
{
    const auto roots = bicx::square_roots(B::real(-1));
    std::set<V> got;
    for (const auto& r : roots) {
        got.insert(bicx::to_vec4(r));
    }
    const std::set<V> expected{V{0, 1, 0, 0}, V{0, -1, 0, 0}, V{0, 0, 1, 0}, V{0, 0, -1, 0}};
    EXPECT_EQ(roots.size(), 4U);
    EXPECT_EQ(got, expected);
}

TEST(Acceptance, Criterion04_CayleyTables)
{
    const auto conj = bicx::cayley_table();
    for (std::size_t r = 0; r < 8; ++r) {
        for (std::size_t c = 0; c < 8; ++c) {
            EXPECT_EQ(name(conj[r][c]), kConjTable[r][c]) << r << "," << c;
        }
    }
    for (std::size_t r = 0; r < 4; ++r) {
        for (std::size_t c = 0; c < 4; ++c) {
            EXPECT_EQ(name(conj[r][c]), kFirstFour[r][c]) << r << "," << c;
        }
    }
    const auto d8 = bicx::d8_table();
    for (std::size_t r = 0; r < 8; ++r) {
        for (std::size_t c = 0; c < 8; ++c) {
            EXPECT_EQ(std::string(d8[r][c].name()), kD8Table[r][c]) << r << "," << c;
        }
    }
    // the composition table also agrees with composing the oracle maps
    const V probe{1, 2, 3, 4};
    for (ConjTag r : bicx::all_tags) {
        for (ConjTag c : bicx::all_tags) {
            EXPECT_EQ(oracle_map(conj[bicx::index(r)][bicx::index(c)], probe), oracle_map(r, oracle_map(c, probe)));
        }
    }
}

TEST(Acceptance, Criterion05_GroupAxioms)
{
    const auto table = bicx::cayley_table();
    const auto report = bicx::verify_group_axioms(table);
    EXPECT_TRUE(report.closed);
    EXPECT_TRUE(report.has_identity);
    EXPECT_TRUE(report.has_inverses);
    EXPECT_TRUE(report.associative);

    int triples = 0;
    for (ConjTag a : bicx::all_tags) {
        for (ConjTag b : bicx::all_tags) {
            for (ConjTag c : bicx::all_tags) {
                const ConjTag ab = table[bicx::index(a)][bicx::index(b)];
                const ConjTag bc = table[bicx::index(b)][bicx::index(c)];
                EXPECT_EQ(table[bicx::index(ab)][bicx::index(c)], table[bicx::index(a)][bicx::index(bc)]);
                ++triples;
            }
        }
    }
    EXPECT_EQ(triples, 512);

    EXPECT_NE(bicx::compose(ConjTag::D1, ConjTag::P6), bicx::compose(ConjTag::P6, ConjTag::D1));

    const std::array<ConjTag, 6> six{ConjTag::D0, ConjTag::D1, ConjTag::D2, ConjTag::D3, ConjTag::D4, ConjTag::D5};
    const auto sub = bicx::verify_group_axioms(table, six);
    EXPECT_FALSE(sub.closed);
    ASSERT_TRUE(sub.closure_failure.has_value());
    EXPECT_EQ(sub.closure_failure->first, ConjTag::D1);
    EXPECT_EQ(sub.closure_failure->second, ConjTag::D4);
    EXPECT_EQ(bicx::compose(ConjTag::D1, ConjTag::D4), ConjTag::P6);
}

TEST(Acceptance, Criterion06_Subgroups)
{
    const auto groups = bicx::subgroups(bicx::cayley_table());
    std::set<std::set<std::string>> got;
    for (const auto& h : groups) {
        std::set<std::string> names;
        for (ConjTag t : h) {
            names.insert(name(t));
        }
        got.insert(names);
    }
    EXPECT_EQ(groups.size(), 10U);
    EXPECT_EQ(got, kSubgroups);
}

TEST(Acceptance, Criterion07_D8Isomorphism)
{
    const auto report = bicx::verify_isomorphism(bicx::cayley_table());
    EXPECT_TRUE(report.bijective);
    EXPECT_TRUE(report.homomorphism_failures.empty());
    EXPECT_TRUE(report.orders_preserved);
    EXPECT_TRUE(report.subgroups_match);

    std::set<std::string> image;
    for (ConjTag f : bicx::all_tags) {
        image.insert(std::string(bicx::rho(f).name()));
        for (ConjTag g : bicx::all_tags) {
            EXPECT_EQ(bicx::rho(bicx::compose(f, g)), bicx::d8_multiply(bicx::rho(f), bicx::rho(g)));
        }
        EXPECT_EQ(bicx::d8_order(bicx::rho(f)), kOrders.at(f));
    }
    EXPECT_EQ(image.size(), 8U);

    std::set<std::set<std::string>> mapped;
    for (const auto& h : kSubgroups) {
        std::set<std::string> img;
        for (const auto& t : h) {
            img.insert(std::string(bicx::rho(*bicx::parse_tag(t)).name()));
        }
        mapped.insert(img);
    }
    EXPECT_EQ(mapped, kD8Subgroups);
}

TEST(Acceptance, Criterion08_Homomorphism)
{
    bicx::RationalSampler rng(seed());
    Budget budget;
    for (int k = 0; k < kSamples; ++k) {
        const B s = rng.bicomplex();
        const B t = rng.bicomplex();
        const Rational lambda = rng.scalar();
        for (ConjTag f : bicx::all_tags) {
            const bool ok = bicx::conjugate(f, s + t) == bicx::conjugate(f, s) + bicx::conjugate(f, t)
                && bicx::conjugate(f, lambda * s) == lambda * bicx::conjugate(f, s)
                && bicx::conjugate(f, s * t) == bicx::conjugate(f, s) * bicx::conjugate(f, t);
            B iterate = s;
            for (unsigned n = 0; n < kOrders.at(f); ++n) {
                iterate = bicx::conjugate(f, iterate);
            }
            const bool returns = iterate == s;
            if ((!ok || !returns) && budget.spend()) {
                ADD_FAILURE() << name(f) << " at " << bicx::to_string(s) << ", " << bicx::to_string(t);
            }
        }
    }
    // the order is exact: no smaller power is the identity on a generic point
    const B generic = bicx::from_vec4(V{1, 2, 3, 4});
    for (ConjTag f : bicx::all_tags) {
        B iterate = generic;
        for (unsigned n = 1; n < kOrders.at(f); ++n) {
            iterate = bicx::conjugate(f, iterate);
            EXPECT_NE(iterate, generic) << name(f) << "^" << n;
        }
    }
    EXPECT_EQ(budget.failures(), 0);
}

TEST(Acceptance, Criterion09_IdempotentForm)
{
    bicx::RationalSampler rng(seed() + 1);
    Budget budget;
    for (int k = 0; k < kSamples; ++k) {
        const B s = rng.bicomplex();
        for (ConjTag f : bicx::all_tags) {
            const B via_idem = bicx::from_idempotent(bicx::conjugate_idempotent(f, bicx::to_idempotent(s)));
            const bool ok = via_idem == bicx::conjugate(f, s)
                && bicx::to_vec4(bicx::conjugate(f, s)) == oracle_map(f, bicx::to_vec4(s));
            if (!ok && budget.spend()) {
                ADD_FAILURE() << name(f) << " at " << bicx::to_string(s);
            }
        }
    }
    EXPECT_EQ(budget.failures(), 0);
    EXPECT_EQ(B::e1() * B::e1(), B::e1());
    EXPECT_TRUE((B::e1() * B::e2()).is_zero());
    EXPECT_EQ(B::e1() + B::e2(), B::one());
    EXPECT_EQ(B::j1() * B::j1(), B::one());
}

TEST(Acceptance, Criterion10_InverseFormulas)
{
    bicx::RationalSampler rng(seed() + 2);
    Budget budget;
    for (int k = 0; k < kSamples; ++k) {
        const B s = rng.invertible();
        const B expected = bicx::inverse_idempotent(s);
        for (auto kind : bicx::all_product_kinds) {
            const bool nonzero = !bicx::conjugate_product(s, kind).is_zero();
            bool ok = nonzero;
            if (nonzero) {
                const B inv = bicx::inverse_via_conjugates(s, kind);
                ok = inv == expected && s * inv == B::one();
            }
            if (!ok && budget.spend()) {
                ADD_FAILURE() << bicx::kind_name(kind) << " inverse at " << bicx::to_string(s);
            }
        }
    }
    for (int k = 0; k < kZeroDivisorSamples; ++k) {
        const B z = rng.zero_divisor();
        for (auto kind : bicx::all_product_kinds) {
            const B p = bicx::conjugate_product(z, kind);
            if (!p.is_zero() && budget.spend()) {
                ADD_FAILURE() << bicx::kind_name(kind) << " product of zero divisor " << bicx::to_string(z) << " is "
                              << bicx::to_string(p) << ", expected 0";
            }
        }
    }
    EXPECT_EQ(budget.failures(), 0);
}

TEST(Acceptance, Criterion11_ConjugateProductsReal)
{
    bicx::RationalSampler rng(seed() + 3);
    Budget budget;
    for (int k = 0; k < kSamples; ++k) {
        const B s = rng.bicomplex();
        std::map<ConjugateProductKind, B> p;
        for (auto kind : bicx::all_product_kinds) {
            p[kind] = bicx::conjugate_product(s, kind);
            if (!is_real(p[kind]) && budget.spend()) {
                ADD_FAILURE() << bicx::kind_name(kind) << " product " << bicx::to_string(p[kind]) << " at "
                              << bicx::to_string(s) << " is not real";
            }
        }
        const B& sub123 = p[ConjugateProductKind::Sub123];
        const bool relations = p[ConjugateProductKind::Full] == sub123 * sub123
            && sub123 == p[ConjugateProductKind::Sub345] && sub123 == p[ConjugateProductKind::Sub367];
        if (!relations && budget.spend()) {
            ADD_FAILURE() << "full = sub123^2, sub123 = sub345 = sub367 fails at " << bicx::to_string(s);
        }
    }
    EXPECT_EQ(budget.failures(), 0);
}

TEST(Acceptance, Criterion12_Reflections)
{
    const auto claims = bicx::standard_factorizations();
    EXPECT_EQ(claims.size(), 9U);
    std::map<ConjTag, int> per_tag;
    for (const auto& claim : claims) {
        M composite = M::identity();
        for (const auto& step : claim.steps) {
            composite = composite * oracle_named(step);
            EXPECT_EQ(*bicx::named_reflection(step), oracle_named(step)) << step;
        }
        EXPECT_EQ(composite, oracle_matrix(claim.tag)) << claim.describe();
        EXPECT_EQ(bicx::as_matrix(claim.tag), oracle_matrix(claim.tag)) << claim.describe();
        ++per_tag[claim.tag];
    }
    EXPECT_EQ(per_tag[ConjTag::P6], 2);
    EXPECT_EQ(per_tag[ConjTag::P7], 2);
    EXPECT_TRUE(bicx::factorization_check(claims).ok());

    const V v{1, 2, 3, 4};
    EXPECT_EQ(bicx::to_string(bicx::reflect_hyperplane(bicx::plane_a4<Rational>(), v)), "(1, -3, -2, 4)");
    EXPECT_EQ(bicx::to_string(bicx::reflect_hyperplane(bicx::plane_a5<Rational>(), v)), "(1, 3, 2, 4)");
}

//---------------------------------------------------------------------------//
// One line per criterion after the run.
class CriterionLines : public testing::EmptyTestEventListener {
  public:
    void OnTestEnd(const testing::TestInfo& info) override
    {
        lines_.push_back(std::string(info.result()->Passed() ? "PASS  " : "FAIL  ") + info.name());
    }

    void OnTestProgramEnd(const testing::UnitTest& unit) override
    {
        std::printf("\nacceptance criteria (seed %llu):\n", static_cast<unsigned long long>(seed()));
        for (const auto& l : lines_) {
            std::printf("  %s\n", l.c_str());
        }
        std::printf("%d of %d criteria passed\n", unit.successful_test_count(), unit.test_to_run_count());
        std::fflush(stdout);
    }

  private:
    std::vector<std::string> lines_;
};

}  // namespace

int main(int argc, char** argv)
{
    testing::InitGoogleTest(&argc, argv);
    testing::UnitTest::GetInstance()->listeners().Append(new CriterionLines);
    return RUN_ALL_TESTS();
}
