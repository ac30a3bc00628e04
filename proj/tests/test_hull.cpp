#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace codekit;
using testutil::ab;
using testutil::set;

TEST(SubmonoidBase, Examples)
{
    EXPECT_EQ(submonoid_base(Submonoid(set(ab, {"a", "aa"}))), set(ab, {"a"}));
    EXPECT_EQ(submonoid_base(Submonoid(set(ab, {"a", "b", "ab", "ba"}))), set(ab, {"a", "b"}));
    EXPECT_EQ(submonoid_base(Submonoid(set(ab, {"aa", "b"}))), set(ab, {"aa", "b"}));
    EXPECT_THROW(Submonoid(set(ab, {"", "a"})), PreconditionError);
}

TEST(StabilityWitness, Examples)
{
    EXPECT_EQ(stability_witness(Submonoid(set(ab, {"a", "ab", "ba"}))), Word("b"));
    EXPECT_EQ(stability_witness(Submonoid(set(ab, {"a", "b"}))), std::nullopt);
    EXPECT_EQ(stability_witness(Submonoid(set(ab, {"aa", "b"}))), std::nullopt);
}

TEST(FreeHull, Examples)
{
    const auto r = free_hull(set(ab, {"a", "ab", "ba"}));
    EXPECT_EQ(r.base, set(ab, {"a", "b"}));
    EXPECT_FALSE(r.input_is_code);
    EXPECT_TRUE(r.defect_ok);

    EXPECT_EQ(free_hull(set(ab, {"a", "ba"})).base, set(ab, {"a", "ba"}));
    const auto aa = free_hull(set(ab, {"aa", "aaa"}));
    EXPECT_EQ(aa.base, set(ab, {"a"}));
    EXPECT_TRUE(aa.defect_ok);
    EXPECT_THROW(free_hull(set(ab, {"", "a"})), PreconditionError);
}

TEST(ThetaFreeHull, Examples)
{
    const auto r = theta_free_hull(set(ab, {"a", "ab", "ba"}), testutil::mirror());
    EXPECT_EQ(r.base, set(ab, {"a", "b"}));
    EXPECT_TRUE(r.theta_invariant);
    EXPECT_EQ(r.base.size(), 2u);

    const auto s = theta_free_hull(set(ab, {"ab", "ba"}), testutil::swap_morph());
    EXPECT_EQ(s.base, set(ab, {"ab", "ba"}));
    EXPECT_TRUE(s.input_is_code);

    const auto u = orbit_union(testutil::mirror(), set(ab, {"a", "ba"}));
    const auto h = theta_free_hull(u, testutil::mirror());
    EXPECT_EQ(h.base, set(ab, {"a", "b"}));
    EXPECT_LE(h.base.size() + 1, u.size());

    EXPECT_THROW(theta_free_hull(set(ab, {"a", "ba"}), testutil::mirror()), PreconditionError);
}

TEST(ThetaFreeHull, SwapMorphismNonCode)
{
    // ab.ab = abab, so the hull collapses to {ab, ba}.
    const auto x = set(ab, {"ab", "abab", "ba", "baba"});
    const auto r = theta_free_hull(x, testutil::swap_morph());
    EXPECT_TRUE(r.theta_invariant);
    EXPECT_TRUE(sardinas_patterson_finite(r.base).is_code);
    for (const auto& w : x)
        EXPECT_TRUE(star(from_words(r.base)).accepts(w));
    EXPECT_EQ(r.base, set(ab, {"ab", "ba"}));
}
