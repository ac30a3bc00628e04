#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace codekit;
using testutil::ab;
using testutil::abc;
using testutil::set;

TEST(Theta, ApplyWords)
{
    EXPECT_EQ(testutil::swap_anti().apply("ab"), "ab");
    EXPECT_EQ(testutil::swap_morph().apply("aab"), "bba");
    EXPECT_EQ(testutil::mirror().apply("aab"), "baa");
    const Alphabet abcd("abcd");
    const auto t = ThetaMap::from_pairs(abcd, {{'c', 'd'}, {'d', 'c'}}, ThetaKind::antimorphism);
    EXPECT_EQ(t.apply("abcd"), "cdba");
    EXPECT_EQ(t.apply("cd"), "cd");
    EXPECT_EQ(ThetaMap::identity(ab).apply("abba"), "abba");
}

TEST(Theta, RejectsNonBijections)
{
    EXPECT_THROW(ThetaMap(ab, {0, 0}, ThetaKind::morphism), PreconditionError);
    EXPECT_THROW(ThetaMap(ab, {0}, ThetaKind::morphism), PreconditionError);
    EXPECT_THROW(ThetaMap::swap(abc, ThetaKind::morphism), PreconditionError);
}

TEST(Theta, Orders)
{
    EXPECT_EQ(testutil::swap_morph().order(), 2u);
    EXPECT_EQ(testutil::swap_anti().order(), 2u);
    EXPECT_EQ(testutil::mirror().order(), 2u);
    EXPECT_EQ(ThetaMap::identity(ab).order(), 1u);
    const ThetaMap cyc(abc, {1, 2, 0}, ThetaKind::antimorphism);
    EXPECT_EQ(cyc.permutation_order(), 3u);
    EXPECT_EQ(cyc.order(), 6u);
    // Check the order directly on every word of length 2.
    for (const auto& w : oracle::all_words("abc", 2)) {
        Word cur = w;
        for (int i = 0; i < 6; ++i)
            cur = cyc.apply(cur);
        EXPECT_EQ(cur, w);
    }
    EXPECT_NE(cyc.power(3).apply("ab"), "ab");
    EXPECT_TRUE(cyc.power(6).is_identity());
    EXPECT_EQ(cyc.inverse().apply(cyc.apply("abcab")), "abcab");
    EXPECT_EQ(cyc.power(-1).apply(cyc.apply("ab")), "ab");
}

TEST(Theta, Orbits)
{
    EXPECT_EQ(orbit(testutil::swap_anti(), "aaaaaaabbaaababbbbbbb"),
              set(ab, {"aaaaaaabbaaababbbbbbb", "aaaaaaababbbaabbbbbbb"}));
    EXPECT_EQ(orbit(ThetaMap::identity(ab), "abb"), set(ab, {"abb"}));
    const ThetaMap cyc(abc, {1, 2, 0}, ThetaKind::antimorphism);
    EXPECT_EQ(orbit(cyc, "ab"), set(abc, {"ab", "cb", "ca", "ba", "bc", "ac"}));
    EXPECT_EQ(orbit(cyc, "aba"), set(abc, {"aba", "bcb", "cac"}));
    EXPECT_EQ(orbit(testutil::mirror(), "bbabaa"), set(ab, {"bbabaa", "aababb"}));
}

TEST(Theta, ApplyLanguages)
{
    const Dfa z = compile("b|ab*a", ab);
    EXPECT_EQ(testutil::swap_anti().apply(z), compile("a|ba*b", ab));
    EXPECT_EQ(testutil::mirror().apply(z), z);
    EXPECT_EQ(ThetaMap::identity(ab).apply(z), z);
    EXPECT_EQ(testutil::mirror().apply(from_words(set(ab, {"ab"}))), from_words(set(ab, {"ba"})));
    EXPECT_EQ(orbit_union(testutil::mirror(), set(ab, {"a", "ba"})), set(ab, {"a", "ab", "ba"}));
}
