#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace codekit;
using testutil::ab;
using testutil::set;

TEST(Alphabet, RejectsDuplicatesAndUnknownLetters)
{
    EXPECT_THROW(Alphabet("aba"), PreconditionError);
    EXPECT_THROW(Alphabet(""), PreconditionError);
    EXPECT_THROW(ab.index('c'), PreconditionError);
    EXPECT_TRUE(ab.is_word("abba"));
    EXPECT_FALSE(ab.is_word("abc"));
}

TEST(FiniteLanguage, SortsShortlexAndDeduplicates)
{
    FiniteLanguage x(ab, {"ba", "b", "ab", "a", "ba"});
    EXPECT_EQ(x.words(), (std::vector<Word>{"a", "b", "ab", "ba"}));
    EXPECT_TRUE(x.contains("ab"));
    EXPECT_FALSE(x.contains("aa"));
    EXPECT_EQ(x.max_length(), 2u);
    EXPECT_THROW(FiniteLanguage(ab, {"abc"}), PreconditionError);
}

TEST(Overlaps, Examples)
{
    EXPECT_TRUE(overlaps("ab", "ba"));
    EXPECT_FALSE(overlaps("aa", "bb"));
    const Word z = expand("a^7b^2a^3bab^7");
    EXPECT_FALSE(overlaps(z, z));
    EXPECT_TRUE(overlapping_free(z));
    EXPECT_FALSE(overlapping_free("aba"));
    EXPECT_THROW(overlaps("", "a"), PreconditionError);
}

TEST(AffixSets, SmallSets)
{
    auto s = affix_sets(set(ab, {"ab"}));
    EXPECT_EQ(s.prefixes, set(ab, {"", "a", "ab"}));
    EXPECT_EQ(s.suffixes, set(ab, {"", "b", "ab"}));
    EXPECT_EQ(s.factors, set(ab, {"", "a", "b", "ab"}));

    auto e = affix_sets(set(ab, {""}));
    EXPECT_EQ(e.prefixes, set(ab, {""}));
    EXPECT_EQ(e.factors, set(ab, {""}));

    EXPECT_EQ(affix_sets(set(ab, {"aa", "b"})).factors, set(ab, {"", "a", "b", "aa"}));
}

TEST(Pretty, RoundTripsWithExpand)
{
    EXPECT_EQ(pretty("aaaaaaabbaaababbbbbbb"), "a^7b^2a^3bab^7");
    EXPECT_EQ(pretty(""), "eps");
    EXPECT_EQ(expand("b^2a^3ba"), "bbaaaba");
    EXPECT_EQ(expand("eps"), "");
    EXPECT_EQ(expand("abba"), "abba");
    EXPECT_THROW(expand("a^"), ParseError);
    for (const char* w : {"a", "abba", "aaabbbbbbbbbbbba"})
        EXPECT_EQ(expand(pretty(w)), w);
}
