#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace codekit;
using testutil::ab;
using testutil::dfa;
using testutil::set;

namespace {
Dfa re(const char* text) { return compile(text, ab); }
} // namespace

TEST(Regex, CompilesExamples)
{
    const Dfa z = re("b|ab*a");
    for (const char* w : {"b", "aa", "aba", "abba", "abbbbba"})
        EXPECT_TRUE(z.accepts(w)) << w;
    for (const char* w : {"", "a", "ab", "bb", "aab"})
        EXPECT_FALSE(z.accepts(w)) << w;
    EXPECT_TRUE(is_empty(re("~")));
    EXPECT_TRUE(re("_").accepts(""));
    EXPECT_EQ(re("a|ab|ba"), dfa(ab, {"a", "ab", "ba"}));
    EXPECT_EQ(re("(a|b)+"), complement(re("_")));
    EXPECT_EQ(plus(universal_language(ab)), universal_language(ab));
    EXPECT_THROW(parse_regex("a|(b", ab), ParseError);
    EXPECT_THROW(parse_regex("ac", ab), ParseError);
}

TEST(Regex, ToStringReparses)
{
    for (const char* text : {"b|ab*a", "(a|b)*abb", "a+b|_", "~|a", "(ab)+(ba)*"}) {
        const Regex r = parse_regex(text, ab);
        EXPECT_EQ(compile(to_string(r), ab), compile(r, ab)) << text;
    }
}

TEST(Automata, FiniteLanguageHasThreeWords)
{
    EXPECT_EQ(finite_words(dfa(ab, {"a", "ab", "ba"})), set(ab, {"a", "ab", "ba"}));
}

TEST(Automata, BooleanOperations)
{
    const Dfa z = from_words(set(ab, {"aaaaaaabbaaababbbbbbb", "aaaaaaababbbaabbbbbbb"}));
    const Dfa all = universal_language(ab);
    const Dfa w = intersect(concat(z, all), concat(all, z));
    EXPECT_TRUE(w.accepts("aaaaaaabbaaababbbbbbb"));

    const Dfa l = re("b|ab*a");
    EXPECT_TRUE(is_empty(subtract(l, l)));
    EXPECT_EQ(concat(dfa(ab, {"a"}), dfa(ab, {"b"})), dfa(ab, {"ab"}));
    EXPECT_EQ(unite(dfa(ab, {"a"}), dfa(ab, {"b"})), dfa(ab, {"a", "b"}));
    EXPECT_EQ(complement(complement(l)), l);
    EXPECT_EQ(combine(CombineOp::intersection, l, re("a*")), dfa(ab, {"aa"}));
}

TEST(Automata, ClosuresAndQuotients)
{
    EXPECT_EQ(finite_words(factor_closure(dfa(ab, {"aab"}))), set(ab, {"", "a", "b", "aa", "ab", "aab"}));
    EXPECT_EQ(finite_words(prefix_closure(dfa(ab, {"aab"}))), set(ab, {"", "a", "aa", "aab"}));
    EXPECT_EQ(finite_words(suffix_closure(dfa(ab, {"aab"}))), set(ab, {"", "b", "ab", "aab"}));

    const Dfa s = star(dfa(ab, {"aa", "b"}));
    EXPECT_TRUE(s.accepts("aabaa"));
    EXPECT_FALSE(s.accepts("aba"));
    EXPECT_TRUE(s.accepts(""));

    const Dfa l = dfa(ab, {"a", "ab", "ba"});
    EXPECT_EQ(finite_words(left_quotient(l, dfa(ab, {"a"}))), set(ab, {"", "b"}));
    EXPECT_EQ(finite_words(right_quotient(l, dfa(ab, {"a"}))), set(ab, {"", "b"}));
    EXPECT_EQ(finite_words(reverse(dfa(ab, {"ab", "aab"}))), set(ab, {"ba", "baa"}));
}

TEST(Automata, Decisions)
{
    const Dfa x = dfa(ab, {"aa", "b"});
    const Dfa f = factor_closure(star(x));
    EXPECT_FALSE(is_universal(f));
    EXPECT_FALSE(member(star(x), "aba"));
    EXPECT_EQ(shortest_word(complement(f)), Word("bab"));
    EXPECT_EQ(shortest_word(empty_language(ab)), std::nullopt);
    EXPECT_EQ(shortest_word(universal_language(ab)), Word(""));
    EXPECT_TRUE(included(x, star(x)));
    EXPECT_FALSE(included(star(x), x));
    EXPECT_TRUE(is_finite(x));
    EXPECT_FALSE(is_finite(star(x)));
    EXPECT_TRUE(equal(x, minimize(x)));
}

TEST(Automata, MinimizationIsCanonical)
{
    EXPECT_EQ(trim_size(universal_language(ab)), 1u);
    const Dfa z = re("b|ab*a");
    EXPECT_EQ(z.num_states(), 4u);
    EXPECT_EQ(minimize(minimize(z)), minimize(z));
    // Same language from two different constructions.
    EXPECT_EQ(re("(a|b)*b(a|b)*"), complement(re("a*")));
}

TEST(Automata, DumpRoundTrip)
{
    const Dfa z = re("b|ab*a");
    EXPECT_EQ(parse_dump(dump(z)), z);
    EXPECT_THROW(parse_dump("alphabet ab\nstate 0\n"), ParseError);
}

TEST(Automata, EnumerationHelpers)
{
    const Dfa z = re("b|ab*a");
    EXPECT_EQ(enumerate(z, 4), (std::vector<Word>{"b", "aa", "aba", "abba"}));
    EXPECT_EQ(first_words(z, 2, 10), (std::vector<Word>{"b", "aa"}));
    EXPECT_EQ(first_words(empty_language(ab), 3, 10), std::vector<Word>{});
}

TEST(Automata, StateCapGuardsDeterminization)
{
    const std::size_t old = state_cap();
    set_state_cap(3);
    EXPECT_THROW(re("(a|b)*a(a|b)(a|b)(a|b)"), ResourceError);
    set_state_cap(old);
    EXPECT_NO_THROW(re("(a|b)*a(a|b)(a|b)(a|b)"));
}

TEST(Automata, AlphabetMismatchIsRejected)
{
    EXPECT_THROW(unite(dfa(ab, {"a"}), from_words(set(testutil::abc, {"c"}))), PreconditionError);
}
