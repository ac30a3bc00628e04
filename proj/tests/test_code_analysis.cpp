#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace codekit;
using testutil::ab;
using testutil::dfa;
using testutil::set;

TEST(SardinasPatterson, FiniteExamples)
{
    auto v = sardinas_patterson_finite(set(ab, {"a", "ab", "ba"}));
    ASSERT_FALSE(v.is_code);
    ASSERT_TRUE(v.witness);
    EXPECT_EQ(v.witness->left, (Factorization{"ab", "a"}));
    EXPECT_EQ(v.witness->right, (Factorization{"a", "ba"}));
    EXPECT_TRUE(sardinas_patterson_finite(testutil::e4()).is_code);
    EXPECT_TRUE(sardinas_patterson_finite(set(ab, {"a", "b"})).is_code);
    EXPECT_THROW(sardinas_patterson_finite(set(ab, {"", "a"})), PreconditionError);
}

TEST(SardinasPatterson, RegularExamples)
{
    EXPECT_TRUE(is_code_regular(compile("b|ab*a", ab)).is_code);
    EXPECT_FALSE(is_code_regular(compile("a|ab|ba", ab)).is_code);
    EXPECT_TRUE(is_code_regular(compile("aa|b", ab)).is_code);
    EXPECT_TRUE(is_code_regular(from_words(testutil::e4())).is_code);
    EXPECT_FALSE(is_code_regular(compile("a|aa", ab)).is_code);
    EXPECT_FALSE(is_code_regular(compile("(ab)*ab|ab", ab)).is_code);
    EXPECT_TRUE(is_code_regular(compile("a*b", ab)).is_code);
    EXPECT_THROW(is_code_regular(compile("_|a", ab)), PreconditionError);
}

TEST(SardinasPatterson, RegularWitness)
{
    auto v = is_code_regular(compile("a|ab|ba", ab), {true});
    ASSERT_TRUE(v.witness);
    EXPECT_TRUE(v.witness->valid());
    EXPECT_EQ(v.witness->word(), "aba");
    EXPECT_EQ(v.witness->left, (Factorization{"ab", "a"}));
    EXPECT_EQ(v.witness->right, (Factorization{"a", "ba"}));
    // Infinite non-code: (ab)^n ab = ab (ab)^n.
    auto w = code_witness_regular(compile("(ab)+|abab", ab));
    ASSERT_TRUE(w);
    EXPECT_TRUE(w->valid());
    EXPECT_EQ(code_witness_regular(compile("b|ab*a", ab)), std::nullopt);
}

TEST(AffixClass, Examples)
{
    const auto e00 = generate({Family::e00, 4});
    EXPECT_TRUE(affix_class(*e00.words).prefix);
    EXPECT_FALSE(affix_class(*e00.words).suffix);
    EXPECT_TRUE(affix_class(set(ab, {"aaa", "ab", "aaba", "aabb", "baa", "baba", "babb", "bba", "bbb"})).bifix());
    EXPECT_TRUE(affix_class(set(ab, {"aa", "b"})).bifix());
    EXPECT_TRUE(affix_class(compile("b|ab*a", ab)).bifix());
    EXPECT_FALSE(affix_class(compile("a|ab", ab)).prefix);
    EXPECT_TRUE(affix_class(compile("a|ab", ab)).suffix);
    // Finite and regular forms agree.
    for (const auto& x : {set(ab, {"a", "ab"}), testutil::e4(), set(ab, {"ab", "ba", "aab"})}) {
        const auto f = affix_class(x), r = affix_class(from_words(x));
        EXPECT_EQ(f.prefix, r.prefix);
        EXPECT_EQ(f.suffix, r.suffix);
    }
}

TEST(Completeness, Examples)
{
    EXPECT_TRUE(is_complete(dfa(ab, {"aa", "ab", "ba", "bb"})).holds);
    const auto e4 = is_complete(from_words(testutil::e4()));
    EXPECT_FALSE(e4.holds);
    ASSERT_TRUE(e4.witness);
    EXPECT_FALSE(oracle::factor_of_star(testutil::to_set(testutil::e4()), *e4.witness));
    EXPECT_TRUE(is_complete(compile("b|ab*a", ab)).holds);
    const auto aab = is_complete(dfa(ab, {"aa", "b"}));
    EXPECT_FALSE(aab.holds);
    EXPECT_EQ(aab.witness, Word("bab"));
}

TEST(Thinness, Examples)
{
    EXPECT_TRUE(is_thin(testutil::dfa(ab, {"a", "ab", "ba"})).holds);
    EXPECT_FALSE(is_thin(universal_language(ab)).holds);
    const auto z = is_thin(compile("b|ab*a", ab));
    EXPECT_TRUE(z.holds);
    // abab is a non-factor; the reported witness is the shortlex-least one.
    EXPECT_FALSE(factor_closure(compile("b|ab*a", ab)).accepts("abab"));
    EXPECT_EQ(z.witness, Word("aaa"));
}

TEST(ThetaProperties, Invariance)
{
    const Alphabet abcd("abcd");
    const auto t = ThetaMap::from_pairs(abcd, {{'c', 'd'}, {'d', 'c'}}, ThetaKind::antimorphism);
    EXPECT_TRUE(is_theta_invariant(set(abcd, {"cd"}), t));
    EXPECT_TRUE(is_theta_invariant(set(abcd, {"abcd", "cdba"}), t));
    EXPECT_TRUE(is_theta_invariant(testutil::e4(), testutil::swap_anti()));
    EXPECT_TRUE(is_theta_invariant(from_words(testutil::e4()), testutil::swap_anti()));
    EXPECT_FALSE(is_theta_invariant(set(ab, {"ab"}), testutil::mirror()));
    EXPECT_TRUE(is_theta_invariant(*generate({Family::e00, 4}).words, testutil::swap_morph()));
    EXPECT_FALSE(is_theta_invariant(set(ab, {"a", "ba"}), testutil::swap_morph()));
    EXPECT_TRUE(is_theta_invariant(set(ab, {"aa", "ab", "ba", "bb"}), testutil::swap_morph()));
    EXPECT_TRUE(is_theta_invariant(compile("b|ab*a", ab), testutil::mirror()));
}

TEST(ThetaProperties, ThetaCode)
{
    const auto v = is_theta_code(set(ab, {"a", "ba"}), testutil::mirror());
    EXPECT_FALSE(v.is_code);
    EXPECT_TRUE(is_theta_code(testutil::e4(), testutil::swap_anti()).is_code);
    EXPECT_TRUE(is_theta_code(set(ab, {"a"}), testutil::swap_morph()).is_code);
    EXPECT_FALSE(is_theta_code(dfa(ab, {"a", "ba"}), testutil::mirror()).is_code);
}

TEST(ThetaProperties, MaximalThin)
{
    const auto e2 = generate({Family::e2, 1});
    EXPECT_TRUE(is_maximal_thin(e2.language, e2.theta));
    EXPECT_FALSE(is_maximal_thin(dfa(ab, {"aa", "b"}), testutil::mirror()));
    EXPECT_TRUE(is_maximal_thin(dfa(ab, {"a", "b"}), testutil::mirror()));
    EXPECT_THROW(is_maximal_thin(dfa(ab, {"a", "ab", "ba"}), testutil::mirror()), PreconditionError);
}

TEST(PrefixTrees, TreeInvarianceMatchesSetInvariance)
{
    const auto e00 = generate({Family::e00, 4});
    EXPECT_TRUE(tree_theta_invariant(*e00.words, testutil::swap_morph()));
    EXPECT_FALSE(tree_theta_invariant(set(ab, {"a", "ba", "bb"}), testutil::swap_morph()));
    EXPECT_THROW(tree_theta_invariant(set(ab, {"a", "ab"}), testutil::swap_morph()), PreconditionError);
    EXPECT_THROW(tree_theta_invariant(*e00.words, testutil::swap_anti()), PreconditionError);
    const PrefixTree tree(set(ab, {"a", "ba", "bb"}));
    EXPECT_EQ(tree.leaves(), (std::vector<Word>{"a", "ba", "bb"}));
    EXPECT_TRUE(tree.has_edge("b", 'a'));
    EXPECT_FALSE(tree.has_edge("a", 'a'));
}

TEST(UniformDecomposition, Layers)
{
    const auto layers = uniform_decomposition(set(ab, {"a", "ab", "b"}), ThetaMap::identity(ab));
    ASSERT_EQ(layers.size(), 2u);
    EXPECT_EQ(layers[0].words, set(ab, {"a", "b"}));
    EXPECT_EQ(layers[1].words, set(ab, {"ab"}));
    EXPECT_EQ(uniform_decomposition(set(ab, {"aa"}), ThetaMap::identity(ab)).size(), 1u);

    const auto e4 = uniform_decomposition(testutil::e4(), testutil::swap_anti());
    std::vector<std::size_t> lengths;
    for (const auto& l : e4) {
        lengths.push_back(l.length);
        EXPECT_TRUE(l.theta_invariant);
    }
    EXPECT_EQ(lengths, (std::vector<std::size_t>{2, 4, 5, 6}));
}
