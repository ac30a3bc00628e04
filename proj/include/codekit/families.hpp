#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "codekit/automata.hpp"
#include "codekit/error.hpp"
#include "codekit/regex.hpp"
#include "codekit/theta.hpp"
#include "codekit/words.hpp"

namespace codekit {

enum class Family { uniform, e00, e2, e21, e22a, e22b, c72, e3, e33x, e33z };

struct FamilySpec {
    Family family;
    int param = 0; // n for uniform/e00, k for e2/e21/e22a/e22b, unused otherwise
};

/// Properties every member of a family is known to have.
struct ExpectedProperties {
    bool code = true;
    bool prefix = false;
    bool suffix = false;
    bool complete = false;
    bool theta_invariant = true;

    bool bifix() const noexcept { return prefix && suffix; }
};

struct GeneratedFamily {
    std::string name;
    Alphabet alphabet;
    std::optional<FiniteLanguage> words; // finite families
    std::optional<std::string> regex;    // e33z only
    Dfa language;
    ThetaMap theta;                      // the family's designated theta
    ExpectedProperties expected;
};

inline std::string to_string(Family f)
{
    switch (f) {
    case Family::uniform: return "uniform";
    case Family::e00: return "e00";
    case Family::e2: return "e2";
    case Family::e21: return "e21";
    case Family::e22a: return "e22a";
    case Family::e22b: return "e22b";
    case Family::c72: return "c72";
    case Family::e3: return "e3";
    case Family::e33x: return "e33x";
    case Family::e33z: return "e33z";
    }
    return "?";
}

inline Family parse_family(std::string_view name)
{
    for (auto f : {Family::uniform, Family::e00, Family::e2, Family::e21, Family::e22a, Family::e22b, Family::c72,
                   Family::e3, Family::e33x, Family::e33z})
        if (to_string(f) == name)
            return f;
    throw PreconditionError("unknown family '" + std::string(name) + "'");
}

/// Whether the family takes --n (true), -k (false) or nothing (nullopt).
inline std::optional<bool> family_uses_n(Family f)
{
    switch (f) {
    case Family::uniform:
    case Family::e00: return true;
    case Family::e2:
    case Family::e21:
    case Family::e22a:
    case Family::e22b: return false;
    default: return std::nullopt;
    }
}

namespace detail {

/// All words of length n over the alphabet.
inline std::vector<Word> all_words(const Alphabet& a, std::size_t n)
{
    std::vector<Word> out{Word{}};
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Word> next;
        for (const auto& w : out)
            for (char c : a.letters())
                next.push_back(w + c);
        out = std::move(next);
    }
    return out;
}

/// (A^n - (A W | W A)) | W | A W A for a set W of words of length n - 1.
inline std::vector<Word> internal_transformation(const Alphabet& a, const FiniteLanguage& w, std::size_t n)
{
    std::vector<Word> out;
    for (const auto& u : all_words(a, n)) {
        const bool aw = w.contains(u.substr(1));
        const bool wa = w.contains(u.substr(0, n - 1));
        if (!aw && !wa)
            out.push_back(u);
    }
    for (const auto& v : w) {
        out.push_back(v);
        for (char c : a.letters())
            for (char d : a.letters())
                out.push_back(c + v + d);
    }
    return out;
}

inline void require_param(bool ok, const std::string& what)
{
    if (!ok)
        throw PreconditionError(what);
}

} // namespace detail

inline GeneratedFamily generate(const FamilySpec& spec)
{
    const Alphabet ab("ab");
    const Alphabet abc("abc");
    const int p = spec.param;
    GeneratedFamily g;
    g.name = to_string(spec.family);
    g.alphabet = ab;
    std::vector<Word> words;
    ExpectedProperties ex;

    switch (spec.family) {
    case Family::uniform:
        detail::require_param(p >= 1, "uniform needs n >= 1");
        words = detail::all_words(ab, static_cast<std::size_t>(p));
        g.theta = ThetaMap::swap(ab, ThetaKind::antimorphism);
        ex = {true, true, true, true, true};
        break;
    case Family::e00:
        detail::require_param(p >= 3, "e00 needs n >= 3");
        for (int i = 1; i <= p - 1; ++i) {
            words.push_back(repeat('a', i) + "b");
            words.push_back(repeat('b', i) + "a");
        }
        words.push_back(repeat('a', p));
        words.push_back(repeat('b', p));
        g.theta = ThetaMap::swap(ab, ThetaKind::morphism);
        ex = {true, true, false, true, true};
        break;
    case Family::e2: {
        detail::require_param(p >= 1, "e2 needs k >= 1");
        const auto k = static_cast<std::size_t>(p);
        FiniteLanguage w(ab, {repeat('a', k) + repeat('b', k)});
        words = detail::internal_transformation(ab, w, 2 * k + 1);
        g.theta = ThetaMap::swap(ab, ThetaKind::antimorphism);
        ex = {true, true, true, true, true};
        break;
    }
    case Family::e21: {
        detail::require_param(p >= 1, "e21 needs k >= 1");
        const auto k = static_cast<std::size_t>(p);
        FiniteLanguage w(ab, {repeat('a', k) + repeat('b', k) + repeat('a', k)});
        words = detail::internal_transformation(ab, w, 3 * k + 1);
        g.theta = ThetaMap::mirror(ab);
        ex = {true, true, true, true, true};
        break;
    }
    case Family::e22a:
    case Family::e22b: {
        detail::require_param(p >= 1, g.name + " needs k >= 1");
        const auto k = static_cast<std::size_t>(p);
        g.alphabet = abc;
        g.theta = ThetaMap(abc, {1, 2, 0}, ThetaKind::antimorphism);
        const bool a = spec.family == Family::e22a;
        const Word seed = a ? repeat('a', k) + repeat('b', k) : repeat('a', k) + repeat('b', k) + repeat('a', k);
        const FiniteLanguage w = orbit(g.theta, seed);
        words = detail::internal_transformation(abc, w, a ? 2 * k + 1 : 3 * k + 1);
        ex = {true, true, true, true, true};
        break;
    }
    case Family::c72:
        words = {"aaa", "ab", "aaba", "aabb", "baa", "baba", "babb", "bba", "bbb"};
        g.theta = ThetaMap::swap(ab, ThetaKind::antimorphism);
        ex = {true, true, true, true, true};
        break;
    case Family::e3:
        words = {"aa", "ab", "aab", "abb", "bb"};
        g.theta = ThetaMap::swap(ab, ThetaKind::antimorphism);
        ex = {true, false, false, true, true};
        break;
    case Family::e33x:
        words = {"aa", "b"};
        g.theta = ThetaMap::mirror(ab);
        ex = {true, true, true, false, true};
        break;
    case Family::e33z:
        g.regex = "b|ab*a";
        g.theta = ThetaMap::mirror(ab);
        g.language = compile(*g.regex, ab);
        g.expected = {true, true, true, true, true};
        return g;
    }
    g.words = FiniteLanguage(g.alphabet, std::move(words));
    g.language = from_words(*g.words);
    g.expected = ex;
    return g;
}

} // namespace codekit
