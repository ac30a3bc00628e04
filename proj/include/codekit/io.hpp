#pragma once

// Text formats.
//
// Code-set file:
//     alphabet: ab
//     aa          # one word per line, `#` starts a comment
//     eps         # the empty word, where permitted
//     regex: b|ab*a   # instead of word lines, for a regular set
//
// Theta file:
//     kind: antimorphism
//     a->b
//     b->a        # unlisted letters are fixed
//
// Distribution file:
//     a = 1/3
//     b = 2/3     # or the single keyword `uniform`

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "codekit/automata.hpp"
#include "codekit/error.hpp"
#include "codekit/measure.hpp"
#include "codekit/regex.hpp"
#include "codekit/theta.hpp"
#include "codekit/words.hpp"

namespace codekit {

inline std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_file(const std::string& path, std::string_view text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text))
        throw IoError("cannot write '" + path + "'");
}

namespace detail {

inline std::string_view trim(std::string_view s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos)
        return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

/// Non-empty lines with comments stripped, paired with 1-based line numbers.
inline std::vector<std::pair<std::size_t, std::string>> content_lines(std::string_view text)
{
    std::vector<std::pair<std::size_t, std::string>> out;
    std::size_t lineno = 0;
    std::istringstream is{std::string(text)};
    std::string line;
    while (std::getline(is, line)) {
        ++lineno;
        std::string_view v(line);
        if (auto h = v.find('#'); h != std::string_view::npos)
            v = v.substr(0, h);
        v = trim(v);
        if (!v.empty())
            out.emplace_back(lineno, std::string(v));
    }
    return out;
}

/// Splits "key: value"; nullopt when the line has no such key.
inline std::optional<std::string> keyed(const std::string& line, std::string_view key)
{
    if (line.size() <= key.size() || line.compare(0, key.size(), key) != 0)
        return std::nullopt;
    std::string_view rest = trim(std::string_view(line).substr(key.size()));
    if (rest.empty() || rest.front() != ':')
        return std::nullopt;
    return std::string(trim(rest.substr(1)));
}

[[noreturn]] inline void parse_fail(std::string_view what, std::size_t lineno, const std::string& msg)
{
    throw ParseError(std::string(what) + " line " + std::to_string(lineno) + ": " + msg);
}

} // namespace detail

/// Parsed code-set file: a finite set or a regex over a declared alphabet.
struct CodeSet {
    Alphabet alphabet;
    std::optional<FiniteLanguage> words;
    std::optional<std::string> regex;

    bool is_finite_set() const noexcept { return words.has_value(); }
    Dfa language() const { return words ? from_words(*words) : compile(*regex, alphabet); }
};

inline CodeSet parse_code_set(std::string_view text)
{
    const auto lines = detail::content_lines(text);
    if (lines.empty())
        throw ParseError("code-set file is empty");
    auto letters = detail::keyed(lines.front().second, "alphabet");
    if (!letters)
        detail::parse_fail("code-set", lines.front().first, "expected 'alphabet: <letters>'");
    CodeSet cs;
    try {
        cs.alphabet = Alphabet(*letters);
    } catch (const PreconditionError& e) {
        detail::parse_fail("code-set", lines.front().first, e.what());
    }
    std::vector<Word> words;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& [lineno, line] = lines[i];
        if (auto r = detail::keyed(line, "regex")) {
            if (cs.regex || !words.empty())
                detail::parse_fail("code-set", lineno, "a regex line must be the only content line");
            try {
                (void)parse_regex(*r, cs.alphabet);
            } catch (const ParseError& e) {
                detail::parse_fail("code-set", lineno, e.what());
            }
            cs.regex = *r;
            continue;
        }
        if (cs.regex)
            detail::parse_fail("code-set", lineno, "words cannot follow a regex line");
        if (line.find_first_of(" \t") != std::string::npos)
            detail::parse_fail("code-set", lineno, "one word per line");
        if (line == "eps") {
            words.emplace_back();
            continue;
        }
        if (!cs.alphabet.is_word(line))
            detail::parse_fail("code-set", lineno, "'" + line + "' uses a letter outside {" + cs.alphabet.letters() + "}");
        words.push_back(line);
    }
    if (!cs.regex)
        cs.words = FiniteLanguage(cs.alphabet, std::move(words));
    return cs;
}

inline std::string write_code_set(const FiniteLanguage& x)
{
    std::string out = "alphabet: " + x.alphabet().letters() + "\n";
    for (const auto& w : x)
        out += (w.empty() ? std::string("eps") : w) + "\n";
    return out;
}

inline std::string write_regex_set(const Alphabet& a, std::string_view regex)
{
    return "alphabet: " + a.letters() + "\nregex: " + std::string(regex) + "\n";
}

inline ThetaMap parse_theta(std::string_view text, const Alphabet& alphabet)
{
    std::optional<ThetaKind> kind;
    std::vector<std::pair<char, char>> pairs;
    for (const auto& [lineno, line] : detail::content_lines(text)) {
        if (auto k = detail::keyed(line, "kind")) {
            if (*k == "morphism")
                kind = ThetaKind::morphism;
            else if (*k == "antimorphism")
                kind = ThetaKind::antimorphism;
            else
                detail::parse_fail("theta", lineno, "kind must be 'morphism' or 'antimorphism'");
            continue;
        }
        const auto arrow = line.find("->");
        if (arrow == std::string::npos)
            detail::parse_fail("theta", lineno, "expected 'x->y'");
        const auto from = detail::trim(std::string_view(line).substr(0, arrow));
        const auto to = detail::trim(std::string_view(line).substr(arrow + 2));
        if (from.size() != 1 || to.size() != 1)
            detail::parse_fail("theta", lineno, "expected single letters around '->'");
        if (!alphabet.contains(from[0]) || !alphabet.contains(to[0]))
            detail::parse_fail("theta", lineno, "letter outside {" + alphabet.letters() + "}");
        pairs.emplace_back(from[0], to[0]);
    }
    if (!kind)
        throw ParseError("theta file lacks a 'kind:' line");
    try {
        return ThetaMap::from_pairs(alphabet, pairs, *kind);
    } catch (const PreconditionError& e) {
        throw ParseError(std::string("theta: ") + e.what());
    }
}

inline std::string write_theta(const ThetaMap& t)
{
    std::string out = "kind: " + to_string(t.kind()) + "\n";
    const auto& a = t.alphabet();
    for (std::size_t i = 0; i < a.size(); ++i)
        out += std::string(1, a.letter(i)) + "->" + std::string(1, a.letter(t.permutation()[i])) + "\n";
    return out;
}

namespace detail {
inline Rational parse_rational(std::string_view s)
{
    auto parse_int = [](std::string_view t) -> long long {
        if (t.empty() || t.find_first_not_of("0123456789") != std::string_view::npos)
            throw ParseError("'" + std::string(t) + "' is not a non-negative integer");
        return std::stoll(std::string(t));
    };
    const auto slash = s.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_int(trim(s)));
    const long long den = parse_int(trim(s.substr(slash + 1)));
    if (den == 0)
        throw ParseError("zero denominator");
    return Rational(parse_int(trim(s.substr(0, slash))), den);
}
} // namespace detail

inline BernoulliDist parse_distribution(std::string_view text, const Alphabet& alphabet)
{
    const auto lines = detail::content_lines(text);
    if (lines.size() == 1 && lines.front().second == "uniform")
        return BernoulliDist::uniform(alphabet);
    std::vector<std::optional<Rational>> w(alphabet.size());
    for (const auto& [lineno, line] : lines) {
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            detail::parse_fail("distribution", lineno, "expected 'x = p/q' or 'uniform'");
        const auto letter = detail::trim(std::string_view(line).substr(0, eq));
        if (letter.size() != 1 || !alphabet.contains(letter[0]))
            detail::parse_fail("distribution", lineno, "expected a single alphabet letter before '='");
        auto& slot = w[alphabet.index(letter[0])];
        if (slot)
            detail::parse_fail("distribution", lineno, "letter given twice");
        try {
            slot = detail::parse_rational(std::string_view(line).substr(eq + 1));
        } catch (const ParseError& e) {
            detail::parse_fail("distribution", lineno, e.what());
        }
    }
    std::vector<Rational> weights;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (!w[i])
            throw ParseError(std::string("distribution lacks a weight for '") + alphabet.letter(i) + "'");
        weights.push_back(*w[i]);
    }
    try {
        return BernoulliDist(alphabet, std::move(weights));
    } catch (const PreconditionError& e) {
        throw ParseError(std::string("distribution: ") + e.what());
    }
}

} // namespace codekit
