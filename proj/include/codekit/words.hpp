#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <initializer_list>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "codekit/error.hpp"

namespace codekit {

/// Words are plain strings whose characters are letters of some Alphabet.
/// The empty string is the empty word.
using Word = std::string;

/// Ordered finite set of single-character letters. Letter order defines the
/// lexicographic component of the canonical (shortlex) word order.
class Alphabet {
public:
    static constexpr std::size_t max_size = 64;

    Alphabet() = default;

    explicit Alphabet(std::string_view letters) : letters_(letters)
    {
        index_.fill(-1);
        if (letters_.empty())
            throw PreconditionError("alphabet must be nonempty");
        if (letters_.size() > max_size)
            throw PreconditionError("alphabet exceeds " + std::to_string(max_size) + " letters");
        for (std::size_t i = 0; i < letters_.size(); ++i) {
            const auto c = static_cast<unsigned char>(letters_[i]);
            if (letters_[i] == ' ' || letters_[i] == '\t' || letters_[i] == '\n')
                throw PreconditionError("whitespace is not a letter");
            if (index_[c] != -1)
                throw PreconditionError(std::string("duplicate letter '") + letters_[i] + "'");
            index_[c] = static_cast<int>(i);
        }
    }

    std::size_t size() const noexcept { return letters_.size(); }
    const std::string& letters() const noexcept { return letters_; }
    char letter(std::size_t i) const { return letters_.at(i); }

    bool contains(char c) const noexcept { return !letters_.empty() && index_[static_cast<unsigned char>(c)] >= 0; }

    /// Position of `c` in the alphabet; throws on a foreign letter.
    std::size_t index(char c) const
    {
        if (!contains(c))
            throw PreconditionError(std::string("letter '") + c + "' not in alphabet {" + letters_ + "}");
        return static_cast<std::size_t>(index_[static_cast<unsigned char>(c)]);
    }

    bool is_word(std::string_view w) const noexcept
    {
        return std::all_of(w.begin(), w.end(), [this](char c) { return contains(c); });
    }

    void check_word(std::string_view w) const
    {
        for (char c : w)
            (void)index(c);
    }

    friend bool operator==(const Alphabet& a, const Alphabet& b) noexcept { return a.letters_ == b.letters_; }

private:
    std::string letters_;
    std::array<int, 256> index_{};
};

/// Canonical word order: shorter first, then lexicographic by alphabet order.
struct ShortLex {
    const Alphabet* alphabet;

    bool operator()(std::string_view u, std::string_view v) const
    {
        if (u.size() != v.size())
            return u.size() < v.size();
        for (std::size_t i = 0; i < u.size(); ++i) {
            if (u[i] != v[i])
                return alphabet->index(u[i]) < alphabet->index(v[i]);
        }
        return false;
    }
};

/// A finite set of words over a declared alphabet, kept duplicate-free and
/// in shortlex order. May contain the empty word; operations that need an
/// epsilon-free set check it themselves.
class FiniteLanguage {
public:
    FiniteLanguage() = default;

    FiniteLanguage(Alphabet alphabet, std::vector<Word> words)
        : alphabet_(std::move(alphabet)), words_(std::move(words))
    {
        for (const auto& w : words_)
            alphabet_.check_word(w);
        normalize();
    }

    FiniteLanguage(Alphabet alphabet, std::initializer_list<std::string_view> words)
        : FiniteLanguage(std::move(alphabet), std::vector<Word>(words.begin(), words.end()))
    {}

    const Alphabet& alphabet() const noexcept { return alphabet_; }
    const std::vector<Word>& words() const noexcept { return words_; }
    std::size_t size() const noexcept { return words_.size(); }
    bool empty() const noexcept { return words_.empty(); }
    auto begin() const noexcept { return words_.begin(); }
    auto end() const noexcept { return words_.end(); }

    bool contains(std::string_view w) const
    {
        return std::binary_search(words_.begin(), words_.end(), w, ShortLex{&alphabet_});
    }

    bool contains_epsilon() const noexcept { return !words_.empty() && words_.front().empty(); }

    std::size_t max_length() const noexcept { return words_.empty() ? 0 : words_.back().size(); }

    std::size_t total_length() const noexcept
    {
        std::size_t n = 0;
        for (const auto& w : words_)
            n += w.size();
        return n;
    }

    FiniteLanguage with(const Word& w) const
    {
        auto ws = words_;
        ws.push_back(w);
        return {alphabet_, std::move(ws)};
    }

    friend bool operator==(const FiniteLanguage& a, const FiniteLanguage& b)
    {
        return a.alphabet_ == b.alphabet_ && a.words_ == b.words_;
    }

private:
    void normalize()
    {
        ShortLex less{&alphabet_};
        std::sort(words_.begin(), words_.end(), less);
        words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
    }

    Alphabet alphabet_;
    std::vector<Word> words_;
};

inline Word repeat(char c, std::size_t n) { return Word(n, c); }

inline Word reversed(std::string_view w) { return Word(w.rbegin(), w.rend()); }

/// True iff the pair (w, w2) overlaps: u w2 = w v or w2 u = v w with
/// 1 <= |u| <= |w|-1 and 1 <= |v| <= |w2|-1. overlaps(w, w) == false means
/// w is overlapping-free.
inline bool overlaps(std::string_view w, std::string_view w2)
{
    if (w.empty() || w2.empty())
        throw PreconditionError("overlap is defined on nonempty words");
    const auto n = static_cast<long>(w.size());
    const auto m = static_cast<long>(w2.size());
    for (long u = 1; u <= n - 1; ++u) {
        // u w2 = w v: the last n-u letters of w start w2, and |v| = u + m - n.
        const long v = u + m - n;
        if (v >= 1 && v <= m - 1 && w.substr(u) == w2.substr(0, n - u))
            return true;
        // w2 u = v w: the first n-u letters of w end w2, and |v| = m + u - n.
        const long v2 = m + u - n;
        if (v2 >= 1 && v2 <= m - 1 && w.substr(0, n - u) == w2.substr(v2))
            return true;
    }
    return false;
}

inline bool overlapping_free(std::string_view w) { return !overlaps(w, w); }

struct AffixSets {
    FiniteLanguage prefixes;
    FiniteLanguage suffixes;
    FiniteLanguage factors;
};

/// Prefix, suffix and factor closures P(X), S(X), F(X) of a finite set.
inline AffixSets affix_sets(const FiniteLanguage& x)
{
    std::set<Word> p, s, f;
    for (const auto& w : x) {
        for (std::size_t i = 0; i <= w.size(); ++i) {
            p.insert(w.substr(0, i));
            s.insert(w.substr(i));
            for (std::size_t j = i; j <= w.size(); ++j)
                f.insert(w.substr(i, j - i));
        }
    }
    const auto& a = x.alphabet();
    return {FiniteLanguage(a, {p.begin(), p.end()}),
            FiniteLanguage(a, {s.begin(), s.end()}),
            FiniteLanguage(a, {f.begin(), f.end()})};
}

/// Renders a word with run-length exponents, e.g. "a^7b^2a^3bab^7".
inline std::string pretty(std::string_view w)
{
    if (w.empty())
        return "eps";
    std::string out;
    for (std::size_t i = 0; i < w.size();) {
        std::size_t j = i;
        while (j < w.size() && w[j] == w[i])
            ++j;
        out += w[i];
        if (j - i > 1)
            out += "^" + std::to_string(j - i);
        i = j;
    }
    return out;
}

/// Inverse of pretty: expands "a^7b^2a" to "aaaaaaabba". Plain words pass
/// through unchanged and "eps" is the empty word.
inline Word expand(std::string_view s)
{
    if (s == "eps")
        return {};
    Word out;
    for (std::size_t i = 0; i < s.size();) {
        const char c = s[i++];
        if (c == '^')
            throw ParseError("'^' without a preceding letter in '" + std::string(s) + "'");
        std::size_t n = 1;
        if (i < s.size() && s[i] == '^') {
            std::size_t j = ++i;
            while (j < s.size() && s[j] >= '0' && s[j] <= '9')
                ++j;
            if (j == i)
                throw ParseError("missing exponent in '" + std::string(s) + "'");
            n = std::stoul(std::string(s.substr(i, j - i)));
            i = j;
        }
        out.append(n, c);
    }
    return out;
}

} // namespace codekit
