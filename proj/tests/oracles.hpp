#pragma once

// Brute-force reference implementations used only by tests. They work on
// plain std::string sets and share no code with the library, so agreement
// between the two is meaningful.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using Set = std::set<std::string>;

/// Minimal exact fraction; denominators stay small in tests.
struct Frac {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Frac() = default;
    Frac(std::int64_t n, std::int64_t d) : num(n), den(d) { reduce(); }

    void reduce()
    {
        const auto g = std::gcd(num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }
    Frac operator+(const Frac& o) const { return {num * o.den + o.num * den, den * o.den}; }
    Frac operator*(const Frac& o) const { return {num * o.num, den * o.den}; }
    bool operator==(const Frac& o) const { return num == o.num && den == o.den; }
    std::string str() const { return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den); }
};

/// Sum over x in X of prod weight(letter); weights given as fractions.
inline Frac measure(const Set& x, const std::string& letters, const std::vector<Frac>& weights)
{
    Frac total(0, 1);
    for (const auto& w : x) {
        Frac p(1, 1);
        for (char c : w)
            p = p * weights[letters.find(c)];
        total = total + p;
    }
    return total;
}

inline Frac uniform_measure(const Set& x, std::size_t k)
{
    Frac t(0, 1);
    for (const auto& w : x) {
        std::int64_t d = 1;
        for (std::size_t i = 0; i < w.size(); ++i)
            d *= static_cast<std::int64_t>(k);
        t = t + Frac(1, d);
    }
    return t;
}

/// Number of factorizations of w over X (capped at 2).
inline int factorizations(const Set& x, const std::string& w)
{
    std::vector<int> ways(w.size() + 1, 0);
    ways[0] = 1;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (!ways[i])
            continue;
        for (const auto& u : x)
            if (!u.empty() && w.compare(i, u.size(), u) == 0 && i + u.size() <= w.size())
                ways[i + u.size()] = std::min(2, ways[i + u.size()] + ways[i]);
    }
    return ways[w.size()];
}

inline bool in_star(const Set& x, const std::string& w) { return factorizations(x, w) > 0; }

inline std::vector<std::string> all_words(const std::string& letters, std::size_t max_len)
{
    std::vector<std::string> out{""};
    for (std::size_t i = 0; i < out.size(); ++i)
        if (out[i].size() < max_len)
            for (char c : letters)
                out.push_back(out[i] + c);
    return out;
}

/// Concatenations of at most `max_len` letters having two factorizations.
/// Built from products of members so only words of X* are tried.
inline bool ambiguous_up_to(const Set& x, std::size_t max_len)
{
    Set level{""};
    Set seen;
    while (!level.empty()) {
        Set next;
        for (const auto& p : level)
            for (const auto& u : x) {
                const std::string w = p + u;
                if (w.size() > max_len || !seen.insert(w).second)
                    continue;
                if (factorizations(x, w) > 1)
                    return true;
                next.insert(w);
            }
        level = std::move(next);
    }
    return false;
}

/// w is a factor of X*: either inside one word of X, or a suffix of a word,
/// then members, then a prefix of a word.
inline bool factor_of_star(const Set& x, const std::string& w)
{
    if (w.empty())
        return true;
    for (const auto& u : x)
        if (u.find(w) != std::string::npos)
            return true;
    // reach[i]: w[0, i) = s x1 ... xm with s a suffix of some member.
    std::vector<char> reach(w.size() + 1, 0);
    for (const auto& u : x)
        for (std::size_t j = 0; j <= u.size(); ++j) {
            const std::string s = u.substr(j);
            if (s.size() <= w.size() && w.compare(0, s.size(), s) == 0)
                reach[s.size()] = 1;
        }
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (!reach[i])
            continue;
        for (const auto& u : x)
            if (!u.empty() && i + u.size() <= w.size() && w.compare(i, u.size(), u) == 0)
                reach[i + u.size()] = 1;
    }
    for (std::size_t i = 0; i <= w.size(); ++i) {
        if (!reach[i])
            continue;
        const std::string rest = w.substr(i);
        for (const auto& u : x)
            if (u.compare(0, rest.size(), rest) == 0 && rest.size() <= u.size())
                return true;
    }
    return false;
}

/// True iff every word of length <= max_len is a factor of X*.
inline bool complete_up_to(const Set& x, const std::string& letters, std::size_t max_len)
{
    for (const auto& w : all_words(letters, max_len))
        if (!factor_of_star(x, w))
            return false;
    return true;
}

/// Letter map applied as a morphism or antimorphism.
inline std::string apply_theta(const std::string& letters, const std::string& image, bool anti, std::string w)
{
    for (char& c : w)
        c = image[letters.find(c)];
    if (anti)
        w = std::string(w.rbegin(), w.rend());
    return w;
}

/// Smallest superset of X closed under theta.
inline Set theta_closure(const Set& x, const std::string& letters, const std::string& image, bool anti)
{
    Set out = x;
    std::vector<std::string> todo(x.begin(), x.end());
    while (!todo.empty()) {
        std::string w = todo.back();
        todo.pop_back();
        std::string t = apply_theta(letters, image, anti, w);
        if (out.insert(t).second)
            todo.push_back(t);
    }
    return out;
}

/// Random word of length in [1, max_len].
inline std::string random_word(std::mt19937& rng, const std::string& letters, std::size_t max_len)
{
    std::uniform_int_distribution<std::size_t> len(1, max_len);
    std::uniform_int_distribution<std::size_t> pick(0, letters.size() - 1);
    std::string w(len(rng), ' ');
    for (char& c : w)
        c = letters[pick(rng)];
    return w;
}

/// Random permutation of the letters, as an image string.
inline std::string random_image(std::mt19937& rng, const std::string& letters)
{
    std::string image = letters;
    std::shuffle(image.begin(), image.end(), rng);
    return image;
}

} // namespace oracle
