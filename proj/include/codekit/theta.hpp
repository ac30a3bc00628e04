#pragma once

#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "codekit/automata.hpp"
#include "codekit/error.hpp"
#include "codekit/words.hpp"

namespace codekit {

enum class ThetaKind { morphism, antimorphism };

/// An automorphism or anti-automorphism of A*, determined by a permutation
/// of the alphabet. An antimorphism maps w to the letterwise image of the
/// reversal of w.
class ThetaMap {
public:
    ThetaMap() = default;

    /// `perm[i]` is the index of the image of letter i.
    ThetaMap(Alphabet alphabet, std::vector<std::size_t> perm, ThetaKind kind)
        : alphabet_(std::move(alphabet)), perm_(std::move(perm)), kind_(kind)
    {
        if (perm_.size() != alphabet_.size())
            throw PreconditionError("theta permutation size differs from the alphabet size");
        std::vector<char> hit(perm_.size(), 0);
        for (auto p : perm_) {
            if (p >= perm_.size() || hit[p])
                throw PreconditionError("theta letter map is not a bijection");
            hit[p] = 1;
        }
    }

    static ThetaMap identity(const Alphabet& a)
    {
        std::vector<std::size_t> p(a.size());
        std::iota(p.begin(), p.end(), 0);
        return {a, std::move(p), ThetaKind::morphism};
    }

    /// Letter map given as pairs of characters; unlisted letters are fixed.
    static ThetaMap from_pairs(const Alphabet& a, const std::vector<std::pair<char, char>>& pairs, ThetaKind kind)
    {
        std::vector<std::size_t> p(a.size());
        std::iota(p.begin(), p.end(), 0);
        std::vector<char> set(a.size(), 0);
        for (auto [from, to] : pairs) {
            const auto i = a.index(from);
            if (set[i] && p[i] != a.index(to))
                throw PreconditionError(std::string("letter '") + from + "' mapped twice");
            set[i] = 1;
            p[i] = a.index(to);
        }
        return {a, std::move(p), kind};
    }

    /// a <-> b swap over a two-letter alphabet.
    static ThetaMap swap(const Alphabet& a, ThetaKind kind)
    {
        if (a.size() != 2)
            throw PreconditionError("swap needs a two-letter alphabet");
        return {a, {1, 0}, kind};
    }

    /// Reversal: the antimorphism fixing every letter.
    static ThetaMap mirror(const Alphabet& a)
    {
        auto t = identity(a);
        t.kind_ = ThetaKind::antimorphism;
        return t;
    }

    const Alphabet& alphabet() const noexcept { return alphabet_; }
    const std::vector<std::size_t>& permutation() const noexcept { return perm_; }
    ThetaKind kind() const noexcept { return kind_; }

    /// For a one-letter alphabet the two kinds coincide.
    bool reverses() const noexcept { return kind_ == ThetaKind::antimorphism && alphabet_.size() > 1; }

    char apply(char c) const { return alphabet_.letter(perm_[alphabet_.index(c)]); }

    Word apply(std::string_view w) const
    {
        Word out(w.size(), ' ');
        for (std::size_t i = 0; i < w.size(); ++i)
            out[i] = apply(w[i]);
        if (kind_ == ThetaKind::antimorphism)
            std::reverse(out.begin(), out.end());
        return out;
    }

    FiniteLanguage apply(const FiniteLanguage& x) const
    {
        std::vector<Word> ws;
        ws.reserve(x.size());
        for (const auto& w : x)
            ws.push_back(apply(w));
        return {x.alphabet(), std::move(ws)};
    }

    /// Image of a regular language: relabeling, composed with reversal for
    /// antimorphisms.
    Dfa apply(const Dfa& l) const
    {
        if (!(l.alphabet() == alphabet_))
            throw PreconditionError("theta alphabet differs from the language alphabet");
        Dfa r = relabel(l, perm_);
        return kind_ == ThetaKind::antimorphism ? reverse(r) : r;
    }

    /// Order of the letter permutation alone.
    std::size_t permutation_order() const
    {
        std::size_t k = 1;
        for (std::size_t i = 0; i < perm_.size(); ++i) {
            std::size_t len = 1;
            for (std::size_t j = perm_[i]; j != i; j = perm_[j])
                ++len;
            k = std::lcm(k, len);
        }
        return k;
    }

    /// Least k >= 1 with theta^k = id on A*. Odd powers of an antimorphism
    /// reverse words, so over two or more letters k must be even.
    std::size_t order() const
    {
        const std::size_t p = permutation_order();
        if (!reverses() || p % 2 == 0)
            return p;
        return 2 * p;
    }

    /// theta^i for any integer i (negative powers wrap modulo the order).
    ThetaMap power(long i) const
    {
        const auto k = static_cast<long>(order());
        const auto e = static_cast<std::size_t>(((i % k) + k) % k);
        std::vector<std::size_t> p(perm_.size());
        std::iota(p.begin(), p.end(), 0);
        for (std::size_t step = 0; step < e; ++step)
            for (auto& x : p)
                x = perm_[x];
        const auto kind = (kind_ == ThetaKind::antimorphism && e % 2 == 1) ? ThetaKind::antimorphism
                                                                            : ThetaKind::morphism;
        return {alphabet_, std::move(p), kind};
    }

    ThetaMap inverse() const { return power(-1); }

    bool is_identity() const
    {
        for (std::size_t i = 0; i < perm_.size(); ++i)
            if (perm_[i] != i)
                return false;
        return !reverses();
    }

    friend bool operator==(const ThetaMap& a, const ThetaMap& b)
    {
        return a.alphabet_ == b.alphabet_ && a.perm_ == b.perm_ && a.kind_ == b.kind_;
    }

private:
    Alphabet alphabet_;
    std::vector<std::size_t> perm_;
    ThetaKind kind_ = ThetaKind::morphism;
};

/// { theta^i(w) : 0 <= i < order }.
inline FiniteLanguage orbit(const ThetaMap& t, std::string_view w)
{
    std::vector<Word> ws;
    Word cur(w);
    for (std::size_t i = 0; i < t.order(); ++i) {
        ws.push_back(cur);
        cur = t.apply(cur);
    }
    return {t.alphabet(), std::move(ws)};
}

/// Union of theta^i(X) over all powers.
inline FiniteLanguage orbit_union(const ThetaMap& t, const FiniteLanguage& x)
{
    std::vector<Word> ws;
    for (const auto& w : x)
        for (const auto& v : orbit(t, w))
            ws.push_back(v);
    return {x.alphabet(), std::move(ws)};
}

inline Dfa orbit_union(const ThetaMap& t, const Dfa& l)
{
    Dfa acc = l, cur = l;
    for (std::size_t i = 1; i < t.order(); ++i) {
        cur = t.apply(cur);
        acc = unite(acc, cur);
    }
    return acc;
}

inline std::string to_string(ThetaKind k) { return k == ThetaKind::morphism ? "morphism" : "antimorphism"; }

} // namespace codekit
