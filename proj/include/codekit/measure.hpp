#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <vector>

#include "codekit/automata.hpp"
#include "codekit/error.hpp"
#include "codekit/words.hpp"

namespace codekit {

using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rational& r) { return r.str(); }

/// Positive Bernoulli distribution: every letter weight in (0, 1], summing
/// to exactly 1.
class BernoulliDist {
public:
    BernoulliDist(Alphabet alphabet, std::vector<Rational> weights)
        : alphabet_(std::move(alphabet)), weights_(std::move(weights))
    {
        if (weights_.size() != alphabet_.size())
            throw PreconditionError("one weight per letter is required");
        Rational sum = 0;
        for (const auto& w : weights_) {
            if (w <= 0)
                throw PreconditionError("letter weights must be positive");
            sum += w;
        }
        if (sum != 1)
            throw PreconditionError("letter weights sum to " + to_string(sum) + ", not 1");
    }

    static BernoulliDist uniform(const Alphabet& a)
    {
        return {a, std::vector<Rational>(a.size(), Rational(1, static_cast<long>(a.size())))};
    }

    const Alphabet& alphabet() const noexcept { return alphabet_; }
    const Rational& weight(std::size_t letter) const { return weights_.at(letter); }
    const Rational& weight(char c) const { return weights_.at(alphabet_.index(c)); }

    Rational of(std::string_view w) const
    {
        Rational p = 1;
        for (char c : w)
            p *= weight(c);
        return p;
    }

private:
    Alphabet alphabet_;
    std::vector<Rational> weights_;
};

/// pi(X) = sum over x of the product of its letter weights.
inline Rational measure_finite(const FiniteLanguage& x, const BernoulliDist& d)
{
    if (!(x.alphabet() == d.alphabet()))
        throw PreconditionError("distribution alphabet differs from the set alphabet");
    Rational total = 0;
    for (const auto& w : x)
        total += d.of(w);
    return total;
}

struct Measure {
    enum class Kind { finite, divergent, undetermined };
    Kind kind = Kind::undetermined;
    Rational value = 0;

    std::string str() const
    {
        switch (kind) {
        case Kind::finite: return to_string(value);
        case Kind::divergent: return "divergent";
        case Kind::undetermined: return "undetermined";
        }
        return "undetermined";
    }
};

inline constexpr std::size_t measure_check_length = 64;

namespace detail {

/// Solves m x = rhs exactly; returns nullopt when m is singular.
inline std::optional<std::vector<Rational>> solve(std::vector<std::vector<Rational>> m, std::vector<Rational> rhs)
{
    const std::size_t n = rhs.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col] == 0)
            ++piv;
        if (piv == n)
            return std::nullopt;
        std::swap(m[piv], m[col]);
        std::swap(rhs[piv], rhs[col]);
        const Rational inv = 1 / m[col][col];
        for (std::size_t j = col; j < n; ++j)
            m[col][j] *= inv;
        rhs[col] *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || m[r][col] == 0)
                continue;
            const Rational f = m[r][col];
            for (std::size_t j = col; j < n; ++j)
                if (m[col][j] != 0)
                    m[r][j] -= f * m[col][j];
            rhs[r] -= f * rhs[col];
        }
    }
    return rhs;
}

} // namespace detail

/// pi(L) for a regular language, exact over the rationals. On the trim
/// minimal DFA, val(s) = [s final] + sum_a d(a) val(delta(s, a)). A unique
/// non-negative solution whose length-bounded partial sums stay below it
/// is returned as finite. A singular system with a closed set of trim
/// states (no letter leads out of it) is divergent. Anything else is
/// undetermined.
inline Measure measure_regular(const Dfa& l, const BernoulliDist& d)
{
    if (!(l.alphabet() == d.alphabet()))
        throw PreconditionError("distribution alphabet differs from the language alphabet");
    const Dfa m = minimize(l);
    const auto reach = detail::reachable(m);
    const auto live = detail::coreachable(m);
    std::vector<State> trim;
    std::vector<long> index(m.num_states(), -1);
    for (State s = 0; s < m.num_states(); ++s)
        if (reach[s] && live[s]) {
            index[s] = static_cast<long>(trim.size());
            trim.push_back(s);
        }
    if (trim.empty())
        return {Measure::Kind::finite, 0};

    const std::size_t n = trim.size(), k = m.num_letters();
    std::vector<std::vector<Rational>> system(n, std::vector<Rational>(n, 0));
    std::vector<Rational> rhs(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        const State s = trim[i];
        system[i][i] += 1;
        rhs[i] = m.is_final(s) ? 1 : 0;
        for (std::size_t a = 0; a < k; ++a) {
            const long j = index[m.next(s, a)];
            if (j >= 0)
                system[i][static_cast<std::size_t>(j)] -= d.weight(a);
        }
    }

    auto solution = detail::solve(system, rhs);
    if (!solution) {
        // Closed set: every letter from every state reachable from i stays
        // inside the trim part, so the mass reaching it never leaks and
        // keeps revisiting a final state.
        std::vector<std::vector<std::size_t>> adj(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t a = 0; a < k; ++a)
                if (index[m.next(trim[i], a)] >= 0)
                    adj[i].push_back(static_cast<std::size_t>(index[m.next(trim[i], a)]));
        auto reach_from = [&](std::size_t src) {
            std::vector<char> seen(n, 0);
            std::vector<std::size_t> st{src};
            seen[src] = 1;
            while (!st.empty()) {
                auto v = st.back();
                st.pop_back();
                for (auto w : adj[v])
                    if (!seen[w]) {
                        seen[w] = 1;
                        st.push_back(w);
                    }
            }
            return seen;
        };
        for (std::size_t i = 0; i < n; ++i) {
            if (adj[i].size() != k)
                continue;
            const auto from_i = reach_from(i);
            bool closed = true;
            for (std::size_t j = 0; j < n && closed; ++j)
                if (from_i[j])
                    closed = adj[j].size() == k;
            if (closed)
                return {Measure::Kind::divergent, 0};
        }
        return {Measure::Kind::undetermined, 0};
    }

    const std::size_t start = static_cast<std::size_t>(index[m.initial()]);
    const Rational value = (*solution)[start];
    for (const auto& v : *solution)
        if (v < 0)
            return {Measure::Kind::undetermined, 0};

    // Partial sums by length must increase and stay below the value.
    std::vector<Rational> mass(n, 0);
    mass[start] = 1;
    Rational partial = 0;
    for (std::size_t len = 0; len <= measure_check_length; ++len) {
        for (std::size_t i = 0; i < n; ++i)
            if (m.is_final(trim[i]))
                partial += mass[i];
        if (partial > value)
            return {Measure::Kind::undetermined, 0};
        std::vector<Rational> next(n, 0);
        for (std::size_t i = 0; i < n; ++i) {
            if (mass[i] == 0)
                continue;
            for (std::size_t a = 0; a < k; ++a) {
                const long j = index[m.next(trim[i], a)];
                if (j >= 0)
                    next[static_cast<std::size_t>(j)] += mass[i] * d.weight(a);
            }
        }
        mass.swap(next);
    }
    return {Measure::Kind::finite, value};
}

} // namespace codekit
