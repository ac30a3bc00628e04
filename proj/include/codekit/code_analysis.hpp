#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "codekit/automata.hpp"
#include "codekit/error.hpp"
#include "codekit/theta.hpp"
#include "codekit/words.hpp"

namespace codekit {

using Factorization = std::vector<Word>;

inline Word concatenate(const Factorization& f)
{
    Word w;
    for (const auto& x : f)
        w += x;
    return w;
}

/// Two distinct factorizations of one word. By convention `left` is the
/// one whose first factor is longer.
struct CodeWitness {
    Factorization left;
    Factorization right;

    Word word() const { return concatenate(left); }

    /// Both sides spell the same word and differ as sequences.
    bool valid() const { return concatenate(left) == concatenate(right) && left != right && !left.empty(); }
};

struct CodeVerdict {
    bool is_code = true;
    std::optional<CodeWitness> witness;
};

struct CodeTestOptions {
    bool with_witness = false;
    std::size_t max_iterations = 10'000;
};

namespace detail {

inline void require_epsilon_free(const FiniteLanguage& x)
{
    if (x.contains_epsilon())
        throw PreconditionError("the empty word cannot belong to a code");
}

inline void require_epsilon_free(const Dfa& l)
{
    if (l.is_final(l.initial()))
        throw PreconditionError("the empty word cannot belong to a code");
}

inline CodeWitness oriented(Factorization a, Factorization b)
{
    if (a.front().size() < b.front().size())
        std::swap(a, b);
    return {std::move(a), std::move(b)};
}

} // namespace detail

/// Sardinas-Patterson on a finite set, with explicit dangling suffixes.
/// Each remainder carries the pair of partial factorizations that produced
/// it, so a failure comes with its witness.
inline CodeVerdict sardinas_patterson_finite(const FiniteLanguage& x)
{
    detail::require_epsilon_free(x);
    if (x.empty())
        throw PreconditionError("the code test needs a nonempty set");

    struct Node {
        Word rest;            // ahead = behind . rest
        Factorization ahead;
        Factorization behind;
    };
    std::deque<Node> queue;
    std::set<Word> seen;

    for (const auto& longer : x)
        for (const auto& shorter : x)
            if (longer.size() > shorter.size() && longer.compare(0, shorter.size(), shorter) == 0) {
                Word rest = longer.substr(shorter.size());
                if (seen.insert(rest).second)
                    queue.push_back({rest, {longer}, {shorter}});
            }

    while (!queue.empty()) {
        Node n = std::move(queue.front());
        queue.pop_front();
        for (const auto& w : x) {
            if (w.size() <= n.rest.size() && n.rest.compare(0, w.size(), w) == 0) {
                // The lagging side catches up by w and stays behind.
                Factorization behind = n.behind;
                behind.push_back(w);
                Word rest = n.rest.substr(w.size());
                if (rest.empty())
                    return {false, detail::oriented(n.ahead, behind)};
                if (seen.insert(rest).second)
                    queue.push_back({rest, n.ahead, std::move(behind)});
            } else if (w.size() > n.rest.size() && w.compare(0, n.rest.size(), n.rest) == 0) {
                // The lagging side overtakes.
                Factorization behind = n.behind;
                behind.push_back(w);
                Word rest = w.substr(n.rest.size());
                if (seen.insert(rest).second)
                    queue.push_back({rest, std::move(behind), n.ahead});
            }
        }
    }
    return {true, std::nullopt};
}

namespace detail {

/// Walks pairs (p, r) = (delta(p0, u), delta(r0, u)) from the seeds and
/// collects r whenever p is final. With `nonempty`, u = epsilon is skipped.
inline std::vector<State> collect_pairs(const Dfa& d, const std::vector<std::pair<State, State>>& seeds,
                                        bool nonempty)
{
    const std::size_t n = d.num_states(), k = d.num_letters();
    std::unordered_set<std::uint64_t> seen;
    std::vector<std::pair<State, State>> stack;
    std::vector<char> hit(n, 0);
    auto push = [&](State p, State r) {
        if (seen.insert((std::uint64_t{p} << 32) | r).second) {
            check_cap(seen.size(), "remainder exploration");
            stack.emplace_back(p, r);
        }
    };
    for (auto [p, r] : seeds) {
        if (nonempty) {
            for (std::size_t a = 0; a < k; ++a)
                push(d.next(p, a), d.next(r, a));
        } else {
            push(p, r);
        }
    }
    while (!stack.empty()) {
        auto [p, r] = stack.back();
        stack.pop_back();
        if (d.is_final(p))
            hit[r] = 1;
        for (std::size_t a = 0; a < k; ++a)
            push(d.next(p, a), d.next(r, a));
    }
    std::vector<State> out;
    for (State s = 0; s < n; ++s)
        if (hit[s])
            out.push_back(s);
    return out;
}

/// Shortest word with two factorizations over L, found as a path in the
/// square of the automaton for L+ that leaves the diagonal.
inline std::optional<CodeWitness> shortest_ambiguity(const Dfa& d)
{
    const std::size_t n = d.num_states(), k = d.num_letters();
    const auto live = coreachable(d);
    const State cut = static_cast<State>(n); // "a factor just ended"
    auto base = [&](State s) { return s == cut ? d.initial() : s; };
    // Successors of an automaton state on letter a: continue the factor,
    // or close it when the factor is complete.
    auto succ = [&](State s, std::size_t a, State out[2]) {
        int m = 0;
        const State t = d.next(base(s), a);
        if (live[t])
            out[m++] = t;
        if (d.is_final(t))
            out[m++] = cut;
        return m;
    };

    struct Key {
        State p, q;
        bool split;
        std::uint64_t code() const { return (std::uint64_t{p} << 33) | (std::uint64_t{q} << 1) | split; }
    };
    struct Prev {
        std::uint64_t from;
        char letter;
        Key key;
    };
    std::unordered_map<std::uint64_t, Prev> parent;
    std::deque<Key> queue;
    const Key start{cut, cut, false};
    parent.emplace(start.code(), Prev{start.code(), 0, start});
    queue.push_back(start);
    std::optional<Key> goal;
    while (!queue.empty() && !goal) {
        Key cur = queue.front();
        queue.pop_front();
        for (std::size_t a = 0; a < k && !goal; ++a) {
            State ps[2], qs[2];
            const int np = succ(cur.p, a, ps), nq = succ(cur.q, a, qs);
            for (int i = 0; i < np && !goal; ++i)
                for (int j = 0; j < nq && !goal; ++j) {
                    Key nxt{ps[i], qs[j], cur.split || ps[i] != qs[j]};
                    if (parent.count(nxt.code()))
                        continue;
                    check_cap(parent.size() + 1, "ambiguity search");
                    parent.emplace(nxt.code(), Prev{cur.code(), d.alphabet().letter(a), nxt});
                    if (nxt.p == cut && nxt.q == cut && nxt.split)
                        goal = nxt;
                    else
                        queue.push_back(nxt);
                }
        }
    }
    if (!goal)
        return std::nullopt;

    std::vector<Key> path;
    Word word;
    for (std::uint64_t c = goal->code(); c != start.code();) {
        const Prev& pr = parent.at(c);
        path.push_back(pr.key);
        word.push_back(pr.letter);
        c = pr.from;
    }
    std::reverse(path.begin(), path.end());
    std::reverse(word.begin(), word.end());
    auto split = [&](bool first) {
        Factorization f;
        std::size_t begin = 0;
        for (std::size_t i = 0; i < path.size(); ++i) {
            if ((first ? path[i].p : path[i].q) == cut) {
                f.push_back(word.substr(begin, i + 1 - begin));
                begin = i + 1;
            }
        }
        return f;
    };
    return oriented(split(true), split(false));
}

} // namespace detail

/// Sardinas-Patterson over a regular language. Every remainder set is a
/// union of residuals of the minimal DFA of L (minus epsilon for the first
/// one), so it is carried as a set of states; the iteration stops on the
/// empty set, on a final state (epsilon is a remainder), or on a repeated
/// set. The witness, when requested, is the shortest ambiguous word.
inline CodeVerdict is_code_regular(const Dfa& l, const CodeTestOptions& opts = {})
{
    detail::require_epsilon_free(l);
    if (is_empty(l))
        throw PreconditionError("the code test needs a nonempty language");
    const Dfa d = minimize(l);
    const auto live = detail::coreachable(d);
    const State init = d.initial();

    auto prune = [&](std::vector<State> s) {
        s.erase(std::remove_if(s.begin(), s.end(), [&](State q) { return !live[q]; }), s.end());
        return s;
    };
    auto step = [&](const std::vector<State>& s, bool stripped) {
        std::vector<std::pair<State, State>> left, right;
        for (State q : s) {
            left.emplace_back(init, q);  // X^{-1} U
            right.emplace_back(q, init); // U^{-1} X
        }
        auto a = detail::collect_pairs(d, left, false);
        auto b = detail::collect_pairs(d, right, stripped);
        a.insert(a.end(), b.begin(), b.end());
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
        return prune(std::move(a));
    };

    auto fail = [&]() -> CodeVerdict {
        CodeVerdict v{false, std::nullopt};
        if (opts.with_witness) {
            v.witness = detail::shortest_ambiguity(d);
            if (!v.witness || !v.witness->valid())
                throw VerificationError("remainder iteration and ambiguity search disagree");
        }
        return v;
    };

    // U1 = X^{-1}X minus epsilon: the residuals at final states.
    std::vector<State> cur = prune(detail::collect_pairs(d, {{init, init}}, true));
    bool stripped = true;
    std::set<std::vector<State>> seen;
    for (std::size_t it = 0; it < opts.max_iterations; ++it) {
        if (cur.empty())
            return {true, std::nullopt};
        if (!stripped) {
            for (State q : cur)
                if (d.is_final(q))
                    return fail();
            if (!seen.insert(cur).second)
                return {true, std::nullopt};
        }
        cur = step(cur, stripped);
        stripped = false;
    }
    throw ResourceError("Sardinas-Patterson exceeded " + std::to_string(opts.max_iterations) + " iterations");
}

/// Shortest ambiguous word over L, if any; independent of the remainder
/// iteration.
inline std::optional<CodeWitness> code_witness_regular(const Dfa& l)
{
    detail::require_epsilon_free(l);
    return detail::shortest_ambiguity(minimize(l));
}

struct AffixClass {
    bool prefix = false;
    bool suffix = false;
    bool bifix() const noexcept { return prefix && suffix; }
};

namespace detail {
inline Dfa nonempty_words(const Alphabet& a)
{
    std::vector<State> delta(2 * a.size(), 1);
    return Dfa(a, 2, std::move(delta), {0, 1}, 0);
}
} // namespace detail

/// prefix iff L and L A+ are disjoint; suffix iff L and A+ L are disjoint.
inline AffixClass affix_class(const Dfa& l)
{
    detail::require_epsilon_free(l);
    const Dfa plus = detail::nonempty_words(l.alphabet());
    return {is_empty(intersect(l, concat(l, plus))), is_empty(intersect(l, concat(plus, l)))};
}

inline AffixClass affix_class(const FiniteLanguage& x)
{
    detail::require_epsilon_free(x);
    AffixClass c{true, true};
    for (const auto& u : x)
        for (const auto& w : x) {
            if (u.size() >= w.size())
                continue;
            if (w.compare(0, u.size(), u) == 0)
                c.prefix = false;
            if (w.compare(w.size() - u.size(), u.size(), u) == 0)
                c.suffix = false;
        }
    return c;
}

struct PropertyVerdict {
    bool holds = false;
    std::optional<Word> witness;
};

/// Complete iff F(L*) = A*; otherwise the witness is the shortlex-least
/// word outside F(L*).
inline PropertyVerdict is_complete(const Dfa& l)
{
    const Dfa f = factor_closure(star(l));
    if (is_universal(f))
        return {true, std::nullopt};
    return {false, shortest_word(complement(f))};
}

/// Thin iff F(L) != A*; the witness is the shortlex-least non-factor.
inline PropertyVerdict is_thin(const Dfa& l)
{
    const Dfa f = factor_closure(l);
    if (is_universal(f))
        return {false, std::nullopt};
    return {true, shortest_word(complement(f))};
}

inline bool is_theta_invariant(const Dfa& l, const ThetaMap& t) { return t.apply(l) == minimize(l); }

inline bool is_theta_invariant(const FiniteLanguage& x, const ThetaMap& t) { return t.apply(x) == x; }

/// Code test on the union of all theta^i(L).
inline CodeVerdict is_theta_code(const Dfa& l, const ThetaMap& t, const CodeTestOptions& opts = {})
{
    detail::require_epsilon_free(l);
    return is_code_regular(orbit_union(t, l), opts);
}

inline CodeVerdict is_theta_code(const FiniteLanguage& x, const ThetaMap& t)
{
    detail::require_epsilon_free(x);
    return sardinas_patterson_finite(orbit_union(t, x));
}

/// For a thin code, maximality (among all codes, and among theta-invariant
/// codes when L is theta-invariant) is equivalent to completeness.
inline bool is_maximal_thin(const Dfa& l, const ThetaMap& t)
{
    if (!(t.alphabet() == l.alphabet()))
        throw PreconditionError("theta alphabet differs from the language alphabet");
    if (!is_thin(l).holds)
        throw PreconditionError("maximality test needs a thin set");
    if (!is_code_regular(l).is_code)
        throw PreconditionError("maximality test needs a code");
    return is_complete(l).holds;
}

/// Prefix tree of a finite set: nodes are P(X), edges (u, a, ua).
struct PrefixTree {
    FiniteLanguage nodes;
    std::vector<std::pair<Word, char>> edges; // (u, a) stands for (u, a, ua)

    explicit PrefixTree(const FiniteLanguage& x) : nodes(affix_sets(x).prefixes)
    {
        for (const auto& v : nodes)
            if (!v.empty())
                edges.emplace_back(v.substr(0, v.size() - 1), v.back());
    }

    bool has_edge(const Word& u, char a) const { return nodes.contains(u) && nodes.contains(u + a); }

    /// Nodes without successors.
    std::vector<Word> leaves() const
    {
        std::vector<Word> out;
        for (const auto& v : nodes) {
            bool inner = false;
            for (char a : nodes.alphabet().letters())
                inner = inner || nodes.contains(v + a);
            if (!inner)
                out.push_back(v);
        }
        return out;
    }
};

/// Tree invariance of a prefix code under an automorphism. The set-level
/// test is computed too, and a disagreement is a VerificationError since
/// the two are equivalent for prefix codes.
inline bool tree_theta_invariant(const FiniteLanguage& x, const ThetaMap& t)
{
    if (t.reverses())
        throw PreconditionError("tree invariance is defined for automorphisms");
    if (!(t.alphabet() == x.alphabet()))
        throw PreconditionError("theta alphabet differs from the set alphabet");
    if (!affix_class(x).prefix)
        throw PreconditionError("tree invariance needs a prefix code");
    const PrefixTree tree(x);
    bool tree_ok = true;
    for (const auto& [u, a] : tree.edges)
        tree_ok = tree_ok && tree.has_edge(t.apply(u), t.apply(a));
    const bool set_ok = is_theta_invariant(from_words(x), t);
    if (tree_ok != set_ok)
        throw VerificationError("prefix tree invariance disagrees with set invariance");
    return tree_ok;
}

struct UniformLayer {
    std::size_t length;
    FiniteLanguage words;
    bool theta_invariant;
};

/// Splits X by word length; X is theta-invariant iff every layer is.
inline std::vector<UniformLayer> uniform_decomposition(const FiniteLanguage& x, const ThetaMap& t)
{
    std::map<std::size_t, std::vector<Word>> by_length;
    for (const auto& w : x)
        by_length[w.size()].push_back(w);
    std::vector<UniformLayer> out;
    for (auto& [len, ws] : by_length) {
        FiniteLanguage layer(x.alphabet(), std::move(ws));
        const bool inv = is_theta_invariant(layer, t);
        out.push_back({len, std::move(layer), inv});
    }
    return out;
}

} // namespace codekit
