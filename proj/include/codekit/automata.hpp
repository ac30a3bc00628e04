#pragma once

// Regular-language engine. Every language-valued operation returns a
// minimal, complete DFA with canonical state numbering (breadth-first from
// the initial state, letters in alphabet order), so two languages are equal
// exactly when their Dfa values compare equal.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <functional>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "codekit/error.hpp"
#include "codekit/words.hpp"

namespace codekit {

using State = std::uint32_t;

inline constexpr std::size_t default_state_cap = 1'000'000;

namespace detail {
inline std::atomic<std::size_t>& state_cap_slot()
{
    static std::atomic<std::size_t> cap{default_state_cap};
    return cap;
}
} // namespace detail

/// Upper bound on the number of subsets (or product pairs) any single
/// construction may create before giving up with a ResourceError.
inline std::size_t state_cap() { return detail::state_cap_slot().load(); }
inline void set_state_cap(std::size_t cap) { detail::state_cap_slot().store(cap == 0 ? default_state_cap : cap); }

/// Nondeterministic automaton with epsilon moves. Only a construction
/// intermediate: every public operation determinizes before returning.
class Nfa {
public:
    static constexpr int epsilon = -1;

    explicit Nfa(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}

    State add_state(bool initial = false, bool final = false)
    {
        adj_.emplace_back();
        initial_.push_back(initial);
        final_.push_back(final);
        return static_cast<State>(adj_.size() - 1);
    }

    void add_transition(State from, int letter, State to)
    {
        if (from >= adj_.size() || to >= adj_.size())
            throw PreconditionError("transition endpoint is not a declared state");
        if (letter != epsilon && (letter < 0 || static_cast<std::size_t>(letter) >= alphabet_.size()))
            throw PreconditionError("transition letter out of range");
        adj_[from].emplace_back(letter, to);
    }

    void set_initial(State s, bool v = true) { initial_.at(s) = v; }
    void set_final(State s, bool v = true) { final_.at(s) = v; }

    const Alphabet& alphabet() const noexcept { return alphabet_; }
    std::size_t num_states() const noexcept { return adj_.size(); }
    bool is_initial(State s) const { return initial_.at(s); }
    bool is_final(State s) const { return final_.at(s); }
    const std::vector<std::pair<int, State>>& transitions(State s) const { return adj_.at(s); }

private:
    Alphabet alphabet_;
    std::vector<std::vector<std::pair<int, State>>> adj_;
    std::vector<char> initial_;
    std::vector<char> final_;
};

/// Complete deterministic automaton. The transition table is dense:
/// next(s, a) is defined for every state and letter index.
class Dfa {
public:
    Dfa() = default;

    Dfa(Alphabet alphabet, std::size_t num_states, std::vector<State> delta, std::vector<char> final, State initial)
        : alphabet_(std::move(alphabet)), num_states_(num_states), delta_(std::move(delta)),
          final_(std::move(final)), initial_(initial)
    {
        if (num_states_ == 0)
            throw PreconditionError("a complete DFA needs at least one state");
        if (delta_.size() != num_states_ * alphabet_.size() || final_.size() != num_states_)
            throw PreconditionError("DFA tables do not match the state count");
        if (initial_ >= num_states_)
            throw PreconditionError("initial state out of range");
        for (State t : delta_) {
            if (t >= num_states_)
                throw PreconditionError("transition target out of range");
        }
    }

    const Alphabet& alphabet() const noexcept { return alphabet_; }
    std::size_t num_states() const noexcept { return num_states_; }
    std::size_t num_letters() const noexcept { return alphabet_.size(); }
    State initial() const noexcept { return initial_; }
    bool is_final(State s) const { return final_[s] != 0; }
    State next(State s, std::size_t letter) const { return delta_[s * alphabet_.size() + letter]; }

    State run(State from, std::string_view w) const
    {
        for (char c : w)
            from = next(from, alphabet_.index(c));
        return from;
    }

    bool accepts(std::string_view w) const { return is_final(run(initial_, w)); }

    const std::vector<State>& table() const noexcept { return delta_; }
    const std::vector<char>& finals() const noexcept { return final_; }

    friend bool operator==(const Dfa& a, const Dfa& b)
    {
        return a.alphabet_ == b.alphabet_ && a.num_states_ == b.num_states_ && a.initial_ == b.initial_ &&
               a.delta_ == b.delta_ && a.final_ == b.final_;
    }

private:
    Alphabet alphabet_;
    std::size_t num_states_ = 0;
    std::vector<State> delta_;
    std::vector<char> final_;
    State initial_ = 0;
};

/// A regular language is carried by its canonical minimal DFA.
using RegularLanguage = Dfa;

namespace detail {

struct VectorHash {
    std::size_t operator()(const std::vector<State>& v) const noexcept
    {
        std::size_t h = v.size();
        for (State s : v)
            h ^= s + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }
};

inline void require_same_alphabet(const Dfa& a, const Dfa& b)
{
    if (!(a.alphabet() == b.alphabet()))
        throw PreconditionError("alphabet mismatch: {" + a.alphabet().letters() + "} vs {" +
                                b.alphabet().letters() + "}");
}

inline void check_cap(std::size_t n, const char* what)
{
    if (n > state_cap())
        throw ResourceError(std::string(what) + " exceeded the state cap of " + std::to_string(state_cap()));
}

inline std::vector<char> reachable(const Dfa& d)
{
    std::vector<char> seen(d.num_states(), 0);
    std::vector<State> stack{d.initial()};
    seen[d.initial()] = 1;
    while (!stack.empty()) {
        State s = stack.back();
        stack.pop_back();
        for (std::size_t a = 0; a < d.num_letters(); ++a) {
            State t = d.next(s, a);
            if (!seen[t]) {
                seen[t] = 1;
                stack.push_back(t);
            }
        }
    }
    return seen;
}

/// States from which some final state is reachable.
inline std::vector<char> coreachable(const Dfa& d)
{
    const std::size_t n = d.num_states(), k = d.num_letters();
    std::vector<std::vector<State>> rev(n);
    for (State s = 0; s < n; ++s)
        for (std::size_t a = 0; a < k; ++a)
            rev[d.next(s, a)].push_back(s);
    std::vector<char> live(n, 0);
    std::vector<State> stack;
    for (State s = 0; s < n; ++s) {
        if (d.is_final(s)) {
            live[s] = 1;
            stack.push_back(s);
        }
    }
    while (!stack.empty()) {
        State s = stack.back();
        stack.pop_back();
        for (State p : rev[s]) {
            if (!live[p]) {
                live[p] = 1;
                stack.push_back(p);
            }
        }
    }
    return live;
}

} // namespace detail

/// Canonical minimal DFA: unreachable states dropped, Moore refinement,
/// breadth-first renumbering.
inline Dfa minimize(const Dfa& d)
{
    const std::size_t k = d.num_letters();
    const auto reach = detail::reachable(d);

    std::vector<State> alive;
    for (State s = 0; s < d.num_states(); ++s)
        if (reach[s])
            alive.push_back(s);

    std::vector<State> cls(d.num_states(), 0);
    std::size_t num_classes = 0;
    {
        bool has_final = false, has_other = false;
        for (State s : alive)
            (d.is_final(s) ? has_final : has_other) = true;
        for (State s : alive)
            cls[s] = (has_final && has_other) ? (d.is_final(s) ? 1 : 0) : 0;
        num_classes = (has_final && has_other) ? 2 : 1;
    }

    std::vector<State> sig(alive.size() * (k + 1));
    std::vector<std::size_t> order(alive.size());
    for (;;) {
        for (std::size_t i = 0; i < alive.size(); ++i) {
            State s = alive[i];
            sig[i * (k + 1)] = cls[s];
            for (std::size_t a = 0; a < k; ++a)
                sig[i * (k + 1) + 1 + a] = cls[d.next(s, a)];
        }
        std::iota(order.begin(), order.end(), 0);
        auto sig_less = [&](std::size_t x, std::size_t y) {
            return std::lexicographical_compare(sig.begin() + x * (k + 1), sig.begin() + (x + 1) * (k + 1),
                                                sig.begin() + y * (k + 1), sig.begin() + (y + 1) * (k + 1));
        };
        std::sort(order.begin(), order.end(), sig_less);
        std::vector<State> next_cls(d.num_states(), 0);
        std::size_t count = 0;
        for (std::size_t r = 0; r < order.size(); ++r) {
            if (r > 0 && sig_less(order[r - 1], order[r]))
                ++count;
            next_cls[alive[order[r]]] = static_cast<State>(count);
        }
        ++count;
        cls.swap(next_cls);
        if (count == num_classes)
            break;
        num_classes = count;
    }

    // Representative per class, then breadth-first renumbering.
    std::vector<State> rep(num_classes, 0);
    for (State s : alive)
        rep[cls[s]] = s;
    std::vector<State> number(num_classes, static_cast<State>(-1));
    std::vector<State> bfs{cls[d.initial()]};
    number[cls[d.initial()]] = 0;
    for (std::size_t i = 0; i < bfs.size(); ++i) {
        State c = bfs[i];
        for (std::size_t a = 0; a < k; ++a) {
            State t = cls[d.next(rep[c], a)];
            if (number[t] == static_cast<State>(-1)) {
                number[t] = static_cast<State>(bfs.size());
                bfs.push_back(t);
            }
        }
    }
    std::vector<State> delta(bfs.size() * k);
    std::vector<char> fin(bfs.size(), 0);
    for (std::size_t i = 0; i < bfs.size(); ++i) {
        State s = rep[bfs[i]];
        fin[i] = d.is_final(s);
        for (std::size_t a = 0; a < k; ++a)
            delta[i * k + a] = number[cls[d.next(s, a)]];
    }
    return Dfa(d.alphabet(), bfs.size(), std::move(delta), std::move(fin), 0);
}

/// Subset construction with epsilon closure, guarded by state_cap().
inline Dfa determinize(const Nfa& nfa)
{
    const std::size_t k = nfa.alphabet().size();
    auto closure = [&](std::vector<State>& set) {
        std::vector<char> in(nfa.num_states(), 0);
        for (State s : set)
            in[s] = 1;
        std::vector<State> stack = set;
        while (!stack.empty()) {
            State s = stack.back();
            stack.pop_back();
            for (auto [a, t] : nfa.transitions(s)) {
                if (a == Nfa::epsilon && !in[t]) {
                    in[t] = 1;
                    set.push_back(t);
                    stack.push_back(t);
                }
            }
        }
        std::sort(set.begin(), set.end());
    };

    std::vector<State> start;
    for (State s = 0; s < nfa.num_states(); ++s)
        if (nfa.is_initial(s))
            start.push_back(s);
    closure(start);

    std::unordered_map<std::vector<State>, State, detail::VectorHash> ids;
    std::vector<std::vector<State>> subsets;
    std::vector<State> delta;
    std::vector<char> fin;
    auto intern = [&](std::vector<State>&& set) -> State {
        auto it = ids.find(set);
        if (it != ids.end())
            return it->second;
        detail::check_cap(subsets.size() + 1, "subset construction");
        State id = static_cast<State>(subsets.size());
        ids.emplace(set, id);
        subsets.push_back(std::move(set));
        return id;
    };
    intern(std::move(start));
    std::vector<std::vector<State>> moves(k);
    for (std::size_t i = 0; i < subsets.size(); ++i) {
        for (auto& m : moves)
            m.clear();
        bool is_final = false;
        for (State s : subsets[i]) {
            is_final = is_final || nfa.is_final(s);
            for (auto [a, t] : nfa.transitions(s))
                if (a != Nfa::epsilon)
                    moves[static_cast<std::size_t>(a)].push_back(t);
        }
        fin.push_back(is_final);
        for (std::size_t a = 0; a < k; ++a) {
            auto m = moves[a];
            std::sort(m.begin(), m.end());
            m.erase(std::unique(m.begin(), m.end()), m.end());
            closure(m);
            delta.push_back(intern(std::move(m)));
        }
    }
    return minimize(Dfa(nfa.alphabet(), subsets.size(), std::move(delta), std::move(fin), 0));
}

/// Copies a DFA into an NFA. `initials` / `finals`, when given, replace
/// the DFA's own initial and final markings.
inline Nfa to_nfa(const Dfa& d, const std::vector<char>* initials = nullptr, const std::vector<char>* finals = nullptr)
{
    Nfa n(d.alphabet());
    for (State s = 0; s < d.num_states(); ++s)
        n.add_state(initials ? (*initials)[s] != 0 : s == d.initial(), finals ? (*finals)[s] != 0 : d.is_final(s));
    for (State s = 0; s < d.num_states(); ++s)
        for (std::size_t a = 0; a < d.num_letters(); ++a)
            n.add_transition(s, static_cast<int>(a), d.next(s, a));
    return n;
}

// ---------------------------------------------------------------- builders

inline Dfa empty_language(const Alphabet& a)
{
    return Dfa(a, 1, std::vector<State>(a.size(), 0), {0}, 0);
}

inline Dfa universal_language(const Alphabet& a)
{
    return Dfa(a, 1, std::vector<State>(a.size(), 0), {1}, 0);
}

/// Finite language via its prefix tree plus a sink.
inline Dfa from_words(const Alphabet& alphabet, const std::vector<Word>& words)
{
    const std::size_t k = alphabet.size();
    std::vector<State> delta(2 * k, 1); // state 0 = root, state 1 = sink
    std::vector<char> fin{0, 0};
    for (const auto& w : words) {
        State s = 0;
        for (char c : w) {
            const std::size_t a = alphabet.index(c);
            if (delta[s * k + a] == 1) {
                const State t = static_cast<State>(fin.size());
                fin.push_back(0);
                delta.resize(delta.size() + k, 1);
                delta[s * k + a] = t;
            }
            s = delta[s * k + a];
        }
        fin[s] = 1;
    }
    const std::size_t n = fin.size();
    return minimize(Dfa(alphabet, n, std::move(delta), std::move(fin), 0));
}

inline Dfa from_words(const FiniteLanguage& x) { return from_words(x.alphabet(), x.words()); }

inline Dfa from_word(const Alphabet& a, std::string_view w) { return from_words(a, {Word(w)}); }

// ------------------------------------------------------------- combinations

enum class CombineOp { union_, intersection, difference, concat };

namespace detail {
template <typename Accept>
Dfa product(const Dfa& x, const Dfa& y, Accept accept)
{
    require_same_alphabet(x, y);
    const std::size_t k = x.num_letters();
    std::unordered_map<std::uint64_t, State> ids;
    std::vector<std::pair<State, State>> pairs;
    std::vector<State> delta;
    std::vector<char> fin;
    auto intern = [&](State p, State q) {
        const std::uint64_t key = (std::uint64_t{p} << 32) | q;
        auto [it, inserted] = ids.try_emplace(key, static_cast<State>(pairs.size()));
        if (inserted) {
            check_cap(pairs.size() + 1, "product construction");
            pairs.emplace_back(p, q);
        }
        return it->second;
    };
    intern(x.initial(), y.initial());
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        auto [p, q] = pairs[i];
        fin.push_back(accept(x.is_final(p), y.is_final(q)));
        for (std::size_t a = 0; a < k; ++a)
            delta.push_back(intern(x.next(p, a), y.next(q, a)));
    }
    return minimize(Dfa(x.alphabet(), pairs.size(), std::move(delta), std::move(fin), 0));
}
} // namespace detail

inline Dfa unite(const Dfa& x, const Dfa& y)
{
    return detail::product(x, y, [](bool a, bool b) { return a || b; });
}

inline Dfa intersect(const Dfa& x, const Dfa& y)
{
    return detail::product(x, y, [](bool a, bool b) { return a && b; });
}

inline Dfa subtract(const Dfa& x, const Dfa& y)
{
    return detail::product(x, y, [](bool a, bool b) { return a && !b; });
}

inline Dfa concat(const Dfa& x, const Dfa& y)
{
    detail::require_same_alphabet(x, y);
    Nfa n = to_nfa(x);
    const State offset = static_cast<State>(n.num_states());
    for (State s = 0; s < offset; ++s)
        n.set_final(s, false);
    for (State s = 0; s < y.num_states(); ++s)
        n.add_state(false, y.is_final(s));
    for (State s = 0; s < y.num_states(); ++s)
        for (std::size_t a = 0; a < y.num_letters(); ++a)
            n.add_transition(offset + s, static_cast<int>(a), offset + y.next(s, a));
    for (State s = 0; s < x.num_states(); ++s)
        if (x.is_final(s))
            n.add_transition(s, Nfa::epsilon, offset + y.initial());
    return determinize(n);
}

inline Dfa combine(CombineOp op, const Dfa& x, const Dfa& y)
{
    switch (op) {
    case CombineOp::union_: return unite(x, y);
    case CombineOp::intersection: return intersect(x, y);
    case CombineOp::difference: return subtract(x, y);
    case CombineOp::concat: return concat(x, y);
    }
    throw PreconditionError("unknown combine op");
}

// --------------------------------------------------------------- transforms

inline Dfa complement(const Dfa& d)
{
    std::vector<char> fin(d.num_states());
    for (State s = 0; s < d.num_states(); ++s)
        fin[s] = !d.is_final(s);
    return minimize(Dfa(d.alphabet(), d.num_states(), d.table(), std::move(fin), d.initial()));
}

inline Dfa star(const Dfa& d)
{
    Nfa n = to_nfa(d);
    const State hub = n.add_state(false, true);
    n.set_initial(d.initial(), false);
    n.set_initial(hub, true);
    n.add_transition(hub, Nfa::epsilon, d.initial());
    for (State s = 0; s < d.num_states(); ++s)
        if (d.is_final(s))
            n.add_transition(s, Nfa::epsilon, hub);
    return determinize(n);
}

inline Dfa plus(const Dfa& d) { return concat(d, star(d)); }

inline Dfa reverse(const Dfa& d)
{
    Nfa n(d.alphabet());
    for (State s = 0; s < d.num_states(); ++s)
        n.add_state(d.is_final(s), s == d.initial());
    for (State s = 0; s < d.num_states(); ++s)
        for (std::size_t a = 0; a < d.num_letters(); ++a)
            n.add_transition(d.next(s, a), static_cast<int>(a), s);
    return determinize(n);
}

/// Renames letters: every transition on letter index a moves to perm[a].
/// `perm` must be a permutation of 0..|A|-1.
inline Dfa relabel(const Dfa& d, const std::vector<std::size_t>& perm)
{
    const std::size_t k = d.num_letters();
    if (perm.size() != k)
        throw PreconditionError("relabel permutation has the wrong size");
    std::vector<char> hit(k, 0);
    for (auto p : perm) {
        if (p >= k || hit[p])
            throw PreconditionError("relabel map is not a permutation");
        hit[p] = 1;
    }
    std::vector<State> delta(d.table().size());
    for (State s = 0; s < d.num_states(); ++s)
        for (std::size_t a = 0; a < k; ++a)
            delta[s * k + perm[a]] = d.next(s, a);
    return minimize(Dfa(d.alphabet(), d.num_states(), std::move(delta), d.finals(), d.initial()));
}

/// P(L): words that extend to a member of L.
inline Dfa prefix_closure(const Dfa& d)
{
    auto live = detail::coreachable(d);
    return minimize(Dfa(d.alphabet(), d.num_states(), d.table(), std::move(live), d.initial()));
}

/// S(L): words u with some v such that vu is in L.
inline Dfa suffix_closure(const Dfa& d)
{
    auto reach = detail::reachable(d);
    auto live = detail::coreachable(d);
    std::vector<char> init(d.num_states());
    for (State s = 0; s < d.num_states(); ++s)
        init[s] = reach[s] && live[s];
    return determinize(to_nfa(d, &init));
}

/// F(L): every factor of every member of L.
inline Dfa factor_closure(const Dfa& d)
{
    auto reach = detail::reachable(d);
    auto live = detail::coreachable(d);
    std::vector<char> trim(d.num_states());
    for (State s = 0; s < d.num_states(); ++s)
        trim[s] = reach[s] && live[s];
    return determinize(to_nfa(d, &trim, &trim));
}

/// by^{-1} L = { w : some u in `by` has uw in L }.
inline Dfa left_quotient(const Dfa& l, const Dfa& by)
{
    detail::require_same_alphabet(l, by);
    const std::size_t k = l.num_letters();
    std::vector<char> seen(l.num_states() * by.num_states(), 0);
    std::vector<char> starts(l.num_states(), 0);
    std::vector<std::pair<State, State>> stack{{l.initial(), by.initial()}};
    seen[l.initial() * by.num_states() + by.initial()] = 1;
    while (!stack.empty()) {
        auto [p, q] = stack.back();
        stack.pop_back();
        if (by.is_final(q))
            starts[p] = 1;
        for (std::size_t a = 0; a < k; ++a) {
            State p2 = l.next(p, a), q2 = by.next(q, a);
            auto& flag = seen[p2 * by.num_states() + q2];
            if (!flag) {
                flag = 1;
                stack.emplace_back(p2, q2);
            }
        }
    }
    return determinize(to_nfa(l, &starts));
}

/// L by^{-1} = { w : some u in `by` has wu in L }.
inline Dfa right_quotient(const Dfa& l, const Dfa& by)
{
    detail::require_same_alphabet(l, by);
    const std::size_t k = l.num_letters();
    const std::size_t m = by.num_states();
    std::vector<std::vector<std::vector<State>>> rev_l(l.num_states(), std::vector<std::vector<State>>(k));
    std::vector<std::vector<std::vector<State>>> rev_b(m, std::vector<std::vector<State>>(k));
    for (State s = 0; s < l.num_states(); ++s)
        for (std::size_t a = 0; a < k; ++a)
            rev_l[l.next(s, a)][a].push_back(s);
    for (State s = 0; s < m; ++s)
        for (std::size_t a = 0; a < k; ++a)
            rev_b[by.next(s, a)][a].push_back(s);
    std::vector<char> good(l.num_states() * m, 0);
    std::vector<std::pair<State, State>> stack;
    for (State p = 0; p < l.num_states(); ++p)
        for (State q = 0; q < m; ++q)
            if (l.is_final(p) && by.is_final(q)) {
                good[p * m + q] = 1;
                stack.emplace_back(p, q);
            }
    while (!stack.empty()) {
        auto [p, q] = stack.back();
        stack.pop_back();
        for (std::size_t a = 0; a < k; ++a)
            for (State p0 : rev_l[p][a])
                for (State q0 : rev_b[q][a]) {
                    auto& flag = good[p0 * m + q0];
                    if (!flag) {
                        flag = 1;
                        stack.emplace_back(p0, q0);
                    }
                }
    }
    std::vector<char> fin(l.num_states());
    for (State p = 0; p < l.num_states(); ++p)
        fin[p] = good[p * m + by.initial()];
    return minimize(Dfa(l.alphabet(), l.num_states(), l.table(), std::move(fin), l.initial()));
}

// ---------------------------------------------------------------- decisions

inline bool is_empty(const Dfa& d)
{
    auto reach = detail::reachable(d);
    for (State s = 0; s < d.num_states(); ++s)
        if (reach[s] && d.is_final(s))
            return false;
    return true;
}

inline bool is_universal(const Dfa& d)
{
    auto reach = detail::reachable(d);
    for (State s = 0; s < d.num_states(); ++s)
        if (reach[s] && !d.is_final(s))
            return false;
    return true;
}

inline bool equal(const Dfa& x, const Dfa& y)
{
    detail::require_same_alphabet(x, y);
    return minimize(x) == minimize(y);
}

inline bool member(const Dfa& d, std::string_view w) { return d.accepts(w); }

/// x is a subset of y.
inline bool included(const Dfa& x, const Dfa& y)
{
    return is_empty(subtract(x, y));
}

inline bool is_finite(const Dfa& d)
{
    auto reach = detail::reachable(d);
    auto live = detail::coreachable(d);
    const std::size_t n = d.num_states();
    // Iterative three-colour DFS over trim states looking for a cycle.
    std::vector<char> colour(n, 0);
    for (State root = 0; root < n; ++root) {
        if (!(reach[root] && live[root]) || colour[root])
            continue;
        std::vector<std::pair<State, std::size_t>> stack{{root, 0}};
        colour[root] = 1;
        while (!stack.empty()) {
            auto& [s, a] = stack.back();
            if (a == d.num_letters()) {
                colour[s] = 2;
                stack.pop_back();
                continue;
            }
            State t = d.next(s, a++);
            if (!(reach[t] && live[t]))
                continue;
            if (colour[t] == 1)
                return false;
            if (colour[t] == 0) {
                colour[t] = 1;
                stack.emplace_back(t, 0);
            }
        }
    }
    return true;
}

/// Shortlex-least member, or nullopt for the empty language.
inline std::optional<Word> shortest_word(const Dfa& d)
{
    const std::size_t n = d.num_states();
    std::vector<State> parent(n, static_cast<State>(-1));
    std::vector<char> via(n, 0), seen(n, 0);
    std::deque<State> queue{d.initial()};
    seen[d.initial()] = 1;
    while (!queue.empty()) {
        State s = queue.front();
        queue.pop_front();
        if (d.is_final(s)) {
            Word w;
            for (State t = s; t != d.initial(); t = parent[t])
                w.push_back(via[t]);
            std::reverse(w.begin(), w.end());
            return w;
        }
        for (std::size_t a = 0; a < d.num_letters(); ++a) {
            State t = d.next(s, a);
            if (!seen[t]) {
                seen[t] = 1;
                parent[t] = s;
                via[t] = d.alphabet().letter(a);
                queue.push_back(t);
            }
        }
    }
    return std::nullopt;
}

/// Members of length at most `max_length`, in shortlex order. Throws a
/// ResourceError past `limit` words.
inline std::vector<Word> enumerate(const Dfa& d, std::size_t max_length, std::size_t limit = 1'000'000)
{
    auto live = detail::coreachable(d);
    std::vector<Word> out;
    std::vector<std::pair<Word, State>> level;
    if (live[d.initial()])
        level.emplace_back(Word{}, d.initial());
    for (std::size_t len = 0; !level.empty(); ++len) {
        for (const auto& [w, s] : level)
            if (d.is_final(s))
                out.push_back(w);
        if (out.size() > limit)
            throw ResourceError("enumeration exceeded " + std::to_string(limit) + " words");
        if (len == max_length)
            break;
        std::vector<std::pair<Word, State>> next;
        for (const auto& [w, s] : level)
            for (std::size_t a = 0; a < d.num_letters(); ++a) {
                State t = d.next(s, a);
                if (live[t])
                    next.emplace_back(w + d.alphabet().letter(a), t);
            }
        if (next.size() > limit)
            throw ResourceError("enumeration frontier exceeded " + std::to_string(limit) + " words");
        level = std::move(next);
    }
    return out;
}

/// The first `count` members in shortlex order, considering lengths up to
/// `max_length`. Only branches that can still end in a final state at the
/// current target length are explored, so the cost stays proportional to
/// the output.
inline std::vector<Word> first_words(const Dfa& d, std::size_t count, std::size_t max_length)
{
    const std::size_t n = d.num_states();
    const std::size_t k = d.num_letters();
    // can[r][s]: some word of length exactly r leads from s to a final state.
    std::vector<std::vector<char>> can{std::vector<char>(d.finals())};
    std::vector<Word> out;
    Word cur;
    std::function<void(State, std::size_t)> walk = [&](State s, std::size_t r) {
        if (out.size() >= count)
            return;
        if (r == 0) {
            out.push_back(cur);
            return;
        }
        for (std::size_t a = 0; a < k; ++a) {
            const State t = d.next(s, a);
            if (!can[r - 1][t])
                continue;
            cur.push_back(d.alphabet().letter(a));
            walk(t, r - 1);
            cur.pop_back();
        }
    };
    for (std::size_t len = 0; len <= max_length && out.size() < count; ++len) {
        if (len > 0) {
            std::vector<char> row(n, 0);
            for (State s = 0; s < n; ++s)
                for (std::size_t a = 0; a < k && !row[s]; ++a)
                    row[s] = can[len - 1][d.next(s, a)];
            can.push_back(std::move(row));
        }
        if (can[len][d.initial()])
            walk(d.initial(), len);
    }
    return out;
}

/// All members of a finite language.
inline FiniteLanguage finite_words(const Dfa& d)
{
    if (!is_finite(d))
        throw PreconditionError("language is infinite");
    return FiniteLanguage(d.alphabet(), enumerate(d, d.num_states()));
}

/// Number of states that are reachable and co-reachable.
inline std::size_t trim_size(const Dfa& d)
{
    auto reach = detail::reachable(d);
    auto live = detail::coreachable(d);
    std::size_t n = 0;
    for (State s = 0; s < d.num_states(); ++s)
        n += reach[s] && live[s];
    return n;
}

// ------------------------------------------------------------------ dumping

/// Line-oriented dump: `alphabet`, `state q`, `init q`, `final q`,
/// `trans q a q'` records.
inline std::string dump(const Dfa& d)
{
    std::ostringstream os;
    os << "alphabet " << d.alphabet().letters() << '\n';
    for (State s = 0; s < d.num_states(); ++s)
        os << "state " << s << '\n';
    os << "init " << d.initial() << '\n';
    for (State s = 0; s < d.num_states(); ++s)
        if (d.is_final(s))
            os << "final " << s << '\n';
    for (State s = 0; s < d.num_states(); ++s)
        for (std::size_t a = 0; a < d.num_letters(); ++a)
            os << "trans " << s << ' ' << d.alphabet().letter(a) << ' ' << d.next(s, a) << '\n';
    return os.str();
}

/// Parses the dump format back into a DFA (not minimized).
inline Dfa parse_dump(std::string_view text)
{
    std::istringstream is{std::string(text)};
    std::string line;
    std::optional<Alphabet> alphabet;
    std::size_t states = 0;
    std::optional<State> init;
    std::vector<State> finals;
    std::vector<std::tuple<State, char, State>> trans;
    std::size_t lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string kw;
        if (!(ls >> kw))
            continue;
        auto fail = [&] { return ParseError("dump line " + std::to_string(lineno) + ": malformed '" + line + "'"); };
        if (kw == "alphabet") {
            std::string letters;
            if (!(ls >> letters))
                throw fail();
            alphabet.emplace(letters);
        } else if (kw == "state") {
            State s;
            if (!(ls >> s) || s != states)
                throw fail();
            ++states;
        } else if (kw == "init") {
            State s;
            if (!(ls >> s))
                throw fail();
            init = s;
        } else if (kw == "final") {
            State s;
            if (!(ls >> s))
                throw fail();
            finals.push_back(s);
        } else if (kw == "trans") {
            State p, q;
            char c;
            if (!(ls >> p >> c >> q))
                throw fail();
            trans.emplace_back(p, c, q);
        } else {
            throw fail();
        }
    }
    if (!alphabet || !init)
        throw ParseError("dump lacks alphabet or init record");
    const std::size_t k = alphabet->size();
    std::vector<State> delta(states * k, static_cast<State>(-1));
    for (auto [p, c, q] : trans) {
        if (p >= states || q >= states)
            throw ParseError("dump transition references an undeclared state");
        delta[p * k + alphabet->index(c)] = q;
    }
    if (std::find(delta.begin(), delta.end(), static_cast<State>(-1)) != delta.end())
        throw ParseError("dump is not a complete DFA");
    std::vector<char> fin(states, 0);
    for (State s : finals) {
        if (s >= states)
            throw ParseError("dump final references an undeclared state");
        fin[s] = 1;
    }
    return Dfa(*alphabet, states, std::move(delta), std::move(fin), *init);
}

} // namespace codekit
