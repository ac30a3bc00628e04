#pragma once

// Embedding of a non-complete theta-invariant code X into a complete one.
//
//   y  a word outside F(X*) whose first and last letters differ
//   z  = last(y)^|y| . y . first(y)^|y|
//   Z  = the theta-orbit of z
//   W  = Z A* & A* Z
//   T  = W - (W | X)(W | X)+
//
// X | T is then a complete theta-invariant code containing X. Every
// intermediate is kept as a minimal DFA; T is never enumerated.

#include <optional>
#include <string>
#include <vector>

#include "codekit/automata.hpp"
#include "codekit/code_analysis.hpp"
#include "codekit/error.hpp"
#include "codekit/theta.hpp"
#include "codekit/words.hpp"

namespace codekit {

struct CompletionChecks {
    bool is_code = false;          // X | T is a code
    bool theta_invariant = false;  // X | T is theta-invariant
    bool complete = false;         // X | T is complete
    bool contains_input = false;   // X is a subset of X | T
    bool w_decomposes = false;     // W is a subset of (X | T)+

    bool all() const noexcept { return is_code && theta_invariant && complete && contains_input && w_decomposes; }
};

struct CompletionTrace {
    Word y;
    Word z;
    FiniteLanguage Z;
    Dfa W;
    Dfa T;
    Dfa Y;
    CompletionChecks checks;
};

struct CompletionOptions {
    std::optional<Word> witness;   // replaces the default shortest non-factor
    bool overlap_free_witness = false;
};

namespace detail {
inline Dfa factors_of_star(const Dfa& x) { return factor_closure(star(x)); }
} // namespace detail

/// Shortlex-least word outside F(X*).
inline Word find_witness(const Dfa& x)
{
    if (x.alphabet().size() < 2)
        throw PreconditionError("completion needs at least two letters");
    auto c = is_complete(x);
    if (c.holds)
        throw PreconditionError("already complete: no word lies outside F(X*)");
    return *c.witness;
}

/// Throws unless y is a word outside F(X*).
inline void validate_witness(const Dfa& x, std::string_view y)
{
    x.alphabet().check_word(y);
    if (y.empty() || detail::factors_of_star(x).accepts(y))
        throw PreconditionError("witness '" + std::string(y) + "' is a factor of X*");
}

/// Makes the end letters differ: y unchanged when they already do,
/// otherwise a.y.a' with a the first letter other than last(y) and a' the
/// first letter other than a. The result contains y, so it stays outside
/// F(X*).
inline Word normalize_witness(const Alphabet& alphabet, std::string_view y)
{
    if (y.empty())
        throw PreconditionError("witness must be nonempty");
    if (y.front() != y.back())
        return Word(y);
    if (alphabet.size() < 2)
        throw PreconditionError("completion needs at least two letters");
    const std::string& letters = alphabet.letters();
    const char a = letters[0] != y.back() ? letters[0] : letters[1];
    const char a_bar = letters[0] != a ? letters[0] : letters[1];
    return a + Word(y) + a_bar;
}

/// Prepends copies of the first letter until y is overlapping-free. End
/// letters are preserved, and y remains a factor of the result.
inline Word overlap_free_extension(std::string_view y)
{
    Word w(y);
    while (!overlapping_free(w))
        w.insert(w.begin(), w.front());
    return w;
}

inline Word build_z(std::string_view y)
{
    if (y.size() < 2 || y.front() == y.back())
        throw PreconditionError("z needs a witness with distinct end letters");
    return repeat(y.back(), y.size()) + Word(y) + repeat(y.front(), y.size());
}

/// theta-orbit of z, with each member checked against the block shape
/// c'^n . v . c^n, v starting with c and ending with c' (c != c').
inline FiniteLanguage orbit_Z(std::string_view z, const ThetaMap& t)
{
    if (z.size() % 3 != 0 || z.size() < 6)
        throw PreconditionError("z must have length 3|y| with |y| >= 2");
    const std::size_t n = z.size() / 3;
    FiniteLanguage zs = orbit(t, z);
    for (const auto& e : zs) {
        const char head = e[0], tail = e[3 * n - 1];
        bool ok = head != tail && e[n] == tail && e[2 * n - 1] == head;
        for (std::size_t i = 0; i < n && ok; ++i)
            ok = e[i] == head && e[2 * n + i] == tail;
        if (!ok)
            throw VerificationError("orbit member " + e + " lacks the end-block shape");
    }
    return zs;
}

inline Dfa build_W(const FiniteLanguage& zs)
{
    if (zs.empty())
        throw PreconditionError("Z must be nonempty");
    for (const auto& e : zs)
        if (e.size() != zs.words().front().size())
            throw PreconditionError("Z words must share one length");
    const Dfa z = from_words(zs);
    const Dfa all = universal_language(zs.alphabet());
    return intersect(concat(z, all), concat(all, z));
}

inline Dfa build_T(const Dfa& w, const Dfa& x)
{
    const Dfa u = unite(w, x);
    return subtract(w, concat(u, plus(u)));
}

/// Runs the whole construction and records every postcondition without
/// throwing on a failed check; see complete_code for the strict form.
inline CompletionTrace build_completion(const Dfa& x_in, const ThetaMap& t, const CompletionOptions& opts = {})
{
    const Dfa x = minimize(x_in);
    if (!(t.alphabet() == x.alphabet()))
        throw PreconditionError("theta alphabet differs from the language alphabet");
    if (x.alphabet().size() < 2)
        throw PreconditionError("completion needs at least two letters");
    if (x.is_final(x.initial()))
        throw PreconditionError("the empty word cannot belong to a code");
    if (!is_code_regular(x).is_code)
        throw PreconditionError("input is not a code");
    if (!is_theta_invariant(x, t))
        throw PreconditionError("input is not theta-invariant");

    Word y;
    if (opts.witness) {
        validate_witness(x, *opts.witness);
        y = *opts.witness;
    } else {
        y = find_witness(x);
    }
    y = normalize_witness(x.alphabet(), y);
    if (opts.overlap_free_witness)
        y = overlap_free_extension(y);

    CompletionTrace tr;
    tr.y = y;
    tr.z = build_z(y);
    tr.Z = orbit_Z(tr.z, t);
    tr.W = build_W(tr.Z);
    tr.T = build_T(tr.W, x);
    tr.Y = unite(x, tr.T);

    tr.checks.is_code = is_code_regular(tr.Y).is_code;
    tr.checks.theta_invariant = is_theta_invariant(tr.Y, t);
    tr.checks.complete = is_complete(tr.Y).holds;
    tr.checks.contains_input = included(x, tr.Y);
    tr.checks.w_decomposes = included(tr.W, plus(tr.Y));
    return tr;
}

/// Embeds X into the complete theta-invariant code X | T. Throws a
/// VerificationError if any recorded check fails.
inline CompletionTrace complete_code(const Dfa& x, const ThetaMap& t, const CompletionOptions& opts = {})
{
    auto tr = build_completion(x, t, opts);
    if (!tr.checks.all())
        throw VerificationError("completion postconditions failed");
    return tr;
}

struct LemmaReport {
    bool overlap_shape = false;   // every overlap inside Z has the u b^k / b^k v form
    bool factor_free = false;     // A+ Z A+ and Z X* Z are disjoint
    bool prefix = false;          // X* Z is a prefix set

    bool all() const noexcept { return overlap_shape && factor_free && prefix; }
};

/// Re-checks the structural facts the construction rests on.
inline LemmaReport verify_lemmas(const CompletionTrace& tr, const Dfa& x)
{
    LemmaReport r;
    const std::size_t ny = tr.y.size();

    r.overlap_shape = true;
    for (const auto& zi : tr.Z)
        for (const auto& zj : tr.Z) {
            if (zi.size() != zj.size()) {
                r.overlap_shape = false;
                continue;
            }
            const std::size_t n = zi.size();
            for (std::size_t u = 1; u < n; ++u) {
                // zi v = u zj with |u| = |v|: the overlap is zi's suffix of length n - u.
                const std::string_view s = std::string_view(zi).substr(u);
                if (s != std::string_view(zj).substr(0, n - u))
                    continue;
                const bool unary = s.find_first_not_of(s.front()) == std::string_view::npos;
                if (!(u >= 2 * ny && unary && s.size() <= ny))
                    r.overlap_shape = false;
            }
        }

    const Dfa z = from_words(tr.Z);
    const Dfa plus_a = detail::nonempty_words(x.alphabet());
    const Dfa inner = concat(concat(plus_a, z), plus_a);
    const Dfa framed = concat(concat(z, star(x)), z);
    r.factor_free = is_empty(intersect(inner, framed));

    const Dfa xz = concat(star(x), z);
    r.prefix = affix_class(xz).prefix;
    return r;
}

} // namespace codekit
