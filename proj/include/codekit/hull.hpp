#pragma once

// Free hulls of finite sets, plain and theta-invariant.
//
// The hull is reached by closing the submonoid under the stability
// criterion: a submonoid M is free iff u, v, uw, wv in M imply w in M. Any
// such w lies in every free submonoid containing M, so adding the shortest
// one never leaves the hull. For a theta-invariant input the generators are
// also closed under theta, which keeps M inside the smallest theta-invariant
// free submonoid. No termination proof is claimed for arbitrary inputs; the
// loop is capped.

#include <optional>
#include <string>
#include <vector>

#include "codekit/automata.hpp"
#include "codekit/code_analysis.hpp"
#include "codekit/error.hpp"
#include "codekit/theta.hpp"
#include "codekit/words.hpp"

namespace codekit {

/// A finitely generated submonoid: generators and the language they span.
class Submonoid {
public:
    explicit Submonoid(FiniteLanguage generators)
        : generators_(std::move(generators)), language_(star(from_words(generators_)))
    {
        if (generators_.contains_epsilon())
            throw PreconditionError("submonoid generators must be nonempty words");
    }

    const FiniteLanguage& generators() const noexcept { return generators_; }
    const Dfa& language() const noexcept { return language_; }

private:
    FiniteLanguage generators_;
    Dfa language_;
};

/// Minimal generating set (M - eps) - (M - eps)^2. It is a subset of the
/// generators, so it is enumerated up to the longest generator.
inline FiniteLanguage submonoid_base(const Submonoid& m)
{
    const Dfa& lang = m.language();
    const Dfa nonempty = subtract(lang, from_words(lang.alphabet(), {Word{}}));
    const Dfa base = subtract(nonempty, concat(nonempty, nonempty));
    FiniteLanguage out(lang.alphabet(), enumerate(base, m.generators().max_length()));
    if (!included(base, from_words(out)))
        throw VerificationError("minimal generating set has a word longer than every generator");
    return out;
}

/// Shortest w outside M with u, v in M such that uw and wv are in M,
/// i.e. the shortlex-least word of (M^{-1}M and MM^{-1}) minus M.
inline std::optional<Word> stability_witness(const Submonoid& m)
{
    const Dfa& lang = m.language();
    return shortest_word(subtract(intersect(left_quotient(lang, lang), right_quotient(lang, lang)), lang));
}

struct HullResult {
    FiniteLanguage base;
    bool input_is_code = false;
    bool theta_invariant = false;
    /// |base| <= |X| - 1 whenever X is not a code (vacuously true otherwise).
    bool defect_ok = false;
    std::size_t iterations = 0;
};

inline constexpr std::size_t default_hull_cap = 1000;

/// Base of the smallest theta-invariant free submonoid containing X.
inline HullResult theta_free_hull(const FiniteLanguage& x, const ThetaMap& t, std::size_t cap = default_hull_cap)
{
    if (x.contains_epsilon())
        throw PreconditionError("hull input must not contain the empty word");
    if (x.empty())
        throw PreconditionError("hull input must be nonempty");
    if (!(t.alphabet() == x.alphabet()))
        throw PreconditionError("theta alphabet differs from the set alphabet");
    if (!is_theta_invariant(x, t))
        throw PreconditionError("input set is not theta-invariant; take its theta-orbit union first");

    HullResult r;
    r.input_is_code = sardinas_patterson_finite(x).is_code;

    FiniteLanguage gens = x;
    for (;;) {
        gens = submonoid_base(Submonoid(orbit_union(t, gens)));
        const Submonoid m(gens);
        const auto w = stability_witness(m);
        if (!w)
            break;
        if (++r.iterations > cap)
            throw ResourceError("hull closure exceeded " + std::to_string(cap) + " iterations");
        gens = gens.with(*w);
    }

    for (const auto& y : gens)
        if (y.size() > x.max_length())
            throw VerificationError("hull generator '" + y + "' is longer than every input word");
    const Dfa hull = star(from_words(gens));
    for (const auto& w : x)
        if (!hull.accepts(w))
            throw VerificationError("input word '" + w + "' is outside the hull");
    if (!sardinas_patterson_finite(gens).is_code)
        throw VerificationError("hull base is not a code");

    r.base = gens;
    r.theta_invariant = is_theta_invariant(gens, t);
    r.defect_ok = r.input_is_code || gens.size() + 1 <= x.size();
    return r;
}

/// Plain free hull: the theta-invariant hull for the identity.
inline HullResult free_hull(const FiniteLanguage& x, std::size_t cap = default_hull_cap)
{
    return theta_free_hull(x, ThetaMap::identity(x.alphabet()), cap);
}

} // namespace codekit
