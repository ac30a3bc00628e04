#pragma once

// Command implementations behind the `codekit` executable. Each command
// writes a line-oriented `key: value` report and returns the process exit
// code: 0 success, 1 I/O or parse error, 2 precondition failure (including
// resource guards), 3 failed internal verification.

#include <cstdlib>
#include <functional>
#include <optional>
#include <ostream>
#include <string>

#include "codekit/code_analysis.hpp"
#include "codekit/completion.hpp"
#include "codekit/families.hpp"
#include "codekit/hull.hpp"
#include "codekit/io.hpp"
#include "codekit/measure.hpp"
#include "codekit/theta.hpp"

namespace codekit::cli {

enum ExitCode : int { ok = 0, io_or_parse = 1, precondition = 2, verification = 3 };

struct CheckOptions {
    std::string set_file;
    std::optional<std::string> theta_file;
    std::optional<std::string> dist_file;
    bool regular_witness = false;
};

struct CompleteOptions {
    std::string set_file;
    std::string theta_file;
    std::optional<std::string> witness;
    bool overlap_free_witness = false;
};

struct HullOptions {
    std::string set_file;
    std::optional<std::string> theta_file;
};

struct MeasureOptions {
    std::string set_file;
    std::optional<std::string> dist_file;
};

struct GenOptions {
    std::string family;
    std::optional<int> n;
    std::optional<int> k;
    std::optional<std::string> output;
    std::optional<std::string> theta_output;
};

/// Reads CODEKIT_STATE_CAP, when set, into the determinization guard.
inline void apply_environment()
{
    if (const char* cap = std::getenv("CODEKIT_STATE_CAP")) {
        try {
            set_state_cap(static_cast<std::size_t>(std::stoull(cap)));
        } catch (const std::exception&) {
            throw ParseError(std::string("CODEKIT_STATE_CAP='") + cap + "' is not a number");
        }
    }
}

namespace detail {

inline const char* yes_no(bool b) { return b ? "yes" : "no"; }
inline const char* pass_fail(bool b) { return b ? "pass" : "fail"; }

inline std::string join(const Factorization& f)
{
    std::string out;
    for (const auto& w : f)
        out += (out.empty() ? "" : " ") + w;
    return out;
}

inline std::string join(const FiniteLanguage& x)
{
    return join(Factorization(x.words().begin(), x.words().end()));
}

inline ThetaMap load_theta(const std::optional<std::string>& path, const Alphabet& a)
{
    return path ? parse_theta(read_file(*path), a) : ThetaMap::identity(a);
}

inline BernoulliDist load_dist(const std::optional<std::string>& path, const Alphabet& a)
{
    return path ? parse_distribution(read_file(*path), a) : BernoulliDist::uniform(a);
}

inline void print_witness(std::ostream& out, const std::string& key, const std::optional<CodeWitness>& w)
{
    if (!w)
        return;
    out << "witness." << key << "left: " << join(w->left) << '\n';
    out << "witness." << key << "right: " << join(w->right) << '\n';
}

/// Maps library exceptions onto exit codes.
inline int guarded(std::ostream& err, const std::function<int()>& body)
{
    try {
        return body();
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return io_or_parse;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return io_or_parse;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << '\n';
        return precondition;
    } catch (const ResourceError& e) {
        err << "error: " << e.what() << '\n';
        return precondition;
    } catch (const VerificationError& e) {
        err << "error: verification failed: " << e.what() << '\n';
        return verification;
    }
}

} // namespace detail

inline int cmd_check(const CheckOptions& o, std::ostream& out, std::ostream& err)
{
    return detail::guarded(err, [&] {
        const CodeSet cs = parse_code_set(read_file(o.set_file));
        const ThetaMap theta = detail::load_theta(o.theta_file, cs.alphabet);
        const BernoulliDist dist = detail::load_dist(o.dist_file, cs.alphabet);
        const Dfa lang = cs.language();

        if (cs.is_finite_set())
            out << "input: finite " << cs.words->size() << " words\n";
        else
            out << "input: regular " << trim_size(lang) << " states\n";

        CodeVerdict code;
        CodeVerdict theta_code;
        if (cs.is_finite_set()) {
            code = sardinas_patterson_finite(*cs.words);
            theta_code = is_theta_code(*cs.words, theta);
        } else {
            code = is_code_regular(lang, {o.regular_witness});
            theta_code = is_theta_code(lang, theta, {o.regular_witness});
        }
        out << "code: " << detail::yes_no(code.is_code) << '\n';
        detail::print_witness(out, "", code.witness);

        const AffixClass affix = cs.is_finite_set() ? affix_class(*cs.words) : affix_class(lang);
        out << "prefix: " << detail::yes_no(affix.prefix) << '\n';
        out << "suffix: " << detail::yes_no(affix.suffix) << '\n';
        out << "bifix: " << detail::yes_no(affix.bifix()) << '\n';

        const auto thin = is_thin(lang);
        out << "thin: " << detail::yes_no(thin.holds) << '\n';
        if (thin.witness)
            out << "witness.thin: " << *thin.witness << '\n';

        const auto complete = is_complete(lang);
        out << "complete: " << detail::yes_no(complete.holds) << '\n';
        if (complete.witness)
            out << "witness.complete: " << *complete.witness << '\n';

        out << "theta_invariant: " << detail::yes_no(is_theta_invariant(lang, theta)) << '\n';
        out << "theta_code: " << detail::yes_no(theta_code.is_code) << '\n';
        detail::print_witness(out, "theta_code.", theta_code.witness);

        if (cs.is_finite_set())
            out << "measure: " << to_string(measure_finite(*cs.words, dist)) << '\n';
        else
            out << "measure: " << measure_regular(lang, dist).str() << '\n';
        return ok;
    });
}

inline int cmd_complete(const CompleteOptions& o, std::ostream& out, std::ostream& err)
{
    return detail::guarded(err, [&] {
        const CodeSet cs = parse_code_set(read_file(o.set_file));
        const ThetaMap theta = parse_theta(read_file(o.theta_file), cs.alphabet);
        const Dfa x = cs.language();
        const auto tr = build_completion(x, theta, {o.witness, o.overlap_free_witness});
        const auto lemmas = verify_lemmas(tr, x);

        out << "y: " << tr.y << '\n';
        out << "y.exp: " << pretty(tr.y) << '\n';
        out << "z: " << tr.z << '\n';
        out << "z.exp: " << pretty(tr.z) << '\n';
        out << "Z: " << detail::join(tr.Z) << '\n';
        std::string zexp;
        for (const auto& w : tr.Z)
            zexp += (zexp.empty() ? "" : " ") + pretty(w);
        out << "Z.exp: " << zexp << '\n';
        for (const auto& [name, dfa] : {std::pair{"W", &tr.W}, std::pair{"T", &tr.T}, std::pair{"Y", &tr.Y}})
            out << name << ".states: " << trim_size(*dfa) << '\n';
        out << "T.shortest: " << detail::join(first_words(tr.T, 3, 4 * tr.z.size())) << '\n';
        for (const auto& [name, dfa] : {std::pair{"W", &tr.W}, std::pair{"T", &tr.T}, std::pair{"Y", &tr.Y}}) {
            out << "automaton " << name << '\n' << dump(*dfa) << "end\n";
        }
        out << "checks:\n";
        out << "code: " << detail::pass_fail(tr.checks.is_code) << '\n';
        out << "theta_invariant: " << detail::pass_fail(tr.checks.theta_invariant) << '\n';
        out << "complete: " << detail::pass_fail(tr.checks.complete) << '\n';
        out << "contains_input: " << detail::pass_fail(tr.checks.contains_input) << '\n';
        out << "w_decomposes: " << detail::pass_fail(tr.checks.w_decomposes) << '\n';
        out << "lemma.overlap_shape: " << detail::pass_fail(lemmas.overlap_shape) << '\n';
        out << "lemma.factor_free: " << detail::pass_fail(lemmas.factor_free) << '\n';
        out << "lemma.x_star_z_prefix: " << detail::pass_fail(lemmas.prefix) << '\n';
        return tr.checks.all() && lemmas.all() ? ok : verification;
    });
}

inline int cmd_hull(const HullOptions& o, std::ostream& out, std::ostream& err)
{
    return detail::guarded(err, [&] {
        const CodeSet cs = parse_code_set(read_file(o.set_file));
        if (!cs.is_finite_set())
            throw PreconditionError("hull needs a finite set");
        const ThetaMap theta = detail::load_theta(o.theta_file, cs.alphabet);
        const HullResult r = theta_free_hull(*cs.words, theta);
        out << "base: " << detail::join(r.base) << '\n';
        out << "theta_invariant: " << detail::yes_no(r.theta_invariant) << '\n';
        out << "input_code: " << detail::yes_no(r.input_is_code) << '\n';
        if (!r.input_is_code)
            out << "defect_bound: " << r.base.size() << "<=" << cs.words->size() - 1
                << (r.defect_ok ? "" : " violated") << '\n';
        out << "iterations: " << r.iterations << '\n';
        return r.defect_ok ? ok : verification;
    });
}

inline int cmd_measure(const MeasureOptions& o, std::ostream& out, std::ostream& err)
{
    return detail::guarded(err, [&] {
        const CodeSet cs = parse_code_set(read_file(o.set_file));
        const BernoulliDist dist = detail::load_dist(o.dist_file, cs.alphabet);
        if (cs.is_finite_set())
            out << "measure: " << to_string(measure_finite(*cs.words, dist)) << '\n';
        else
            out << "measure: " << measure_regular(cs.language(), dist).str() << '\n';
        return ok;
    });
}

inline int cmd_gen(const GenOptions& o, std::ostream& out, std::ostream& err)
{
    return detail::guarded(err, [&] {
        const Family f = parse_family(o.family);
        const auto uses_n = family_uses_n(f);
        int param = 0;
        if (!uses_n) {
            if (o.n || o.k)
                throw PreconditionError(o.family + " takes no parameter");
        } else if (*uses_n) {
            if (o.k || !o.n)
                throw PreconditionError(o.family + " needs --n");
            param = *o.n;
        } else {
            if (o.n || !o.k)
                throw PreconditionError(o.family + " needs -k");
            param = *o.k;
        }
        const GeneratedFamily g = generate({f, param});
        const std::string text = g.words ? write_code_set(*g.words) : write_regex_set(g.alphabet, *g.regex);
        if (o.output)
            write_file(*o.output, text);
        else
            out << text;
        if (o.theta_output)
            write_file(*o.theta_output, write_theta(g.theta));
        return ok;
    });
}

} // namespace codekit::cli
