#pragma once

// Regex text syntax: letters, juxtaposition = concatenation, `|` union,
// postfix `*` and `+`, parentheses, `_` = epsilon, `~` = empty set.
// Whitespace is ignored.

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "codekit/automata.hpp"
#include "codekit/error.hpp"
#include "codekit/words.hpp"

namespace codekit {

struct RegexNode;
using Regex = std::shared_ptr<const RegexNode>;

struct RegexNode {
    enum class Kind { letter, epsilon, empty, union_, concat, star, plus };
    Kind kind;
    char letter = 0;
    std::vector<Regex> children;
};

namespace regex {
inline Regex letter(char c) { return std::make_shared<RegexNode>(RegexNode{RegexNode::Kind::letter, c, {}}); }
inline Regex epsilon() { return std::make_shared<RegexNode>(RegexNode{RegexNode::Kind::epsilon, 0, {}}); }
inline Regex empty() { return std::make_shared<RegexNode>(RegexNode{RegexNode::Kind::empty, 0, {}}); }
inline Regex either(Regex a, Regex b)
{
    return std::make_shared<RegexNode>(RegexNode{RegexNode::Kind::union_, 0, {std::move(a), std::move(b)}});
}
inline Regex then(Regex a, Regex b)
{
    return std::make_shared<RegexNode>(RegexNode{RegexNode::Kind::concat, 0, {std::move(a), std::move(b)}});
}
inline Regex star(Regex a) { return std::make_shared<RegexNode>(RegexNode{RegexNode::Kind::star, 0, {std::move(a)}}); }
inline Regex plus(Regex a) { return std::make_shared<RegexNode>(RegexNode{RegexNode::Kind::plus, 0, {std::move(a)}}); }
} // namespace regex

namespace detail {

class RegexParser {
public:
    RegexParser(std::string_view text, const Alphabet& alphabet) : text_(text), alphabet_(alphabet) {}

    Regex parse()
    {
        Regex r = alternation();
        skip();
        if (pos_ != text_.size())
            fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return r;
    }

private:
    Regex alternation()
    {
        Regex r = concatenation();
        while (peek() == '|') {
            ++pos_;
            r = regex::either(r, concatenation());
        }
        return r;
    }

    Regex concatenation()
    {
        Regex r;
        for (;;) {
            char c = peek();
            if (c == 0 || c == '|' || c == ')')
                break;
            Regex f = postfix();
            r = r ? regex::then(r, f) : f;
        }
        return r ? r : regex::epsilon();
    }

    Regex postfix()
    {
        Regex r = atom();
        for (;;) {
            char c = peek();
            if (c == '*') {
                ++pos_;
                r = regex::star(r);
            } else if (c == '+') {
                ++pos_;
                r = regex::plus(r);
            } else {
                return r;
            }
        }
    }

    Regex atom()
    {
        char c = peek();
        if (c == '(') {
            ++pos_;
            Regex r = alternation();
            if (peek() != ')')
                fail("missing ')'");
            ++pos_;
            return r;
        }
        if (c == '_') {
            ++pos_;
            return regex::epsilon();
        }
        if (c == '~') {
            ++pos_;
            return regex::empty();
        }
        if (c == '*' || c == '+')
            fail("postfix operator without operand");
        if (!alphabet_.contains(c))
            fail("letter '" + std::string(1, c) + "' not in alphabet {" + alphabet_.letters() + "}");
        ++pos_;
        return regex::letter(c);
    }

    char peek()
    {
        skip();
        return pos_ < text_.size() ? text_[pos_] : 0;
    }

    void skip()
    {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t'))
            ++pos_;
    }

    [[noreturn]] void fail(const std::string& what) const
    {
        throw ParseError("regex '" + std::string(text_) + "' at " + std::to_string(pos_) + ": " + what);
    }

    std::string_view text_;
    const Alphabet& alphabet_;
    std::size_t pos_ = 0;
};

// Thompson fragment: one entry and one exit state.
struct Fragment {
    State in, out;
};

inline Fragment thompson(Nfa& n, const RegexNode& r)
{
    using K = RegexNode::Kind;
    const State in = n.add_state(), out = n.add_state();
    switch (r.kind) {
    case K::letter:
        n.add_transition(in, static_cast<int>(n.alphabet().index(r.letter)), out);
        break;
    case K::epsilon:
        n.add_transition(in, Nfa::epsilon, out);
        break;
    case K::empty:
        break;
    case K::union_:
        for (const auto& c : r.children) {
            auto f = thompson(n, *c);
            n.add_transition(in, Nfa::epsilon, f.in);
            n.add_transition(f.out, Nfa::epsilon, out);
        }
        break;
    case K::concat: {
        State cur = in;
        for (const auto& c : r.children) {
            auto f = thompson(n, *c);
            n.add_transition(cur, Nfa::epsilon, f.in);
            cur = f.out;
        }
        n.add_transition(cur, Nfa::epsilon, out);
        break;
    }
    case K::star:
    case K::plus: {
        auto f = thompson(n, *r.children.front());
        n.add_transition(in, Nfa::epsilon, f.in);
        n.add_transition(f.out, Nfa::epsilon, out);
        n.add_transition(f.out, Nfa::epsilon, f.in);
        if (r.kind == K::star)
            n.add_transition(in, Nfa::epsilon, out);
        break;
    }
    }
    return {in, out};
}

} // namespace detail

inline Regex parse_regex(std::string_view text, const Alphabet& alphabet)
{
    return detail::RegexParser(text, alphabet).parse();
}

inline Dfa compile(const Regex& r, const Alphabet& alphabet)
{
    Nfa n(alphabet);
    auto f = detail::thompson(n, *r);
    n.set_initial(f.in);
    n.set_final(f.out);
    return determinize(n);
}

inline Dfa compile(std::string_view text, const Alphabet& alphabet)
{
    return compile(parse_regex(text, alphabet), alphabet);
}

inline Dfa compile(const FiniteLanguage& x) { return from_words(x); }

inline std::string to_string(const Regex& r)
{
    using K = RegexNode::Kind;
    auto wrap = [](const Regex& c, bool paren) { return paren ? "(" + to_string(c) + ")" : to_string(c); };
    switch (r->kind) {
    case K::letter: return std::string(1, r->letter);
    case K::epsilon: return "_";
    case K::empty: return "~";
    case K::union_: return to_string(r->children[0]) + "|" + to_string(r->children[1]);
    case K::concat:
        return wrap(r->children[0], r->children[0]->kind == K::union_) +
               wrap(r->children[1], r->children[1]->kind == K::union_);
    case K::star:
    case K::plus: {
        const auto& c = r->children[0];
        const bool paren = c->kind == K::union_ || c->kind == K::concat;
        return wrap(c, paren) + (r->kind == K::star ? "*" : "+");
    }
    }
    return "~";
}

} // namespace codekit
