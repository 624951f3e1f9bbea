#pragma once

#include <cctype>
#include <optional>
#include <string>
#include <string_view>

#include "geoproof/polynomial.hpp"

namespace geoproof {

// ---------------------------------------------------------------------------
// Parsing.
//
// Grammar (whitespace insignificant):
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := base ('^' nat)?
//   base   := rational | variable | '(' expr ')'
//   rational := digits ('/' digits)?
// Variables must be declared in the supplied table.
// ---------------------------------------------------------------------------

namespace detail {

class PolyParser {
  public:
    PolyParser(std::string_view text, VarTable::Ptr table)
        : text_(text), table_(std::move(table)) {}

    PolyQ parse() {
        PolyQ p = expr();
        skip_ws();
        if (pos_ != text_.size()) throw parse_error("unexpected trailing input", pos_);
        return p;
    }

  private:
    PolyQ expr() {
        skip_ws();
        bool neg = false;
        if (peek() == '+' || peek() == '-') neg = (take() == '-');
        PolyQ acc = term();
        if (neg) acc = -acc;
        for (;;) {
            skip_ws();
            char c = peek();
            if (c != '+' && c != '-') break;
            take();
            PolyQ t = term();
            acc = (c == '-') ? acc - t : acc + t;
        }
        return acc;
    }

    PolyQ term() {
        PolyQ acc = factor();
        for (;;) {
            skip_ws();
            if (peek() != '*') break;
            take();
            acc = acc * factor();
        }
        return acc;
    }

    PolyQ factor() {
        PolyQ b = base();
        skip_ws();
        if (peek() == '^') {
            take();
            skip_ws();
            std::size_t at = pos_;
            unsigned long e = natural();
            if (e > 0xFFFF) throw parse_error("exponent too large", at);
            PolyQ r = PolyQ::constant(table_, Rational(1));
            for (unsigned long i = 0; i < e; ++i) r = r * b;
            return r;
        }
        return b;
    }

    PolyQ base() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            take();
            PolyQ inner = expr();
            skip_ws();
            if (peek() != ')') throw parse_error("expected ')'", pos_);
            take();
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return rational_lit();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return variable();
        throw parse_error("expected a number, variable or '('", pos_);
    }

    PolyQ rational_lit() {
        std::string num = digits();
        if (peek() == '/') {
            take();
            std::string den = digits();
            return PolyQ::constant(table_, Rational(Integer(num), Integer(den)));
        }
        return PolyQ::constant(table_, Rational(Integer(num)));
    }

    PolyQ variable() {
        std::size_t at = pos_;
        std::string name;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            name += text_[pos_++];
        auto v = table_->find(name);
        if (!v) throw unknown_variable_error(name + " (at position " + std::to_string(at) + ")");
        return PolyQ::variable(table_, *v, Rational(1));
    }

    unsigned long natural() {
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            throw parse_error("expected a number", pos_);
        unsigned long v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            v = v * 10 + static_cast<unsigned long>(text_[pos_++] - '0');
        return v;
    }

    std::string digits() {
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            throw parse_error("expected digits", pos_);
        std::string s;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            s += text_[pos_++];
        return s;
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    char take() { return text_[pos_++]; }

    std::string_view text_;
    VarTable::Ptr table_;
    std::size_t pos_ = 0;
};

}  // namespace detail

/// Parse polynomial text over the given universe.
inline PolyQ parse_poly(std::string_view text, const VarTable::Ptr& table) {
    return detail::PolyParser(text, table).parse();
}

// ---------------------------------------------------------------------------
// Printing. Canonical print/parse round-trips exactly.
// ---------------------------------------------------------------------------

inline std::string coeff_to_string(const Rational& c) { return c.to_string(); }

template <scalar_field C>
std::string to_string(const Polynomial<C>& f, const TermOrder* ord = nullptr) {
    if (f.is_zero()) return "0";
    std::vector<const typename Polynomial<C>::Term*> ts;
    ts.reserve(f.term_count());
    for (const auto& t : f.terms()) ts.push_back(&t);
    if (ord)
        std::sort(ts.begin(), ts.end(), [&](auto* x, auto* y) { return ord->greater(x->mono, y->mono); });

    std::string out;
    bool first = true;
    for (const auto* t : ts) {
        std::string cs = coeff_to_string(t->coeff);
        bool neg = !cs.empty() && cs[0] == '-';
        if (neg) cs = cs.substr(1);
        out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
        first = false;

        std::string mono;
        for (std::size_t v = 0; v < t->mono.size(); ++v) {
            std::uint16_t e = t->mono[static_cast<VarId>(v)];
            if (!e) continue;
            if (!mono.empty()) mono += "*";
            mono += f.table()->name(static_cast<VarId>(v));
            if (e > 1) mono += "^" + std::to_string(e);
        }
        bool needs_coeff = mono.empty() || cs != "1";
        if (needs_coeff) {
            out += cs;
            if (!mono.empty()) out += "*";
        }
        out += mono;
    }
    return out;
}

}  // namespace geoproof
