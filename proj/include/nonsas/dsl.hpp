#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "nonsas/domain.hpp"
#include "nonsas/errors.hpp"
#include "nonsas/geometry.hpp"
#include "nonsas/labeling.hpp"

namespace nonsas::dsl {

// ---------------------------------------------------------------------------
// Tokens

enum class TokKind { Identifier, Keyword, Symbol, Fraction, End };

struct Token {
    TokKind kind;
    std::string lexeme;
    int line = 1, column = 1;
};

inline bool is_keyword(const std::string& s) {
    static const char* kws[] = {"domain", "axiom",  "forall", "exists", "exists_unique",
                                "where",  "in",     "and",    "or",     "given",
                                "point",  "line",   "ray",    "angle"};
    for (auto k : kws)
        if (s == k) return true;
    return false;
}

inline std::vector<Token> tokenize(const std::string& src) {
    std::vector<Token> out;
    int line = 1, col = 1;
    size_t i = 0;
    auto step = [&](size_t n = 1) {
        for (size_t k = 0; k < n; ++k) {
            if (src[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
            ++i;
        }
    };
    while (i < src.size()) {
        char c = src[i];
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
            step();
            continue;
        }
        if (c == '#') {
            while (i < src.size() && src[i] != '\n') step();
            continue;
        }
        int tl = line, tc = col;
        if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_') {
            size_t j = i;
            while (j < src.size() &&
                   ((src[j] >= 'a' && src[j] <= 'z') || (src[j] >= 'A' && src[j] <= 'Z') ||
                    (src[j] >= '0' && src[j] <= '9') || src[j] == '_'))
                ++j;
            std::string lex = src.substr(i, j - i);
            step(j - i);
            out.push_back({is_keyword(lex) ? TokKind::Keyword : TokKind::Identifier, lex, tl, tc});
            continue;
        }
        if (c >= '0' && c <= '9') {
            size_t j = i;
            while (j < src.size() && src[j] >= '0' && src[j] <= '9') ++j;
            if (j < src.size() && src[j] == '/' && j + 1 < src.size() && src[j + 1] >= '0' &&
                src[j + 1] <= '9') {
                ++j;
                while (j < src.size() && src[j] >= '0' && src[j] <= '9') ++j;
            }
            std::string lex = src.substr(i, j - i);
            step(j - i);
            out.push_back({TokKind::Fraction, lex, tl, tc});
            continue;
        }
        if (c == '-' && i + 1 < src.size() && src[i + 1] == '>') {
            step(2);
            out.push_back({TokKind::Symbol, "->", tl, tc});
            continue;
        }
        if (c == '(' || c == ')' || c == ':' || c == ',' || c == '!') {
            step();
            out.push_back({TokKind::Symbol, std::string(1, c), tl, tc});
            continue;
        }
        throw ParseFailure("lex error: illegal character", line, col);
    }
    out.push_back({TokKind::End, "<eof>", line, col});
    return out;
}

// ---------------------------------------------------------------------------
// AST

enum class Sort { Point, Line, Ray, Angle };

inline const char* to_string(Sort s) {
    switch (s) {
        case Sort::Point: return "point";
        case Sort::Line: return "line";
        case Sort::Ray: return "ray";
        default: return "angle";
    }
}

struct Term {
    // Either a variable reference or the angle(h, k) former.
    std::string var;  // empty for the former
    std::shared_ptr<Term> a, b;
    int line = 0, column = 0;
};

struct Formula;
using FormulaPtr = std::shared_ptr<Formula>;

struct Binder {
    std::string var;
    std::string domain;  // declared carrier name
    int line = 0, column = 0;
};

struct Formula {
    enum class Kind { Forall, Exists, Not, And, Or, Implies, Pred };
    Kind kind;
    // quantifiers
    std::vector<Binder> binders;
    FormulaPtr guard;  // may be null
    // connectives: lhs/rhs (Not uses lhs only); quantifier body in lhs
    FormulaPtr lhs, rhs;
    // predicate
    std::string pred;
    std::vector<std::shared_ptr<Term>> args;
    int line = 0, column = 0;
};

struct DomainDecl {
    std::string name;
    Sort sort;
    bool given = false;  // restrict to the explicitly listed carrier
    int line = 0, column = 0;
};

struct AxiomDecl {
    std::string name;
    FormulaPtr body;
    int line = 0, column = 0;
};

struct Program {
    std::vector<DomainDecl> decls;
    std::vector<AxiomDecl> axioms;
};

// ---------------------------------------------------------------------------
// Predicate signatures (also drives sort checking)

struct PredSig {
    std::vector<Sort> sorts;
    bool polymorphic_eq = false;  // eq: any pair of equal sorts
};

inline const std::map<std::string, PredSig>& predicate_signatures() {
    using S = Sort;
    static const std::map<std::string, PredSig> table = {
        {"on", {{S::Point, S::Line}}},
        {"between", {{S::Point, S::Point, S::Point}}},
        {"collinear", {{S::Point, S::Point, S::Point}}},
        {"parallel", {{S::Line, S::Line}}},
        {"same_side", {{S::Line, S::Point, S::Point}}},
        {"in_interior", {{S::Angle, S::Ray}}},
        {"intersects", {{S::Line, S::Line}}},
        {"seg_cong", {{S::Point, S::Point, S::Point, S::Point}}},
        {"ang_cong", {{S::Angle, S::Angle}}},
        {"label_lt", {{S::Angle, S::Angle}}},
        {"label_sum_lt_two_rights", {{S::Angle, S::Angle}}},
        {"label_sum_eq", {{S::Angle, S::Angle, S::Angle}}},
        {"is_supplementary", {{S::Angle, S::Angle}}},
        {"eq", {{}, true}},
        {"same_vertex", {{S::Ray, S::Ray}}},
        {"forms_angle", {{S::Ray, S::Ray}}},
        {"toward_each_other", {{S::Ray, S::Ray}}},
        {"same_ray_side", {{S::Ray, S::Ray, S::Ray}}},
        {"meets_on_side", {{S::Ray, S::Ray, S::Ray}}},
        {"triangle", {{S::Point, S::Point, S::Point}}},
        {"triangle_sum_two_rights", {{S::Point, S::Point, S::Point}}},
    };
    return table;
}

// ---------------------------------------------------------------------------
// Parser

namespace detail {

class Parser {
  public:
    explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

    Program parse_program() {
        Program p;
        while (at_keyword("domain")) p.decls.push_back(parse_decl());
        if (!at_keyword("axiom")) fail("expected 'axiom'");
        while (at_keyword("axiom")) p.axioms.push_back(parse_axiom());
        if (cur().kind != TokKind::End) fail("expected 'axiom' or end of input");
        return p;
    }

  private:
    const Token& cur() const { return toks_[pos_]; }
    const Token& advance() { return toks_[pos_++]; }
    bool at_keyword(const std::string& k) const {
        return cur().kind == TokKind::Keyword && cur().lexeme == k;
    }
    bool at_symbol(const std::string& s) const {
        return cur().kind == TokKind::Symbol && cur().lexeme == s;
    }
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseFailure("parse error: " + msg + ", got '" + cur().lexeme + "'", cur().line,
                           cur().column);
    }
    Token expect_keyword(const std::string& k) {
        if (!at_keyword(k)) fail("expected '" + k + "'");
        return advance();
    }
    Token expect_symbol(const std::string& s) {
        if (!at_symbol(s)) fail("expected '" + s + "'");
        return advance();
    }
    Token expect_identifier() {
        if (cur().kind != TokKind::Identifier) fail("expected identifier");
        return advance();
    }

    DomainDecl parse_decl() {
        Token kw = expect_keyword("domain");
        DomainDecl d;
        d.line = kw.line;
        d.column = kw.column;
        d.name = expect_identifier().lexeme;
        expect_symbol(":");
        if (at_keyword("point"))
            d.sort = Sort::Point;
        else if (at_keyword("line"))
            d.sort = Sort::Line;
        else if (at_keyword("ray"))
            d.sort = Sort::Ray;
        else if (at_keyword("angle"))
            d.sort = Sort::Angle;
        else
            fail("expected a sort (point, line, ray, angle)");
        advance();
        if (at_keyword("given")) {
            advance();
            d.given = true;
        }
        return d;
    }

    AxiomDecl parse_axiom() {
        Token kw = expect_keyword("axiom");
        AxiomDecl a;
        a.line = kw.line;
        a.column = kw.column;
        a.name = expect_identifier().lexeme;
        expect_symbol(":");
        a.body = parse_formula();
        return a;
    }

    // implies (right-assoc, lowest) > or > and > ! > atoms; quantifiers swallow
    // the longest formula to the right of their ':'.
    FormulaPtr parse_formula() { return parse_implies(); }

    FormulaPtr parse_implies() {
        FormulaPtr l = parse_or();
        if (at_symbol("->")) {
            Token t = advance();
            FormulaPtr r = parse_implies();
            auto f = std::make_shared<Formula>();
            f->kind = Formula::Kind::Implies;
            f->lhs = l;
            f->rhs = r;
            f->line = t.line;
            f->column = t.column;
            return f;
        }
        return l;
    }

    FormulaPtr parse_or() {
        FormulaPtr l = parse_and();
        while (at_keyword("or")) {
            Token t = advance();
            FormulaPtr r = parse_and();
            auto f = std::make_shared<Formula>();
            f->kind = Formula::Kind::Or;
            f->lhs = l;
            f->rhs = r;
            f->line = t.line;
            f->column = t.column;
            l = f;
        }
        return l;
    }

    FormulaPtr parse_and() {
        FormulaPtr l = parse_unary();
        while (at_keyword("and")) {
            Token t = advance();
            FormulaPtr r = parse_unary();
            auto f = std::make_shared<Formula>();
            f->kind = Formula::Kind::And;
            f->lhs = l;
            f->rhs = r;
            f->line = t.line;
            f->column = t.column;
            l = f;
        }
        return l;
    }

    FormulaPtr parse_unary() {
        if (at_symbol("!")) {
            Token t = advance();
            auto f = std::make_shared<Formula>();
            f->kind = Formula::Kind::Not;
            f->lhs = parse_unary();
            f->line = t.line;
            f->column = t.column;
            return f;
        }
        if (at_keyword("forall") || at_keyword("exists") || at_keyword("exists_unique"))
            return parse_quantifier();
        if (at_symbol("(")) {
            advance();
            FormulaPtr f = parse_formula();
            expect_symbol(")");
            return f;
        }
        return parse_predicate();
    }

    FormulaPtr parse_quantifier() {
        Token kw = advance();
        std::vector<Binder> binders;
        do {
            Token v = expect_identifier();
            expect_keyword("in");
            Token d = expect_identifier();
            binders.push_back({v.lexeme, d.lexeme, v.line, v.column});
        } while (at_symbol(",") && (advance(), true));
        FormulaPtr guard;
        if (at_keyword("where")) {
            advance();
            guard = parse_formula_until_colon();
        }
        expect_symbol(":");
        FormulaPtr body = parse_formula();
        if (kw.lexeme == "exists_unique") return desugar_unique(kw, binders, guard, body);
        auto f = std::make_shared<Formula>();
        f->kind = kw.lexeme == "forall" ? Formula::Kind::Forall : Formula::Kind::Exists;
        f->binders = std::move(binders);
        f->guard = guard;
        f->lhs = body;
        f->line = kw.line;
        f->column = kw.column;
        return f;
    }

    // The guard stops at the quantifier's own ':'; quantifiers inside a guard
    // must be parenthesized so their colon is not mistaken for it.
    FormulaPtr parse_formula_until_colon() { return parse_implies(); }

    FormulaPtr parse_predicate() {
        if (cur().kind != TokKind::Identifier) fail("expected a predicate");
        Token name = advance();
        auto f = std::make_shared<Formula>();
        f->kind = Formula::Kind::Pred;
        f->pred = name.lexeme;
        f->line = name.line;
        f->column = name.column;
        expect_symbol("(");
        if (!at_symbol(")")) {
            f->args.push_back(parse_term());
            while (at_symbol(",")) {
                advance();
                f->args.push_back(parse_term());
            }
        }
        expect_symbol(")");
        return f;
    }

    std::shared_ptr<Term> parse_term() {
        // 'angle' doubles as a sort keyword and the angle(h, k) term former.
        if (cur().kind != TokKind::Identifier && !at_keyword("angle")) fail("expected a term");
        Token t = advance();
        auto out = std::make_shared<Term>();
        out->line = t.line;
        out->column = t.column;
        if (t.lexeme == "angle" && at_symbol("(")) {
            advance();
            out->a = parse_term();
            expect_symbol(",");
            out->b = parse_term();
            expect_symbol(")");
            return out;
        }
        out->var = t.lexeme;
        return out;
    }

    // exists_unique xs (where g)? : phi
    //   == exists xs (where g)? : phi and forall xs' (where g')? : phi' -> xs' = xs
    static std::shared_ptr<Term> clone_term(const std::shared_ptr<Term>& t,
                                            const std::map<std::string, std::string>& ren) {
        auto out = std::make_shared<Term>(*t);
        if (!t->var.empty()) {
            if (auto it = ren.find(t->var); it != ren.end()) out->var = it->second;
        } else {
            out->a = clone_term(t->a, ren);
            out->b = clone_term(t->b, ren);
        }
        return out;
    }

    static FormulaPtr clone_formula(const FormulaPtr& f,
                                    const std::map<std::string, std::string>& ren) {
        if (!f) return nullptr;
        auto out = std::make_shared<Formula>(*f);
        out->guard = clone_formula(f->guard, ren);
        out->lhs = clone_formula(f->lhs, ren);
        out->rhs = clone_formula(f->rhs, ren);
        out->args.clear();
        for (const auto& a : f->args) out->args.push_back(clone_term(a, ren));
        for (auto& b : out->binders)
            if (auto it = ren.find(b.var); it != ren.end()) b.var = it->second;
        return out;
    }

    FormulaPtr desugar_unique(const Token& kw, const std::vector<Binder>& binders,
                              const FormulaPtr& guard, const FormulaPtr& body) {
        std::map<std::string, std::string> ren;
        std::vector<Binder> inner;
        for (const auto& b : binders) {
            Binder c = b;
            c.var = b.var + "_u";
            ren[b.var] = c.var;
            inner.push_back(c);
        }
        auto var_term = [&](const std::string& v) {
            auto t = std::make_shared<Term>();
            t->var = v;
            t->line = kw.line;
            t->column = kw.column;
            return t;
        };
        FormulaPtr all_eq;
        for (const auto& b : binders) {
            auto eq = std::make_shared<Formula>();
            eq->kind = Formula::Kind::Pred;
            eq->pred = "eq";
            eq->args = {var_term(b.var + "_u"), var_term(b.var)};
            eq->line = kw.line;
            eq->column = kw.column;
            if (!all_eq) {
                all_eq = eq;
            } else {
                auto a = std::make_shared<Formula>();
                a->kind = Formula::Kind::And;
                a->lhs = all_eq;
                a->rhs = eq;
                a->line = kw.line;
                a->column = kw.column;
                all_eq = a;
            }
        }
        auto imp = std::make_shared<Formula>();
        imp->kind = Formula::Kind::Implies;
        imp->lhs = clone_formula(body, ren);
        imp->rhs = all_eq;
        imp->line = kw.line;
        imp->column = kw.column;
        auto uniq = std::make_shared<Formula>();
        uniq->kind = Formula::Kind::Forall;
        uniq->binders = inner;
        uniq->guard = clone_formula(guard, ren);
        uniq->lhs = imp;
        uniq->line = kw.line;
        uniq->column = kw.column;
        auto conj = std::make_shared<Formula>();
        conj->kind = Formula::Kind::And;
        conj->lhs = body;
        conj->rhs = uniq;
        conj->line = kw.line;
        conj->column = kw.column;
        auto ex = std::make_shared<Formula>();
        ex->kind = Formula::Kind::Exists;
        ex->binders = binders;
        ex->guard = guard;
        ex->lhs = conj;
        ex->line = kw.line;
        ex->column = kw.column;
        return ex;
    }

    std::vector<Token> toks_;
    size_t pos_ = 0;
};

}  // namespace detail

inline Program parse(const std::string& source) {
    return detail::Parser(tokenize(source)).parse_program();
}

// ---------------------------------------------------------------------------
// Sort checking

namespace detail {

inline Sort term_sort(const Term& t, const std::map<std::string, Sort>& scope) {
    if (t.var.empty()) {
        if (term_sort(*t.a, scope) != Sort::Ray || term_sort(*t.b, scope) != Sort::Ray)
            throw ParseFailure("sort error: angle(h, k) needs ray arguments", t.line, t.column);
        return Sort::Angle;
    }
    auto it = scope.find(t.var);
    if (it == scope.end())
        throw ParseFailure("sort error: unbound variable '" + t.var + "'", t.line, t.column);
    return it->second;
}

inline void check_formula(const Formula& f, std::map<std::string, Sort> scope,
                          const std::map<std::string, Sort>& decls) {
    switch (f.kind) {
        case Formula::Kind::Forall:
        case Formula::Kind::Exists: {
            for (const auto& b : f.binders) {
                auto d = decls.find(b.domain);
                if (d == decls.end())
                    throw ParseFailure("sort error: undeclared carrier '" + b.domain + "'",
                                       b.line, b.column);
                if (scope.count(b.var))
                    throw ParseFailure("sort error: variable '" + b.var + "' bound twice",
                                       b.line, b.column);
                scope[b.var] = d->second;
            }
            if (f.guard) check_formula(*f.guard, scope, decls);
            check_formula(*f.lhs, scope, decls);
            return;
        }
        case Formula::Kind::Not:
            check_formula(*f.lhs, scope, decls);
            return;
        case Formula::Kind::And:
        case Formula::Kind::Or:
        case Formula::Kind::Implies:
            check_formula(*f.lhs, scope, decls);
            check_formula(*f.rhs, scope, decls);
            return;
        case Formula::Kind::Pred: {
            auto sig = predicate_signatures().find(f.pred);
            if (sig == predicate_signatures().end())
                throw ParseFailure("sort error: unknown predicate '" + f.pred + "'", f.line,
                                   f.column);
            if (sig->second.polymorphic_eq) {
                if (f.args.size() != 2)
                    throw ParseFailure("sort error: eq takes two arguments", f.line, f.column);
                if (term_sort(*f.args[0], scope) != term_sort(*f.args[1], scope))
                    throw ParseFailure("sort error: eq arguments have different sorts", f.line,
                                       f.column);
                return;
            }
            if (f.args.size() != sig->second.sorts.size())
                throw ParseFailure("sort error: '" + f.pred + "' expects " +
                                       std::to_string(sig->second.sorts.size()) + " arguments",
                                   f.line, f.column);
            for (size_t i = 0; i < f.args.size(); ++i)
                if (term_sort(*f.args[i], scope) != sig->second.sorts[i])
                    throw ParseFailure("sort error: argument " + std::to_string(i + 1) + " of '" +
                                           f.pred + "' must be " +
                                           std::string(to_string(sig->second.sorts[i])),
                                       f.args[i]->line, f.args[i]->column);
            return;
        }
    }
}

}  // namespace detail

inline const Program& check_sorts(const Program& p) {
    std::map<std::string, Sort> decls;
    for (const auto& d : p.decls) {
        if (decls.count(d.name))
            throw ParseFailure("sort error: carrier '" + d.name + "' declared twice", d.line,
                               d.column);
        decls[d.name] = d.sort;
    }
    for (const auto& a : p.axioms) detail::check_formula(*a.body, {}, decls);
    return p;
}

// ---------------------------------------------------------------------------
// Pretty printing (re-parse of the output is structurally identical)

namespace detail {

inline void print_term(const Term& t, std::string& out) {
    if (t.var.empty()) {
        out += "angle(";
        print_term(*t.a, out);
        out += ", ";
        print_term(*t.b, out);
        out += ")";
    } else {
        out += t.var;
    }
}

// prec: 0 = top, 1 = below implies, 2 = below or, 3 = below and
inline void print_formula(const Formula& f, std::string& out, int prec) {
    auto wrap = [&](int mine, auto&& body) {
        bool paren = mine < prec;
        if (paren) out += "(";
        body();
        if (paren) out += ")";
    };
    switch (f.kind) {
        case Formula::Kind::Forall:
        case Formula::Kind::Exists:
            wrap(0, [&] {
                out += f.kind == Formula::Kind::Forall ? "forall " : "exists ";
                for (size_t i = 0; i < f.binders.size(); ++i) {
                    if (i) out += ", ";
                    out += f.binders[i].var + " in " + f.binders[i].domain;
                }
                if (f.guard) {
                    out += " where ";
                    print_formula(*f.guard, out, 1);
                }
                out += " : ";
                print_formula(*f.lhs, out, 0);
            });
            return;
        case Formula::Kind::Implies:
            wrap(1, [&] {
                print_formula(*f.lhs, out, 2);
                out += " -> ";
                print_formula(*f.rhs, out, 1);
            });
            return;
        case Formula::Kind::Or:
            wrap(2, [&] {
                print_formula(*f.lhs, out, 2);
                out += " or ";
                print_formula(*f.rhs, out, 3);
            });
            return;
        case Formula::Kind::And:
            wrap(3, [&] {
                print_formula(*f.lhs, out, 3);
                out += " and ";
                print_formula(*f.rhs, out, 4);
            });
            return;
        case Formula::Kind::Not:
            out += "!";
            print_formula(*f.lhs, out, 5);
            return;
        case Formula::Kind::Pred:
            out += f.pred + "(";
            for (size_t i = 0; i < f.args.size(); ++i) {
                if (i) out += ", ";
                print_term(*f.args[i], out);
            }
            out += ")";
            return;
    }
}

}  // namespace detail

inline std::string pretty_print(const Program& p) {
    std::string out;
    for (const auto& d : p.decls) {
        out += "domain " + d.name + " : " + to_string(d.sort);
        if (d.given) out += " given";
        out += "\n";
    }
    if (!p.decls.empty()) out += "\n";
    for (const auto& a : p.axioms) {
        out += "axiom " + a.name + " :\n  ";
        detail::print_formula(*a.body, out, 0);
        out += "\n";
    }
    return out;
}

inline bool structurally_equal(const Term& a, const Term& b) {
    if (a.var != b.var) return false;
    if (a.var.empty())
        return structurally_equal(*a.a, *b.a) && structurally_equal(*a.b, *b.b);
    return true;
}

inline bool structurally_equal(const Formula& a, const Formula& b) {
    if (a.kind != b.kind || a.pred != b.pred || a.binders.size() != b.binders.size() ||
        a.args.size() != b.args.size() || bool(a.guard) != bool(b.guard) ||
        bool(a.lhs) != bool(b.lhs) || bool(a.rhs) != bool(b.rhs))
        return false;
    for (size_t i = 0; i < a.binders.size(); ++i)
        if (a.binders[i].var != b.binders[i].var || a.binders[i].domain != b.binders[i].domain)
            return false;
    for (size_t i = 0; i < a.args.size(); ++i)
        if (!structurally_equal(*a.args[i], *b.args[i])) return false;
    if (a.guard && !structurally_equal(*a.guard, *b.guard)) return false;
    if (a.lhs && !structurally_equal(*a.lhs, *b.lhs)) return false;
    if (a.rhs && !structurally_equal(*a.rhs, *b.rhs)) return false;
    return true;
}

inline bool structurally_equal(const Program& a, const Program& b) {
    if (a.decls.size() != b.decls.size() || a.axioms.size() != b.axioms.size()) return false;
    for (size_t i = 0; i < a.decls.size(); ++i)
        if (a.decls[i].name != b.decls[i].name || a.decls[i].sort != b.decls[i].sort ||
            a.decls[i].given != b.decls[i].given)
            return false;
    for (size_t i = 0; i < a.axioms.size(); ++i)
        if (a.axioms[i].name != b.axioms[i].name ||
            !structurally_equal(*a.axioms[i].body, *b.axioms[i].body))
            return false;
    return true;
}

// ---------------------------------------------------------------------------
// Evaluation

using Value = std::variant<Point, Line, Ray, Angle>;

struct EvalOutcome {
    TriBool verdict = TriBool::Unknown;
    std::map<std::string, std::string> witness;  // binder name -> printed value
};

namespace detail {

inline std::string value_str(const Value& v) {
    return std::visit([](const auto& x) { return x.str(); }, v);
}

struct Carriers {
    std::map<std::string, std::vector<Value>> by_name;

    static Carriers build(const Program& p, const Domain& d) {
        Carriers c;
        std::optional<std::vector<Point>> pts;
        std::optional<std::vector<Line>> lns;
        std::optional<std::vector<Ray>> rays;
        auto carrier_rays = [&]() -> const std::vector<Ray>& {
            if (!rays) rays = d.carrier_rays();
            return *rays;
        };
        for (const auto& decl : p.decls) {
            std::vector<Value> vals;
            switch (decl.sort) {
                case Sort::Point: {
                    if (decl.given) {
                        for (const auto& x : d.points) vals.emplace_back(x);
                    } else {
                        if (!pts) pts = d.carrier_points();
                        for (const auto& x : *pts) vals.emplace_back(x);
                    }
                    break;
                }
                case Sort::Line: {
                    if (decl.given) {
                        for (const auto& x : d.lines) vals.emplace_back(x);
                    } else {
                        if (!lns) lns = d.carrier_lines();
                        for (const auto& x : *lns) vals.emplace_back(x);
                    }
                    break;
                }
                case Sort::Ray: {
                    for (const auto& x : carrier_rays()) vals.emplace_back(x);
                    break;
                }
                case Sort::Angle: {
                    const auto& rs = carrier_rays();
                    for (size_t i = 0; i < rs.size(); ++i)
                        for (size_t j = i + 1; j < rs.size(); ++j) {
                            if (!(rs[i].origin == rs[j].origin)) continue;
                            if (rs[i].dx * rs[j].dy - rs[i].dy * rs[j].dx == 0) continue;
                            vals.emplace_back(make_angle(rs[i], rs[j]));
                        }
                    break;
                }
            }
            if (vals.empty())
                throw InsufficientDomain("empty carrier for '" + decl.name + "'");
            c.by_name[decl.name] = std::move(vals);
        }
        return c;
    }
};

class Evaluator {
  public:
    Evaluator(const Carriers& c, const LabelScheme& s) : carriers_(c), scheme_(s) {}

    struct Res {
        TriBool v;
        std::map<std::string, std::string> w;
    };

    Res eval(const Formula& f, std::map<std::string, Value>& env) {
        switch (f.kind) {
            case Formula::Kind::Forall:
                return eval_quant(f, env, /*universal=*/true);
            case Formula::Kind::Exists:
                return eval_quant(f, env, /*universal=*/false);
            case Formula::Kind::Not: {
                Res r = eval(*f.lhs, env);
                return {tri_not(r.v), std::move(r.w)};
            }
            case Formula::Kind::And: {
                Res a = eval(*f.lhs, env);
                if (a.v == TriBool::False) return a;
                Res b = eval(*f.rhs, env);
                if (b.v == TriBool::False) return b;
                return {tri_and(a.v, b.v), {}};
            }
            case Formula::Kind::Or: {
                Res a = eval(*f.lhs, env);
                if (a.v == TriBool::True) return a;
                Res b = eval(*f.rhs, env);
                if (b.v == TriBool::True) return b;
                return {tri_or(a.v, b.v), {}};
            }
            case Formula::Kind::Implies: {
                Res a = eval(*f.lhs, env);
                if (a.v == TriBool::False) return {TriBool::True, {}};
                Res b = eval(*f.rhs, env);
                if (b.v == TriBool::True) return b;
                return {tri_or(tri_not(a.v), b.v), std::move(b.w)};
            }
            case Formula::Kind::Pred:
                return {eval_pred(f, env), {}};
        }
        throw GeometryError("unreachable");
    }

  private:
    Res eval_quant(const Formula& f, std::map<std::string, Value>& env, bool universal) {
        bool any_unknown = false;
        std::optional<Res> decided;
        iterate(f.binders, 0, env, [&](std::map<std::string, Value>& e) {
            TriBool g = TriBool::True;
            if (f.guard) g = eval(*f.guard, e).v;
            if (g == TriBool::False) return true;  // instance vacuous / unsatisfied
            Res body = eval(*f.lhs, e);
            TriBool inst =
                universal ? tri_or(tri_not(g), body.v) : tri_and(g, body.v);
            if (universal ? inst == TriBool::False : inst == TriBool::True) {
                Res out{inst, std::move(body.w)};
                for (const auto& b : f.binders) out.w[b.var] = value_str(e.at(b.var));
                decided = std::move(out);
                return false;  // short-circuit
            }
            if (inst == TriBool::Unknown) any_unknown = true;
            return true;
        });
        if (decided) return *decided;
        if (any_unknown) return {TriBool::Unknown, {}};
        return {universal ? TriBool::True : TriBool::False, {}};
    }

    template <typename Fn>
    bool iterate(const std::vector<Binder>& binders, size_t i,
                 std::map<std::string, Value>& env, Fn&& fn) {
        if (i == binders.size()) return fn(env);
        auto it = carriers_.by_name.find(binders[i].domain);
        if (it == carriers_.by_name.end())
            throw InsufficientDomain("undeclared carrier '" + binders[i].domain + "'");
        for (const auto& v : it->second) {
            env[binders[i].var] = v;
            if (!iterate(binders, i + 1, env, fn)) {
                env.erase(binders[i].var);
                return false;
            }
        }
        env.erase(binders[i].var);
        return true;
    }

    Value eval_term(const Term& t, std::map<std::string, Value>& env) {
        if (!t.var.empty()) return env.at(t.var);
        return Value{make_angle(std::get<Ray>(eval_term(*t.a, env)),
                                std::get<Ray>(eval_term(*t.b, env)))};
    }

    TriBool eval_pred(const Formula& f, std::map<std::string, Value>& env) {
        std::vector<Value> a;
        try {
            for (const auto& t : f.args) a.push_back(eval_term(*t, env));
            return apply_pred(f.pred, a);
        } catch (const GeometryError&) {
            // A degenerate construction (e.g. angle over collinear rays) has no
            // truth value; treated as an unsatisfied predicate.
            return TriBool::False;
        }
    }

    TriBool apply_pred(const std::string& name, const std::vector<Value>& a) {
        auto P = [&](size_t i) -> const Point& { return std::get<Point>(a[i]); };
        auto L = [&](size_t i) -> const Line& { return std::get<Line>(a[i]); };
        auto R = [&](size_t i) -> const Ray& { return std::get<Ray>(a[i]); };
        auto A = [&](size_t i) -> const Angle& { return std::get<Angle>(a[i]); };
        auto label = [&](size_t i) { return label_of(scheme_, A(i)); };
        auto cmp3 = [](Cmp c, Cmp want) {
            if (c == Cmp::Undetermined) return TriBool::Unknown;
            return tri_of(c == want);
        };

        if (name == "on") return tri_of(L(1).contains(P(0)));
        if (name == "between" || name == "collinear") {
            const Point &x = P(0), &y = P(1), &z = P(2);
            if (x == y || y == z || x == z) return TriBool::False;
            if (!collinear(x, y, z)) return TriBool::False;
            if (name == "collinear") return TriBool::True;
            return tri_of(between(x, y, z));
        }
        if (name == "parallel") return tri_of(parallel(L(0), L(1)));
        if (name == "same_side") {
            Rational sp = L(0).eval(P(1)), sq = L(0).eval(P(2));
            if (sp == 0 || sq == 0) return TriBool::False;
            return tri_of(sign(sp) == sign(sq));
        }
        if (name == "in_interior") {
            if (!(R(1).origin == A(0).vertex())) return TriBool::False;
            return tri_of(in_interior(A(0), R(1)));
        }
        if (name == "intersects") {
            if (L(0) == L(1)) return TriBool::True;
            return tri_of(intersect(L(0), L(1)).has_value());
        }
        if (name == "seg_cong") {
            if (P(0) == P(1) || P(2) == P(3)) return TriBool::False;
            return tri_of(segment_congruent(Segment(P(0), P(1)), Segment(P(2), P(3))));
        }
        if (name == "ang_cong") {
            switch (congruent(scheme_, A(0), A(1))) {
                case TriBool::True: return TriBool::True;
                case TriBool::False: return TriBool::False;
                default: return TriBool::Unknown;
            }
        }
        if (name == "label_lt") return cmp3(compare(label(0), label(1)), Cmp::Less);
        if (name == "label_sum_lt_two_rights")
            return cmp3(compare_to_two_rights(add_classes(label(0), label(1))), Cmp::Less);
        if (name == "label_sum_eq")
            return cmp3(compare(add_classes(label(0), label(1)), label(2)), Cmp::Equal);
        if (name == "is_supplementary") return tri_of(is_supplementary(A(0), A(1)));
        if (name == "eq") {
            if (a[0].index() != a[1].index()) return TriBool::False;
            return tri_of(std::visit(
                [&](const auto& x) {
                    using T = std::decay_t<decltype(x)>;
                    return x == std::get<T>(a[1]);
                },
                a[0]));
        }
        if (name == "same_vertex") return tri_of(R(0).origin == R(1).origin);
        if (name == "forms_angle")
            return tri_of(R(0).origin == R(1).origin &&
                          R(0).dx * R(1).dy - R(0).dy * R(1).dx != 0);
        if (name == "toward_each_other")
            return tri_of(!(R(0).origin == R(1).origin) && R(0).passes_through(R(1).origin) &&
                          R(1).passes_through(R(0).origin));
        if (name == "same_ray_side") {
            Line l = R(2).line();
            Rational eh = l.eval(R(0).tip()), ek = l.eval(R(1).tip());
            if (eh == 0 || ek == 0) return TriBool::False;
            return tri_of(sign(eh) == sign(ek));
        }
        if (name == "meets_on_side") {
            Line lh = R(0).line(), lk = R(1).line(), lt = R(2).line();
            if (lh == lk) return TriBool::True;
            auto x = intersect(lh, lk);
            if (!x) return TriBool::False;
            Rational sx = lt.eval(*x), st = lt.eval(R(0).tip());
            if (sx == 0 || st == 0) return TriBool::False;
            return tri_of(sign(sx) == sign(st));
        }
        if (name == "triangle") {
            if (P(0) == P(1) || P(1) == P(2) || P(0) == P(2)) return TriBool::False;
            return tri_of(!collinear(P(0), P(1), P(2)));
        }
        if (name == "triangle_sum_two_rights") {
            if (P(0) == P(1) || P(1) == P(2) || P(0) == P(2) || collinear(P(0), P(1), P(2)))
                return TriBool::False;
            auto ang = [&](size_t i, size_t j, size_t k) {
                return label_of(scheme_, make_angle(make_ray(P(i), P(j)), make_ray(P(i), P(k))));
            };
            AngleValue sum = add_classes(add_classes(ang(0, 1, 2), ang(1, 0, 2)), ang(2, 0, 1));
            return cmp3(compare_with_pi_multiple(sum, Rational(1)), Cmp::Equal);
        }
        throw GeometryError("unknown predicate '" + name + "'");
    }

    const Carriers& carriers_;
    const LabelScheme& scheme_;
};

}  // namespace detail

inline std::map<std::string, EvalOutcome> evaluate(const Program& p, const Domain& d,
                                                   const LabelScheme& s) {
    check_sorts(p);
    detail::Carriers carriers = detail::Carriers::build(p, d);
    detail::Evaluator ev(carriers, s);
    std::map<std::string, EvalOutcome> out;
    for (const auto& a : p.axioms) {
        std::map<std::string, Value> env;
        auto r = ev.eval(*a.body, env);
        out[a.name] = {r.v, std::move(r.w)};
    }
    return out;
}

}  // namespace nonsas::dsl
