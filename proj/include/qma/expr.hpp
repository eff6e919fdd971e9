#pragma once

// Expression grammar over a quantum matrix algebra presentation, with a
// printer that renders normal-form elements back into the same grammar.
//
//   expr      := ['-'] term (('+'|'-') term)*
//   term      := factor ('*' factor)*
//   factor    := atom ['^' integer]
//   atom      := generator | shorthand | scalar | '(' expr ')'
//   generator := 'x[' int ',' int ']'
//   shorthand := 'D' | 'A(' int ',' int ')' | 'Dt(' int ')' | 'Z[' int ',' int ']'
//   scalar    := integer ['/' integer] | 'q' | 'lambda' | 'p[' int ',' int ']'
//              | 'zeta'
//
// '*' is the noncommutative product, evaluated left to right and then put in
// PBW normal form.  'integer' may carry a leading '-' only where an exponent
// is expected or at the very start of an expression; elsewhere '-' is the
// binary operator.  The 'integer/integer' form and the optional leading '-'
// exist so every coefficient the printer emits re-parses to the same value.

#include <cctype>
#include <map>
#include <memory>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qma/element.hpp"
#include "qma/qdet.hpp"

namespace qma {

// ---------------------------------------------------------------------------
// AST

struct ExprNode;
using ExprPtr = std::shared_ptr<const ExprNode>;

struct ExprNode {
    enum class Kind {
        sum,       // children with signs (+1 / -1)
        product,   // children are factors
        power,     // children[0] ^ exponent
        generator, // x[i,j]
        qdet,      // D
        comp,      // A(i,j)
        anti,      // Dt(t)
        zpow,      // Z[i,j]
        number,    // rational literal
        sym_q,     // q
        sym_lambda,// lambda
        sym_p,     // p[i,j]
        sym_zeta   // zeta
    };

    Kind kind;
    std::vector<ExprPtr> children;
    std::vector<int> signs;  // sum only, same length as children
    long i = 0, j = 0;       // indices; for power, i is the exponent
    Rational value = 0;      // number only
};

inline ExprPtr make_node(ExprNode n) { return std::make_shared<const ExprNode>(std::move(n)); }

inline bool expr_equal(const ExprPtr& a, const ExprPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    if (a->kind != b->kind || a->i != b->i || a->j != b->j || a->value != b->value) return false;
    if (a->signs != b->signs) return false;
    if (a->children.size() != b->children.size()) return false;
    for (std::size_t k = 0; k < a->children.size(); ++k)
        if (!expr_equal(a->children[k], b->children[k])) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Errors

class ExprError : public std::runtime_error {
  public:
    ExprError(const std::string& message, std::size_t position)
        : std::runtime_error("syntax error at position " + std::to_string(position) + ": " +
                             message),
          position_(position) {}
    explicit ExprError(const std::string& message)
        : std::runtime_error(message), position_(std::string::npos) {}
    std::size_t position() const { return position_; }

  private:
    std::size_t position_;
};

// ---------------------------------------------------------------------------
// Parser

namespace detail {

class ExprParser {
  public:
    explicit ExprParser(const std::string& text) : s_(text), pos_(0) {}

    ExprPtr parse() {
        ExprPtr e = parse_expr();
        skip_ws();
        if (pos_ != s_.size()) throw ExprError("unexpected trailing input", pos_);
        return e;
    }

  private:
    const std::string& s_;
    std::size_t pos_;

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool peek_char(char c) {
        skip_ws();
        return pos_ < s_.size() && s_[pos_] == c;
    }

    bool accept_char(char c) {
        if (!peek_char(c)) return false;
        ++pos_;
        return true;
    }

    void expect_char(char c) {
        if (!accept_char(c))
            throw ExprError(std::string("expected '") + c + "'", pos_);
    }

    long parse_integer(bool allow_sign) {
        skip_ws();
        std::size_t start = pos_;
        bool neg = false;
        if (allow_sign && pos_ < s_.size() && s_[pos_] == '-') {
            neg = true;
            ++pos_;
        }
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            throw ExprError("expected an integer", start);
        long v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + (s_[pos_] - '0');
            if (v < 0) throw ExprError("integer literal out of range", start);
            ++pos_;
        }
        return neg ? -v : v;
    }

    bool accept_word(const std::string& w) {
        skip_ws();
        if (s_.compare(pos_, w.size(), w) != 0) return false;
        std::size_t end = pos_ + w.size();
        // A word must not continue into a longer identifier.
        if (end < s_.size()) {
            unsigned char c = static_cast<unsigned char>(s_[end]);
            if (std::isalnum(c) || c == '_') return false;
        }
        pos_ = end;
        return true;
    }

    std::pair<long, long> parse_index_pair(char open, char close) {
        expect_char(open);
        long i = parse_integer(false);
        expect_char(',');
        long j = parse_integer(false);
        expect_char(close);
        return {i, j};
    }

    ExprPtr parse_expr() {
        ExprNode sum;
        sum.kind = ExprNode::Kind::sum;
        int sign = accept_char('-') ? -1 : 1;
        sum.children.push_back(parse_term());
        sum.signs.push_back(sign);
        for (;;) {
            skip_ws();
            if (accept_char('+'))
                sign = 1;
            else if (accept_char('-'))
                sign = -1;
            else
                break;
            sum.children.push_back(parse_term());
            sum.signs.push_back(sign);
        }
        if (sum.children.size() == 1 && sum.signs[0] == 1) return sum.children[0];
        return make_node(std::move(sum));
    }

    ExprPtr parse_term() {
        ExprNode prod;
        prod.kind = ExprNode::Kind::product;
        prod.children.push_back(parse_factor());
        while (accept_char('*')) prod.children.push_back(parse_factor());
        if (prod.children.size() == 1) return prod.children[0];
        return make_node(std::move(prod));
    }

    ExprPtr parse_factor() {
        ExprPtr base = parse_atom();
        if (accept_char('^')) {
            ExprNode pw;
            pw.kind = ExprNode::Kind::power;
            pw.children.push_back(std::move(base));
            pw.i = parse_integer(true);
            return make_node(std::move(pw));
        }
        return base;
    }

    ExprPtr parse_atom() {
        skip_ws();
        if (pos_ >= s_.size()) throw ExprError("expected an atom", pos_);
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            ExprPtr inner = parse_expr();
            expect_char(')');
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            long num = parse_integer(false);
            ExprNode n;
            n.kind = ExprNode::Kind::number;
            if (accept_char('/')) {
                std::size_t at = pos_;
                long den = parse_integer(false);
                if (den == 0) throw ExprError("zero denominator", at);
                n.value = frac(num, den);
            } else {
                n.value = Rational(static_cast<long>(num));
            }
            return make_node(std::move(n));
        }
        if (c == 'x') {
            ++pos_;
            auto [i, j] = parse_index_pair('[', ']');
            ExprNode n;
            n.kind = ExprNode::Kind::generator;
            n.i = i;
            n.j = j;
            return make_node(std::move(n));
        }
        if (accept_word("Dt")) {
            expect_char('(');
            long t = parse_integer(false);
            expect_char(')');
            ExprNode n;
            n.kind = ExprNode::Kind::anti;
            n.i = t;
            return make_node(std::move(n));
        }
        if (c == 'D') {
            ++pos_;
            ExprNode n;
            n.kind = ExprNode::Kind::qdet;
            return make_node(std::move(n));
        }
        if (c == 'A') {
            ++pos_;
            auto [i, j] = parse_index_pair('(', ')');
            ExprNode n;
            n.kind = ExprNode::Kind::comp;
            n.i = i;
            n.j = j;
            return make_node(std::move(n));
        }
        if (c == 'Z') {
            ++pos_;
            auto [i, j] = parse_index_pair('[', ']');
            ExprNode n;
            n.kind = ExprNode::Kind::zpow;
            n.i = i;
            n.j = j;
            return make_node(std::move(n));
        }
        if (accept_word("zeta")) {
            ExprNode n;
            n.kind = ExprNode::Kind::sym_zeta;
            return make_node(std::move(n));
        }
        if (accept_word("lambda")) {
            ExprNode n;
            n.kind = ExprNode::Kind::sym_lambda;
            return make_node(std::move(n));
        }
        if (c == 'q') {
            ++pos_;
            ExprNode n;
            n.kind = ExprNode::Kind::sym_q;
            return make_node(std::move(n));
        }
        if (c == 'p') {
            ++pos_;
            auto [i, j] = parse_index_pair('[', ']');
            ExprNode n;
            n.kind = ExprNode::Kind::sym_p;
            n.i = i;
            n.j = j;
            return make_node(std::move(n));
        }
        throw ExprError("expected an atom", pos_);
    }
};

}  // namespace detail

inline ExprPtr parse_expression(const std::string& text) {
    return detail::ExprParser(text).parse();
}

// ---------------------------------------------------------------------------
// AST printing (canonical form; reparsing yields an equal AST)

namespace detail {

inline void print_expr_rec(const ExprPtr& e, std::ostream& os, bool parenthesize_sum,
                           bool parenthesize_product) {
    switch (e->kind) {
        case ExprNode::Kind::sum: {
            if (parenthesize_sum) os << '(';
            for (std::size_t k = 0; k < e->children.size(); ++k) {
                if (k == 0) {
                    if (e->signs[0] < 0) os << '-';
                } else {
                    os << (e->signs[k] < 0 ? " - " : " + ");
                }
                // A sum directly under a sum only arises from parentheses.
                print_expr_rec(e->children[k], os,
                               e->children[k]->kind == ExprNode::Kind::sum, false);
            }
            if (parenthesize_sum) os << ')';
            return;
        }
        case ExprNode::Kind::product: {
            if (parenthesize_product) os << '(';
            for (std::size_t k = 0; k < e->children.size(); ++k) {
                if (k) os << '*';
                print_expr_rec(e->children[k], os, true, false);
            }
            if (parenthesize_product) os << ')';
            return;
        }
        case ExprNode::Kind::power:
            print_expr_rec(e->children[0], os, true, true);
            os << '^' << e->i;
            return;
        case ExprNode::Kind::generator:
            os << "x[" << e->i << ',' << e->j << ']';
            return;
        case ExprNode::Kind::qdet:
            os << 'D';
            return;
        case ExprNode::Kind::comp:
            os << "A(" << e->i << ',' << e->j << ')';
            return;
        case ExprNode::Kind::anti:
            os << "Dt(" << e->i << ')';
            return;
        case ExprNode::Kind::zpow:
            os << "Z[" << e->i << ',' << e->j << ']';
            return;
        case ExprNode::Kind::number: {
            if (e->value.get_den() == 1)
                os << e->value.get_num().get_str();
            else
                os << e->value.get_num().get_str() << '/' << e->value.get_den().get_str();
            return;
        }
        case ExprNode::Kind::sym_q:
            os << 'q';
            return;
        case ExprNode::Kind::sym_lambda:
            os << "lambda";
            return;
        case ExprNode::Kind::sym_p:
            os << "p[" << e->i << ',' << e->j << ']';
            return;
        case ExprNode::Kind::sym_zeta:
            os << "zeta";
            return;
    }
}

}  // namespace detail

inline std::string print_expression(const ExprPtr& e) {
    std::ostringstream os;
    detail::print_expr_rec(e, os, false, false);
    return os.str();
}

// ---------------------------------------------------------------------------
// Evaluation

namespace detail {

/// Nearest ancestor (or the presentation itself) carrying full quantum
/// matrix structure; null if there is none.
inline PresentationPtr enclosing_qma(const PresentationPtr& pres) {
    for (PresentationPtr p = pres; p; p = p->parent())
        if (p->has_qma()) return p;
    return nullptr;
}

/// Multiplicative order of a root-of-unity coefficient, probing up to `cap`.
inline long coefficient_order(const Coefficient& c, long cap) {
    Coefficient acc = c;
    for (long d = 1; d <= cap; ++d) {
        if (acc.is_one()) return d;
        acc = acc * c;
    }
    throw ExprError("parameter is not a root of unity of the expected order");
}

/// Common order of the deformation parameters of a cyclotomic-mode quantum
/// matrix presentation: the lcm of the multiplicative orders of lambda and
/// all p_ij.  This is the exponent m with x_ij^m central.
inline long parameter_order(const PresentationPtr& pres) {
    PresentationPtr root = enclosing_qma(pres);
    if (!root) throw ExprError("presentation has no quantum matrix structure");
    if (root->mode() != CoefficientMode::cyclotomic)
        throw ExprError("parameter order is defined only at roots of unity");
    const long cap = root->unit().cyclotomic().level();
    const QMAStructure& s = root->qma();
    long m = coefficient_order(s.lambda, cap);
    for (const auto& row : s.p)
        for (const auto& entry : row)
            m = std::lcm(m, coefficient_order(entry, cap));
    return m;
}

}  // namespace detail

/// Evaluate a parsed expression to a PBW normal-form element of `pres`.
/// Shorthands requiring full quantum matrix structure (D, A, Dt) are
/// evaluated in the enclosing full presentation and must land inside the
/// subalgebra when `pres` is a subset presentation; since subset elements
/// live in the parent's PBW basis only through their own generators, these
/// shorthands are restricted here to full presentations.
inline AlgebraElement evaluate(const ExprPtr& e, const PresentationPtr& pres) {
    switch (e->kind) {
        case ExprNode::Kind::sum: {
            AlgebraElement acc = AlgebraElement::zero(pres);
            for (std::size_t k = 0; k < e->children.size(); ++k) {
                AlgebraElement t = evaluate(e->children[k], pres);
                acc = e->signs[k] < 0 ? acc - t : acc + t;
            }
            return acc;
        }
        case ExprNode::Kind::product: {
            AlgebraElement acc = AlgebraElement::one(pres);
            for (const ExprPtr& f : e->children) acc = acc * evaluate(f, pres);
            return acc;
        }
        case ExprNode::Kind::power: {
            AlgebraElement base = evaluate(e->children[0], pres);
            if (e->i >= 0) return base.pow(static_cast<unsigned long>(e->i));
            const auto& terms = base.terms();
            if (terms.size() == 1 && terms.begin()->first == pres->zero_monomial() &&
                terms.begin()->second.is_unit())
                return AlgebraElement::scalar(pres, terms.begin()->second.pow(e->i));
            throw ExprError("negative exponent applies only to invertible scalars");
        }
        case ExprNode::Kind::generator: {
            for (int k = 0; k < pres->size(); ++k)
                if (pres->gen(k).row == e->i && pres->gen(k).col == e->j)
                    return AlgebraElement::generator(pres, k);
            throw ExprError("generator x[" + std::to_string(e->i) + "," + std::to_string(e->j) +
                            "] is not in this presentation");
        }
        case ExprNode::Kind::qdet:
            if (!pres->has_qma())
                throw ExprError("D requires a full square quantum matrix presentation");
            return quantum_determinant(pres);
        case ExprNode::Kind::comp:
            if (!pres->has_qma())
                throw ExprError("A(i,j) requires a full square quantum matrix presentation");
            return complement_minor(pres, static_cast<int>(e->i), static_cast<int>(e->j));
        case ExprNode::Kind::anti:
            if (!pres->has_qma())
                throw ExprError("Dt(t) requires a full square quantum matrix presentation");
            return antidiagonal_minor(pres, static_cast<int>(e->i));
        case ExprNode::Kind::zpow: {
            const long m = detail::parameter_order(pres);
            for (int k = 0; k < pres->size(); ++k)
                if (pres->gen(k).row == e->i && pres->gen(k).col == e->j)
                    return AlgebraElement::generator(pres, k).pow(static_cast<unsigned long>(m));
            throw ExprError("generator for Z[" + std::to_string(e->i) + "," +
                            std::to_string(e->j) + "] is not in this presentation");
        }
        case ExprNode::Kind::number:
            return AlgebraElement::scalar(pres, pres->rational_coeff(e->value));
        case ExprNode::Kind::sym_q: {
            PresentationPtr root = detail::enclosing_qma(pres);
            if (!root || !root->has_single_parameter())
                throw ExprError("q is defined only for single-parameter presentations");
            return AlgebraElement::scalar(pres, root->single_parameter());
        }
        case ExprNode::Kind::sym_lambda: {
            PresentationPtr root = detail::enclosing_qma(pres);
            if (!root) throw ExprError("lambda requires quantum matrix structure");
            return AlgebraElement::scalar(pres, root->qma().lambda);
        }
        case ExprNode::Kind::sym_p: {
            PresentationPtr root = detail::enclosing_qma(pres);
            if (!root) throw ExprError("p[i,j] requires quantum matrix structure");
            const QMAStructure& s = root->qma();
            if (e->i < 1 || e->i > s.n || e->j < 1 || e->j > s.n)
                throw ExprError("p[i,j] indices out of range");
            return AlgebraElement::scalar(
                pres, s.p[static_cast<std::size_t>(e->i - 1)][static_cast<std::size_t>(e->j - 1)]);
        }
        case ExprNode::Kind::sym_zeta: {
            if (pres->mode() != CoefficientMode::cyclotomic)
                throw ExprError("zeta is defined only in cyclotomic mode");
            const long level = pres->unit().cyclotomic().level();
            return AlgebraElement::scalar(pres,
                                          Coefficient(CyclotomicScalar::root_of_unity(level, 1)));
        }
    }
    throw ExprError("unhandled expression node");
}

inline AlgebraElement evaluate_expression(const std::string& text, const PresentationPtr& pres) {
    return evaluate(parse_expression(text), pres);
}

// ---------------------------------------------------------------------------
// Element printing (grammar format, leading PBW term first)

namespace detail {

inline std::string rational_factor(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline std::string laurent_symbol(const std::string& name) {
    if (name.size() == 4 && name.compare(0, 2, "p_") == 0 &&
        std::isdigit(static_cast<unsigned char>(name[2])) &&
        std::isdigit(static_cast<unsigned char>(name[3])))
        return std::string("p[") + name[2] + "," + name[3] + "]";
    return name;  // "q", "lambda"
}

/// One scalar term as a list of '*'-joined factors with the sign split off.
/// `factors` may come back empty (the term is +-1).
struct ScalarTermText {
    bool negative = false;
    std::vector<std::string> factors;
};

inline ScalarTermText laurent_term_text(const std::map<std::string, long>& exps,
                                        const Rational& r) {
    ScalarTermText out;
    Rational a = r;
    if (a < 0) {
        out.negative = true;
        a = -a;
    }
    if (a != 1 || exps.empty()) out.factors.push_back(rational_factor(a));
    for (const auto& [name, k] : exps) {
        std::string f = laurent_symbol(name);
        if (k != 1) f += "^" + std::to_string(k);
        out.factors.push_back(f);
    }
    return out;
}

inline ScalarTermText cyclotomic_term_text(long k, const Rational& r) {
    ScalarTermText out;
    Rational a = r;
    if (a < 0) {
        out.negative = true;
        a = -a;
    }
    if (a != 1 || k == 0) out.factors.push_back(rational_factor(a));
    if (k == 1)
        out.factors.push_back("zeta");
    else if (k > 1)
        out.factors.push_back("zeta^" + std::to_string(k));
    return out;
}

inline std::string join_factors(const std::vector<std::string>& factors) {
    std::string out;
    for (std::size_t k = 0; k < factors.size(); ++k) {
        if (k) out += "*";
        out += factors[k];
    }
    return out;
}

/// A coefficient as (sign, factor list): single-term coefficients fold their
/// sign into the enclosing sum; multi-term ones become one parenthesized
/// factor with terms in descending order.
/// Join scalar terms into a parenthesized factor, hoisting an overall '-'
/// when the first term is negative so the interior starts positively.
inline ScalarTermText parenthesized_sum(const std::vector<ScalarTermText>& parts) {
    ScalarTermText out;
    out.negative = parts.front().negative;
    std::string body;
    bool first = true;
    for (const ScalarTermText& t : parts) {
        bool minus = t.negative != out.negative;
        if (first)
            body += minus ? "-" : "";
        else
            body += minus ? " - " : " + ";
        body += join_factors(t.factors);
        first = false;
    }
    out.factors.push_back("(" + body + ")");
    return out;
}

inline ScalarTermText coefficient_text(const Coefficient& c) {
    if (c.mode() == CoefficientMode::laurent) {
        const auto& terms = c.laurent().terms();
        if (terms.size() == 1)
            return laurent_term_text(terms.begin()->first, terms.begin()->second);
        std::vector<ScalarTermText> parts;
        for (auto it = terms.rbegin(); it != terms.rend(); ++it)
            parts.push_back(laurent_term_text(it->first, it->second));
        return parenthesized_sum(parts);
    }
    const CyclotomicScalar& z = c.cyclotomic();
    std::vector<std::pair<long, Rational>> nz;
    for (std::size_t k = 0; k < z.coords().size(); ++k)
        if (z.coords()[k] != 0) nz.emplace_back(static_cast<long>(k), z.coords()[k]);
    if (nz.size() == 1) return cyclotomic_term_text(nz[0].first, nz[0].second);
    std::vector<ScalarTermText> parts;
    for (const auto& [k, r] : nz) parts.push_back(cyclotomic_term_text(k, r));
    return parenthesized_sum(parts);
}

}  // namespace detail

/// Render a normal-form element in the expression grammar, leading term
/// first.  parse + evaluate of the output reproduces the element exactly.
inline std::string print_element(const AlgebraElement& a) {
    if (a.is_zero()) return "0";
    const PresentationPtr& pres = a.pres();
    std::string out;
    bool first = true;
    const auto& terms = a.terms();
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        detail::ScalarTermText c = detail::coefficient_text(it->second);
        const bool has_generators = it->first != pres->zero_monomial();
        if (has_generators && c.factors.size() == 1 && c.factors[0] == "1") c.factors.clear();
        for (std::size_t k = 0; k < it->first.size(); ++k) {
            int e = it->first[k];
            if (e == 0) continue;
            const GeneratorInfo& g = pres->gen(static_cast<int>(k));
            std::string f = "x[" + std::to_string(g.row) + "," + std::to_string(g.col) + "]";
            if (e != 1) f += "^" + std::to_string(e);
            c.factors.push_back(f);
        }
        if (c.factors.empty()) c.factors.push_back("1");
        if (first)
            out += c.negative ? "-" : "";
        else
            out += c.negative ? " - " : " + ";
        out += detail::join_factors(c.factors);
        first = false;
    }
    return out;
}

}  // namespace qma
