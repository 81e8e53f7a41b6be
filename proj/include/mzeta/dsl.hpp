#pragma once

// The variety expression language: classes are built from the leaves
//   point, L, A(n), P(n), E, curve(g), surface(q,pg)
// with +, -, *, ^k on expressions and sym(leaf, n) for symmetric powers.
// eval_mu_h sends an expression through the measure into Z[C] (as a subring
// of H): points and projective spaces to 1, affine classes to 0, curves and
// surfaces to their Psi words, sym via the symmetric-power machinery.

#include <memory>
#include <string>
#include <string_view>
#include <utility>

#include "mzeta/hodge.hpp"
#include "mzeta/ring.hpp"

namespace mzeta {

struct VarietyExpr;
using ExprPtr = std::shared_ptr<const VarietyExpr>;

struct VarietyExpr {
    enum class Node {
        point,
        lefschetz, // L
        affine,    // A(a)
        proj,      // P(a)
        elliptic,  // E
        curve,     // curve(a)
        surface,   // surface(a, b)
        add,
        sub,
        mul,
        pow, // lhs ^ a
        sym  // sym(lhs, a)
    };

    Node node;
    Integer a = 0, b = 0;
    ExprPtr lhs, rhs;

    static ExprPtr leaf(Node n, Integer a = 0, Integer b = 0)
    {
        auto e = std::make_shared<VarietyExpr>();
        e->node = n;
        e->a = std::move(a);
        e->b = std::move(b);
        return e;
    }

    static ExprPtr binary(Node n, ExprPtr l, ExprPtr r)
    {
        auto e = std::make_shared<VarietyExpr>();
        e->node = n;
        e->lhs = std::move(l);
        e->rhs = std::move(r);
        return e;
    }

    static ExprPtr power(ExprPtr base, Integer k)
    {
        auto e = std::make_shared<VarietyExpr>();
        e->node = Node::pow;
        e->lhs = std::move(base);
        e->a = std::move(k);
        return e;
    }

    static ExprPtr sym_of(ExprPtr base, Integer n)
    {
        auto e = std::make_shared<VarietyExpr>();
        e->node = Node::sym;
        e->lhs = std::move(base);
        e->a = std::move(n);
        return e;
    }

    bool is_leaf() const
    {
        switch (node) {
        case Node::point:
        case Node::lefschetz:
        case Node::affine:
        case Node::proj:
        case Node::elliptic:
        case Node::curve:
        case Node::surface: return true;
        default: return false;
        }
    }
};

inline bool expr_equal(const VarietyExpr& x, const VarietyExpr& y)
{
    if (x.node != y.node || x.a != y.a || x.b != y.b) return false;
    if (static_cast<bool>(x.lhs) != static_cast<bool>(y.lhs)) return false;
    if (static_cast<bool>(x.rhs) != static_cast<bool>(y.rhs)) return false;
    if (x.lhs && !expr_equal(*x.lhs, *y.lhs)) return false;
    if (x.rhs && !expr_equal(*x.rhs, *y.rhs)) return false;
    return true;
}

// --- parser ------------------------------------------------------------

namespace detail {

class ExprParser {
public:
    explicit ExprParser(std::string_view src) : src_(src) {}

    ExprPtr run()
    {
        ExprPtr e = expr();
        skip_ws();
        if (pos_ != src_.size()) fail("trailing input after expression");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& what) const
    {
        int line = 1, col = 1;
        for (std::size_t i = 0; i < pos_ && i < src_.size(); ++i) {
            if (src_[i] == '\n') {
                ++line;
                col = 1;
            } else
                ++col;
        }
        throw parse_error(what, line, col);
    }

    void skip_ws()
    {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    bool eat(char c)
    {
        skip_ws();
        if (pos_ < src_.size() && src_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c, const char* what)
    {
        if (!eat(c)) fail(std::string("expected '") + c + "' " + what);
    }

    std::string ident()
    {
        skip_ws();
        std::string name;
        while (pos_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
            if (name.empty() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) break;
            name += src_[pos_++];
        }
        return name;
    }

    Integer number(const char* what)
    {
        skip_ws();
        std::string digits;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
            digits += src_[pos_++];
        if (digits.empty()) fail(std::string("expected a nonnegative integer ") + what);
        return Integer(digits);
    }

    ExprPtr expr()
    {
        ExprPtr e = term();
        while (true) {
            if (eat('+')) e = VarietyExpr::binary(VarietyExpr::Node::add, e, term());
            else if (eat('-')) e = VarietyExpr::binary(VarietyExpr::Node::sub, e, term());
            else return e;
        }
    }

    ExprPtr term()
    {
        ExprPtr e = factor();
        while (eat('*')) e = VarietyExpr::binary(VarietyExpr::Node::mul, e, factor());
        return e;
    }

    ExprPtr factor()
    {
        skip_ws();
        if (eat('(')) {
            ExprPtr e = expr();
            expect(')', "to close the group");
            return e;
        }
        std::size_t at = pos_;
        std::string name = ident();
        if (name.empty()) fail("expected a variety leaf, 'sym', or '('");
        if (name == "sym") {
            expect('(', "after sym");
            ExprPtr inner = leaf();
            expect(',', "between the sym leaf and the order");
            Integer n = number("as the sym order");
            expect(')', "to close sym");
            return VarietyExpr::sym_of(std::move(inner), std::move(n));
        }
        pos_ = at; // re-read the identifier as a leaf
        ExprPtr e = leaf();
        if (eat('^')) return VarietyExpr::power(std::move(e), number("as the exponent"));
        return e;
    }

    ExprPtr leaf()
    {
        skip_ws();
        std::size_t at = pos_;
        std::string name = ident();
        if (name == "point") return VarietyExpr::leaf(VarietyExpr::Node::point);
        if (name == "L") return VarietyExpr::leaf(VarietyExpr::Node::lefschetz);
        if (name == "E") return VarietyExpr::leaf(VarietyExpr::Node::elliptic);
        if (name == "A" || name == "P") {
            expect('(', "after the space family");
            Integer n = number("as the dimension");
            expect(')', "to close the leaf");
            return VarietyExpr::leaf(
                name == "A" ? VarietyExpr::Node::affine : VarietyExpr::Node::proj, std::move(n));
        }
        if (name == "curve") {
            expect('(', "after curve");
            Integer g = number("as the genus");
            expect(')', "to close curve");
            return VarietyExpr::leaf(VarietyExpr::Node::curve, std::move(g));
        }
        if (name == "surface") {
            expect('(', "after surface");
            Integer q = number("as the irregularity");
            expect(',', "between q and pg");
            Integer pg = number("as the geometric genus");
            expect(')', "to close surface");
            return VarietyExpr::leaf(VarietyExpr::Node::surface, std::move(q), std::move(pg));
        }
        pos_ = at;
        fail(name.empty() ? "expected a variety leaf"
                          : "unknown leaf '" + name + "' (sym takes a single leaf)");
    }

    std::string_view src_;
    std::size_t pos_ = 0;
};

} // namespace detail

inline ExprPtr parse_expr(std::string_view source)
{
    return detail::ExprParser(source).run();
}

inline std::string serialize(const VarietyExpr& e)
{
    using Node = VarietyExpr::Node;
    auto grouped = [](const VarietyExpr& child, bool needs) {
        std::string s = serialize(child);
        return needs ? "(" + s + ")" : s;
    };
    switch (e.node) {
    case Node::point: return "point";
    case Node::lefschetz: return "L";
    case Node::elliptic: return "E";
    case Node::affine: return "A(" + e.a.str() + ")";
    case Node::proj: return "P(" + e.a.str() + ")";
    case Node::curve: return "curve(" + e.a.str() + ")";
    case Node::surface: return "surface(" + e.a.str() + "," + e.b.str() + ")";
    case Node::add: return serialize(*e.lhs) + " + " + serialize(*e.rhs);
    case Node::sub:
        return serialize(*e.lhs) + " - " +
               grouped(*e.rhs, e.rhs->node == Node::add || e.rhs->node == Node::sub);
    case Node::mul:
        return grouped(*e.lhs, e.lhs->node == Node::add || e.lhs->node == Node::sub) + "*" +
               grouped(*e.rhs, e.rhs->node == Node::add || e.rhs->node == Node::sub);
    case Node::pow:
        if (!e.lhs->is_leaf())
            throw domain_error("'^' applies to a single leaf in the expression grammar");
        return serialize(*e.lhs) + "^" + e.a.str();
    case Node::sym:
    default:
        if (!e.lhs->is_leaf())
            throw domain_error("sym applies to a single leaf in the expression grammar");
        return "sym(" + serialize(*e.lhs) + ", " + e.a.str() + ")";
    }
}

// --- the measure -------------------------------------------------------

namespace detail {
inline RingElement mu_h_sym(const Alphabet& C, const VarietyExpr& leaf, int n)
{
    using Node = VarietyExpr::Node;
    switch (leaf.node) {
    case Node::elliptic:
        return RingElement::basis(C, psi_h(sym_power(HodgeVector::curve(1), n)));
    case Node::curve:
        return RingElement::basis(C, psi_h(sym_power(HodgeVector::curve(leaf.a), n)));
    case Node::surface:
        // leading-term model: the Hilbert-scheme resolution of the symmetric
        // power supplies the (k,0) data
        return RingElement::basis(
            C, psi_h(hilbert_scheme_h0(HodgeVector::surface(leaf.a, leaf.b), n)));
    case Node::proj:
        // symmetric powers of projective space carry no holomorphic k-forms
        // (forms on a finite-quotient resolution restrict to invariant forms
        // on the smooth locus, and P^d has none), so the word is trivial
        return RingElement::constant(C, Integer(1));
    default:
        throw domain_error("sym is supported for curve, surface, P(n), and E leaves only");
    }
}
} // namespace detail

inline RingElement eval_mu_h(const VarietyExpr& e)
{
    using Node = VarietyExpr::Node;
    const Alphabet C = Alphabet::hodge();
    switch (e.node) {
    case Node::point: return RingElement::constant(C, Integer(1));
    case Node::lefschetz: return RingElement(C);
    case Node::affine:
        return e.a == 0 ? RingElement::constant(C, Integer(1)) : RingElement(C);
    case Node::proj: return RingElement::constant(C, Integer(1));
    case Node::elliptic:
        return RingElement::basis(C, psi_h(HodgeVector::curve(1)));
    case Node::curve:
        return RingElement::basis(C, psi_h(HodgeVector::curve(e.a)));
    case Node::surface:
        return RingElement::basis(C, psi_h(HodgeVector::surface(e.a, e.b)));
    case Node::add: return eval_mu_h(*e.lhs) + eval_mu_h(*e.rhs);
    case Node::sub: return eval_mu_h(*e.lhs) - eval_mu_h(*e.rhs);
    case Node::mul: return eval_mu_h(*e.lhs) * eval_mu_h(*e.rhs);
    case Node::pow: {
        if (e.a < 0) throw domain_error("negative exponent in the expression");
        RingElement r = RingElement::constant(C, Integer(1));
        RingElement base = eval_mu_h(*e.lhs);
        for (Integer k = 0; k < e.a; ++k) r = r * base;
        return r;
    }
    case Node::sym:
    default: {
        if (e.a < 0 || e.a > 1000000) throw domain_error("sym order out of range");
        return detail::mu_h_sym(C, *e.lhs, static_cast<int>(e.a));
    }
    }
}

inline RingElement eval_mu_h(std::string_view source)
{
    return eval_mu_h(*parse_expr(source));
}

} // namespace mzeta
