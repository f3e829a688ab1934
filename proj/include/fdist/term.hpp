#pragma once

#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "fdist/errors.hpp"
#include "fdist/symbols.hpp"

namespace fdist {

// An operation-labelled binary tree over generator symbols. Immutable value
// type with structural equality; subtrees may be shared.
class Term {
  public:
    Term() = default;

    static Term leaf(GenSymbol g) {
        auto n = std::make_shared<const Node>();
        const_cast<Node&>(*n).sym = std::move(g);
        const_cast<Node&>(*n).degree = 1;
        return Term(std::move(n));
    }
    static Term leaf(const std::string& name) { return leaf(GenSymbol(name)); }
    static Term leaf(const std::string& name, Int index) {
        return leaf(GenSymbol(name, std::move(index)));
    }
    static Term node(OpLabel op, Term lhs, Term rhs) {
        auto n = std::make_shared<const Node>();
        auto& m = const_cast<Node&>(*n);
        m.op = op;
        m.degree = lhs.degree() + rhs.degree();
        m.lhs = std::move(lhs);
        m.rhs = std::move(rhs);
        return Term(std::move(n));
    }

    bool empty() const { return !node_; }
    bool is_leaf() const { return node_ && node_->degree == 1; }
    bool is_node() const { return node_ && node_->degree > 1; }

    const GenSymbol& symbol() const { return node_->sym; }
    OpLabel op() const { return node_->op; }
    const Term& lhs() const { return node_->lhs; }
    const Term& rhs() const { return node_->rhs; }

    // Number of leaves.
    long degree() const { return node_ ? node_->degree : 0; }

    // Sum of leaf indices; throws when some leaf is un-indexed.
    Int weight() const {
        Int w(0);
        add_weight(*this, w);
        return w;
    }

    // Weight with un-indexed leaves contributing 0; used only by the term
    // order so that mixed combinations still compare deterministically.
    Int order_weight() const {
        Int w(0);
        add_order_weight(*this, w);
        return w;
    }

    bool all_indexed() const {
        if (is_leaf()) return symbol().indexed();
        return lhs().all_indexed() && rhs().all_indexed();
    }

    friend bool operator==(const Term& a, const Term& b) { return term_compare(a, b) == 0; }
    friend bool operator!=(const Term& a, const Term& b) { return term_compare(a, b) != 0; }
    friend bool operator<(const Term& a, const Term& b) { return term_compare(a, b) < 0; }

    // Canonical total order: degree, then weight, then structure (op label,
    // then left, then right, with the generator order at the leaves).
    static int term_compare(const Term& a, const Term& b) {
        if (a.empty() || b.empty()) return a.empty() ? (b.empty() ? 0 : -1) : 1;
        if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
        Int wa = a.order_weight(), wb = b.order_weight();
        if (wa != wb) return wa < wb ? -1 : 1;
        return structural_compare(a, b);
    }

  private:
    struct Node {
        GenSymbol sym;          // valid when degree == 1
        OpLabel op{OpLabel::succ};
        Term lhs, rhs;          // valid when degree > 1
        long degree{0};
    };

    explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

    static void add_weight(const Term& t, Int& w) {
        if (t.is_leaf()) {
            if (!t.symbol().indexed())
                throw UnweightedTerm("unweighted term: leaf " + t.symbol().str() +
                                     " has no index");
            w += *t.symbol().index;
            return;
        }
        add_weight(t.lhs(), w);
        add_weight(t.rhs(), w);
    }

    static void add_order_weight(const Term& t, Int& w) {
        if (t.is_leaf()) {
            if (t.symbol().indexed()) w += *t.symbol().index;
            return;
        }
        add_order_weight(t.lhs(), w);
        add_order_weight(t.rhs(), w);
    }

    static int structural_compare(const Term& a, const Term& b) {
        if (a.is_leaf() != b.is_leaf()) return a.is_leaf() ? -1 : 1;
        if (a.is_leaf()) return gen_compare(a.symbol(), b.symbol());
        if (a.op() != b.op()) return a.op() < b.op() ? -1 : 1;
        if (int c = term_compare(a.lhs(), b.lhs())) return c;
        return term_compare(a.rhs(), b.rhs());
    }

    std::shared_ptr<const Node> node_;
};

struct TermLess {
    bool operator()(const Term& a, const Term& b) const { return Term::term_compare(a, b) < 0; }
};

inline long term_degree(const Term& t) { return t.degree(); }
inline Int term_weight(const Term& t) { return t.weight(); }

// A finite linear combination of terms with exact rational coefficients.
// Canonical: no zero coefficients, terms held in the canonical term order.
class LinComb {
  public:
    using Map = std::map<Term, Rational, TermLess>;

    LinComb() = default;
    explicit LinComb(const Term& t, const Rational& c = Rational(1)) {
        if (!c.is_zero()) terms_[t] = c;
    }

    static LinComb zero() { return LinComb(); }

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const Map& terms() const { return terms_; }

    Rational coefficient(const Term& t) const {
        auto it = terms_.find(t);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(const Term& t, const Rational& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(t);
        if (it == terms_.end()) {
            terms_.emplace(t, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    LinComb& operator+=(const LinComb& o) {
        for (const auto& [t, c] : o.terms_) add_term(t, c);
        return *this;
    }
    LinComb& operator-=(const LinComb& o) {
        for (const auto& [t, c] : o.terms_) add_term(t, -c);
        return *this;
    }
    LinComb& operator*=(const Rational& c) {
        if (c.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [t, v] : terms_) v *= c;
        return *this;
    }

    friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
    friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
    friend LinComb operator*(const Rational& c, LinComb x) { return x *= c; }
    LinComb operator-() const {
        LinComb r(*this);
        for (auto& [t, v] : r.terms_) v = -v;
        return r;
    }

    friend bool operator==(const LinComb& a, const LinComb& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const LinComb& a, const LinComb& b) { return !(a == b); }

    long max_degree() const {
        long d = 0;
        for (const auto& [t, c] : terms_) d = std::max(d, t.degree());
        return d;
    }

    // All terms must share one weight; throws on mixed weights.
    Int homogeneous_weight() const {
        if (terms_.empty()) return Int(0);
        Int w = terms_.begin()->first.weight();
        for (const auto& [t, c] : terms_)
            if (t.weight() != w) throw Error("combination is not weight-homogeneous");
        return w;
    }

    bool is_weight_homogeneous() const {
        if (terms_.empty()) return true;
        try {
            homogeneous_weight();
        } catch (const Error&) {
            return false;
        }
        return true;
    }

    // Bilinear extension of a node constructor.
    static LinComb product(OpLabel op, const LinComb& a, const LinComb& b) {
        LinComb r;
        for (const auto& [ta, ca] : a.terms_)
            for (const auto& [tb, cb] : b.terms_) r.add_term(Term::node(op, ta, tb), ca * cb);
        return r;
    }

    template <typename Fn>
    LinComb map_terms(Fn&& fn) const {  // fn: Term -> LinComb
        LinComb r;
        for (const auto& [t, c] : terms_) {
            LinComb img = fn(t);
            img *= c;
            r += img;
        }
        return r;
    }

  private:
    Map terms_;
};

inline LinComb lincomb_combine(const std::vector<std::pair<Rational, LinComb>>& xs) {
    LinComb r;
    for (const auto& [c, x] : xs) {
        LinComb scaled = x;
        scaled *= c;
        r += scaled;
    }
    return r;
}

}  // namespace fdist
