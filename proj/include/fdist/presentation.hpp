#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "fdist/linear.hpp"
#include "fdist/term.hpp"
#include "fdist/variety.hpp"

namespace fdist {

// Affine integer expression over named index variables, e.g. n+m or k-1.
struct IndexExpr {
    std::map<std::string, long> coeffs;
    Int constant{0};

    static IndexExpr constant_expr(Int c) {
        IndexExpr e;
        e.constant = std::move(c);
        return e;
    }
    static IndexExpr var(const std::string& name) {
        IndexExpr e;
        e.coeffs[name] = 1;
        return e;
    }

    Int eval(const std::map<std::string, Int>& env) const;
    bool is_constant() const { return coeffs.empty(); }
    std::string str() const;

    friend bool operator==(const IndexExpr& a, const IndexExpr& b) {
        return a.coeffs == b.coeffs && a.constant == b.constant;
    }
    IndexExpr& operator+=(const IndexExpr& o) {
        for (const auto& [v, c] : o.coeffs) {
            coeffs[v] += c;
            if (coeffs[v] == 0) coeffs.erase(v);
        }
        constant += o.constant;
        return *this;
    }
};

// Term pattern over one integer-indexed generator family.
struct PatternTerm {
    bool is_leaf = true;
    IndexExpr index;        // leaf
    OpLabel op{OpLabel::circ};
    std::shared_ptr<const PatternTerm> lhs, rhs;

    static PatternTerm leaf(IndexExpr e) {
        PatternTerm p;
        p.index = std::move(e);
        return p;
    }
    static PatternTerm node(OpLabel op, PatternTerm l, PatternTerm r) {
        PatternTerm p;
        p.is_leaf = false;
        p.op = op;
        p.lhs = std::make_shared<const PatternTerm>(std::move(l));
        p.rhs = std::make_shared<const PatternTerm>(std::move(r));
        return p;
    }

    Term instantiate(const std::string& gen, const std::map<std::string, Int>& env) const;
    IndexExpr weight_expr() const;
    long degree() const { return is_leaf ? 1 : lhs->degree() + rhs->degree(); }
    void collect_vars(std::vector<std::string>& out) const;
    std::string str(const std::string& gen) const;
};

struct Condition {
    enum Kind { nonzero, positive, negative };
    std::string var;
    Kind kind;

    bool holds(const std::map<std::string, Int>& env) const;
    std::string str() const;
};

// An integer-parametrized rewrite family: pattern -> replacement under side
// conditions. Construction validates weight homogeneity symbolically and
// strict term-order decrease on sampled instantiations.
struct RuleFamily {
    std::string name;
    PatternTerm pattern;
    std::vector<std::pair<Rational, PatternTerm>> replacement;
    std::vector<Condition> conditions;

    std::vector<std::string> variables() const;
    // lhs - rhs, instantiated; the ideal element this family contributes.
    LinComb ideal_element(const std::string& gen, const std::map<std::string, Int>& env) const;
    LinComb replacement_comb(const std::string& gen,
                             const std::map<std::string, Int>& env) const;
    std::string str(const std::string& gen) const;
};

RuleFamily make_rule(const std::string& name, const std::string& line, Variety v,
                     const std::string& gen);

struct Presentation {
    std::string name;
    Variety variety{Variety::pre_associative};
    std::string gen;  // generator family name, indexed by Z
    std::vector<RuleFamily> rules;
    long cap = 3;
    // True for the built-ins whose rewriting system is certified against
    // the paper-transcribed degree-3 ideal; custom presentations get
    // window-oracle-only verdicts.
    bool certified = false;
};

Presentation builtin_preassoc_presentation();
Presentation builtin_prelie_presentation();

// Text format: `variety: <name>`, `gens: a(Z)`, then one rule family per
// line, e.g. `(a(n) * a(m)) -> (a(0) * a(n+m)) when n != 0`.
Presentation parse_presentation(const std::string& text, const std::string& name = "custom");

// Exhaustive reduction modulo variety identities then rule families.
LinComb quotient_normal_form(const Presentation& p, const LinComb& x);

struct MembershipVerdict {
    enum Status { zero_in_quotient, nonzero_with_normal_form };
    Status status;
    LinComb normal_form;      // rewriting normal form
    bool oracle_agrees;       // oracle verdict equals rewriting verdict
    bool window_oracle_only;  // custom presentation: no confluence promise
};

// Independent ideal-membership oracle: spans all rule-family instances and
// variety-identity instances whose monomials stay inside the index window
// at the weight of x, then decides membership by exact elimination.
class MembershipOracle {
  public:
    MembershipOracle(const Presentation& p, long window) : p_(p), window_(window) {}

    bool in_ideal(const LinComb& x);
    MembershipVerdict verdict(const LinComb& x);
    long window() const { return window_; }

  private:
    SpanReducer& span_for(const Int& weight, long max_degree);
    const Presentation& p_;
    long window_;
    std::map<std::pair<Int, long>, std::shared_ptr<SpanReducer>> cache_;
};

MembershipVerdict oracle_membership(const Presentation& p, const LinComb& x, long window);

}  // namespace fdist
