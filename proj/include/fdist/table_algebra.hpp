#pragma once

#include <map>
#include <string>
#include <vector>

#include "fdist/rational.hpp"
#include "fdist/symbols.hpp"
#include "fdist/term.hpp"

namespace fdist {

// Dense exact row reduction for coordinate vectors.
class DenseReducer {
  public:
    bool add_row(std::vector<Rational> r) {
        r = reduce(std::move(r));
        std::size_t p = pivot_of(r);
        if (p == r.size()) return false;
        Rational inv = r[p].inverse();
        for (auto& c : r) c *= inv;
        rows_.emplace(p, std::move(r));
        return true;
    }

    std::vector<Rational> reduce(std::vector<Rational> x) const {
        for (const auto& [p, row] : rows_) {
            if (p >= x.size() || x[p].is_zero()) continue;
            Rational c = x[p];
            for (std::size_t i = 0; i < x.size(); ++i) x[i] -= c * row[i];
        }
        return x;
    }

    std::size_t rank() const { return rows_.size(); }

  private:
    static std::size_t pivot_of(const std::vector<Rational>& r) {
        for (std::size_t i = 0; i < r.size(); ++i)
            if (!r[i].is_zero()) return i;
        return r.size();
    }
    std::map<std::size_t, std::vector<Rational>> rows_;  // pivot -> monic row
};

// Finite-dimensional algebra given by structure constants, one table per
// operation. Elements are dense coordinate vectors over the basis.
class TableAlgebra {
  public:
    using Element = std::vector<Rational>;
    // table[i][j] = coordinates of e_i op e_j
    using Table = std::vector<std::vector<Element>>;

    TableAlgebra() = default;
    TableAlgebra(std::string name, std::vector<std::string> basis,
                 std::map<OpLabel, Table> tables)
        : name_(std::move(name)), basis_(std::move(basis)), tables_(std::move(tables)) {}

    const std::string& name() const { return name_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<std::string>& basis_names() const { return basis_; }

    std::vector<OpLabel> signature() const {
        std::vector<OpLabel> sig;
        for (const auto& [op, t] : tables_) sig.push_back(op);
        return sig;
    }

    Element zero() const { return Element(dim(), Rational(0)); }
    Element basis_element(std::size_t i) const {
        Element e = zero();
        e[i] = Rational(1);
        return e;
    }

    Element add(const Element& x, const Element& y) const {
        Element r = x;
        for (std::size_t i = 0; i < r.size(); ++i) r[i] += y[i];
        return r;
    }
    Element scale(const Rational& c, const Element& x) const {
        Element r = x;
        for (auto& v : r) v *= c;
        return r;
    }
    Element multiply(OpLabel op, const Element& x, const Element& y) const {
        const Table& table = tables_.at(op);
        Element r = zero();
        for (std::size_t i = 0; i < dim(); ++i) {
            if (x[i].is_zero()) continue;
            for (std::size_t j = 0; j < dim(); ++j) {
                if (y[j].is_zero()) continue;
                Rational c = x[i] * y[j];
                const Element& e = table[i][j];
                for (std::size_t k = 0; k < dim(); ++k) r[k] += c * e[k];
            }
        }
        return r;
    }
    Element normal_form(const Element& x) const { return x; }
    bool is_zero(const Element& x) const {
        for (const auto& c : x)
            if (!c.is_zero()) return false;
        return true;
    }
    std::string str(const Element& x) const;

  private:
    std::string name_;
    std::vector<std::string> basis_;
    std::map<OpLabel, Table> tables_;
};

// Evaluate an identity template on concrete elements of any algebra handle.
template <class A>
typename A::Element eval_term(const A& alg, const Term& t,
                              const std::map<std::string, typename A::Element>& env) {
    if (t.is_leaf()) return env.at(t.symbol().name);
    return alg.multiply(t.op(), eval_term(alg, t.lhs(), env), eval_term(alg, t.rhs(), env));
}

template <class A>
typename A::Element eval_comb(const A& alg, const LinComb& x,
                              const std::map<std::string, typename A::Element>& env) {
    typename A::Element r = alg.zero();
    for (const auto& [t, c] : x.terms()) r = alg.add(r, alg.scale(c, eval_term(alg, t, env)));
    return r;
}

// A commutative associative algebra with a derivation d turned into a
// Novikov algebra by x o y = d(x) y; also constructible from a direct
// circle table validated against right symmetry and left commutativity.
class NovikovModel {
  public:
    // structure[i][j] = coordinates of the commutative product e_i e_j;
    // derivation[i] = coordinates of d(e_i).
    static NovikovModel from_derivation(std::string name, std::vector<std::string> basis,
                                        TableAlgebra::Table structure,
                                        std::vector<std::vector<Rational>> derivation);
    static NovikovModel direct(std::string name, std::vector<std::string> basis,
                               TableAlgebra::Table circ_table);

    // Built-in models: k[u]/(u^3) with d = d/du, and the one-dimensional
    // algebra e o e = e whose Laurent series generate the Witt bracket.
    static NovikovModel upoly3();
    static NovikovModel virasoro();
    static NovikovModel load_file(const std::string& path);
    static NovikovModel by_name_or_file(const std::string& spec);

    const TableAlgebra& algebra() const { return alg_; }
    std::size_t dim() const { return alg_.dim(); }

  private:
    static void validate_novikov(const TableAlgebra& alg);
    TableAlgebra alg_;  // single op: circ
};

// Small non-Lie Leibniz algebra: [x,x] = y, every other basis bracket zero.
TableAlgebra sample_leibniz_algebra();
// A Lie algebra presented as a Leibniz one (sl2), for the I = 0 path.
TableAlgebra sl2_as_leibniz();

// Quotient of a Leibniz table algebra by the span of [a,b] + [b,a].
class TableLeibnizQuotient {
  public:
    explicit TableLeibnizQuotient(const TableAlgebra& src);
    // tau(x) = x + I, represented by the reduced coordinate vector.
    TableAlgebra::Element project(const TableAlgebra::Element& x) const {
        return span_.reduce(x);
    }
    std::size_t ideal_rank() const { return span_.rank(); }

  private:
    DenseReducer span_;
};

}  // namespace fdist
