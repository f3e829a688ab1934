#include "fdist/variety.hpp"

#include <algorithm>
#include <optional>

#include "fdist/errors.hpp"
#include "fdist/io.hpp"
#include "fdist/linear.hpp"

namespace fdist {

namespace {

Term X() { return Term::leaf("x"); }
Term Y() { return Term::leaf("y"); }
Term Z() { return Term::leaf("z"); }
Term op2(OpLabel op, Term a, Term b) { return Term::node(op, std::move(a), std::move(b)); }

LinComb minus(const Term& a, const Term& b) {
    LinComb r(a);
    r.add_term(b, Rational(-1));
    return r;
}

std::vector<Identity> build_identities(Variety v) {
    using L = OpLabel;
    switch (v) {
        case Variety::associative:
            return {{"associativity",
                     minus(op2(L::mul, op2(L::mul, X(), Y()), Z()),
                           op2(L::mul, X(), op2(L::mul, Y(), Z()))),
                     3}};
        case Variety::lie: {
            LinComb anti(op2(L::bracket, X(), Y()));
            anti += LinComb(op2(L::bracket, Y(), X()));
            // Derivation form: [x[yz]] - [y[xz]] - [[xy]z].
            LinComb jac(op2(L::bracket, X(), op2(L::bracket, Y(), Z())));
            jac -= LinComb(op2(L::bracket, Y(), op2(L::bracket, X(), Z())));
            jac -= LinComb(op2(L::bracket, op2(L::bracket, X(), Y()), Z()));
            return {{"anticommutativity", anti, 2}, {"jacobi", jac, 3}};
        }
        case Variety::right_symmetric: {
            LinComb rsym(op2(L::circ, op2(L::circ, X(), Y()), Z()));
            rsym -= LinComb(op2(L::circ, X(), op2(L::circ, Y(), Z())));
            rsym -= LinComb(op2(L::circ, op2(L::circ, X(), Z()), Y()));
            rsym += LinComb(op2(L::circ, X(), op2(L::circ, Z(), Y())));
            return {{"right-symmetry", rsym, 3}};
        }
        case Variety::novikov: {
            auto ids = build_identities(Variety::right_symmetric);
            LinComb lcom(op2(L::circ, X(), op2(L::circ, Y(), Z())));
            lcom -= LinComb(op2(L::circ, Y(), op2(L::circ, X(), Z())));
            ids.push_back({"left-commutativity", lcom, 3});
            return ids;
        }
        case Variety::pre_associative: {
            LinComb star_assoc = minus(op2(L::star, op2(L::star, X(), Y()), Z()),
                                       op2(L::star, X(), op2(L::star, Y(), Z())));
            LinComb left_star = minus(op2(L::succ, op2(L::star, X(), Y()), Z()),
                                      op2(L::succ, X(), op2(L::succ, Y(), Z())));
            LinComb right_star(op2(L::succ, X(), op2(L::star, Y(), Z())));
            right_star -= LinComb(op2(L::star, op2(L::succ, X(), Y()), Z()));
            right_star -= LinComb(op2(L::succ, X(), op2(L::succ, Y(), Z())));
            right_star += LinComb(op2(L::succ, op2(L::succ, X(), Y()), Z()));
            return {{"star-associativity", star_assoc, 3},
                    {"left-star-shift", left_star, 3},
                    {"right-star-expansion", right_star, 3}};
        }
        case Variety::leibniz: {
            LinComb leib(op2(L::bracket, X(), op2(L::bracket, Y(), Z())));
            leib -= LinComb(op2(L::bracket, Y(), op2(L::bracket, X(), Z())));
            leib -= LinComb(op2(L::bracket, op2(L::bracket, X(), Y()), Z()));
            return {{"leibniz", leib, 3}};
        }
    }
    return {};
}

bool op_in_signature(OpLabel op, Variety v) {
    auto sig = variety_signature(v);
    return std::find(sig.begin(), sig.end(), op) != sig.end();
}

void check_signature(const Term& t, Variety v) {
    if (t.is_leaf()) return;
    if (!op_in_signature(t.op(), v))
        throw SignatureMismatch(std::string("signature mismatch: operation '") +
                                op_token(t.op()) + "' is not in the " + variety_name(v) +
                                " signature");
    check_signature(t.lhs(), v);
    check_signature(t.rhs(), v);
}

// One oriented rewriting step at the root, when a rule matches.
std::optional<LinComb> root_step(const Term& t, Variety v) {
    using L = OpLabel;
    if (!t.is_node()) return std::nullopt;
    switch (v) {
        case Variety::associative:
            if (t.op() == L::mul && t.lhs().is_node())
                return LinComb(op2(L::mul, t.lhs().lhs(), op2(L::mul, t.lhs().rhs(), t.rhs())));
            return std::nullopt;
        case Variety::pre_associative:
            if (t.op() == L::star && t.lhs().is_node() && t.lhs().op() == L::star)
                return LinComb(
                    op2(L::star, t.lhs().lhs(), op2(L::star, t.lhs().rhs(), t.rhs())));
            if (t.op() == L::succ && t.lhs().is_node() && t.lhs().op() == L::star)
                return LinComb(
                    op2(L::succ, t.lhs().lhs(), op2(L::succ, t.lhs().rhs(), t.rhs())));
            if (t.op() == L::succ && t.rhs().is_node() && t.rhs().op() == L::star) {
                // x(y*z) -> (xy)*z + x(yz) - (xy)z
                const Term &x = t.lhs(), &y = t.rhs().lhs(), &z = t.rhs().rhs();
                LinComb r(op2(L::star, op2(L::succ, x, y), z));
                r += LinComb(op2(L::succ, x, op2(L::succ, y, z)));
                r -= LinComb(op2(L::succ, op2(L::succ, x, y), z));
                return r;
            }
            return std::nullopt;
        case Variety::right_symmetric:
        case Variety::novikov:
            if (t.op() == L::circ && t.lhs().is_node() && t.lhs().op() == L::circ) {
                const Term &x = t.lhs().lhs(), &y = t.lhs().rhs(), &z = t.rhs();
                if (Term::term_compare(y, z) > 0) {
                    // (x o y) o z -> (x o z) o y + x o (y o z) - x o (z o y)
                    LinComb r(op2(L::circ, op2(L::circ, x, z), y));
                    r += LinComb(op2(L::circ, x, op2(L::circ, y, z)));
                    r -= LinComb(op2(L::circ, x, op2(L::circ, z, y)));
                    return r;
                }
            }
            if (v == Variety::novikov && t.op() == L::circ && t.rhs().is_node() &&
                t.rhs().op() == L::circ) {
                const Term &x = t.lhs(), &y = t.rhs().lhs(), &z = t.rhs().rhs();
                if (Term::term_compare(x, y) > 0)
                    return LinComb(op2(L::circ, y, op2(L::circ, x, z)));
            }
            return std::nullopt;
        case Variety::leibniz:
            if (t.op() == L::bracket && t.lhs().is_node()) {
                const Term &x = t.lhs().lhs(), &y = t.lhs().rhs(), &z = t.rhs();
                LinComb r(op2(L::bracket, x, op2(L::bracket, y, z)));
                r -= LinComb(op2(L::bracket, y, op2(L::bracket, x, z)));
                return r;
            }
            return std::nullopt;
        case Variety::lie:
            return std::nullopt;  // handled by span reduction
    }
    return std::nullopt;
}

// Leftmost-innermost single step anywhere in the term.
std::optional<LinComb> step_anywhere(const Term& t, Variety v) {
    if (t.is_leaf()) return std::nullopt;
    if (auto l = step_anywhere(t.lhs(), v))
        return LinComb::product(t.op(), *l, LinComb(t.rhs()));
    if (auto r = step_anywhere(t.rhs(), v))
        return LinComb::product(t.op(), LinComb(t.lhs()), *r);
    return root_step(t, v);
}

constexpr long kStepBudget = 1000000;

LinComb rewrite_fixpoint(const LinComb& x, Variety v) {
    LinComb done;
    LinComb pending = x;
    long steps = 0;
    while (!pending.is_zero()) {
        auto it = pending.terms().begin();
        Term t = it->first;
        Rational c = it->second;
        pending.add_term(t, -c);
        if (auto next = step_anywhere(t, v)) {
            if (++steps > kStepBudget)
                throw ReductionBudgetExceeded("reduction budget exceeded in " +
                                              std::string(variety_name(v)) + " normal form");
            *next *= c;
            pending += *next;
        } else {
            done.add_term(t, c);
        }
    }
    return done;
}

// Degree <= 3 identity-instance span over the leaves of x; complete for
// membership at this degree because every ideal element is a combination
// of identity instances and single products of degree-2 instances with
// leaves.
SpanReducer identity_span(Variety v, const std::vector<GenSymbol>& leaves, long cap) {
    SpanReducer span;
    const auto& ids = variety_identities(v);
    std::vector<Term> leaf_terms;
    leaf_terms.reserve(leaves.size());
    for (const auto& g : leaves) leaf_terms.push_back(Term::leaf(g));
    auto sig = variety_signature(v);

    std::vector<Term> args1 = leaf_terms;
    std::vector<Term> args2;  // degree-2 terms over the leaves
    if (cap >= 3)
        for (OpLabel op : sig)
            for (const auto& a : leaf_terms)
                for (const auto& b : leaf_terms) args2.push_back(Term::node(op, a, b));

    for (const auto& id : ids) {
        std::vector<std::string> vars = {"x", "y", "z"};
        vars.resize(id.arity);
        long base = id.arity;  // identity degree equals its arity (multilinear)
        // Substitution arguments: leaves, plus one degree-2 argument when the
        // total degree stays within the cap.
        std::vector<std::vector<Term>> choices(id.arity, args1);
        auto emit = [&](const std::map<std::string, Term>& env) {
            span.add_row(substitute(id.combo, env));
        };
        // All-leaf instances.
        std::vector<std::size_t> idx(id.arity, 0);
        for (;;) {
            std::map<std::string, Term> env;
            for (int i = 0; i < id.arity; ++i) env[vars[i]] = args1[idx[i]];
            emit(env);
            int p = id.arity - 1;
            while (p >= 0 && ++idx[p] == args1.size()) idx[p--] = 0;
            if (p < 0) break;
        }
        // One degree-2 slot, if it fits under the cap.
        if (base + 1 <= cap) {
            for (int slot = 0; slot < id.arity; ++slot) {
                std::vector<std::size_t> j(id.arity, 0);
                for (;;) {
                    std::map<std::string, Term> env;
                    bool ok = true;
                    for (int i = 0; i < id.arity; ++i) {
                        if (i == slot) {
                            if (j[i] >= args2.size()) { ok = false; break; }
                            env[vars[i]] = args2[j[i]];
                        } else {
                            env[vars[i]] = args1[j[i]];
                        }
                    }
                    if (!ok) break;
                    emit(env);
                    int p = id.arity - 1;
                    while (p >= 0) {
                        std::size_t limit = (p == slot) ? args2.size() : args1.size();
                        if (++j[p] == limit) j[p--] = 0; else break;
                    }
                    if (p < 0) break;
                }
            }
        }
        // Products of degree-2 identity instances with a leaf.
        if (id.arity == 2 && base + 1 <= cap) {
            for (const auto& a : leaf_terms)
                for (const auto& b : leaf_terms) {
                    std::map<std::string, Term> env{{"x", a}, {"y", b}};
                    LinComb inst = substitute(id.combo, env);
                    for (OpLabel op : sig)
                        for (const auto& w : leaf_terms) {
                            span.add_row(LinComb::product(op, inst, LinComb(w)));
                            span.add_row(LinComb::product(op, LinComb(w), inst));
                        }
                }
        }
    }
    return span;
}

void collect_leaves(const Term& t, std::vector<GenSymbol>& out) {
    if (t.is_leaf()) {
        for (const auto& g : out)
            if (g == t.symbol()) return;
        out.push_back(t.symbol());
        return;
    }
    collect_leaves(t.lhs(), out);
    collect_leaves(t.rhs(), out);
}

}  // namespace

const std::vector<Identity>& variety_identities(Variety v) {
    static const std::map<Variety, std::vector<Identity>> table = [] {
        std::map<Variety, std::vector<Identity>> m;
        for (Variety w : {Variety::associative, Variety::lie, Variety::right_symmetric,
                          Variety::novikov, Variety::pre_associative, Variety::leibniz})
            m[w] = build_identities(w);
        return m;
    }();
    return table.at(v);
}

Term substitute(const Term& t, const std::map<std::string, Term>& env) {
    if (t.is_leaf()) {
        if (!t.symbol().indexed()) {
            auto it = env.find(t.symbol().name);
            if (it != env.end()) return it->second;
        }
        return t;
    }
    return Term::node(t.op(), substitute(t.lhs(), env), substitute(t.rhs(), env));
}

LinComb substitute(const LinComb& x, const std::map<std::string, Term>& env) {
    return x.map_terms([&](const Term& t) { return LinComb(substitute(t, env)); });
}

void NormalFormEngine::validate(const LinComb& x) const {
    for (const auto& [t, c] : x.terms()) {
        if (t.degree() > cap_)
            throw DegreeOverflow("degree overflow: term of degree " +
                                 std::to_string(t.degree()) + " exceeds cap " +
                                 std::to_string(cap_));
        check_signature(t, variety_);
    }
}

LinComb NormalFormEngine::normal_form(const LinComb& x) const {
    validate(x);
    if (variety_ != Variety::lie) return rewrite_fixpoint(x, variety_);
    std::vector<GenSymbol> leaves;
    for (const auto& [t, c] : x.terms()) collect_leaves(t, leaves);
    SpanReducer span = identity_span(Variety::lie, leaves, cap_);
    return span.reduce(x);
}

bool NormalFormEngine::check_identity(const LinComb& templ, int arity) const {
    if (arity > cap_) throw DegreeOverflow("degree overflow: arity exceeds cap");
    std::map<std::string, Term> env;
    const char* names[] = {"x", "y", "z"};
    for (int i = 0; i < arity && i < 3; ++i)
        env[names[i]] = Term::leaf(GenSymbol("g", Int(i + 1)));
    return normal_form(substitute(templ, env)).is_zero();
}

bool check_identity(Variety v, const LinComb& templ, int arity) {
    return NormalFormEngine(v).check_identity(templ, arity);
}

namespace {

std::vector<Term> magmatic_words(const std::vector<GenSymbol>& gens, long degree) {
    std::vector<Term> out;
    if (degree <= 0) return out;
    if (degree == 1) {
        for (const auto& g : gens) out.push_back(Term::leaf(g));
        return out;
    }
    for (long i = 1; i < degree; ++i) {
        auto ls = magmatic_words(gens, i);
        auto rs = magmatic_words(gens, degree - i);
        for (const auto& l : ls)
            for (const auto& r : rs) out.push_back(Term::node(OpLabel::succ, l, r));
    }
    return out;
}

void compositions(long total, std::vector<long>& current, std::vector<std::vector<long>>& out) {
    if (total == 0) {
        out.push_back(current);
        return;
    }
    for (long part = 1; part <= total; ++part) {
        current.push_back(part);
        compositions(total - part, current, out);
        current.pop_back();
    }
}

}  // namespace

std::vector<Term> preassoc_basis_monomials(const std::vector<GenSymbol>& gens, long degree,
                                           long cap) {
    if (degree > cap) throw DegreeOverflow("degree overflow: basis degree exceeds cap");
    std::vector<std::vector<long>> comps;
    std::vector<long> cur;
    compositions(degree, cur, comps);
    std::vector<Term> out;
    for (const auto& comp : comps) {
        // Enumerate the word tuple for each composition.
        std::vector<std::vector<Term>> parts;
        for (long d : comp) parts.push_back(magmatic_words(gens, d));
        std::vector<std::size_t> idx(parts.size(), 0);
        for (;;) {
            Term t = parts.back()[idx.back()];
            for (std::size_t i = parts.size() - 1; i-- > 0;)
                t = Term::node(OpLabel::star, parts[i][idx[i]], t);
            out.push_back(t);
            std::size_t p = parts.size();
            while (p-- > 0) {
                if (++idx[p] < parts[p].size()) break;
                idx[p] = 0;
                if (p == 0) goto done;
            }
        }
    done:;
    }
    std::sort(out.begin(), out.end(), TermLess{});
    return out;
}

namespace {
bool star_free(const Term& t) {
    if (t.is_leaf()) return true;
    return t.op() == OpLabel::succ && star_free(t.lhs()) && star_free(t.rhs());
}
}  // namespace

bool is_preassoc_basis_monomial(const Term& t) {
    if (t.is_leaf()) return true;
    if (t.op() == OpLabel::succ) return star_free(t);
    if (t.op() != OpLabel::star) return false;
    return star_free(t.lhs()) && is_preassoc_basis_monomial(t.rhs());
}

std::vector<Term> all_terms(Variety v, const std::vector<GenSymbol>& gens, long degree) {
    std::vector<Term> out;
    if (degree == 1) {
        for (const auto& g : gens) out.push_back(Term::leaf(g));
        return out;
    }
    auto sig = variety_signature(v);
    for (long i = 1; i < degree; ++i) {
        auto ls = all_terms(v, gens, i);
        auto rs = all_terms(v, gens, degree - i);
        for (OpLabel op : sig)
            for (const auto& l : ls)
                for (const auto& r : rs) out.push_back(Term::node(op, l, r));
    }
    return out;
}

}  // namespace fdist
