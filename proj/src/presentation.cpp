#include "fdist/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>

#include "fdist/errors.hpp"
#include "fdist/io.hpp"

namespace fdist {

Int IndexExpr::eval(const std::map<std::string, Int>& env) const {
    Int v = constant;
    for (const auto& [name, c] : coeffs) {
        auto it = env.find(name);
        if (it == env.end()) throw Error("unbound index variable " + name);
        v += Int(c) * it->second;
    }
    return v;
}

std::string IndexExpr::str() const {
    std::string out;
    for (const auto& [name, c] : coeffs) {
        if (c >= 0 && !out.empty()) out += "+";
        if (c == -1)
            out += "-";
        else if (c != 1)
            out += std::to_string(c) + "*";
        out += name;
    }
    if (constant != 0 || out.empty()) {
        if (constant >= 0 && !out.empty()) out += "+";
        out += constant.get_str();
    }
    return out;
}

Term PatternTerm::instantiate(const std::string& gen,
                              const std::map<std::string, Int>& env) const {
    if (is_leaf) return Term::leaf(gen, index.eval(env));
    return Term::node(op, lhs->instantiate(gen, env), rhs->instantiate(gen, env));
}

IndexExpr PatternTerm::weight_expr() const {
    if (is_leaf) return index;
    IndexExpr w = lhs->weight_expr();
    w += rhs->weight_expr();
    return w;
}

void PatternTerm::collect_vars(std::vector<std::string>& out) const {
    if (is_leaf) {
        for (const auto& [v, c] : index.coeffs)
            if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
        return;
    }
    lhs->collect_vars(out);
    rhs->collect_vars(out);
}

std::string PatternTerm::str(const std::string& gen) const {
    if (is_leaf) return gen + "(" + index.str() + ")";
    if (op == OpLabel::bracket) return "[" + lhs->str(gen) + "," + rhs->str(gen) + "]";
    return "(" + lhs->str(gen) + " " + op_token(op) + " " + rhs->str(gen) + ")";
}

bool Condition::holds(const std::map<std::string, Int>& env) const {
    auto it = env.find(var);
    if (it == env.end()) throw Error("unbound index variable " + var);
    switch (kind) {
        case nonzero: return it->second != 0;
        case positive: return it->second > 0;
        case negative: return it->second < 0;
    }
    return false;
}

std::string Condition::str() const {
    switch (kind) {
        case nonzero: return var + " != 0";
        case positive: return var + " > 0";
        case negative: return var + " < 0";
    }
    return "?";
}

std::vector<std::string> RuleFamily::variables() const {
    std::vector<std::string> vars;
    pattern.collect_vars(vars);
    for (const auto& [c, p] : replacement) p.collect_vars(vars);
    return vars;
}

LinComb RuleFamily::replacement_comb(const std::string& gen,
                                     const std::map<std::string, Int>& env) const {
    LinComb r;
    for (const auto& [c, p] : replacement) r.add_term(p.instantiate(gen, env), c);
    return r;
}

LinComb RuleFamily::ideal_element(const std::string& gen,
                                  const std::map<std::string, Int>& env) const {
    LinComb r(pattern.instantiate(gen, env));
    r -= replacement_comb(gen, env);
    return r;
}

std::string RuleFamily::str(const std::string& gen) const {
    std::string out = pattern.str(gen) + " -> ";
    if (replacement.empty()) {
        out += "0";
    } else {
        bool first = true;
        for (const auto& [c, p] : replacement) {
            if (first) {
                if (c.sign() < 0) out += "-";
            } else {
                out += c.sign() < 0 ? " - " : " + ";
            }
            Rational a = c.sign() < 0 ? -c : c;
            if (!a.is_one()) out += a.str() + "*";
            out += p.str(gen);
            first = false;
        }
    }
    for (std::size_t i = 0; i < conditions.size(); ++i)
        out += (i == 0 ? " when " : " and ") + conditions[i].str();
    return out;
}

namespace {

struct RuleLexer {
    explicit RuleLexer(const std::string& s) : text(s) {}
    void skip_ws() {
        while (pos < text.size() && std::isspace((unsigned char)text[pos])) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    bool accept_word(const std::string& w) {
        skip_ws();
        if (text.compare(pos, w.size(), w) == 0) {
            std::size_t end = pos + w.size();
            if (end >= text.size() || !std::isalnum((unsigned char)text[end])) {
                pos = end;
                return true;
            }
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c))
            throw ParseError(std::string("expected '") + c + "' in rule: " + text);
    }
    std::optional<std::string> ident() {
        skip_ws();
        if (pos >= text.size() || (!std::isalpha((unsigned char)text[pos]) && text[pos] != '_'))
            return std::nullopt;
        std::size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum((unsigned char)text[pos]) || text[pos] == '_'))
            ++pos;
        return text.substr(start, pos - start);
    }
    std::optional<Int> integer() {
        skip_ws();
        std::size_t p = pos;
        while (p < text.size() && std::isdigit((unsigned char)text[p])) ++p;
        if (p == pos) return std::nullopt;
        Int v(text.substr(pos, p - pos));
        pos = p;
        return v;
    }
    const std::string& text;
    std::size_t pos = 0;
};

IndexExpr parse_index_expr(RuleLexer& lex) {
    IndexExpr e;
    int sign = 1;
    if (lex.accept('-')) sign = -1;
    for (;;) {
        if (auto id = lex.ident()) {
            e.coeffs[*id] += sign;
            if (e.coeffs[*id] == 0) e.coeffs.erase(*id);
        } else if (auto n = lex.integer()) {
            e.constant += Int(sign) * *n;
        } else {
            throw ParseError("expected index expression in rule: " + lex.text);
        }
        if (lex.accept('+'))
            sign = 1;
        else if (lex.accept('-'))
            sign = -1;
        else
            break;
    }
    return e;
}

PatternTerm parse_pattern(RuleLexer& lex, Variety v, const std::string& gen) {
    if (lex.accept('(')) {
        PatternTerm l = parse_pattern(lex, v, gen);
        OpLabel op;
        if (lex.accept('*'))
            op = v == Variety::associative ? OpLabel::mul : OpLabel::star;
        else if (lex.accept('.'))
            op = OpLabel::succ;
        else if (lex.accept_word("o"))
            op = OpLabel::circ;
        else
            throw ParseError("expected operation token in rule: " + lex.text);
        PatternTerm r = parse_pattern(lex, v, gen);
        lex.expect(')');
        return PatternTerm::node(op, std::move(l), std::move(r));
    }
    if (lex.accept('[')) {
        PatternTerm l = parse_pattern(lex, v, gen);
        lex.expect(',');
        PatternTerm r = parse_pattern(lex, v, gen);
        lex.expect(']');
        return PatternTerm::node(OpLabel::bracket, std::move(l), std::move(r));
    }
    auto id = lex.ident();
    if (!id || *id != gen)
        throw ParseError("expected generator '" + gen + "' in rule: " + lex.text);
    lex.expect('(');
    IndexExpr e = parse_index_expr(lex);
    lex.expect(')');
    return PatternTerm::leaf(std::move(e));
}

Condition parse_condition(RuleLexer& lex) {
    auto id = lex.ident();
    if (!id) throw ParseError("expected variable in condition: " + lex.text);
    Condition c;
    c.var = *id;
    if (lex.accept('!')) {
        lex.expect('=');
        if (!lex.accept('0')) throw ParseError("conditions compare against 0: " + lex.text);
        c.kind = Condition::nonzero;
    } else if (lex.accept('>')) {
        if (!lex.accept('0')) throw ParseError("conditions compare against 0: " + lex.text);
        c.kind = Condition::positive;
    } else if (lex.accept('<')) {
        if (!lex.accept('0')) throw ParseError("conditions compare against 0: " + lex.text);
        c.kind = Condition::negative;
    } else {
        throw ParseError("expected !=, > or < in condition: " + lex.text);
    }
    return c;
}

void validate_rule(const RuleFamily& rule, const std::string& gen) {
    // Weight homogeneity, symbolically.
    IndexExpr w = rule.pattern.weight_expr();
    for (const auto& [c, p] : rule.replacement)
        if (!(p.weight_expr() == w))
            throw Error("rule " + rule.name + " is not weight-homogeneous: " +
                        rule.str(gen));
    // Strict term-order decrease on sampled instantiations.
    auto vars = rule.variables();
    const long samples[] = {-3, -2, -1, 0, 1, 2, 3};
    std::vector<std::size_t> idx(vars.size(), 0);
    for (;;) {
        std::map<std::string, Int> env;
        for (std::size_t i = 0; i < vars.size(); ++i) env[vars[i]] = Int(samples[idx[i]]);
        bool applicable = true;
        for (const auto& c : rule.conditions)
            if (!c.holds(env)) {
                applicable = false;
                break;
            }
        if (applicable) {
            Term lhs = rule.pattern.instantiate(gen, env);
            for (const auto& [c, p] : rule.replacement) {
                Term t = p.instantiate(gen, env);
                if (Term::term_compare(t, lhs) >= 0)
                    throw Error("rule " + rule.name +
                                " does not decrease the term order at sampled indices: " +
                                rule.str(gen));
            }
        }
        std::size_t k = vars.size();
        bool carry = true;
        while (k-- > 0) {
            if (++idx[k] < std::size(samples)) {
                carry = false;
                break;
            }
            idx[k] = 0;
        }
        if (carry) break;
    }
}

}  // namespace

RuleFamily make_rule(const std::string& name, const std::string& line, Variety v,
                     const std::string& gen) {
    RuleLexer lex(line);
    RuleFamily rule;
    rule.name = name;
    rule.pattern = parse_pattern(lex, v, gen);
    lex.skip_ws();
    if (!(lex.accept('-') && lex.accept('>')))
        throw ParseError("expected '->' in rule: " + line);
    if (lex.peek() == '0' && (lex.pos + 1 >= lex.text.size() ||
                              !std::isalnum((unsigned char)lex.text[lex.pos + 1]))) {
        ++lex.pos;  // zero replacement
    } else {
        bool first = true;
        for (;;) {
            int sign = 1;
            if (lex.accept('-'))
                sign = -1;
            else if (lex.accept('+'))
                sign = 1;
            else if (!first)
                break;
            first = false;
            Rational coeff(1);
            if (std::isdigit((unsigned char)lex.peek())) {
                auto num = lex.integer();
                Rational r(*num);
                if (lex.accept('/')) {
                    auto den = lex.integer();
                    if (!den) throw ParseError("expected denominator in rule: " + line);
                    r = Rational(*num, *den);
                }
                coeff = r;
                lex.expect('*');
            }
            if (sign < 0) coeff = -coeff;
            rule.replacement.emplace_back(coeff, parse_pattern(lex, v, gen));
            if (lex.eof() || lex.peek() == 'w') break;
        }
    }
    if (!lex.eof()) {
        if (!lex.accept_word("when")) throw ParseError("expected 'when' in rule: " + line);
        for (;;) {
            rule.conditions.push_back(parse_condition(lex));
            if (!lex.accept_word("and")) break;
        }
    }
    if (!lex.eof()) throw ParseError("trailing input in rule: " + line);
    validate_rule(rule, gen);
    return rule;
}

Presentation builtin_preassoc_presentation() {
    Presentation p;
    p.name = "preassoc";
    p.variety = Variety::pre_associative;
    p.gen = "a";
    p.certified = true;
    Variety v = p.variety;
    p.rules.push_back(make_rule("succ-collapse", "(a(n) . a(m)) -> (a(0) . a(n+m)) when n != 0", v, p.gen));
    p.rules.push_back(make_rule("star-collapse", "(a(n) * a(m)) -> (a(0) * a(n+m)) when n != 0", v, p.gen));
    p.rules.push_back(make_rule("star-spine-collapse",
                                "(a(n) * (a(m) * a(k))) -> (a(0) * (a(n+m) * a(k))) when n != 0",
                                v, p.gen));
    p.rules.push_back(make_rule("inner-right-shift",
                                "(a(n) . (a(0) . a(k))) -> (a(0) . (a(0) . a(n+k))) when n != 0",
                                v, p.gen));
    p.rules.push_back(make_rule(
        "star-succ-exchange",
        "((a(0) . a(n)) * a(m)) -> ((a(0) . a(n)) . a(m)) + ((a(0) . a(0)) * a(n+m)) - "
        "((a(0) . a(0)) . a(n+m)) when n != 0",
        v, p.gen));
    return p;
}

Presentation builtin_prelie_presentation() {
    Presentation p;
    p.name = "prelie";
    p.variety = Variety::right_symmetric;
    p.gen = "a";
    p.certified = true;
    Variety v = p.variety;
    p.rules.push_back(make_rule("h-collapse", "(a(n) o a(m)) -> (a(0) o a(n+m)) when n != 0", v, p.gen));
    p.rules.push_back(make_rule("h-collapse-right",
                                "(a(k) o (a(n) o a(m))) -> (a(k) o (a(0) o a(n+m))) when n != 0",
                                v, p.gen));
    p.rules.push_back(make_rule("h-collapse-left",
                                "((a(n) o a(m)) o a(k)) -> ((a(0) o a(n+m)) o a(k)) when n != 0",
                                v, p.gen));
    p.rules.push_back(make_rule("g-shift-down",
                                "((a(0) o a(p)) o a(m)) -> ((a(0) o a(p-1)) o a(m+1)) when p > 0",
                                v, p.gen));
    p.rules.push_back(make_rule("g-shift-up",
                                "((a(0) o a(p)) o a(m)) -> ((a(0) o a(p+1)) o a(m-1)) when p < 0",
                                v, p.gen));
    return p;
}

Presentation parse_presentation(const std::string& text, const std::string& name) {
    Presentation p;
    p.name = name;
    p.certified = false;
    std::istringstream in(text);
    std::string line;
    bool have_variety = false, have_gens = false;
    int rule_no = 0;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::size_t a = line.find_first_not_of(" \t\r\n");
        if (a == std::string::npos) continue;
        std::size_t b = line.find_last_not_of(" \t\r\n");
        line = line.substr(a, b - a + 1);
        if (line.rfind("variety:", 0) == 0) {
            std::string vs = line.substr(8);
            vs.erase(0, vs.find_first_not_of(" \t"));
            auto v = variety_from_name(vs);
            if (!v) throw ParseError("unknown variety: " + vs);
            p.variety = *v;
            have_variety = true;
            continue;
        }
        if (line.rfind("gens:", 0) == 0) {
            std::string gs = line.substr(5);
            gs.erase(0, gs.find_first_not_of(" \t"));
            auto paren = gs.find('(');
            if (paren == std::string::npos || gs.substr(paren) != "(Z)")
                throw ParseError("generator family must be declared as <name>(Z): " + gs);
            p.gen = gs.substr(0, paren);
            have_gens = true;
            continue;
        }
        if (!have_variety || !have_gens)
            throw ParseError("rules must follow the variety/gens header: " + line);
        p.rules.push_back(make_rule("rule-" + std::to_string(++rule_no), line, p.variety, p.gen));
    }
    if (!have_variety || !have_gens)
        throw ParseError("presentation needs 'variety:' and 'gens:' headers");
    return p;
}

namespace {

bool bind_index(const IndexExpr& e, const Int& value, std::map<std::string, Int>& env) {
    if (e.coeffs.empty()) return e.constant == value;
    if (e.coeffs.size() != 1) throw Error("pattern index must use at most one variable");
    const auto& [name, c] = *e.coeffs.begin();
    if (c != 1 && c != -1) throw Error("pattern index variable must have coefficient 1");
    Int solved = (value - e.constant) * Int(c);
    auto it = env.find(name);
    if (it != env.end()) return it->second == solved;
    env[name] = solved;
    return true;
}

bool match(const PatternTerm& pat, const Term& t, const std::string& gen,
           std::map<std::string, Int>& env) {
    if (pat.is_leaf) {
        if (!t.is_leaf() || t.symbol().name != gen || !t.symbol().indexed()) return false;
        return bind_index(pat.index, *t.symbol().index, env);
    }
    if (!t.is_node() || t.op() != pat.op) return false;
    return match(*pat.lhs, t.lhs(), gen, env) && match(*pat.rhs, t.rhs(), gen, env);
}

std::optional<LinComb> rule_step(const Term& t, const Presentation& p) {
    if (t.is_leaf()) return std::nullopt;
    if (auto l = rule_step(t.lhs(), p))
        return LinComb::product(t.op(), *l, LinComb(t.rhs()));
    if (auto r = rule_step(t.rhs(), p))
        return LinComb::product(t.op(), LinComb(t.lhs()), *r);
    for (const auto& rule : p.rules) {
        std::map<std::string, Int> env;
        if (!match(rule.pattern, t, p.gen, env)) continue;
        bool ok = true;
        for (const auto& c : rule.conditions)
            if (!c.holds(env)) {
                ok = false;
                break;
            }
        if (ok) return rule.replacement_comb(p.gen, env);
    }
    return std::nullopt;
}

void check_gens(const Term& t, const Presentation& p) {
    if (t.is_leaf()) {
        if (t.symbol().name != p.gen || !t.symbol().indexed())
            throw Error("leaf " + t.symbol().str() + " does not belong to the generator family " +
                        p.gen + "(Z)");
        return;
    }
    check_gens(t.lhs(), p);
    check_gens(t.rhs(), p);
}

constexpr long kQuotientBudget = 1000000;

}  // namespace

LinComb quotient_normal_form(const Presentation& p, const LinComb& x) {
    for (const auto& [t, c] : x.terms()) check_gens(t, p);
    NormalFormEngine engine(p.variety, p.cap);
    LinComb cur = engine.normal_form(x);
    long steps = 0;
    for (;;) {
        bool stepped = false;
        for (const auto& [t, c] : cur.terms()) {
            if (auto s = rule_step(t, p)) {
                if (++steps > kQuotientBudget)
                    throw ReductionBudgetExceeded(
                        "reduction budget exceeded in presentation " + p.name);
                Rational coeff = c;
                cur.add_term(t, -coeff);
                LinComb repl = engine.normal_form(*s);
                repl *= coeff;
                cur += repl;
                stepped = true;
                break;
            }
        }
        if (!stepped) return cur;
    }
}

bool MembershipOracle::in_ideal(const LinComb& x) {
    if (x.is_zero()) return true;
    long deg = x.max_degree();
    if (deg > 3) throw DegreeOverflow("degree overflow: oracle works at degree <= 3");
    Int w = x.homogeneous_weight();
    for (const auto& [t, c] : x.terms()) {
        std::vector<const Term*> stack{&t};
        while (!stack.empty()) {
            const Term* cur = stack.back();
            stack.pop_back();
            if (cur->is_leaf()) {
                if (cur->symbol().name != p_.gen || !cur->symbol().indexed())
                    throw Error("leaf " + cur->symbol().str() +
                                " does not belong to the generator family " + p_.gen + "(Z)");
                if (abs(*cur->symbol().index) > window_)
                    throw WindowUnderflow("window underflow: index " +
                                          cur->symbol().index->get_str() +
                                          " outside [-" + std::to_string(window_) + ", " +
                                          std::to_string(window_) + "]");
            } else {
                stack.push_back(&cur->lhs());
                stack.push_back(&cur->rhs());
            }
        }
    }
    return span_for(w, deg).contains(x);
}

MembershipVerdict MembershipOracle::verdict(const LinComb& x) {
    MembershipVerdict v;
    v.normal_form = quotient_normal_form(p_, x);
    v.status = v.normal_form.is_zero() ? MembershipVerdict::zero_in_quotient
                                       : MembershipVerdict::nonzero_with_normal_form;
    bool oracle_zero = in_ideal(x);
    v.oracle_agrees = oracle_zero == v.normal_form.is_zero();
    v.window_oracle_only = !p_.certified;
    return v;
}

SpanReducer& MembershipOracle::span_for(const Int& weight, long max_degree) {
    auto key = std::make_pair(weight, max_degree);
    auto it = cache_.find(key);
    if (it != cache_.end()) return *it->second;
    auto span = std::make_shared<SpanReducer>();
    long W = window_;
    auto in_window = [&](const LinComb& row) {
        for (const auto& [t, c] : row.terms()) {
            std::vector<const Term*> stack{&t};
            while (!stack.empty()) {
                const Term* cur = stack.back();
                stack.pop_back();
                if (cur->is_leaf()) {
                    if (abs(*cur->symbol().index) > W) return false;
                } else {
                    stack.push_back(&cur->lhs());
                    stack.push_back(&cur->rhs());
                }
            }
        }
        return true;
    };
    auto add = [&](const LinComb& row) {
        if (!row.is_zero() && in_window(row)) span->add_row(row);
    };

    auto sig = variety_signature(p_.variety);

    // Variety identity instances on window leaves at this weight.
    if (max_degree >= 3) {
        for (const auto& id : variety_identities(p_.variety)) {
            if (id.arity != 3) continue;
            for (long i = -W; i <= W; ++i)
                for (long j = -W; j <= W; ++j) {
                    Int k = weight - Int(i) - Int(j);
                    if (abs(k) > W) continue;
                    std::map<std::string, Term> env{{"x", Term::leaf(p_.gen, Int(i))},
                                                    {"y", Term::leaf(p_.gen, Int(j))},
                                                    {"z", Term::leaf(p_.gen, k)}};
                    add(substitute(id.combo, env));
                }
        }
    }

    // Rule-family instances and, for degree-2 families, their products with
    // window leaves under every signature operation.
    for (const auto& rule : p_.rules) {
        auto vars = rule.variables();
        long deg = rule.pattern.degree();
        IndexExpr wexpr = rule.pattern.weight_expr();
        auto emit_assignments = [&](long extra_degree, const Int& target_weight,
                                    auto&& consume) {
            std::vector<long> idx(vars.size(), -W);
            if (vars.empty()) return;
            for (;;) {
                std::map<std::string, Int> env;
                for (std::size_t i = 0; i < vars.size(); ++i) env[vars[i]] = Int(idx[i]);
                bool ok = wexpr.eval(env) == target_weight;
                if (ok)
                    for (const auto& c : rule.conditions)
                        if (!c.holds(env)) {
                            ok = false;
                            break;
                        }
                if (ok) consume(env);
                std::size_t k = vars.size();
                bool carry = true;
                while (k-- > 0) {
                    if (++idx[k] <= W) {
                        carry = false;
                        break;
                    }
                    idx[k] = -W;
                }
                if (carry) break;
            }
            (void)extra_degree;
        };
        if (deg <= max_degree) {
            emit_assignments(0, weight, [&](const std::map<std::string, Int>& env) {
                add(rule.ideal_element(p_.gen, env));
            });
        }
        if (deg == 2 && max_degree >= 3) {
            for (long k = -W; k <= W; ++k) {
                Int inner = weight - Int(k);
                emit_assignments(1, inner, [&](const std::map<std::string, Int>& env) {
                    LinComb inst = rule.ideal_element(p_.gen, env);
                    LinComb leaf(Term::leaf(p_.gen, Int(k)));
                    for (OpLabel op : sig) {
                        add(LinComb::product(op, inst, leaf));
                        add(LinComb::product(op, leaf, inst));
                    }
                });
            }
        }
    }

    cache_[key] = span;
    return *span;
}

MembershipVerdict oracle_membership(const Presentation& p, const LinComb& x, long window) {
    MembershipOracle oracle(p, window);
    return oracle.verdict(x);
}

}  // namespace fdist
