#pragma once

#include <map>
#include <string>
#include <vector>

#include "fdist/term.hpp"

namespace fdist {

// A defining identity, written over the formal variables x, y, z
// (un-indexed leaves). All identities are multilinear.
struct Identity {
    std::string name;
    LinComb combo;
    int arity;
};

const std::vector<Identity>& variety_identities(Variety v);

// Substitute formal variable leaves by name.
Term substitute(const Term& t, const std::map<std::string, Term>& env);
LinComb substitute(const LinComb& x, const std::map<std::string, Term>& env);

// Free-algebra normal forms at bounded degree. Reduction is linear,
// idempotent, and sound: nf(x) - x always lies in the identity ideal.
// For every variety except Lie the engine rewrites with an oriented rule
// set; the Lie engine reduces against the span of identity instances,
// which is complete at degree <= 3.
class NormalFormEngine {
  public:
    explicit NormalFormEngine(Variety v, long cap = 3) : variety_(v), cap_(cap) {}

    Variety variety() const { return variety_; }
    long cap() const { return cap_; }

    LinComb normal_form(const LinComb& x) const;
    LinComb normal_form(const Term& t) const { return normal_form(LinComb(t)); }

    // True iff the multilinear instantiation of the template on distinct
    // fresh generators reduces to zero.
    bool check_identity(const LinComb& templ, int arity) const;

  private:
    void validate(const LinComb& x) const;
    Variety variety_;
    long cap_;
};

bool check_identity(Variety v, const LinComb& templ, int arity);

// Basis monomials of the free pre-associative algebra: right-nested
// *-sequences u_1*u_2*...*u_k of magmatic words in the juxtaposition
// operation.
std::vector<Term> preassoc_basis_monomials(const std::vector<GenSymbol>& gens, long degree,
                                           long cap = 3);
bool is_preassoc_basis_monomial(const Term& t);

// All degree-d terms over the given leaves in the variety's signature
// (every bracketing, every operation assignment). Used by tests and by the
// membership oracle.
std::vector<Term> all_terms(Variety v, const std::vector<GenSymbol>& gens, long degree);

}  // namespace fdist
