#pragma once

#include <memory>
#include <string>

#include "fdist/io.hpp"
#include "fdist/presentation.hpp"
#include "fdist/variety.hpp"

namespace fdist {

// Algebra handles: any object with Element, zero/add/scale, multiply (which
// returns normal forms), is_zero, str and signature. Distributions and the
// doubling constructions are generic over this shape.

// The free algebra of a variety at bounded degree; elements are linear
// combinations of terms in canonical normal form.
class FreeVarietyAlgebra {
  public:
    using Element = LinComb;

    explicit FreeVarietyAlgebra(Variety v, long cap = 3) : engine_(v, cap) {}

    Variety variety() const { return engine_.variety(); }
    std::vector<OpLabel> signature() const { return variety_signature(engine_.variety()); }

    Element zero() const { return LinComb(); }
    Element add(const Element& x, const Element& y) const { return x + y; }
    Element scale(const Rational& c, const Element& x) const {
        Element r = x;
        r *= c;
        return r;
    }
    Element multiply(OpLabel op, const Element& x, const Element& y) const {
        return engine_.normal_form(LinComb::product(op, x, y));
    }
    Element normal_form(const Element& x) const { return engine_.normal_form(x); }
    bool is_zero(const Element& x) const { return normal_form(x).is_zero(); }
    std::string str(const Element& x) const { return lincomb_str(x); }

    const NormalFormEngine& engine() const { return engine_; }

  private:
    NormalFormEngine engine_;
};

// A presented quotient algebra; elements are quotient normal forms.
class QuotientAlgebra {
  public:
    using Element = LinComb;

    explicit QuotientAlgebra(Presentation p)
        : p_(std::make_shared<Presentation>(std::move(p))) {}

    const Presentation& presentation() const { return *p_; }
    std::vector<OpLabel> signature() const { return variety_signature(p_->variety); }

    Element zero() const { return LinComb(); }
    Element add(const Element& x, const Element& y) const { return x + y; }
    Element scale(const Rational& c, const Element& x) const {
        Element r = x;
        r *= c;
        return r;
    }
    Element multiply(OpLabel op, const Element& x, const Element& y) const {
        return quotient_normal_form(*p_, LinComb::product(op, x, y));
    }
    Element normal_form(const Element& x) const { return quotient_normal_form(*p_, x); }
    bool is_zero(const Element& x) const { return normal_form(x).is_zero(); }
    std::string str(const Element& x) const { return lincomb_str(x); }

    Element generator(const Int& n) const { return Element(Term::leaf(p_->gen, n)); }

  private:
    std::shared_ptr<Presentation> p_;
};

}  // namespace fdist
