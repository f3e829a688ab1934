#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fdist/rational.hpp"
#include "fdist/symbols.hpp"

namespace fdist {

// Element of the algebra generated by q, t, t^{-1} with qt - tq = 1, stored
// in the normal-ordered basis t^n q^m (n in Z, m >= 0).
class WeylElement {
  public:
    using Key = std::pair<Int, unsigned long>;  // (n, m) of t^n q^m
    using Map = std::map<Key, Rational>;

    WeylElement() = default;

    static WeylElement basis(Int n, unsigned long m, const Rational& c = Rational(1)) {
        WeylElement e;
        e.add(std::move(n), m, c);
        return e;
    }
    static WeylElement one() { return basis(Int(0), 0); }

    void add(Int n, unsigned long m, const Rational& c) {
        if (c.is_zero()) return;
        Key k{std::move(n), m};
        auto it = coeffs_.find(k);
        if (it == coeffs_.end()) {
            coeffs_.emplace(std::move(k), c);
        } else {
            it->second += c;
            if (it->second.is_zero()) coeffs_.erase(it);
        }
    }

    bool is_zero() const { return coeffs_.empty(); }
    const Map& coeffs() const { return coeffs_; }

    WeylElement& operator+=(const WeylElement& o) {
        for (const auto& [k, c] : o.coeffs_) add(k.first, k.second, c);
        return *this;
    }
    WeylElement& operator-=(const WeylElement& o) {
        for (const auto& [k, c] : o.coeffs_) add(k.first, k.second, -c);
        return *this;
    }
    WeylElement& operator*=(const Rational& c) {
        if (c.is_zero()) {
            coeffs_.clear();
            return *this;
        }
        for (auto& [k, v] : coeffs_) v *= c;
        return *this;
    }
    friend WeylElement operator+(WeylElement a, const WeylElement& b) { return a += b; }
    friend WeylElement operator-(WeylElement a, const WeylElement& b) { return a -= b; }
    friend bool operator==(const WeylElement& a, const WeylElement& b) {
        return a.coeffs_ == b.coeffs_;
    }

    std::string str() const;

  private:
    Map coeffs_;
};

// Normal-ordered product via the closed expansion
//   (t^n q^m)(t^k q^l) = sum_j C(m,j) k(k-1)...(k-j+1) t^{n+k-j} q^{m+l-j}.
WeylElement weyl_mul(const WeylElement& x, const WeylElement& y);

// Reference product that moves q past t one power at a time using
// q t^k = t^k q + k t^{k-1}; kept independent of weyl_mul for testing.
WeylElement weyl_mul_reference(const WeylElement& x, const WeylElement& y);

struct WeylAlgebra {
    using Element = WeylElement;
    std::vector<OpLabel> signature() const { return {OpLabel::mul}; }
    Element multiply(OpLabel, const Element& x, const Element& y) const {
        return weyl_mul(x, y);
    }
    Element normal_form(const Element& x) const { return x; }
    Element zero() const { return WeylElement(); }
    Element add(const Element& x, const Element& y) const { return x + y; }
    Element scale(const Rational& c, const Element& x) const {
        Element r = x;
        r *= c;
        return r;
    }
    bool is_zero(const Element& x) const { return x.is_zero(); }
    std::string str(const Element& x) const { return x.str(); }
};

}  // namespace fdist
