#pragma once

#include <gmpxx.h>

#include <string>

namespace fdist {

// Arbitrary-precision integer; used for generator indices and all index
// arithmetic (index shifts n+m, n-s must never overflow).
using Int = mpz_class;

// Exact rational scalar. Always in lowest terms with positive denominator
// (mpq_class canonicalizes on arithmetic; we canonicalize on construction).
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}                // NOLINT(google-explicit-constructor)
    Rational(long n) : v_((signed long)n) {}  // NOLINT(google-explicit-constructor)
    Rational(const Int& n) : v_(n) {}         // NOLINT(google-explicit-constructor)
    Rational(const Int& num, const Int& den) : v_(num, den) { v_.canonicalize(); }

    static Rational from_string(const std::string& s) {
        Rational r;
        if (r.v_.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
        r.v_.canonicalize();
        return r;
    }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }

    Int numerator() const { return v_.get_num(); }
    Int denominator() const { return v_.get_den(); }

    std::string str() const { return v_.get_str(); }

    Rational operator-() const { return Rational(-v_); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) { v_ /= o.v_; return *this; }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational inverse() const { return Rational(v_.get_den(), v_.get_num()); }

  private:
    explicit Rational(const mpq_class& q) : v_(q) {}
    mpq_class v_;
};

inline Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

// C(n, k) for n >= 0; zero when k > n.
inline Int binomial(unsigned long n, unsigned long k) {
    if (k > n) return Int(0);
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

// Falling factorial x(x-1)...(x-j+1) for arbitrary integer x.
inline Int falling(const Int& x, unsigned long j) {
    Int r(1);
    for (unsigned long i = 0; i < j; ++i) r *= x - Int(i);
    return r;
}

}  // namespace fdist
