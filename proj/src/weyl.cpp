#include "fdist/weyl.hpp"

namespace fdist {

std::string WeylElement::str() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        const auto& [n, m] = it->first;
        const Rational& c = it->second;
        Rational a = c.sign() < 0 ? -c : c;
        if (out.empty()) {
            if (c.sign() < 0) out += "-";
        } else {
            out += c.sign() < 0 ? " - " : " + ";
        }
        std::string mono;
        if (n != 0) mono += "t^" + n.get_str();
        if (m == 1)
            mono += (mono.empty() ? "q" : " q");
        else if (m > 1)
            mono += (mono.empty() ? "q^" : " q^") + std::to_string(m);
        if (mono.empty()) {
            out += a.str();
        } else if (a.is_one()) {
            out += mono;
        } else {
            out += a.str() + "*" + mono;
        }
    }
    return out;
}

WeylElement weyl_mul(const WeylElement& x, const WeylElement& y) {
    WeylElement r;
    for (const auto& [kx, cx] : x.coeffs()) {
        const auto& [n, m] = kx;
        for (const auto& [ky, cy] : y.coeffs()) {
            const auto& [k, l] = ky;
            Rational c = cx * cy;
            for (unsigned long j = 0; j <= m; ++j) {
                Rational coeff = c * Rational(binomial(m, j) * falling(k, j));
                r.add(n + k - Int(j), m + l - j, coeff);
            }
        }
    }
    return r;
}

namespace {

// q * (t^k q^l) = t^k q^{l+1} + k t^{k-1} q^l.
WeylElement q_times(const WeylElement& y) {
    WeylElement r;
    for (const auto& [key, c] : y.coeffs()) {
        const auto& [k, l] = key;
        r.add(k, l + 1, c);
        r.add(k - 1, l, c * Rational(k));
    }
    return r;
}

WeylElement t_pow_times(const Int& n, const WeylElement& y) {
    WeylElement r;
    for (const auto& [key, c] : y.coeffs()) r.add(key.first + n, key.second, c);
    return r;
}

}  // namespace

WeylElement weyl_mul_reference(const WeylElement& x, const WeylElement& y) {
    WeylElement r;
    for (const auto& [kx, cx] : x.coeffs()) {
        const auto& [n, m] = kx;
        WeylElement acc = y;
        for (unsigned long i = 0; i < m; ++i) acc = q_times(acc);
        acc = t_pow_times(n, acc);
        acc *= cx;
        r += acc;
    }
    return r;
}

}  // namespace fdist
