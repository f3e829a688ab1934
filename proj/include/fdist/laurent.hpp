#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>

#include "fdist/table_algebra.hpp"

namespace fdist {

// Laurent extension V[t, t^{-1}] of a Novikov model V, carrying either
//   the Lie bracket  [a t^n, b t^m] = (n (b o a) - m (a o b)) t^{n+m-1}
// or the tensor Novikov product  (a t^n) o (b t^m) = (a o b) t^{n+m}.
class LaurentAlgebra {
  public:
    enum class Product { lie_bracket, tensor_circ };
    using Key = std::pair<Int, std::size_t>;  // (t-exponent, basis index)
    using Element = std::map<Key, Rational>;

    LaurentAlgebra(NovikovModel model, Product kind)
        : model_(std::make_shared<NovikovModel>(std::move(model))), kind_(kind) {}

    const NovikovModel& model() const { return *model_; }
    Product kind() const { return kind_; }

    std::vector<OpLabel> signature() const {
        return {kind_ == Product::lie_bracket ? OpLabel::bracket : OpLabel::circ};
    }

    Element zero() const { return {}; }
    Element monomial(std::size_t basis_index, Int n, const Rational& c = Rational(1)) const {
        Element e;
        if (!c.is_zero()) e[{std::move(n), basis_index}] = c;
        return e;
    }
    // v t^n for an arbitrary model element v.
    Element embed(const TableAlgebra::Element& v, const Int& n) const {
        Element e;
        for (std::size_t i = 0; i < v.size(); ++i)
            if (!v[i].is_zero()) e[{n, i}] = v[i];
        return e;
    }

    Element add(const Element& x, const Element& y) const {
        Element r = x;
        for (const auto& [k, c] : y) accumulate(r, k, c);
        return r;
    }
    Element scale(const Rational& c, const Element& x) const {
        Element r;
        if (c.is_zero()) return r;
        for (const auto& [k, v] : x) r[k] = v * c;
        return r;
    }

    Element multiply(OpLabel op, const Element& x, const Element& y) const {
        const TableAlgebra& alg = model_->algebra();
        Element r;
        for (const auto& [kx, cx] : x)
            for (const auto& [ky, cy] : y) {
                const auto& [n, i] = kx;
                const auto& [m, j] = ky;
                Rational c = cx * cy;
                auto ei = alg.basis_element(i), ej = alg.basis_element(j);
                if (kind_ == Product::lie_bracket) {
                    if (op != OpLabel::bracket) throw SignatureMismatch(
                        "signature mismatch: Laurent Lie algebra has only the bracket");
                    // n (b o a) - m (a o b), exponent n+m-1
                    auto ba = alg.multiply(OpLabel::circ, ej, ei);
                    auto ab = alg.multiply(OpLabel::circ, ei, ej);
                    Int e = n + m - 1;
                    for (std::size_t k = 0; k < alg.dim(); ++k) {
                        accumulate(r, {e, k}, c * Rational(n) * ba[k]);
                        accumulate(r, {e, k}, -c * Rational(m) * ab[k]);
                    }
                } else {
                    if (op != OpLabel::circ) throw SignatureMismatch(
                        "signature mismatch: tensor Novikov algebra has only the circle product");
                    auto ab = alg.multiply(OpLabel::circ, ei, ej);
                    Int e = n + m;
                    for (std::size_t k = 0; k < alg.dim(); ++k)
                        accumulate(r, {e, k}, c * ab[k]);
                }
            }
        return r;
    }

    Element normal_form(const Element& x) const { return x; }
    bool is_zero(const Element& x) const { return x.empty(); }

    std::string str(const Element& x) const {
        if (x.empty()) return "0";
        const auto& names = model_->algebra().basis_names();
        std::string out;
        for (auto it = x.rbegin(); it != x.rend(); ++it) {
            const auto& [n, i] = it->first;
            const Rational& c = it->second;
            Rational a = c.sign() < 0 ? -c : c;
            if (out.empty()) {
                if (c.sign() < 0) out += "-";
            } else {
                out += c.sign() < 0 ? " - " : " + ";
            }
            if (!a.is_one()) out += a.str() + "*";
            out += names[i];
            if (n != 0) out += " t^" + n.get_str();
        }
        return out;
    }

  private:
    static void accumulate(Element& r, const Key& k, const Rational& c) {
        if (c.is_zero()) return;
        auto it = r.find(k);
        if (it == r.end()) {
            r.emplace(k, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) r.erase(it);
        }
    }

    std::shared_ptr<NovikovModel> model_;
    Product kind_;
};

}  // namespace fdist
