#pragma once

#include <cstddef>
#include <map>

#include "fdist/term.hpp"

namespace fdist {

// Incremental exact row reduction over term-indexed sparse rows. Every
// stored row is monic with its pivot on its largest term, and rows contain
// no other row's pivot, so reduction is strictly decreasing in the term
// order and the residual is canonical for the span.
class SpanReducer {
  public:
    LinComb reduce(LinComb x) const {
        LinComb residual;
        while (!x.is_zero()) {
            auto lead = x.terms().rbegin();
            Term t = lead->first;
            Rational c = lead->second;
            auto p = rows_.find(t);
            if (p == rows_.end()) {
                residual.add_term(t, c);
                x.add_term(t, -c);
            } else {
                LinComb sub = p->second;
                sub *= c;
                x -= sub;
            }
        }
        return residual;
    }

    bool contains(const LinComb& x) const { return reduce(x).is_zero(); }

    // Returns true when the row enlarged the span.
    bool add_row(LinComb r) {
        r = reduce(std::move(r));
        if (r.is_zero()) return false;
        auto lead = r.terms().rbegin();
        Term pivot = lead->first;
        Rational inv = lead->second.inverse();
        r *= inv;
        rows_.emplace(std::move(pivot), std::move(r));
        return true;
    }

    std::size_t rank() const { return rows_.size(); }

  private:
    std::map<Term, LinComb, TermLess> rows_;
};

}  // namespace fdist
