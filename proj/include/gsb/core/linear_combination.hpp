#pragma once

#include <cstddef>
#include <functional>
#include <iterator>
#include <map>
#include <utility>
#include <vector>

#include "gsb/core/errors.hpp"
#include "gsb/core/scalar.hpp"

namespace gsb {

  // A finite linear combination of monomials with exact rational
  // coefficients. No stored coefficient is ever zero. Iteration runs in
  // descending monomial order, so the first term is the leading term.
  //
  // Used for associative polynomials, diword polynomials, module elements
  // and anti-commutative polynomials alike; only the monomial type and
  // its order change.
  template <class Mono, class Less>
  class LinearCombination {
   public:
    using monomial_type  = Mono;
    using compare_type   = Less;
    using map_type       = std::map<Mono, Scalar, Less>;
    using const_iterator = typename map_type::const_reverse_iterator;

    LinearCombination() = default;

    explicit LinearCombination(Mono m, Scalar const& c = Scalar(1)) {
      add_term(std::move(m), c);
    }

    static LinearCombination from_terms(std::vector<std::pair<Mono, Scalar>> const& terms) {
      LinearCombination out;
      for (auto const& [m, c] : terms) {
        out.add_term(m, c);
      }
      return out;
    }

    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    const_iterator begin() const noexcept { return terms_.rbegin(); }
    const_iterator end() const noexcept { return terms_.rend(); }

    // Terms in ascending order.
    map_type const& ascending() const noexcept { return terms_; }

    Scalar coeff(Mono const& m) const {
      auto it = terms_.find(m);
      return it == terms_.end() ? Scalar(0) : it->second;
    }

    void add_term(Mono const& m, Scalar const& c) {
      if (c == 0) {
        return;
      }
      auto [it, inserted] = terms_.try_emplace(m, c);
      if (!inserted) {
        it->second += c;
        if (it->second == 0) {
          terms_.erase(it);
        }
      }
    }

    void erase(Mono const& m) { terms_.erase(m); }

    Mono const& leading_monomial() const {
      if (terms_.empty()) {
        throw NoLeadingTerm();
      }
      return terms_.rbegin()->first;
    }

    Scalar const& leading_coefficient() const {
      if (terms_.empty()) {
        throw NoLeadingTerm();
      }
      return terms_.rbegin()->second;
    }

    std::pair<Mono, Scalar> leading() const {
      return {leading_monomial(), leading_coefficient()};
    }

    LinearCombination monic() const {
      Scalar inv = 1 / leading_coefficient();
      LinearCombination out(*this);
      out *= inv;
      return out;
    }

    bool is_monic() const { return !is_zero() && leading_coefficient() == 1; }

    // Applies a monomial map and a coefficient factor per term, summing
    // collisions. The map returns (monomial, factor).
    template <class OtherMono, class OtherLess, class F>
    LinearCombination<OtherMono, OtherLess> transform(F&& f) const {
      LinearCombination<OtherMono, OtherLess> out;
      for (auto const& [m, c] : terms_) {
        auto [m2, k] = f(m);
        out.add_term(m2, c * k);
      }
      return out;
    }

    LinearCombination& operator+=(LinearCombination const& o) {
      for (auto const& [m, c] : o.terms_) {
        add_term(m, c);
      }
      return *this;
    }

    LinearCombination& operator-=(LinearCombination const& o) {
      for (auto const& [m, c] : o.terms_) {
        add_term(m, -c);
      }
      return *this;
    }

    LinearCombination& operator*=(Scalar const& k) {
      if (k == 0) {
        terms_.clear();
        return *this;
      }
      for (auto& [m, c] : terms_) {
        c *= k;
      }
      return *this;
    }

    // Adds k * o without materializing the scaled copy.
    void add_scaled(LinearCombination const& o, Scalar const& k) {
      if (k == 0) {
        return;
      }
      for (auto const& [m, c] : o.terms_) {
        add_term(m, c * k);
      }
    }

    friend LinearCombination operator+(LinearCombination a, LinearCombination const& b) {
      return a += b;
    }
    friend LinearCombination operator-(LinearCombination a, LinearCombination const& b) {
      return a -= b;
    }
    friend LinearCombination operator-(LinearCombination a) { return a *= Scalar(-1); }
    friend LinearCombination operator*(Scalar const& k, LinearCombination a) { return a *= k; }
    friend LinearCombination operator*(LinearCombination a, Scalar const& k) { return a *= k; }

    friend bool operator==(LinearCombination const& a, LinearCombination const& b) {
      return a.terms_ == b.terms_;
    }

   private:
    map_type terms_;
  };

}  // namespace gsb
