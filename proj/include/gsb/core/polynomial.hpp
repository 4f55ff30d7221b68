#pragma once

#include <string>
#include <utility>

#include "gsb/core/linear_combination.hpp"
#include "gsb/core/word.hpp"

namespace gsb {

  // An element of the free associative algebra k<X>.
  using Polynomial = LinearCombination<Word, DegLexLess>;

  inline Polynomial poly_add(Polynomial const& p, Polynomial const& q) {
    return p + q;
  }

  // Bilinear extension of concatenation.
  inline Polynomial poly_mul(Polynomial const& p, Polynomial const& q) {
    Polynomial out;
    for (auto const& [u, a] : p) {
      for (auto const& [v, b] : q) {
        out.add_term(u * v, a * b);
      }
    }
    return out;
  }

  inline Polynomial operator*(Polynomial const& p, Polynomial const& q) {
    return poly_mul(p, q);
  }

  // a * p * b for words a, b.
  inline Polynomial sandwich(Word const& a, Polynomial const& p, Word const& b) {
    Polynomial out;
    for (auto const& [u, c] : p.ascending()) {
      out.add_term(a * u * b, c);
    }
    return out;
  }

  inline void validate(Polynomial const& p, DegLexOrder const& ord) {
    for (auto const& [u, c] : p) {
      ord.validate(u);
    }
  }

  // The leading word and its coefficient. Throws NoLeadingTerm on zero.
  inline std::pair<Word, Scalar> leading(Polynomial const& p, DegLexOrder const& ord) {
    validate(p, ord);
    return p.leading();
  }

  inline Polynomial make_monic(Polynomial const& p, DegLexOrder const& ord) {
    validate(p, ord);
    return p.monic();
  }

  // Degree of the leading word; 0 for the zero polynomial.
  inline std::size_t degree(Polynomial const& p) {
    return p.is_zero() ? 0 : p.leading_monomial().size();
  }

  inline Polynomial word_poly(Word w, Scalar const& c = Scalar(1)) {
    return Polynomial(std::move(w), c);
  }

}  // namespace gsb
