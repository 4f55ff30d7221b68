#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gsb/core/alphabet.hpp"
#include "gsb/core/graded_span.hpp"
#include "gsb/dialgebra/diword.hpp"

namespace gsb {

  // Where the center of a*s*b sits: inside s (each term keeps its own
  // center), or at a fixed letter of a or of b.
  struct Placement {
    enum class Side { a, s, b } side = Side::s;
    std::size_t index                = 0;  // position within a or b
  };

  // The ideal element a*s*b with the given center placement. When the
  // center lies outside s, the centers of s's terms are forgotten and
  // terms differing only in their center combine.
  inline DiPolynomial di_sandwich(Word const& a, DiPolynomial const& s, Word const& b, Placement pl) {
    DiPolynomial out;
    for (auto const& [t, c] : s) {
      std::size_t center = 0;
      switch (pl.side) {
        case Placement::Side::a: center = pl.index; break;
        case Placement::Side::s: center = a.size() + t.center(); break;
        case Placement::Side::b: center = a.size() + t.size() + pl.index; break;
      }
      out.add_term(Diword(a * t.letters() * b, center), c);
    }
    return out;
  }

  // A finite monic set S in the free dialgebra D(X).
  class DiSystem {
   public:
    DiSystem() = default;

    DiSystem(Alphabet alphabet, std::vector<DiPolynomial> elements) : alphabet_(std::move(alphabet)) {
      for (auto& p : elements) {
        if (p.is_zero()) {
          throw InvalidRelation("zero dialgebra relation");
        }
        for (auto const& [u, c] : p) {
          for (Letter x : u.letters()) {
            alphabet_.name(x);
          }
        }
        elements_.push_back(p.monic());
      }
    }

    Alphabet const& alphabet() const noexcept { return alphabet_; }
    std::vector<DiPolynomial> const& elements() const noexcept { return elements_; }
    std::size_t size() const noexcept { return elements_.size(); }
    bool empty() const noexcept { return elements_.empty(); }
    DiPolynomial const& operator[](std::size_t i) const { return elements_[i]; }
    Diword const& leading(std::size_t i) const { return elements_[i].leading_monomial(); }

    std::size_t max_length() const {
      std::size_t n = 0;
      for (auto const& p : elements_) {
        n = std::max(n, p.leading_monomial().size());
      }
      return n;
    }

   private:
    Alphabet alphabet_;
    std::vector<DiPolynomial> elements_;
  };

  // A monic ideal element whose leading diword is m, if m is a normal
  // S-diword a[s]b. An occurrence of s's leading letters qualifies when
  // m's center is the center of s there, or when m's center lies outside
  // the occurrence and the resulting a*s*b still leads with m.
  inline std::optional<DiPolynomial> di_reducer(Diword const& m, DiSystem const& S) {
    Word const& w = m.letters();
    for (std::size_t i = 0; i < S.size(); ++i) {
      Diword const& lead = S.leading(i);
      std::size_t const len = lead.size();
      for (std::size_t pos = 0; pos + len <= w.size(); ++pos) {
        if (!w.occurs_at(lead.letters(), pos)) {
          continue;
        }
        Word const a = w.prefix(pos);
        Word const b = w.suffix(w.size() - pos - len);
        Placement pl;
        if (m.center() < pos) {
          pl = {Placement::Side::a, m.center()};
        } else if (m.center() >= pos + len) {
          pl = {Placement::Side::b, m.center() - pos - len};
        } else if (m.center() - pos != lead.center()) {
          continue;
        }
        auto img = di_sandwich(a, S[i], b, pl);
        if (img.is_zero() || !(img.leading_monomial() == m)) {
          continue;
        }
        return img.monic();
      }
    }
    return std::nullopt;
  }

  inline bool di_is_reducible(Diword const& m, DiSystem const& S) { return di_reducer(m, S).has_value(); }

  // Eliminates reducible diwords, greatest first, until none remain.
  inline DiPolynomial di_reduce(DiPolynomial p, DiSystem const& S) {
    DiPolynomial rem;
    while (!p.is_zero()) {
      auto const [m, c] = *p.begin();
      if (auto r = di_reducer(m, S)) {
        p.add_scaled(*r, -c);
      } else {
        rem.add_term(m, c);
        p.erase(m);
      }
    }
    return rem;
  }

  // Irreducible diwords, grouped by length 0..max_len (length 0 is empty).
  inline std::vector<std::vector<Diword>> di_irr_words(DiSystem const& S, std::size_t max_len) {
    std::vector<std::vector<Diword>> out(max_len + 1);
    for (std::size_t l = 1; l <= max_len; ++l) {
      for (auto& u : diwords_of_length(S.alphabet().size(), l)) {
        if (!di_is_reducible(u, S)) {
          out[l].push_back(std::move(u));
        }
      }
    }
    return out;
  }

  // The span of every a*s*b of length <= max_len with every center
  // placement.
  inline GradedSpan<Diword, DiwordLess> di_ideal_span(DiSystem const& S, std::size_t max_len) {
    std::size_t const n = S.alphabet().size();
    std::vector<std::vector<Diword>> by_len(max_len + 1);
    std::vector<std::vector<Word>> words(max_len + 1);
    for (std::size_t l = 0; l <= max_len; ++l) {
      by_len[l] = diwords_of_length(n, l);
      words[l]  = words_of_length(n, l);
    }
    GradedSpan<Diword, DiwordLess> span(by_len);
    std::vector<DiPolynomial> gens;
    for (auto const& s : S.elements()) {
      std::size_t const len = s.leading_monomial().size();
      for (std::size_t extra = 0; extra + len <= max_len; ++extra) {
        for (std::size_t la = 0; la <= extra; ++la) {
          std::size_t const lb = extra - la;
          std::vector<Placement> placements{{Placement::Side::s, 0}};
          for (std::size_t i = 0; i < la; ++i) placements.push_back({Placement::Side::a, i});
          for (std::size_t j = 0; j < lb; ++j) placements.push_back({Placement::Side::b, j});
          for (auto const& a : words[la]) {
            for (auto const& b : words[lb]) {
              for (auto const& pl : placements) {
                auto g = di_sandwich(a, s, b, pl);
                if (!g.is_zero()) {
                  gens.push_back(std::move(g));
                }
              }
            }
          }
        }
      }
    }
    span.build(gens, [](Diword const& u) { return u.size(); });
    return span;
  }

  struct DiCheckReport : BoundedConditions {
    std::size_t rank = 0;
    bool holds() const { return leading_reducible && irr_is_basis; }
  };

  // Bounded conditions (ii) and (iii) at lengths <= max_len.
  inline DiCheckReport di_gsb_check_bounded(DiSystem const& S, std::size_t max_len) {
    if (max_len < S.max_length()) {
      throw BoundTooSmall("di_gsb_check_bounded: max_len " + std::to_string(max_len)
                          + " below the longest element");
    }
    auto span = di_ideal_span(S, max_len);
    DiCheckReport rep;
    static_cast<BoundedConditions&>(rep)
        = evaluate_bounded(span, [&S](Diword const& u) { return di_is_reducible(u, S); });
    rep.rank = span.rank();
    return rep;
  }

}  // namespace gsb
