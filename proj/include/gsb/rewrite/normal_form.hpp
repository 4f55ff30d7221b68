#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "gsb/core/graded_span.hpp"
#include "gsb/core/polynomial.hpp"
#include "gsb/rewrite/rewrite_system.hpp"

namespace gsb {

  // One elimination of a leading word: the order-greatest reducible
  // monomial c*w of p, with w = a*lead(s)*b, is replaced through
  // p - c*a*s*b. Returns nullopt when p is irreducible.
  inline std::optional<Polynomial> reduce_step(Polynomial const& p, RewriteSystem const& S) {
    for (auto const& [w, c] : p) {
      if (auto occ = S.find_reducer(w)) {
        Polynomial const& s = S[occ->element];
        std::size_t len     = s.leading_monomial().size();
        Word a              = w.prefix(occ->position);
        Word b              = w.suffix(w.size() - occ->position - len);
        Polynomial out(p);
        out.add_scaled(sandwich(a, s, b), -c);
        return out;
      }
    }
    return std::nullopt;
  }

  // Iterates reduce_step to a fixed point. Irreducible leading terms are
  // moved to the remainder as they surface, which visits the reducible
  // monomials in the same greatest-first order as reduce_step.
  inline Polynomial normal_form(Polynomial p, RewriteSystem const& S) {
    Polynomial rem;
    while (!p.is_zero()) {
      auto [w, c] = p.leading();
      if (auto occ = S.find_reducer(w)) {
        Polynomial const& s = S[occ->element];
        std::size_t len     = s.leading_monomial().size();
        p.add_scaled(sandwich(w.prefix(occ->position), s,
                              w.suffix(w.size() - occ->position - len)),
                     -c);
      } else {
        rem.add_term(w, c);
        p.erase(w);
      }
    }
    return rem;
  }

  // Words of length <= max_len containing no leading word of S, ascending.
  // Grown length by length: only suffixes of an extension need screening,
  // because its prefix is already irreducible.
  inline std::vector<Word> irr_words(RewriteSystem const& S, std::size_t max_len) {
    std::size_t const n = S.alphabet().size();
    std::vector<Word> out;
    std::vector<Word> level{Word{}};
    out.push_back(Word{});
    for (std::size_t len = 1; len <= max_len && !level.empty(); ++len) {
      std::vector<Word> next;
      for (auto const& w : level) {
        for (Letter x = 0; x < n; ++x) {
          Word v = w * Word{x};
          if (!S.has_leading_suffix(v)) {
            next.push_back(std::move(v));
          }
        }
      }
      out.insert(out.end(), next.begin(), next.end());
      level = std::move(next);
    }
    return out;
  }

  // Per-length counts of irr_words.
  inline std::vector<std::size_t> irr_counts(RewriteSystem const& S, std::size_t max_len) {
    std::vector<std::size_t> counts(max_len + 1, 0);
    for (auto const& w : irr_words(S, max_len)) {
      ++counts[w.size()];
    }
    return counts;
  }

  // The bounded span of {a*s*b : s in S, |a| + |lead s| + |b| <= max_deg}.
  inline GradedSpan<Word, DegLexLess> ideal_span(RewriteSystem const& S, std::size_t max_deg) {
    std::size_t const n = S.alphabet().size();
    std::vector<std::vector<Word>> by_len;
    for (std::size_t l = 0; l <= max_deg; ++l) {
      by_len.push_back(words_of_length(n, l));
    }
    GradedSpan<Word, DegLexLess> span(by_len);
    std::vector<Polynomial> gens;
    for (auto const& s : S.elements()) {
      std::size_t len = s.leading_monomial().size();
      if (len > max_deg) {
        continue;
      }
      for (std::size_t extra = 0; extra + len <= max_deg; ++extra) {
        for (std::size_t la = 0; la <= extra; ++la) {
          for (auto const& a : by_len[la]) {
            for (auto const& b : by_len[extra - la]) {
              gens.push_back(sandwich(a, s, b));
            }
          }
        }
      }
    }
    span.build(gens, [](Word const& w) { return w.size(); });
    return span;
  }

  // Decides p in span{a*s*b} truncated at max_deg. Exact when p's
  // membership is witnessed below the bound; may give false negatives when
  // a witness needs longer words.
  inline bool membership_oracle(Polynomial const& p, RewriteSystem const& S, std::size_t max_deg) {
    if (p.is_zero()) {
      return true;
    }
    validate(p, S.order());
    if (degree(p) > max_deg) {
      throw BoundTooSmall("membership_oracle: max_deg " + std::to_string(max_deg)
                          + " below the degree of the tested element");
    }
    return ideal_span(S, max_deg).contains(p);
  }

}  // namespace gsb
