#pragma once

#include <algorithm>
#include <cstddef>
#include <set>
#include <stdexcept>
#include <vector>

#include "gsb/catalog/presentation.hpp"
#include "gsb/rewrite/normal_form.hpp"
#include "gsb/rewrite/rewrite_system.hpp"

namespace gsb::catalog {

  // Generators x1 < x2 < ... < xk; letter rank r stands for x_{r+1}.
  inline Alphabet chinese_alphabet(std::size_t k) {
    return Alphabet::indexed("x", k);
  }

  namespace detail {
    // Appends u - v unless it is zero or already present.
    inline void push_binomial(std::vector<Polynomial>& out, Word const& u, Word const& v) {
      if (u == v) {
        return;
      }
      Polynomial p(u);
      p.add_term(v, Scalar(-1));
      if (std::find(out.begin(), out.end(), p) == out.end()) {
        out.push_back(std::move(p));
      }
    }
  }  // namespace detail

  // cba = bca = cab for all c >= b >= a, as the binomials cba - bca and
  // cba - cab with identities dropped.
  inline Presentation chinese_relations(std::size_t k) {
    if (k < 1) {
      throw std::invalid_argument("chinese_relations: rank must be positive");
    }
    Presentation P{chinese_alphabet(k), {}, PresentationKind::semigroup};
    for (Letter c = 0; c < k; ++c) {
      for (Letter b = 0; b <= c; ++b) {
        for (Letter a = 0; a <= b; ++a) {
          detail::push_binomial(P.relations, Word{c, b, a}, Word{b, c, a});
          detail::push_binomial(P.relations, Word{c, b, a}, Word{c, a, b});
        }
      }
    }
    return P;
  }

  // The five families of the Groebner-Shirshov basis of the Chinese monoid
  // under deg-lex with x1 < ... < xk:
  //   x_i x_j x_k   - x_j x_i x_k     (i > j > k)
  //   x_i x_k x_j   - x_j x_i x_k     (i > j > k)
  //   x_i x_j x_j   - x_j x_i x_j     (i > j)
  //   x_i x_i x_j   - x_i x_j x_i     (i > j)
  //   x_i x_j x_i x_k - x_i x_k x_i x_j (i > j > k)
  // The two middle families do not involve a third index, so they are
  // emitted for every pair i > j.
  inline RewriteSystem chinese_gsb(std::size_t k) {
    if (k < 1) {
      throw std::invalid_argument("chinese_gsb: rank must be positive");
    }
    std::vector<Polynomial> rels;
    for (Letter i = 0; i < k; ++i) {
      for (Letter j = 0; j < i; ++j) {
        for (Letter l = 0; l < j; ++l) {
          detail::push_binomial(rels, Word{i, j, l}, Word{j, i, l});
          detail::push_binomial(rels, Word{i, l, j}, Word{j, i, l});
        }
        detail::push_binomial(rels, Word{i, j, j}, Word{j, i, j});
        detail::push_binomial(rels, Word{i, i, j}, Word{i, j, i});
        for (Letter l = 0; l < j; ++l) {
          detail::push_binomial(rels, Word{i, j, i, l}, Word{i, l, i, j});
        }
      }
    }
    return RewriteSystem(DegLexOrder(chinese_alphabet(k)), std::move(rels));
  }

  // Whether u = w_1 w_2 ... w_k with
  //   w_r = (x_r x_1)^{t_r1} (x_r x_2)^{t_r2} ... (x_r x_{r-1})^{t_r,r-1} x_r^{t_rr}.
  // The blocks are read greedily; the pattern is unambiguous because every
  // block of w_r begins with x_r and the second letter fixes the block.
  inline bool is_staircase(Word const& u, std::size_t k) {
    std::size_t p = 0;
    for (Letter r = 0; r < k; ++r) {
      for (Letter q = 0; q < r; ++q) {
        while (p + 1 < u.size() && u[p] == r && u[p + 1] == q) {
          p += 2;
        }
      }
      while (p < u.size() && u[p] == r) {
        ++p;
      }
    }
    return p == u.size();
  }

  // Compares the staircase words of length <= max_len with the words
  // irreducible modulo chinese_gsb(k).
  inline bool staircase_equals_irr(std::size_t k, std::size_t max_len) {
    std::vector<Word> staircase;
    for (std::size_t len = 0; len <= max_len; ++len) {
      for (auto& w : words_of_length(k, len)) {
        if (is_staircase(w, k)) {
          staircase.push_back(std::move(w));
        }
      }
    }
    return staircase == irr_words(chinese_gsb(k), max_len);
  }

}  // namespace gsb::catalog
