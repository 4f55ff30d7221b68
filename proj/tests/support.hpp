#pragma once

// Small builders shared by the test suites. Words are written as strings
// whose characters are single-character generator names.

#include <initializer_list>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gsb/core/alphabet.hpp"
#include "gsb/core/polynomial.hpp"

namespace gsb::test {

  inline Word wd(std::string_view s, Alphabet const& A) {
    Word w;
    for (char ch : s) {
      w.push_back(A.rank(std::string(1, ch)));
    }
    return w;
  }

  inline Polynomial poly(std::initializer_list<std::pair<std::string_view, Scalar>> terms,
                         Alphabet const& A) {
    Polynomial p;
    for (auto const& [s, c] : terms) {
      p.add_term(wd(s, A), c);
    }
    return p;
  }

  inline Word random_word(std::mt19937& rng, std::size_t num_letters, std::size_t len) {
    std::uniform_int_distribution<Letter> letter(0, static_cast<Letter>(num_letters - 1));
    Word w;
    for (std::size_t i = 0; i < len; ++i) {
      w.push_back(letter(rng));
    }
    return w;
  }

  inline Scalar random_scalar(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-5, 5);
    std::uniform_int_distribution<int> den(1, 3);
    int n = 0;
    while (n == 0) {
      n = num(rng);
    }
    return make_scalar(n, den(rng));
  }

  inline Polynomial random_poly(std::mt19937& rng, std::size_t num_letters, std::size_t max_len,
                                std::size_t max_terms) {
    std::uniform_int_distribution<std::size_t> len(0, max_len);
    std::uniform_int_distribution<std::size_t> nterms(1, max_terms);
    Polynomial p;
    std::size_t k = nterms(rng);
    for (std::size_t i = 0; i < k; ++i) {
      p.add_term(random_word(rng, num_letters, len(rng)), random_scalar(rng));
    }
    return p;
  }

}  // namespace gsb::test
