#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "gsb/core/errors.hpp"
#include "gsb/core/linear_combination.hpp"
#include "gsb/core/word.hpp"

namespace gsb {

  // A normal diword x_{-m} |- ... |- x_0 -| ... -| x_k, stored as its
  // letters and the position m of the center x_0.
  class Diword {
   public:
    Diword(Word letters, std::size_t center) : letters_(std::move(letters)), center_(center) {
      if (letters_.empty()) {
        throw InvalidWord("diword must be nonempty");
      }
      if (center_ >= letters_.size()) {
        throw InvalidWord("diword center " + std::to_string(center_) + " out of range");
      }
    }

    // A single letter, which is its own center.
    static Diword letter(Letter x) { return Diword(Word{x}, 0); }

    Word const& letters() const noexcept { return letters_; }
    std::size_t center() const noexcept { return center_; }
    std::size_t size() const noexcept { return letters_.size(); }

    bool operator==(Diword const&) const = default;

   private:
    Word letters_;
    std::size_t center_;
  };

  // Lex order on the weight (length, m, letters).
  inline std::strong_ordering diword_cmp(Diword const& u, Diword const& v) noexcept {
    if (auto c = u.size() <=> v.size(); c != 0) {
      return c;
    }
    if (auto c = u.center() <=> v.center(); c != 0) {
      return c;
    }
    return deglex_compare(u.letters(), v.letters());
  }

  struct DiwordLess {
    bool operator()(Diword const& u, Diword const& v) const noexcept { return diword_cmp(u, v) < 0; }
  };

  // u |- v keeps the center of v.
  inline Diword di_left(Diword const& u, Diword const& v) {
    return Diword(u.letters() * v.letters(), u.size() + v.center());
  }

  // u -| v keeps the center of u.
  inline Diword di_right(Diword const& u, Diword const& v) {
    return Diword(u.letters() * v.letters(), u.center());
  }

  using DiPolynomial = LinearCombination<Diword, DiwordLess>;

  inline DiPolynomial di_left(DiPolynomial const& p, DiPolynomial const& q) {
    DiPolynomial out;
    for (auto const& [u, a] : p) {
      for (auto const& [v, b] : q) {
        out.add_term(di_left(u, v), a * b);
      }
    }
    return out;
  }

  inline DiPolynomial di_right(DiPolynomial const& p, DiPolynomial const& q) {
    DiPolynomial out;
    for (auto const& [u, a] : p) {
      for (auto const& [v, b] : q) {
        out.add_term(di_right(u, v), a * b);
      }
    }
    return out;
  }

  inline DiPolynomial di_letter(Letter x) { return DiPolynomial(Diword::letter(x)); }

  // Every diword of length len, ascending.
  inline std::vector<Diword> diwords_of_length(std::size_t num_letters, std::size_t len) {
    std::vector<Diword> out;
    if (len == 0) {
      return out;
    }
    auto words = words_of_length(num_letters, len);
    out.reserve(words.size() * len);
    for (std::size_t c = 0; c < len; ++c) {
      for (auto const& w : words) {
        out.emplace_back(w, c);
      }
    }
    return out;
  }

  // Letters joined by '*', the center marked with '@'.
  inline std::string to_string(Diword const& u, Alphabet const& alphabet) {
    std::string s;
    for (std::size_t i = 0; i < u.size(); ++i) {
      if (i > 0) {
        s += '*';
      }
      if (i == u.center()) {
        s += '@';
      }
      s += alphabet.name(u.letters()[i]);
    }
    return s;
  }

}  // namespace gsb
