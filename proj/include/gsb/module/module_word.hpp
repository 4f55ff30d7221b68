#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "gsb/core/linear_combination.hpp"
#include "gsb/core/polynomial.hpp"

namespace gsb {

  // u*y in X*Y, the basis of the free left k<X>-module on Y.
  struct ModuleWord {
    Word u;
    Letter y = 0;

    bool operator==(ModuleWord const&) const = default;
  };

  // Deg-lex on u, then the order on Y.
  inline std::strong_ordering mword_compare(ModuleWord const& a, ModuleWord const& b) noexcept {
    if (auto c = deglex_compare(a.u, b.u); c != 0) {
      return c;
    }
    return a.y <=> b.y;
  }

  struct ModuleWordLess {
    bool operator()(ModuleWord const& a, ModuleWord const& b) const noexcept { return mword_compare(a, b) < 0; }
  };

  using ModuleElement = LinearCombination<ModuleWord, ModuleWordLess>;

  // The alphabets of a double-free module: X acts, Y is the free basis.
  class ModuleOrder {
   public:
    ModuleOrder(Alphabet x, Alphabet y) : x_(std::move(x)), y_(std::move(y)) {}

    DegLexOrder const& x_order() const noexcept { return x_; }
    Alphabet const& x() const noexcept { return x_.alphabet(); }
    Alphabet const& y() const noexcept { return y_; }

    void validate(ModuleWord const& w) const {
      x_.validate(w.u);
      y_.name(w.y);
    }

    void validate(ModuleElement const& m) const {
      for (auto const& [w, c] : m) {
        validate(w);
      }
    }

   private:
    DegLexOrder x_;
    Alphabet y_;
  };

  inline std::strong_ordering mword_cmp(ModuleWord const& a, ModuleWord const& b, ModuleOrder const& ord) {
    ord.validate(a);
    ord.validate(b);
    return mword_compare(a, b);
  }

  inline ModuleElement module_word(Word u, Letter y, Scalar const& c = Scalar(1)) {
    return ModuleElement(ModuleWord{std::move(u), y}, c);
  }

  // Left action of k<X>: (word a)(u y) = (a u) y, extended bilinearly.
  inline ModuleElement act(Polynomial const& p, ModuleElement const& m) {
    ModuleElement out;
    for (auto const& [a, c] : p) {
      for (auto const& [w, d] : m) {
        out.add_term(ModuleWord{a * w.u, w.y}, c * d);
      }
    }
    return out;
  }

  inline ModuleElement act(Word const& a, ModuleElement const& m) {
    return m.transform<ModuleWord, ModuleWordLess>(
        [&a](ModuleWord const& w) { return std::pair(ModuleWord{a * w.u, w.y}, Scalar(1)); });
  }

  // u*[y], or [y] alone when u is empty.
  inline std::string to_string(ModuleWord const& w, ModuleOrder const& ord) {
    std::string g = "[" + ord.y().name(w.y) + "]";
    return w.u.empty() ? g : to_string(w.u, ord.x()) + "*" + g;
  }

  // Every module word with |u| = len, ascending.
  inline std::vector<ModuleWord> module_words_of_length(std::size_t nx, std::size_t ny, std::size_t len) {
    std::vector<ModuleWord> out;
    for (auto const& u : words_of_length(nx, len)) {
      for (Letter y = 0; y < ny; ++y) {
        out.push_back({u, y});
      }
    }
    return out;
  }

}  // namespace gsb
