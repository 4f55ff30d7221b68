#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "gsb/core/polynomial.hpp"
#include "gsb/rewrite/word_trie.hpp"

namespace gsb {

  // A finite set S of monic relations in k<X> together with the deg-lex
  // order it is read under. Elements are normalized to be monic on
  // construction; zero relations and relations whose leading word is the
  // empty word are rejected.
  class RewriteSystem {
   public:
    // An occurrence w = a * lead(element) * b with |a| = position.
    struct Occurrence {
      std::size_t element;
      std::size_t position;
    };

    RewriteSystem() = default;

    explicit RewriteSystem(DegLexOrder order, std::vector<Polynomial> elements = {})
        : order_(std::move(order)) {
      elements_.reserve(elements.size());
      for (auto& p : elements) {
        push(std::move(p));
      }
    }

    DegLexOrder const& order() const noexcept { return order_; }
    Alphabet const& alphabet() const noexcept { return order_.alphabet(); }
    std::vector<Polynomial> const& elements() const noexcept { return elements_; }
    std::size_t size() const noexcept { return elements_.size(); }
    bool empty() const noexcept { return elements_.empty(); }
    Polynomial const& operator[](std::size_t i) const { return elements_[i]; }
    Word const& leading_word(std::size_t i) const { return elements_[i].leading_monomial(); }

    std::size_t max_leading_length() const noexcept { return trie_.max_length(); }

    RewriteSystem with(Polynomial p) const {
      RewriteSystem out(*this);
      out.push(std::move(p));
      return out;
    }

    // The occurrence used to rewrite w: the order-greatest leading word
    // occurring in w (lowest element index on ties), at its leftmost
    // position.
    std::optional<Occurrence> find_reducer(Word const& w) const {
      std::optional<Occurrence> best;
      for (std::size_t p = 0; p < w.size(); ++p) {
        trie_.for_each_match_at(w, p, [&](std::size_t, std::size_t id) {
          if (!best) {
            best = Occurrence{id, p};
            return;
          }
          auto c = deglex_compare(leading_word(id), leading_word(best->element));
          if (c > 0 || (c == 0 && id < best->element)) {
            best = Occurrence{id, p};
          }
        });
      }
      return best;
    }

    bool is_reducible(Word const& w) const { return trie_.has_factor(w); }

    // Used when w's proper prefix is known to be irreducible.
    bool has_leading_suffix(Word const& w) const { return trie_.has_suffix(w); }

   private:
    void push(Polynomial p) {
      if (p.is_zero()) {
        throw InvalidRelation("zero relation");
      }
      validate(p, order_);
      if (p.leading_monomial().empty()) {
        throw InvalidRelation("relation with a constant leading term collapses the algebra");
      }
      p = p.monic();
      trie_.insert(p.leading_monomial(), elements_.size());
      elements_.push_back(std::move(p));
    }

    DegLexOrder order_;
    std::vector<Polynomial> elements_;
    WordTrie trie_;
  };

}  // namespace gsb
