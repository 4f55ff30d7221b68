#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gsb/core/alphabet.hpp"
#include "gsb/core/errors.hpp"

namespace gsb {

  // An element of the free monoid X*: a finite sequence of letter ranks.
  // The empty word is the identity.
  class Word {
   public:
    using value_type     = Letter;
    using const_iterator = std::vector<Letter>::const_iterator;

    Word() = default;
    Word(std::initializer_list<Letter> letters) : letters_(letters) {}
    explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
    template <class It>
    Word(It first, It last) : letters_(first, last) {}

    static Word letter(Letter x) { return Word{x}; }

    std::size_t size() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }
    Letter operator[](std::size_t i) const { return letters_[i]; }
    const_iterator begin() const noexcept { return letters_.begin(); }
    const_iterator end() const noexcept { return letters_.end(); }
    std::span<Letter const> letters() const noexcept { return letters_; }

    Word subword(std::size_t pos, std::size_t len) const {
      return Word(letters_.begin() + pos, letters_.begin() + pos + len);
    }
    Word prefix(std::size_t len) const { return subword(0, len); }
    Word suffix(std::size_t len) const { return subword(size() - len, len); }

    bool occurs_at(Word const& factor, std::size_t pos) const {
      return pos + factor.size() <= size()
             && std::equal(factor.begin(), factor.end(), letters_.begin() + pos);
    }
    bool starts_with(Word const& w) const { return occurs_at(w, 0); }
    bool ends_with(Word const& w) const {
      return w.size() <= size() && occurs_at(w, size() - w.size());
    }

    std::optional<std::size_t> find(Word const& factor, std::size_t from = 0) const {
      if (factor.size() > size()) {
        return std::nullopt;
      }
      for (std::size_t p = from; p + factor.size() <= size(); ++p) {
        if (occurs_at(factor, p)) {
          return p;
        }
      }
      return std::nullopt;
    }
    bool contains(Word const& factor) const { return find(factor).has_value(); }

    Word& operator*=(Word const& w) {
      letters_.insert(letters_.end(), w.begin(), w.end());
      return *this;
    }
    friend Word operator*(Word u, Word const& v) { return u *= v; }

    friend bool operator==(Word const&, Word const&) = default;

    void push_back(Letter x) { letters_.push_back(x); }

   private:
    std::vector<Letter> letters_;
  };

  // Deg-lex comparison on raw ranks: shorter words first, then
  // lexicographically with the higher rank being the greater letter.
  inline std::strong_ordering deglex_compare(Word const& u, Word const& v) noexcept {
    if (u.size() != v.size()) {
      return u.size() <=> v.size();
    }
    return std::lexicographical_compare_three_way(u.begin(), u.end(), v.begin(), v.end());
  }

  struct DegLexLess {
    bool operator()(Word const& u, Word const& v) const noexcept {
      return deglex_compare(u, v) < 0;
    }
  };

  // The deg-lex monomial order over a fixed alphabet. Comparisons through
  // this object validate that both words live over the alphabet.
  class DegLexOrder {
   public:
    DegLexOrder() = default;
    explicit DegLexOrder(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}

    Alphabet const& alphabet() const noexcept { return alphabet_; }

    void validate(Word const& w) const {
      for (Letter x : w) {
        if (x >= alphabet_.size()) {
          throw InvalidWord("letter index " + std::to_string(x) + " outside alphabet of size "
                            + std::to_string(alphabet_.size()));
        }
      }
    }

    std::strong_ordering compare(Word const& u, Word const& v) const {
      validate(u);
      validate(v);
      return deglex_compare(u, v);
    }

    friend bool operator==(DegLexOrder const& a, DegLexOrder const& b) {
      return a.alphabet_ == b.alphabet_;
    }

   private:
    Alphabet alphabet_;
  };

  inline std::strong_ordering word_cmp(Word const& u, Word const& v, DegLexOrder const& ord) {
    return ord.compare(u, v);
  }

  // All words of exactly the given length, in ascending deg-lex order.
  inline std::vector<Word> words_of_length(std::size_t num_letters, std::size_t len) {
    std::vector<Word> out;
    if (len == 0) {
      out.emplace_back();
      return out;
    }
    if (num_letters == 0) {
      return out;
    }
    std::vector<Letter> cur(len, 0);
    while (true) {
      out.emplace_back(cur);
      std::size_t i = len;
      while (i > 0 && cur[i - 1] + 1 == num_letters) {
        cur[i - 1] = 0;
        --i;
      }
      if (i == 0) {
        break;
      }
      ++cur[i - 1];
    }
    return out;
  }

  inline std::string to_string(Word const& w, Alphabet const& alphabet) {
    if (w.empty()) {
      return "1";
    }
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i > 0) {
        out += '*';
      }
      out += alphabet.name(w[i]);
    }
    return out;
  }

}  // namespace gsb

template <>
struct std::hash<gsb::Word> {
  std::size_t operator()(gsb::Word const& w) const noexcept {
    std::size_t h = w.size();
    for (gsb::Letter x : w) {
      h ^= std::hash<gsb::Letter>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};
