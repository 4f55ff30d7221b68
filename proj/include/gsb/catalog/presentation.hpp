#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "gsb/core/polynomial.hpp"

namespace gsb::catalog {

  enum class PresentationKind { semigroup, algebra };

  // Generators and defining relations. Semigroup relations u = v are
  // stored as binomials u - v.
  struct Presentation {
    Alphabet alphabet;
    std::vector<Polynomial> relations;
    PresentationKind kind = PresentationKind::algebra;
  };

  // The two words of a semigroup binomial u - v (u the leading word).
  inline std::pair<Word, Word> binomial_words(Polynomial const& p) {
    if (p.size() != 2) {
      throw std::invalid_argument("semigroup relation is not a binomial");
    }
    auto it      = p.begin();
    auto const u = *it++;
    auto const v = *it;
    if (u.second != 1 || v.second != -1) {
      throw std::invalid_argument("semigroup relation coefficients must be 1 and -1");
    }
    return {u.first, v.first};
  }

  namespace detail {
    inline std::vector<std::pair<Word, Word>> length_preserving_rules(Presentation const& P) {
      if (P.kind != PresentationKind::semigroup) {
        throw std::invalid_argument("congruence needs a semigroup presentation");
      }
      std::vector<std::pair<Word, Word>> rules;
      for (auto const& r : P.relations) {
        auto [u, v] = binomial_words(r);
        if (u.size() != v.size()) {
          throw std::invalid_argument("congruence needs length-preserving relations");
        }
        rules.emplace_back(u, v);
        rules.emplace_back(v, u);
      }
      return rules;
    }

    // Breadth-first closure of single rule applications from start.
    template <class Seen>
    std::vector<Word> closure(std::vector<std::pair<Word, Word>> const& rules, Word const& start, Seen& seen) {
      std::vector<Word> members{start};
      seen.emplace(start, true);
      std::deque<Word> queue{start};
      while (!queue.empty()) {
        Word w = std::move(queue.front());
        queue.pop_front();
        for (auto const& [lhs, rhs] : rules) {
          for (std::size_t p = 0; p + lhs.size() <= w.size(); ++p) {
            if (!w.occurs_at(lhs, p)) {
              continue;
            }
            Word v = w.prefix(p) * rhs * w.suffix(w.size() - p - lhs.size());
            if (seen.emplace(v, true).second) {
              members.push_back(v);
              queue.push_back(std::move(v));
            }
          }
        }
      }
      return members;
    }
  }  // namespace detail

  // The class of w in the congruence generated by the relations, ascending.
  inline std::vector<Word> congruence_class(Presentation const& P, Word const& w) {
    auto rules = detail::length_preserving_rules(P);
    std::unordered_map<Word, bool> seen;
    auto members = detail::closure(rules, w, seen);
    std::sort(members.begin(), members.end(), DegLexLess{});
    return members;
  }

  // Number of classes of the congruence generated by the relations on the
  // words of length n. Relations must preserve length.
  inline std::size_t congruence_classes(Presentation const& P, std::size_t n) {
    auto rules = detail::length_preserving_rules(P);
    auto words = words_of_length(P.alphabet.size(), n);
    std::unordered_map<Word, bool> seen;
    seen.reserve(words.size());
    std::size_t classes = 0;
    for (auto const& start : words) {
      if (seen.count(start)) {
        continue;
      }
      ++classes;
      detail::closure(rules, start, seen);
    }
    return classes;
  }

}  // namespace gsb::catalog
