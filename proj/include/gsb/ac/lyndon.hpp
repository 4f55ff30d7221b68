#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "gsb/ac/ac_word.hpp"

namespace gsb {

  // u is strictly greater, letter by letter, than each of its proper
  // cyclic rotations.
  inline bool is_ls_word(Word const& u) {
    if (u.empty()) throw InvalidWord("is_ls_word: empty word");
    std::size_t const n = u.size();
    for (std::size_t r = 1; r < n; ++r) {
      for (std::size_t i = 0; i < n; ++i) {
        Letter const a = u[i];
        Letter const b = u[(i + r) % n];
        if (a != b) {
          if (a < b) return false;
          break;
        }
        if (i + 1 == n) return false;  // periodic
      }
    }
    return true;
  }

  inline bool is_ls_word(Word const& u, DegLexOrder const& ord) {
    ord.validate(u);
    return is_ls_word(u);
  }

  // Splits at the longest proper suffix that is itself an LS word and
  // brackets both halves recursively.
  inline AcWord ls_bracketing(Word const& u) {
    if (!is_ls_word(u)) throw InvalidWord("ls_bracketing: not a Lyndon-Shirshov word");
    if (u.size() == 1) return AcWord::leaf(u[0]);
    for (std::size_t i = 1; i < u.size(); ++i) {
      Word const w = u.suffix(u.size() - i);
      if (is_ls_word(w)) {
        return AcWord::node(ls_bracketing(u.prefix(i)), ls_bracketing(w));
      }
    }
    throw InvalidWord("ls_bracketing: no proper LS suffix");  // unreachable for |u| >= 2
  }

  // All LS words of length n over num_letters letters, ascending. Runs the
  // Fredricksen-Kessler-Maiorana generator with the letter order reversed,
  // since LS words are the Lyndon words for the opposite order.
  inline std::vector<Word> ls_words(std::size_t num_letters, std::size_t n) {
    std::vector<Word> out;
    if (n == 0 || num_letters == 0) return out;
    int const top = static_cast<int>(num_letters) - 1;
    std::vector<int> a{-1};
    while (!a.empty()) {
      ++a.back();
      std::size_t const m = a.size();
      if (m == n) {
        Word w;
        for (int l : a) w.push_back(static_cast<Letter>(top - l));
        out.push_back(std::move(w));
      }
      while (a.size() < n) a.push_back(a[a.size() - m]);
      while (!a.empty() && a.back() == top) a.pop_back();
    }
    std::sort(out.begin(), out.end(), DegLexLess{});
    return out;
  }

}  // namespace gsb
