#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "gsb/core/word.hpp"

namespace gsb {

  // Prefix tree over a set of words, each tagged with one or more ids.
  // Used to locate leading words as factors of larger words.
  class WordTrie {
   public:
    void insert(Word const& w, std::size_t id) {
      std::size_t node = 0;
      for (Letter x : w) {
        auto it = nodes_[node].next.find(x);
        if (it == nodes_[node].next.end()) {
          nodes_.emplace_back();
          it = nodes_[node].next.emplace(x, nodes_.size() - 1).first;
        }
        node = it->second;
      }
      nodes_[node].ids.push_back(id);
      max_len_ = std::max(max_len_, w.size());
    }

    // Calls f(length, id) for every stored word occurring in w at pos.
    template <class F>
    void for_each_match_at(Word const& w, std::size_t pos, F&& f) const {
      std::size_t node = 0;
      for (std::size_t i = pos;; ++i) {
        for (std::size_t id : nodes_[node].ids) {
          f(i - pos, id);
        }
        if (i == w.size()) {
          return;
        }
        auto it = nodes_[node].next.find(w[i]);
        if (it == nodes_[node].next.end()) {
          return;
        }
        node = it->second;
      }
    }

    bool has_factor(Word const& w) const {
      for (std::size_t p = 0; p <= w.size(); ++p) {
        bool hit = false;
        for_each_match_at(w, p, [&](std::size_t, std::size_t) { hit = true; });
        if (hit) {
          return true;
        }
      }
      return false;
    }

    // True if some stored word is a suffix of w.
    bool has_suffix(Word const& w) const {
      std::size_t start = w.size() > max_len_ ? w.size() - max_len_ : 0;
      for (std::size_t p = start; p <= w.size(); ++p) {
        bool hit = false;
        for_each_match_at(w, p, [&](std::size_t len, std::size_t) {
          hit = hit || p + len == w.size();
        });
        if (hit) {
          return true;
        }
      }
      return false;
    }

    std::size_t max_length() const noexcept { return max_len_; }

   private:
    struct Node {
      std::map<Letter, std::size_t> next;
      std::vector<std::size_t> ids;
    };
    std::vector<Node> nodes_{1};
    std::size_t max_len_ = 0;
  };

}  // namespace gsb
