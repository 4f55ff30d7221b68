#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "gsb/core/alphabet.hpp"
#include "gsb/core/errors.hpp"
#include "gsb/core/linear_combination.hpp"
#include "gsb/core/word.hpp"

namespace gsb {

  // A non-associative word: a binary tree with letters at the leaves.
  // Any tree can be represented; normality is a separate predicate.
  class AcWord {
   public:
    static AcWord leaf(Letter x) { return AcWord(std::make_shared<Node const>(Node{x, nullptr, nullptr, 1, x})); }

    static AcWord node(AcWord const& l, AcWord const& r) {
      std::size_t const h = (l.node_->hash * 0x100000001b3ull) ^ (r.node_->hash + 0x9e3779b97f4a7c15ull);
      return AcWord(std::make_shared<Node const>(Node{0, l.node_, r.node_, l.size() + r.size(), h}));
    }

    bool is_leaf() const noexcept { return !node_->left; }
    Letter letter() const {
      if (!is_leaf()) throw InvalidWord("internal node has no letter");
      return node_->letter;
    }
    AcWord left() const {
      if (is_leaf()) throw InvalidWord("leaf has no children");
      return AcWord(node_->left);
    }
    AcWord right() const {
      if (is_leaf()) throw InvalidWord("leaf has no children");
      return AcWord(node_->right);
    }

    // Number of leaves.
    std::size_t size() const noexcept { return node_->size; }
    std::size_t hash() const noexcept { return node_->hash; }

    friend bool operator==(AcWord const& u, AcWord const& v) noexcept { return same(u.node_.get(), v.node_.get()); }

   private:
    struct Node {
      Letter letter;
      std::shared_ptr<Node const> left, right;
      std::size_t size;
      std::size_t hash;
    };
    explicit AcWord(std::shared_ptr<Node const> n) : node_(std::move(n)) {}

    static bool same(Node const* a, Node const* b) noexcept {
      if (a == b) return true;
      if (a->size != b->size || a->hash != b->hash) return false;
      if (!a->left || !b->left) return !a->left && !b->left && a->letter == b->letter;
      return same(a->left.get(), b->left.get()) && same(a->right.get(), b->right.get());
    }

    friend std::strong_ordering ac_cmp(AcWord const& u, AcWord const& v) noexcept;
    static std::strong_ordering cmp(Node const* a, Node const* b) noexcept {
      if (a == b) return std::strong_ordering::equal;
      if (auto c = a->size <=> b->size; c != 0) return c;
      if (!a->left || !b->left) {
        // Equal sizes: both are leaves.
        return a->letter <=> b->letter;
      }
      if (auto c = cmp(a->left.get(), b->left.get()); c != 0) return c;
      return cmp(a->right.get(), b->right.get());
    }

    std::shared_ptr<Node const> node_;
  };

  // Length first; leaves by rank; equal-length trees by (left, right).
  inline std::strong_ordering ac_cmp(AcWord const& u, AcWord const& v) noexcept {
    return AcWord::cmp(u.node_.get(), v.node_.get());
  }

  struct AcLess {
    bool operator()(AcWord const& u, AcWord const& v) const noexcept { return ac_cmp(u, v) < 0; }
  };

  // left > right at every internal node.
  inline bool is_normal(AcWord const& u) {
    if (u.is_leaf()) return true;
    return ac_cmp(u.left(), u.right()) > 0 && is_normal(u.left()) && is_normal(u.right());
  }

  inline Word flatten(AcWord const& u) {
    if (u.is_leaf()) return Word{u.letter()};
    return flatten(u.left()) * flatten(u.right());
  }

  using AcPolynomial = LinearCombination<AcWord, AcLess>;

  // Product of normal words: [uv] if u > v, -[vu] if u < v, 0 if equal.
  inline AcPolynomial ac_mul(AcWord const& u, AcWord const& v) {
    auto c = ac_cmp(u, v);
    if (c > 0) return AcPolynomial(AcWord::node(u, v));
    if (c < 0) return AcPolynomial(AcWord::node(v, u), Scalar(-1));
    return AcPolynomial{};
  }

  inline AcPolynomial ac_mul(AcPolynomial const& p, AcPolynomial const& q) {
    AcPolynomial out;
    for (auto const& [u, a] : p) {
      for (auto const& [v, b] : q) {
        auto c = ac_cmp(u, v);
        if (c > 0) {
          out.add_term(AcWord::node(u, v), a * b);
        } else if (c < 0) {
          out.add_term(AcWord::node(v, u), -(a * b));
        }
      }
    }
    return out;
  }

  // Evaluates an arbitrary tree as a product in AC(X).
  inline AcPolynomial ac_evaluate(AcWord const& u) {
    if (u.is_leaf()) return AcPolynomial(u);
    return ac_mul(ac_evaluate(u.left()), ac_evaluate(u.right()));
  }

  // Normal words grouped by degree 0..max_deg (degree 0 is empty), each
  // group ascending.
  inline std::vector<std::vector<AcWord>> normal_words(std::size_t num_letters, std::size_t max_deg) {
    std::vector<std::vector<AcWord>> by_deg(max_deg + 1);
    if (max_deg >= 1) {
      for (Letter x = 0; x < num_letters; ++x) by_deg[1].push_back(AcWord::leaf(x));
    }
    for (std::size_t d = 2; d <= max_deg; ++d) {
      for (std::size_t a = d - 1; a * 2 >= d; --a) {
        for (auto const& l : by_deg[a]) {
          for (auto const& r : by_deg[d - a]) {
            if (ac_cmp(l, r) > 0) by_deg[d].push_back(AcWord::node(l, r));
          }
        }
      }
      std::sort(by_deg[d].begin(), by_deg[d].end(), AcLess{});
    }
    return by_deg;
  }

  // Hall words grouped by degree: leaves, and [u1 u2] with u1 > u2 both
  // Hall and, when u1 = [u11 u12], u12 <= u2.
  inline std::vector<std::vector<AcWord>> hall_words(std::size_t num_letters, std::size_t max_deg) {
    std::vector<std::vector<AcWord>> by_deg(max_deg + 1);
    if (max_deg >= 1) {
      for (Letter x = 0; x < num_letters; ++x) by_deg[1].push_back(AcWord::leaf(x));
    }
    for (std::size_t d = 2; d <= max_deg; ++d) {
      for (std::size_t a = d - 1; a * 2 >= d; --a) {
        for (auto const& l : by_deg[a]) {
          for (auto const& r : by_deg[d - a]) {
            if (ac_cmp(l, r) <= 0) continue;
            if (!l.is_leaf() && ac_cmp(l.right(), r) > 0) continue;
            by_deg[d].push_back(AcWord::node(l, r));
          }
        }
      }
      std::sort(by_deg[d].begin(), by_deg[d].end(), AcLess{});
    }
    return by_deg;
  }

  // Fully parenthesized: a leaf is its name, a node is "(l r)".
  inline std::string to_string(AcWord const& u, Alphabet const& alphabet) {
    if (u.is_leaf()) return alphabet.name(u.letter());
    return "(" + to_string(u.left(), alphabet) + " " + to_string(u.right(), alphabet) + ")";
  }

}  // namespace gsb

template <>
struct std::hash<gsb::AcWord> {
  std::size_t operator()(gsb::AcWord const& u) const noexcept { return u.hash(); }
};
