#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gsb/ac/ac_word.hpp"
#include "gsb/core/graded_span.hpp"

namespace gsb {

  // Root-to-node route through a tree; false steps left, true steps right.
  using AcPath = std::vector<bool>;

  // Preorder positions of every subtree of u equal to g.
  inline std::vector<AcPath> subtree_occurrences(AcWord const& u, AcWord const& g) {
    std::vector<AcPath> out;
    AcPath path;
    auto walk = [&](auto&& self, AcWord const& t) -> void {
      if (t.size() < g.size()) return;
      if (t.size() == g.size()) {
        if (t == g) out.push_back(path);
        return;
      }
      path.push_back(false);
      self(self, t.left());
      path.back() = true;
      self(self, t.right());
      path.pop_back();
    };
    walk(walk, u);
    return out;
  }

  // The S-word obtained from u by replacing the subtree at path with s,
  // evaluated in AC(X).
  inline AcPolynomial ac_substitute(AcWord const& u, AcPath const& path, AcPolynomial const& s,
                                    std::size_t depth = 0) {
    if (depth == path.size()) return s;
    if (!path[depth]) {
      return ac_mul(ac_substitute(u.left(), path, s, depth + 1), AcPolynomial(u.right()));
    }
    return ac_mul(AcPolynomial(u.left()), ac_substitute(u.right(), path, s, depth + 1));
  }

  // A finite monic set S in AC(X) of normal polynomials.
  class AcSystem {
   public:
    AcSystem() = default;

    AcSystem(Alphabet alphabet, std::vector<AcPolynomial> elements) : alphabet_(std::move(alphabet)) {
      for (auto& p : elements) {
        if (p.is_zero()) throw InvalidRelation("zero anti-commutative relation");
        for (auto const& [u, c] : p) {
          if (!is_normal(u)) throw InvalidWord("relation term is not a normal word");
          for (Letter x : flatten(u)) alphabet_.name(x);
        }
        elements_.push_back(p.monic());
        leads_.emplace(elements_.back().leading_monomial(), elements_.size() - 1);
      }
    }

    Alphabet const& alphabet() const noexcept { return alphabet_; }
    std::vector<AcPolynomial> const& elements() const noexcept { return elements_; }
    std::size_t size() const noexcept { return elements_.size(); }
    bool empty() const noexcept { return elements_.empty(); }
    AcPolynomial const& operator[](std::size_t i) const { return elements_[i]; }
    AcWord const& leading(std::size_t i) const { return elements_[i].leading_monomial(); }

    std::size_t max_degree() const {
      std::size_t n = 0;
      for (auto const& p : elements_) n = std::max(n, p.leading_monomial().size());
      return n;
    }

    struct Occurrence {
      std::size_t element;
      AcPath path;
    };

    // The first subtree of u, in preorder, that is a leading word of S.
    std::optional<Occurrence> find_reducer(AcWord const& u) const {
      std::optional<Occurrence> found;
      AcPath path;
      auto walk = [&](auto&& self, AcWord const& t) -> bool {
        if (auto it = leads_.find(t); it != leads_.end()) {
          found = Occurrence{it->second, path};
          return true;
        }
        if (t.is_leaf()) return false;
        path.push_back(false);
        if (self(self, t.left())) return true;
        path.back() = true;
        if (self(self, t.right())) return true;
        path.pop_back();
        return false;
      };
      walk(walk, u);
      return found;
    }

    bool is_reducible(AcWord const& u) const { return find_reducer(u).has_value(); }

   private:
    Alphabet alphabet_;
    std::vector<AcPolynomial> elements_;
    std::map<AcWord, std::size_t, AcLess> leads_;  // first element per leading word
  };

  inline AcPolynomial ac_normal_form(AcPolynomial p, AcSystem const& S) {
    AcPolynomial rem;
    while (!p.is_zero()) {
      auto const [u, c] = *p.begin();
      if (auto occ = S.find_reducer(u)) {
        p.add_scaled(ac_substitute(u, occ->path, S[occ->element]), -c);
      } else {
        rem.add_term(u, c);
        p.erase(u);
      }
    }
    return rem;
  }

  struct AcComposition {
    AcWord w;
    std::size_t left  = 0;
    std::size_t right = 0;
    AcPath path;
    AcPolynomial result;
  };

  // Inclusion compositions f - (a g b) for every subtree occurrence of
  // lead g in lead f.
  inline std::vector<AcComposition> ac_compositions(AcPolynomial const& f, AcPolynomial const& g, std::size_t li = 0,
                                                    std::size_t ri = 0) {
    if (!f.is_monic() || !g.is_monic()) throw InvalidRelation("ac_compositions: elements must be monic");
    AcWord const& fw = f.leading_monomial();
    std::vector<AcComposition> out;
    for (auto& path : subtree_occurrences(fw, g.leading_monomial())) {
      auto r = f - ac_substitute(fw, path, g);
      out.push_back({fw, li, ri, std::move(path), std::move(r)});
    }
    return out;
  }

  struct AcGsbReport {
    bool is_gsb         = true;
    std::size_t checked = 0;
    std::vector<std::pair<AcComposition, AcPolynomial>> failing;
  };

  inline AcGsbReport ac_is_gsb(AcSystem const& S, std::optional<std::size_t> max_deg = std::nullopt) {
    AcGsbReport rep;
    for (std::size_t i = 0; i < S.size(); ++i) {
      if (max_deg && S.leading(i).size() > *max_deg) continue;
      for (std::size_t j = 0; j < S.size(); ++j) {
        for (auto& c : ac_compositions(S[i], S[j], i, j)) {
          ++rep.checked;
          auto nf = ac_normal_form(c.result, S);
          if (!nf.is_zero()) {
            rep.is_gsb = false;
            rep.failing.emplace_back(std::move(c), std::move(nf));
          }
        }
      }
    }
    return rep;
  }

  // Irreducible normal words grouped by degree 0..max_deg.
  inline std::vector<std::vector<AcWord>> ac_irr_words(AcSystem const& S, std::size_t max_deg) {
    auto all = normal_words(S.alphabet().size(), max_deg);
    for (auto& level : all) {
      std::erase_if(level, [&S](AcWord const& u) { return S.is_reducible(u); });
    }
    return all;
  }

  // The ideal generated by S, truncated at max_deg: the span of
  // (...((s c1) c2) ...) ck over normal words ci.
  inline GradedSpan<AcWord, AcLess> ac_ideal_span(AcSystem const& S, std::size_t max_deg) {
    auto words = normal_words(S.alphabet().size(), max_deg);
    GradedSpan<AcWord, AcLess> span(words);
    std::vector<AcPolynomial> gens;
    std::vector<AcPolynomial> frontier;
    for (auto const& s : S.elements()) {
      if (s.leading_monomial().size() <= max_deg) frontier.push_back(s);
    }
    while (!frontier.empty()) {
      std::vector<AcPolynomial> next;
      for (auto const& p : frontier) {
        std::size_t const d = p.leading_monomial().size();
        for (std::size_t e = 1; d + e <= max_deg; ++e) {
          for (auto const& c : words[e]) {
            auto q = ac_mul(p, AcPolynomial(c));
            if (!q.is_zero()) next.push_back(std::move(q));
          }
        }
      }
      for (auto& p : frontier) gens.push_back(std::move(p));
      frontier = std::move(next);
    }
    span.build(gens, [](AcWord const& u) { return u.size(); });
    return span;
  }

  struct AcCheckReport {
    bool compositions_trivial = true;
    bool leading_reducible    = true;
    bool irr_is_basis         = true;
    std::size_t compositions_checked = 0;
    std::vector<std::size_t> irr_counts;
    std::vector<long long> quotient_dims;

    bool agree() const { return compositions_trivial == leading_reducible && leading_reducible == irr_is_basis; }
    bool all_hold() const { return compositions_trivial && leading_reducible && irr_is_basis; }
  };

  inline AcCheckReport ac_gsb_check_bounded(AcSystem const& S, std::size_t max_deg) {
    AcCheckReport rep;
    auto gsb                 = ac_is_gsb(S, max_deg);
    rep.compositions_trivial = gsb.is_gsb;
    rep.compositions_checked = gsb.checked;
    auto span = ac_ideal_span(S, max_deg);
    auto cond = evaluate_bounded(span, [&S](AcWord const& u) { return S.is_reducible(u); });
    rep.leading_reducible = cond.leading_reducible;
    rep.irr_is_basis      = cond.irr_is_basis;
    rep.irr_counts        = std::move(cond.irr_counts);
    rep.quotient_dims     = std::move(cond.quotient_dims);
    return rep;
  }

  // ([u][v])[w] - ([u][w])[v] - [u]([v][w]) for Hall words u > v > w of
  // total degree <= max_deg, each product evaluated in AC(X).
  inline AcSystem hall_gsb(Alphabet const& alphabet, std::size_t max_deg) {
    auto hall = hall_words(alphabet.size(), max_deg);
    std::vector<AcWord> flat;
    for (auto const& level : hall) flat.insert(flat.end(), level.begin(), level.end());
    std::vector<AcPolynomial> rels;
    for (auto const& u : flat) {
      for (auto const& v : flat) {
        if (ac_cmp(u, v) <= 0) continue;
        for (auto const& w : flat) {
          if (ac_cmp(v, w) <= 0 || u.size() + v.size() + w.size() > max_deg) continue;
          AcPolynomial U(u), V(v), W(w);
          auto p = ac_mul(ac_mul(U, V), W) - ac_mul(ac_mul(U, W), V) - ac_mul(U, ac_mul(V, W));
          if (!p.is_zero()) rels.push_back(std::move(p));
        }
      }
    }
    return AcSystem(alphabet, std::move(rels));
  }

}  // namespace gsb
