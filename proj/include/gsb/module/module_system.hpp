#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gsb/core/graded_span.hpp"
#include "gsb/module/module_word.hpp"
#include "gsb/rewrite/rewrite_system.hpp"

namespace gsb {

  // A finite monic subset S of the double-free module k<X>Y.
  class ModuleSystem {
   public:
    explicit ModuleSystem(ModuleOrder order, std::vector<ModuleElement> elements = {}) : order_(std::move(order)) {
      for (auto& m : elements) {
        if (m.is_zero()) {
          throw InvalidRelation("zero module relation");
        }
        order_.validate(m);
        elements_.push_back(m.monic());
      }
    }

    ModuleOrder const& order() const noexcept { return order_; }
    std::vector<ModuleElement> const& elements() const noexcept { return elements_; }
    std::size_t size() const noexcept { return elements_.size(); }
    bool empty() const noexcept { return elements_.empty(); }
    ModuleElement const& operator[](std::size_t i) const { return elements_[i]; }
    ModuleWord const& leading(std::size_t i) const { return elements_[i].leading_monomial(); }

    std::size_t max_leading_length() const {
      std::size_t n = 0;
      for (auto const& m : elements_) n = std::max(n, m.leading_monomial().u.size());
      return n;
    }

    // The first element whose leading word divides w on the left, i.e.
    // w = a * lead(s); returns (element, |a|).
    std::optional<std::pair<std::size_t, std::size_t>> find_reducer(ModuleWord const& w) const {
      for (std::size_t i = 0; i < elements_.size(); ++i) {
        ModuleWord const& s = leading(i);
        if (s.y == w.y && w.u.ends_with(s.u)) {
          return std::pair(i, w.u.size() - s.u.size());
        }
      }
      return std::nullopt;
    }

    bool is_reducible(ModuleWord const& w) const { return find_reducer(w).has_value(); }

   private:
    ModuleOrder order_;
    std::vector<ModuleElement> elements_;
  };

  // Reduces modulo S, and modulo the action of an algebra system A on the
  // u-parts when one is given.
  inline ModuleElement module_normal_form(ModuleElement p, ModuleSystem const& S,
                                          RewriteSystem const* algebra = nullptr) {
    ModuleElement rem;
    while (!p.is_zero()) {
      auto const [w, c] = *p.begin();
      if (auto r = S.find_reducer(w)) {
        p.add_scaled(act(w.u.prefix(r->second), S[r->first]), -c);
        continue;
      }
      if (algebra) {
        if (auto occ = algebra->find_reducer(w.u)) {
          Word const& lead = algebra->leading_word(occ->element);
          Word const a     = w.u.prefix(occ->position);
          Word const b     = w.u.suffix(w.u.size() - occ->position - lead.size());
          p.add_scaled(act(sandwich(a, (*algebra)[occ->element], b), module_word(Word{}, w.y)), -c);
          continue;
        }
      }
      rem.add_term(w, c);
      p.erase(w);
    }
    return rem;
  }

  inline ModuleElement module_normal_form(ModuleElement const& p, ModuleSystem const& S,
                                          RewriteSystem const& algebra) {
    return module_normal_form(p, S, &algebra);
  }

  struct ModuleComposition {
    ModuleWord w;
    std::size_t left  = 0;
    std::size_t right = 0;
    Word a;
    ModuleElement result;
  };

  // (f, g)_w = f - a*g where lead f = a * lead g; at most one a exists.
  inline std::vector<ModuleComposition> module_compositions(ModuleElement const& f, ModuleElement const& g,
                                                            std::size_t li = 0, std::size_t ri = 0) {
    if (!f.is_monic() || !g.is_monic()) {
      throw InvalidRelation("module_compositions: elements must be monic");
    }
    ModuleWord const& fw = f.leading_monomial();
    ModuleWord const& gw = g.leading_monomial();
    if (fw.y != gw.y || !fw.u.ends_with(gw.u)) {
      return {};
    }
    Word a = fw.u.prefix(fw.u.size() - gw.u.size());
    return {{fw, li, ri, a, f - act(a, g)}};
  }

  inline std::vector<ModuleComposition> all_module_compositions(ModuleSystem const& S) {
    std::vector<ModuleComposition> out;
    for (std::size_t i = 0; i < S.size(); ++i) {
      for (std::size_t j = 0; j < S.size(); ++j) {
        for (auto& c : module_compositions(S[i], S[j], i, j)) out.push_back(std::move(c));
      }
    }
    return out;
  }

  struct ModuleGsbReport {
    bool is_gsb         = true;
    std::size_t checked = 0;
    std::vector<std::pair<ModuleComposition, ModuleElement>> failing;
  };

  inline ModuleGsbReport module_is_gsb(ModuleSystem const& S, std::optional<std::size_t> max_len = std::nullopt) {
    ModuleGsbReport rep;
    for (auto& c : all_module_compositions(S)) {
      if (max_len && c.w.u.size() > *max_len) {
        continue;
      }
      ++rep.checked;
      auto nf = module_normal_form(c.result, S);
      if (!nf.is_zero()) {
        rep.is_gsb = false;
        rep.failing.emplace_back(std::move(c), std::move(nf));
      }
    }
    return rep;
  }

  // Irreducible module words with |u| <= max_len, ascending.
  inline std::vector<ModuleWord> module_irr_words(ModuleSystem const& S, std::size_t max_len) {
    std::vector<ModuleWord> out;
    for (std::size_t l = 0; l <= max_len; ++l) {
      for (auto& w : module_words_of_length(S.order().x().size(), S.order().y().size(), l)) {
        if (!S.is_reducible(w)) out.push_back(std::move(w));
      }
    }
    return out;
  }

  // The span of {a*s : |a| + |lead s| <= max_len}.
  inline GradedSpan<ModuleWord, ModuleWordLess> module_ideal_span(ModuleSystem const& S, std::size_t max_len) {
    std::size_t const nx = S.order().x().size();
    std::size_t const ny = S.order().y().size();
    std::vector<std::vector<ModuleWord>> by_len;
    for (std::size_t l = 0; l <= max_len; ++l) by_len.push_back(module_words_of_length(nx, ny, l));
    GradedSpan<ModuleWord, ModuleWordLess> span(by_len);
    std::vector<ModuleElement> gens;
    for (auto const& s : S.elements()) {
      std::size_t const len = s.leading_monomial().u.size();
      for (std::size_t la = 0; la + len <= max_len; ++la) {
        for (auto const& a : words_of_length(nx, la)) gens.push_back(act(a, s));
      }
    }
    span.build(gens, [](ModuleWord const& w) { return w.u.size(); });
    return span;
  }

  struct ModuleCdReport {
    bool compositions_trivial = true;
    bool leading_reducible    = true;
    bool irr_is_basis         = true;
    std::size_t compositions_checked = 0;
    std::vector<std::size_t> irr_counts;
    std::vector<long long> quotient_dims;

    bool agree() const { return compositions_trivial == leading_reducible && leading_reducible == irr_is_basis; }
    bool all_hold() const { return compositions_trivial && leading_reducible && irr_is_basis; }
  };

  // The three conditions of the composition-diamond lemma for S, with
  // (ii) and (iii) evaluated on the span bounded by |u| <= max_len.
  inline ModuleCdReport module_cd_check(ModuleSystem const& S, std::size_t max_len) {
    if (max_len < S.max_leading_length()) {
      throw BoundTooSmall("module_cd_check: max_len " + std::to_string(max_len) + " below the longest element");
    }
    ModuleCdReport rep;
    auto gsb                 = module_is_gsb(S, max_len);
    rep.compositions_trivial = gsb.is_gsb;
    rep.compositions_checked = gsb.checked;
    auto span                = module_ideal_span(S, max_len);
    auto cond = evaluate_bounded(span, [&S](ModuleWord const& w) { return S.is_reducible(w); });
    rep.leading_reducible = cond.leading_reducible;
    rep.irr_is_basis      = cond.irr_is_basis;
    rep.irr_counts        = std::move(cond.irr_counts);
    rep.quotient_dims     = std::move(cond.quotient_dims);
    return rep;
  }

}  // namespace gsb
