#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <tuple>
#include <vector>

#include "gsb/core/polynomial.hpp"
#include "gsb/rewrite/normal_form.hpp"
#include "gsb/rewrite/rewrite_system.hpp"

namespace gsb {

  enum class CompositionKind { intersection, inclusion };

  inline char const* to_string(CompositionKind k) {
    return k == CompositionKind::intersection ? "intersection" : "inclusion";
  }

  // The composition (f, g)_w of two monic polynomials.
  //   intersection: w = lead(f)*b = a*lead(g), |lead f| + |lead g| > |w|,
  //                 result = f*b - a*g
  //   inclusion:    w = lead(f) = a*lead(g)*b, result = f - a*g*b
  struct Composition {
    CompositionKind kind;
    Word w;
    std::size_t left  = 0;
    std::size_t right = 0;
    Polynomial result;
    Word a;
    Word b;
  };

  // All compositions of f with g: overlaps of a proper suffix of lead(f)
  // with a proper prefix of lead(g), then every occurrence of lead(g)
  // inside lead(f). Calling with (g, f) gives the mirrored overlaps. The
  // identity inclusion of a polynomial in itself (a = b = 1) is omitted;
  // it is identically zero.
  inline std::vector<Composition> find_compositions(Polynomial const& f, Polynomial const& g,
                                                    DegLexOrder const& ord,
                                                    std::size_t left_index  = 0,
                                                    std::size_t right_index = 0) {
    validate(f, ord);
    validate(g, ord);
    if (!f.is_monic() || !g.is_monic()) {
      throw InvalidRelation("compositions are defined for monic polynomials");
    }
    Word const& fw = f.leading_monomial();
    Word const& gw = g.leading_monomial();
    std::vector<Composition> out;

    std::size_t const max_overlap = std::min(fw.size(), gw.size());
    for (std::size_t k = 1; k < max_overlap; ++k) {
      if (!fw.occurs_at(gw.prefix(k), fw.size() - k)) {
        continue;
      }
      Word b = gw.suffix(gw.size() - k);
      Word a = fw.prefix(fw.size() - k);
      Polynomial r = sandwich(Word{}, f, b);
      r.add_scaled(sandwich(a, g, Word{}), Scalar(-1));
      out.push_back({CompositionKind::intersection, fw * b, left_index, right_index, std::move(r),
                     std::move(a), std::move(b)});
    }

    for (std::size_t p = 0; p + gw.size() <= fw.size(); ++p) {
      if (!fw.occurs_at(gw, p) || (gw.size() == fw.size() && f == g)) {
        continue;
      }
      Word a = fw.prefix(p);
      Word b = fw.suffix(fw.size() - p - gw.size());
      Polynomial r(f);
      r.add_scaled(sandwich(a, g, b), Scalar(-1));
      out.push_back({CompositionKind::inclusion, fw, left_index, right_index, std::move(r),
                     std::move(a), std::move(b)});
    }
    return out;
  }

  // Triviality modulo (S, w), certified by reduction to zero: every
  // elimination step rewrites a monomial below w.
  inline bool is_trivial(Composition const& c, RewriteSystem const& S) {
    return normal_form(c.result, S).is_zero();
  }

  // Every composition over ordered pairs (i, j) of S, self-pairs included,
  // sorted by ambient word, then indices, then kind and witness.
  inline std::vector<Composition> all_compositions(RewriteSystem const& S) {
    std::vector<Composition> out;
    for (std::size_t i = 0; i < S.size(); ++i) {
      for (std::size_t j = 0; j < S.size(); ++j) {
        auto cs = find_compositions(S[i], S[j], S.order(), i, j);
        out.insert(out.end(), std::make_move_iterator(cs.begin()),
                   std::make_move_iterator(cs.end()));
      }
    }
    std::stable_sort(out.begin(), out.end(), [](Composition const& x, Composition const& y) {
      auto c = deglex_compare(x.w, y.w);
      if (c != 0) {
        return c < 0;
      }
      return std::tuple(x.left, x.right, x.kind, x.a.size())
             < std::tuple(y.left, y.right, y.kind, y.a.size());
    });
    return out;
  }

  struct FailedComposition {
    Composition composition;
    Polynomial normal_form;  // nonzero
  };

  struct GsbReport {
    bool is_gsb = true;
    std::size_t checked = 0;
    std::vector<FailedComposition> failing;
  };

  // S is a Groebner-Shirshov basis iff every composition is trivial. With
  // max_w set, only compositions whose ambient word has length <= max_w
  // are examined.
  inline GsbReport is_gsb(RewriteSystem const& S, std::optional<std::size_t> max_w = std::nullopt) {
    GsbReport report;
    for (auto& c : all_compositions(S)) {
      if (max_w && c.w.size() > *max_w) {
        continue;
      }
      ++report.checked;
      Polynomial nf = normal_form(c.result, S);
      if (!nf.is_zero()) {
        report.is_gsb = false;
        report.failing.push_back({std::move(c), std::move(nf)});
      }
    }
    return report;
  }

}  // namespace gsb
