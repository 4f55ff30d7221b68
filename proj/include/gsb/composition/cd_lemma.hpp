#pragma once

#include <cstddef>
#include <vector>

#include "gsb/composition/compositions.hpp"
#include "gsb/core/graded_span.hpp"
#include "gsb/rewrite/normal_form.hpp"

namespace gsb {

  // The three equivalent conditions of the Composition-Diamond lemma,
  // each evaluated up to a length bound d:
  //   (i)   every composition with |w| <= d is trivial;
  //   (ii)  the leading word of every element of the bounded ideal span
  //         contains some leading word of S as a factor (checked on all of
  //         them through the pivots of the echelon basis);
  //   (iii) per length, the number of S-irreducible words equals the
  //         dimension of the bounded quotient.
  struct CdReport {
    bool compositions_trivial = true;
    bool leading_reducible    = true;
    bool irr_is_basis         = true;
    std::size_t compositions_checked = 0;
    std::vector<std::size_t> irr_counts;
    std::vector<long long> quotient_dims;

    bool agree() const {
      return compositions_trivial == leading_reducible && leading_reducible == irr_is_basis;
    }
    bool all_hold() const { return compositions_trivial && leading_reducible && irr_is_basis; }
  };

  inline CdReport cd_lemma_check(RewriteSystem const& S, std::size_t max_deg) {
    CdReport report;
    auto gsb                     = is_gsb(S, max_deg);
    report.compositions_trivial  = gsb.is_gsb;
    report.compositions_checked  = gsb.checked;
    auto span                    = ideal_span(S, max_deg);
    auto cond = evaluate_bounded(span, [&](Word const& w) { return S.is_reducible(w); });
    report.leading_reducible = cond.leading_reducible;
    report.irr_is_basis      = cond.irr_is_basis;
    report.irr_counts        = std::move(cond.irr_counts);
    report.quotient_dims     = std::move(cond.quotient_dims);
    return report;
  }

}  // namespace gsb
