#pragma once

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <numeric>
#include <optional>
#include <vector>

#include "gsb/composition/compositions.hpp"

namespace gsb {

  // Removes redundancy from S: afterwards no leading word contains another
  // as a factor and every element is fully reduced modulo the others.
  // Elements are processed smallest leading word first; an element that
  // reduces to zero is dropped.
  inline RewriteSystem inter_reduce(RewriteSystem const& S) {
    std::vector<Polynomial> elems = S.elements();
    auto by_leading               = [](Polynomial const& p, Polynomial const& q) {
      return deglex_compare(p.leading_monomial(), q.leading_monomial()) < 0;
    };
    bool changed = true;
    while (changed) {
      changed = false;
      std::stable_sort(elems.begin(), elems.end(), by_leading);
      for (std::size_t i = 0; i < elems.size(); ++i) {
        std::vector<Polynomial> others;
        others.reserve(elems.size() - 1);
        for (std::size_t j = 0; j < elems.size(); ++j) {
          if (j != i) {
            others.push_back(elems[j]);
          }
        }
        Polynomial r = normal_form(elems[i], RewriteSystem(S.order(), others));
        if (r == elems[i]) {
          continue;
        }
        if (r.is_zero()) {
          elems.erase(elems.begin() + static_cast<std::ptrdiff_t>(i));
        } else {
          elems[i] = r.monic();
        }
        changed = true;
        break;
      }
    }
    return RewriteSystem(S.order(), std::move(elems));
  }

  enum class CompletionStatus { completed, degree_capped, element_capped, time_capped };

  inline char const* to_string(CompletionStatus s) {
    switch (s) {
      case CompletionStatus::completed: return "completed";
      case CompletionStatus::degree_capped: return "degree-capped";
      case CompletionStatus::element_capped: return "element-capped";
      case CompletionStatus::time_capped: return "time-capped";
    }
    return "unknown";
  }

  struct CompletionReport {
    CompletionStatus status = CompletionStatus::completed;
    RewriteSystem basis;
    std::size_t added      = 0;
    std::size_t iterations = 0;
  };

  // The Shirshov algorithm, bounded. Each round lists every composition of
  // the current (inter-reduced) basis in ascending order of ambient word and
  // adjoins the monic normal form of each nontrivial one with |w| <= max_deg,
  // reducing later compositions of the round against the enlarged set.
  //
  //   completed      every composition of the basis reduces to zero
  //   degree_capped  all compositions with |w| <= max_deg are trivial, but
  //                  some longer one is not
  //   element_capped the basis grew beyond max_elems
  //   time_capped    the optional wall-clock budget ran out
  inline CompletionReport shirshov_complete(
      RewriteSystem const& S, std::size_t max_deg, std::size_t max_elems,
      std::optional<std::chrono::steady_clock::duration> budget = std::nullopt) {
    auto const start = std::chrono::steady_clock::now();
    auto out_of_time = [&] {
      return budget && std::chrono::steady_clock::now() - start > *budget;
    };

    CompletionReport report;
    report.basis = inter_reduce(S);
    while (true) {
      ++report.iterations;
      RewriteSystem work = report.basis;
      bool grew          = false;
      bool capped_elems  = false;
      for (auto const& c : all_compositions(report.basis)) {
        if (c.w.size() > max_deg) {
          break;
        }
        Polynomial r = normal_form(c.result, work);
        if (r.is_zero()) {
          continue;
        }
        work = work.with(r.monic());
        ++report.added;
        grew = true;
        if (work.size() > max_elems) {
          capped_elems = true;
          break;
        }
        if (out_of_time()) {
          break;
        }
      }
      if (capped_elems) {
        report.basis  = inter_reduce(work);
        report.status = CompletionStatus::element_capped;
        return report;
      }
      if (!grew) {
        break;
      }
      report.basis = inter_reduce(work);
      if (out_of_time()) {
        report.status = CompletionStatus::time_capped;
        return report;
      }
    }
    report.status = is_gsb(report.basis).is_gsb ? CompletionStatus::completed
                                                : CompletionStatus::degree_capped;
    return report;
  }

}  // namespace gsb
