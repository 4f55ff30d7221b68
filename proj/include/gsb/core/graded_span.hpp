#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <vector>

#include "gsb/core/linalg.hpp"
#include "gsb/core/linear_combination.hpp"

namespace gsb {

  // Exact bounded model of an ideal: the span V_d of a family of generating
  // elements whose leading monomials have degree <= d, for every d up to a
  // bound. Columns are monomials in descending order, so the leftmost
  // nonzero column of a row is its leading monomial and the pivot columns
  // of the echelon basis are exactly the leading monomials of V_d.
  //
  // Requires an order that compares degree first, so every term of an
  // element has degree at most that of its leading monomial.
  template <class Mono, class Less>
  class GradedSpan {
   public:
    using element_type = LinearCombination<Mono, Less>;

    // monomials_by_degree[d] lists every monomial of degree d.
    explicit GradedSpan(std::vector<std::vector<Mono>> monomials_by_degree)
        : by_degree_(std::move(monomials_by_degree)) {
      std::vector<Mono> all;
      for (auto const& v : by_degree_) {
        all.insert(all.end(), v.begin(), v.end());
      }
      std::sort(all.begin(), all.end(), Less{});
      columns_.assign(all.rbegin(), all.rend());
      for (std::size_t i = 0; i < columns_.size(); ++i) {
        index_.emplace(columns_[i], i);
      }
    }

    std::size_t max_degree() const noexcept { return by_degree_.empty() ? 0 : by_degree_.size() - 1; }

    std::vector<std::vector<Mono>> const& monomials_by_degree() const noexcept {
      return by_degree_;
    }

    bool has_column(Mono const& m) const { return index_.count(m) != 0; }

    SparseEchelon::Row to_row(element_type const& p) const {
      SparseEchelon::Row row;
      row.reserve(p.size());
      for (auto const& [m, c] : p) {  // descending monomials = ascending columns
        auto it = index_.find(m);
        if (it == index_.end()) {
          throw BoundTooSmall("element has a monomial beyond the span bound");
        }
        row.emplace_back(it->second, c);
      }
      return row;
    }

    // Adds generators in order of the degree of their leading monomial and
    // records the rank after each degree. degree_of gives a monomial's degree.
    template <class DegreeOf>
    void build(std::vector<element_type> const& generators, DegreeOf degree_of) {
      std::vector<std::vector<element_type const*>> buckets(by_degree_.size());
      for (auto const& g : generators) {
        if (g.is_zero()) {
          continue;
        }
        std::size_t d = degree_of(g.leading_monomial());
        if (d >= buckets.size()) {
          throw BoundTooSmall("generator exceeds the span bound");
        }
        buckets[d].push_back(&g);
      }
      rank_through_.assign(by_degree_.size(), 0);
      for (std::size_t d = 0; d < buckets.size(); ++d) {
        for (auto const* g : buckets[d]) {
          echelon_.insert(to_row(*g));
        }
        rank_through_[d] = echelon_.rank();
      }
    }

    std::size_t rank() const noexcept { return echelon_.rank(); }

    // Rank of V_d.
    std::size_t rank_through(std::size_t d) const { return rank_through_.at(d); }

    bool contains(element_type const& p) const { return echelon_.contains(to_row(p)); }

    // Leading monomials of all nonzero elements of the full span.
    std::vector<Mono> leading_monomials() const {
      std::vector<Mono> out;
      for (std::size_t c : echelon_.pivot_columns()) {
        out.push_back(columns_[c]);
      }
      return out;
    }

    // Dimension of the degree-d slice of the bounded quotient:
    // (#monomials <= d - rank V_d) - (#monomials <= d-1 - rank V_{d-1}).
    // Negative when V_d meets lower degrees in more than V_{d-1}, which
    // happens for truncations of non-homogeneous ideals that are not
    // closed under compositions.
    std::vector<long long> quotient_dims() const {
      std::vector<long long> out(by_degree_.size());
      long long prev  = 0;
      long long total = 0;
      for (std::size_t d = 0; d < by_degree_.size(); ++d) {
        total += static_cast<long long>(by_degree_[d].size());
        long long const cum = total - static_cast<long long>(rank_through_[d]);
        out[d] = cum - prev;
        prev   = cum;
      }
      return out;
    }

   private:
    std::vector<std::vector<Mono>> by_degree_;
    std::vector<Mono> columns_;
    std::map<Mono, std::size_t, Less> index_;
    SparseEchelon echelon_;
    std::vector<std::size_t> rank_through_;
  };

  // Outcome of the bounded (ii)/(iii) comparison shared by every
  // structure: leading monomials of the ideal span are all reducible, and
  // the irreducible monomials count the bounded quotient degree by degree.
  struct BoundedConditions {
    bool leading_reducible = true;
    bool irr_is_basis      = true;
    std::vector<std::size_t> irr_counts;
    std::vector<long long> quotient_dims;
  };

  inline bool same_counts(std::vector<std::size_t> const& a, std::vector<long long> const& b) {
    return std::equal(a.begin(), a.end(), b.begin(), b.end(),
                      [](std::size_t x, long long y) { return y >= 0 && x == static_cast<std::size_t>(y); });
  }

  template <class Mono, class Less, class Reducible>
  BoundedConditions evaluate_bounded(GradedSpan<Mono, Less> const& span, Reducible reducible) {
    BoundedConditions out;
    for (auto const& m : span.leading_monomials()) {
      if (!reducible(m)) {
        out.leading_reducible = false;
        break;
      }
    }
    for (auto const& level : span.monomials_by_degree()) {
      std::size_t n = 0;
      for (auto const& m : level) {
        n += reducible(m) ? 0 : 1;
      }
      out.irr_counts.push_back(n);
    }
    out.quotient_dims = span.quotient_dims();
    out.irr_is_basis  = same_counts(out.irr_counts, out.quotient_dims);
    return out;
  }

}  // namespace gsb
