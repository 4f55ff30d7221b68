#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "gsb/core/errors.hpp"
#include "gsb/core/scalar.hpp"

namespace gsb {

  using DenseRow = std::vector<Scalar>;

  struct EchelonForm {
    std::vector<DenseRow> rows;       // nonzero rows of the reduced form
    std::vector<std::size_t> pivots;  // pivot column of each row
    std::size_t rank = 0;
  };

  // Reduced row-echelon form over the rationals. The pivot of each step
  // is the leftmost column with a nonzero entry among the remaining rows;
  // within that column the first such row is used.
  inline EchelonForm row_reduce(std::vector<DenseRow> rows) {
    EchelonForm out;
    if (rows.empty()) {
      return out;
    }
    std::size_t const ncols = rows.front().size();
    for (auto const& r : rows) {
      if (r.size() != ncols) {
        throw DimensionMismatch("row_reduce: rows of unequal length");
      }
    }
    std::size_t top = 0;
    for (std::size_t col = 0; col < ncols && top < rows.size(); ++col) {
      std::size_t pr = top;
      while (pr < rows.size() && rows[pr][col] == 0) {
        ++pr;
      }
      if (pr == rows.size()) {
        continue;
      }
      std::swap(rows[top], rows[pr]);
      Scalar inv = 1 / rows[top][col];
      for (auto& x : rows[top]) {
        x *= inv;
      }
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (r == top || rows[r][col] == 0) {
          continue;
        }
        Scalar f = rows[r][col];
        for (std::size_t c = col; c < ncols; ++c) {
          rows[r][c] -= f * rows[top][c];
        }
      }
      out.pivots.push_back(col);
      ++top;
    }
    out.rank = top;
    rows.resize(top);
    out.rows = std::move(rows);
    return out;
  }

  // Inverse of a square matrix, or nullopt when singular.
  inline std::optional<std::vector<DenseRow>> invert(std::vector<DenseRow> const& m) {
    std::size_t const n = m.size();
    std::vector<DenseRow> aug;
    aug.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (m[i].size() != n) {
        throw DimensionMismatch("invert: matrix is not square");
      }
      DenseRow r(m[i]);
      r.resize(2 * n, Scalar(0));
      r[n + i] = 1;
      aug.push_back(std::move(r));
    }
    auto ech = row_reduce(std::move(aug));
    if (ech.rank < n || ech.pivots.back() >= n) {
      return std::nullopt;
    }
    std::vector<DenseRow> inv;
    for (auto& r : ech.rows) {
      inv.emplace_back(r.begin() + static_cast<std::ptrdiff_t>(n), r.end());
    }
    return inv;
  }

  // Incrementally built echelon basis of a row space of sparse vectors.
  // Stored rows have pairwise distinct leading (smallest) columns, so the
  // set of pivot columns equals the set of leading columns of all nonzero
  // vectors in the span.
  class SparseEchelon {
   public:
    using Entry = std::pair<std::size_t, Scalar>;
    using Row   = std::vector<Entry>;  // sorted by column, no zeros

    // Reduces r against the stored pivots until its leading column is not
    // a pivot. The result is zero iff r lies in the span.
    Row reduce(Row r) const {
      while (!r.empty()) {
        auto it = pivots_.find(r.front().first);
        if (it == pivots_.end()) {
          break;
        }
        r = axpy(r, it->second, -r.front().second);
      }
      return r;
    }

    // Returns true when the row was independent of the current span.
    bool insert(Row r) {
      r = reduce(std::move(r));
      if (r.empty()) {
        return false;
      }
      Scalar inv = 1 / r.front().second;
      for (auto& e : r) {
        e.second *= inv;
      }
      std::size_t col = r.front().first;
      pivots_.emplace(col, std::move(r));
      return true;
    }

    bool contains(Row r) const { return reduce(std::move(r)).empty(); }

    std::size_t rank() const noexcept { return pivots_.size(); }

    std::vector<std::size_t> pivot_columns() const {
      std::vector<std::size_t> out;
      out.reserve(pivots_.size());
      for (auto const& [c, r] : pivots_) {
        out.push_back(c);
      }
      return out;
    }

   private:
    // a + k * b, both sorted.
    static Row axpy(Row const& a, Row const& b, Scalar const& k) {
      Row out;
      out.reserve(a.size() + b.size());
      std::size_t i = 0, j = 0;
      while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
          out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
          out.emplace_back(b[j].first, k * b[j].second);
          ++j;
        } else {
          Scalar v = a[i].second + k * b[j].second;
          if (v != 0) {
            out.emplace_back(a[i].first, std::move(v));
          }
          ++i;
          ++j;
        }
      }
      return out;
    }

    std::map<std::size_t, Row> pivots_;
  };

}  // namespace gsb
