#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gsb/core/alphabet.hpp"
#include "gsb/core/linalg.hpp"
#include "gsb/dialgebra/di_system.hpp"

namespace gsb {

  // A finite-dimensional Leibniz algebra given by structure constants
  // {e_i, e_j} = sum_k alpha(i, j, k) e_k on a named, ordered basis.
  class LeibnizAlgebra {
   public:
    using Vector = std::vector<Scalar>;

    explicit LeibnizAlgebra(Alphabet basis) : basis_(std::move(basis)) {
      std::size_t const n = basis_.size();
      alpha_.assign(n * n * n, Scalar(0));
    }

    explicit LeibnizAlgebra(std::size_t dim) : LeibnizAlgebra(Alphabet::indexed("e", dim)) {}

    std::size_t dim() const noexcept { return basis_.size(); }
    Alphabet const& basis() const noexcept { return basis_; }

    Scalar const& alpha(std::size_t i, std::size_t j, std::size_t k) const { return alpha_.at(index(i, j, k)); }

    void set_bracket(std::size_t i, std::size_t j, Vector const& value) {
      if (value.size() != dim()) {
        throw DimensionMismatch("bracket value has the wrong dimension");
      }
      for (std::size_t k = 0; k < dim(); ++k) {
        alpha_.at(index(i, j, k)) = value[k];
      }
    }

    Vector bracket(std::size_t i, std::size_t j) const {
      Vector v(dim());
      for (std::size_t k = 0; k < dim(); ++k) {
        v[k] = alpha(i, j, k);
      }
      return v;
    }

    Vector bracket(Vector const& a, Vector const& b) const {
      if (a.size() != dim() || b.size() != dim()) {
        throw DimensionMismatch("bracket arguments have the wrong dimension");
      }
      Vector v(dim());
      for (std::size_t i = 0; i < dim(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < dim(); ++j) {
          if (b[j] == 0) continue;
          for (std::size_t k = 0; k < dim(); ++k) {
            v[k] += a[i] * b[j] * alpha(i, j, k);
          }
        }
      }
      return v;
    }

    Vector unit(std::size_t i) const {
      Vector v(dim());
      v.at(i) = 1;
      return v;
    }

    bool operator==(LeibnizAlgebra const&) const = default;

   private:
    std::size_t index(std::size_t i, std::size_t j, std::size_t k) const {
      std::size_t const n = dim();
      if (i >= n || j >= n || k >= n) {
        throw std::out_of_range("structure constant index out of range");
      }
      return (i * n + j) * n + k;
    }

    Alphabet basis_;
    Vector alpha_;
  };

  // {{x,y},z} = {{x,z},y} + {x,{y,z}} on all basis triples. This is the
  // identity satisfied by x -| y - y |- x in any dialgebra.
  inline bool leibniz_check(LeibnizAlgebra const& L) {
    std::size_t const n = L.dim();
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        for (std::size_t z = 0; z < n; ++z) {
          auto lhs = L.bracket(L.bracket(x, y), L.unit(z));
          auto r1  = L.bracket(L.bracket(x, z), L.unit(y));
          auto r2  = L.bracket(L.unit(x), L.bracket(y, z));
          for (std::size_t k = 0; k < n; ++k) {
            if (lhs[k] != r1[k] + r2[k]) {
              return false;
            }
          }
        }
      }
    }
    return true;
  }

  // Reduced row echelon basis of L0 = span{ {a,a}, {a,b} + {b,a} }.
  inline std::vector<LeibnizAlgebra::Vector> l0_basis(LeibnizAlgebra const& L) {
    std::size_t const n = L.dim();
    std::vector<DenseRow> rows;
    for (std::size_t i = 0; i < n; ++i) {
      rows.push_back(L.bracket(i, i));
      for (std::size_t j = i + 1; j < n; ++j) {
        auto v = L.bracket(i, j);
        auto w = L.bracket(j, i);
        for (std::size_t k = 0; k < n; ++k) v[k] += w[k];
        rows.push_back(std::move(v));
      }
    }
    if (rows.empty()) {
      return {};
    }
    auto ef = row_reduce(std::move(rows));
    ef.rows.resize(ef.rank);
    return ef.rows;
  }

  // Basis indices spanning L0, if L0 is spanned by basis vectors.
  inline std::optional<std::vector<std::size_t>> coordinate_i0(LeibnizAlgebra const& L) {
    std::vector<std::size_t> out;
    for (auto const& row : l0_basis(L)) {
      std::size_t nonzero = 0;
      std::size_t at      = 0;
      for (std::size_t k = 0; k < row.size(); ++k) {
        if (row[k] != 0) {
          ++nonzero;
          at = k;
        }
      }
      if (nonzero != 1) {
        return std::nullopt;
      }
      out.push_back(at);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  // L together with I0. When L0 is not spanned by basis vectors, the basis
  // is changed to (echelon basis of L0, remaining unit vectors) and named
  // b1..bn, so that the first dim(L0) basis vectors span L0.
  struct AdaptedLeibniz {
    LeibnizAlgebra algebra;
    std::vector<std::size_t> i0;
    bool basis_changed = false;
    // Row r holds new basis vector r in the coordinates of the input basis.
    std::vector<LeibnizAlgebra::Vector> change;
  };

  inline AdaptedLeibniz adapt_basis(LeibnizAlgebra const& L) {
    std::size_t const n = L.dim();
    if (auto i0 = coordinate_i0(L)) {
      std::vector<LeibnizAlgebra::Vector> id;
      for (std::size_t i = 0; i < n; ++i) id.push_back(L.unit(i));
      return {L, *i0, false, id};
    }
    auto rows = l0_basis(L);
    std::vector<bool> is_pivot(n, false);
    for (auto const& r : rows) {
      is_pivot[static_cast<std::size_t>(std::find_if(r.begin(), r.end(), [](Scalar const& c) { return c != 0; })
                                        - r.begin())] = true;
    }
    std::vector<LeibnizAlgebra::Vector> change = rows;
    std::vector<std::size_t> i0;
    for (std::size_t r = 0; r < rows.size(); ++r) i0.push_back(r);
    for (std::size_t k = 0; k < n; ++k) {
      if (!is_pivot[k]) change.push_back(L.unit(k));
    }
    // Columns of the inverse give old coordinates -> new coordinates.
    std::vector<DenseRow> transposed(n, DenseRow(n));
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) transposed[c][r] = change[r][c];
    }
    auto inv = invert(transposed);
    if (!inv) {
      throw InvalidAlgebra("adapted basis is singular");
    }
    LeibnizAlgebra M(Alphabet::indexed("b", n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        auto old = L.bracket(change[i], change[j]);
        LeibnizAlgebra::Vector fresh(n);
        for (std::size_t r = 0; r < n; ++r) {
          for (std::size_t c = 0; c < n; ++c) fresh[r] += (*inv)[r][c] * old[c];
        }
        M.set_bracket(i, j, fresh);
      }
    }
    return {M, i0, true, change};
  }

  namespace detail {
    inline DiPolynomial bracket_poly(LeibnizAlgebra const& L, std::size_t i, std::size_t j) {
      DiPolynomial p;
      for (std::size_t k = 0; k < L.dim(); ++k) {
        p.add_term(Diword::letter(static_cast<Letter>(k)), L.alpha(i, j, k));
      }
      return p;
    }
  }  // namespace detail

  // The relations presenting the universal enveloping dialgebra of L over
  // the adapted basis:
  //   f_ji     = x_j |- x_i - x_i -| x_j + {x_i,x_j}              (all i, j)
  //   f_ji|-t  = x_j |- x_i |- x_t - x_i |- x_j |- x_t + {x_i,x_j} |- x_t   (j > i)
  //   h_i0|-t  = x_i0 |- x_t                                     (i0 in I0)
  //   f_t-|ji  = x_t -| x_j -| x_i - x_t -| x_i -| x_j + x_t -| {x_i,x_j} (j > i)
  //   h_t-|i0  = x_t -| x_i0                                     (i0 in I0)
  inline DiSystem leibniz_enveloping(LeibnizAlgebra const& input) {
    if (!leibniz_check(input)) {
      throw InvalidAlgebra("structure constants violate the Leibniz identity");
    }
    auto const adapted     = adapt_basis(input);
    LeibnizAlgebra const& L = adapted.algebra;
    std::size_t const n     = L.dim();
    auto x = [](std::size_t i) { return di_letter(static_cast<Letter>(i)); };
    std::vector<DiPolynomial> rels;

    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t i = 0; i < n; ++i) {
        auto f = di_left(x(j), x(i)) - di_right(x(i), x(j)) + detail::bracket_poly(L, i, j);
        rels.push_back(std::move(f));
      }
    }
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t i = 0; i < j; ++i) {
        for (std::size_t t = 0; t < n; ++t) {
          auto f = di_left(di_left(x(j), x(i)), x(t)) - di_left(di_left(x(i), x(j)), x(t))
                   + di_left(detail::bracket_poly(L, i, j), x(t));
          rels.push_back(std::move(f));
        }
      }
    }
    for (std::size_t i0 : adapted.i0) {
      for (std::size_t t = 0; t < n; ++t) {
        rels.push_back(di_left(x(i0), x(t)));
      }
    }
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t i = 0; i < j; ++i) {
        for (std::size_t t = 0; t < n; ++t) {
          auto f = di_right(di_right(x(t), x(j)), x(i)) - di_right(di_right(x(t), x(i)), x(j))
                   + di_right(x(t), detail::bracket_poly(L, i, j));
          rels.push_back(std::move(f));
        }
      }
    }
    for (std::size_t i0 : adapted.i0) {
      for (std::size_t t = 0; t < n; ++t) {
        rels.push_back(di_right(x(t), x(i0)));
      }
    }
    return DiSystem(L.basis(), std::move(rels));
  }

  // x_j -| x_i1 -| ... -| x_ik with i_p outside I0 and i_1 <= ... <= i_k,
  // over the adapted basis, of length <= max_len, in ascending order.
  inline std::vector<Diword> pbw_basis(LeibnizAlgebra const& input, std::size_t max_len) {
    auto const adapted = adapt_basis(input);
    std::size_t const n = adapted.algebra.dim();
    std::vector<Letter> free;
    for (std::size_t i = 0; i < n; ++i) {
      if (std::find(adapted.i0.begin(), adapted.i0.end(), i) == adapted.i0.end()) {
        free.push_back(static_cast<Letter>(i));
      }
    }
    std::vector<Diword> out;
    // Nondecreasing tails of each length, grown one letter at a time.
    std::vector<Word> tails{Word{}};
    for (std::size_t len = 1; len <= max_len; ++len) {
      for (std::size_t j = 0; j < n; ++j) {
        for (auto const& t : tails) {
          out.emplace_back(Word{static_cast<Letter>(j)} * t, 0);
        }
      }
      std::vector<Word> next;
      for (auto const& t : tails) {
        for (Letter l : free) {
          if (t.empty() || t[t.size() - 1] <= l) {
            Word w = t;
            w.push_back(l);
            next.push_back(std::move(w));
          }
        }
      }
      tails = std::move(next);
    }
    std::sort(out.begin(), out.end(), DiwordLess{});
    return out;
  }

}  // namespace gsb
