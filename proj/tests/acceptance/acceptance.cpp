// Acceptance run: one PASS/FAIL line per criterion, each under its time
// limit. Exit status is the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "generators.hpp"
#include "gsb/ac/ac_system.hpp"
#include "gsb/ac/lyndon.hpp"
#include "gsb/catalog/chinese.hpp"
#include "gsb/catalog/tensor.hpp"
#include "gsb/composition/cd_lemma.hpp"
#include "gsb/composition/completion.hpp"
#include "gsb/dialgebra/leibniz.hpp"
#include "gsb/module/module_system.hpp"

using namespace gsb;

namespace {

  // Rank of a family of sparse rows over Q, with rows keyed by any ordered
  // column type. Pivot = smallest key of the reduced row.
  template <class Key, class Cmp = std::less<Key>>
  class Echelon {
   public:
    using Row = std::map<Key, Scalar, Cmp>;

    // Reduces r fully; keeps it if independent. Returns whether it was new.
    bool insert(Row r) {
      while (!r.empty()) {
        auto const& [k, c] = *r.begin();
        auto it = rows_.find(k);
        if (it == rows_.end()) {
          Scalar const inv = 1 / c;
          for (auto& [_, v] : r) v *= inv;
          rows_.emplace(k, std::move(r));
          return true;
        }
        Scalar const f = c;
        for (auto const& [kk, v] : it->second) {
          auto& slot = r[kk];
          slot -= f * v;
          if (slot == 0) r.erase(kk);
        }
      }
      return false;
    }

    std::vector<Key> pivots() const {
      std::vector<Key> out;
      for (auto const& [k, _] : rows_) out.push_back(k);
      return out;
    }
    std::size_t rank() const { return rows_.size(); }

   private:
    std::map<Key, Row, Cmp> rows_;
  };

  std::vector<Letter> plain(Word const& w) { return {w.begin(), w.end()}; }

  long mobius(long n) {
    long m = 1;
    for (long p = 2; p * p <= n; ++p) {
      if (n % p == 0) {
        n /= p;
        if (n % p == 0) return 0;
        m = -m;
      }
    }
    return n > 1 ? -m : m;
  }

  std::size_t witt(long k, long n) {
    long s = 0;
    for (long d = 1; d <= n; ++d) {
      if (n % d) continue;
      long pw = 1;
      for (long i = 0; i < n / d; ++i) pw *= k;
      s += mobius(d) * pw;
    }
    return static_cast<std::size_t>(s / n);
  }

  std::vector<Word> all_words(std::size_t n, std::size_t len) {
    std::vector<Word> out{Word{}};
    for (std::size_t l = 0; l < len; ++l) {
      std::vector<Word> next;
      for (auto const& w : out) {
        for (Letter a = 0; a < n; ++a) {
          Word v = w;
          v.push_back(a);
          next.push_back(std::move(v));
        }
      }
      out = std::move(next);
    }
    return out;
  }

  // ---- criteria --------------------------------------------------------

  bool chinese_is_gsb(std::size_t k) { return is_gsb(catalog::chinese_gsb(k)).is_gsb; }

  bool chinese_staircase() {
    auto const P      = catalog::chinese_relations(2);
    auto const counts = irr_counts(catalog::chinese_gsb(2), 5);
    std::vector<std::size_t> const expected{1, 2, 4, 6, 9, 12};
    if (counts != expected) return false;
    for (std::size_t n = 0; n <= 5; ++n) {
      std::size_t stairs = 0;
      for (auto const& w : all_words(2, n)) stairs += catalog::is_staircase(w, 2) ? 1 : 0;
      if (stairs != counts[n] || catalog::congruence_classes(P, n) != counts[n]) return false;
    }
    return true;
  }

  bool tensor_product() {
    for (std::size_t nx = 1; nx <= 3; ++nx) {
      for (std::size_t ny = 1; ny <= 3; ++ny) {
        auto S   = catalog::tensor_relations(nx, ny);
        auto rep = is_gsb(S);
        if (!rep.is_gsb || rep.checked != 0) return false;
        std::vector<std::size_t> counts(5, 0);
        for (auto const& w : irr_words(S, 4)) {
          // every x letter (rank < nx) precedes every y letter
          bool seen_y = false;
          for (Letter l : w) {
            if (l >= nx) seen_y = true;
            else if (seen_y) return false;
          }
          ++counts[w.size()];
        }
        for (std::size_t n = 0; n <= 4; ++n) {
          std::size_t expected = 0;
          for (std::size_t a = 0; a <= n; ++a) {
            std::size_t p = 1;
            for (std::size_t i = 0; i < a; ++i) p *= nx;
            for (std::size_t i = a; i < n; ++i) p *= ny;
            expected += p;
          }
          if (counts[n] != expected) return false;
        }
      }
    }
    return true;
  }

  bool dialgebra_axioms() {
    // Reference model: (letters, center); |- keeps the right center, -| the left.
    using Model = std::pair<Word, std::size_t>;
    auto vdash  = [](Model const& a, Model const& b) { return Model{a.first * b.first, a.first.size() + b.second}; };
    auto dashv  = [](Model const& a, Model const& b) { return Model{a.first * b.first, a.second}; };
    auto model  = [](Diword const& u) { return Model{u.letters(), u.center()}; };

    std::vector<Diword> all;
    for (std::size_t l = 1; l <= 4; ++l) {
      for (auto const& w : all_words(2, l)) {
        for (std::size_t c = 0; c < l; ++c) all.emplace_back(w, c);
      }
    }
    std::size_t triples = 0;
    for (auto const& x : all) {
      for (auto const& y : all) {
        if (x.size() + y.size() > 5) continue;
        if (model(di_left(x, y)) != vdash(model(x), model(y))) return false;
        if (model(di_right(x, y)) != dashv(model(x), model(y))) return false;
        for (auto const& z : all) {
          if (x.size() + y.size() + z.size() > 6) continue;
          ++triples;
          // (x -| y) -| z = x -| (y -| z) = x -| (y |- z)
          if (di_right(di_right(x, y), z) != di_right(x, di_right(y, z))) return false;
          if (di_right(di_right(x, y), z) != di_right(x, di_left(y, z))) return false;
          // (x |- y) -| z = x |- (y -| z)
          if (di_right(di_left(x, y), z) != di_left(x, di_right(y, z))) return false;
          // (x -| y) |- z = (x |- y) |- z = x |- (y |- z)
          if (di_left(di_right(x, y), z) != di_left(di_left(x, y), z)) return false;
          if (di_left(di_left(x, y), z) != di_left(x, di_left(y, z))) return false;
        }
      }
    }
    return triples > 0;
  }

  // dim of (I cap F_d) for the ideal generated by x_i -| x_j - x_j |- x_i
  // - {x_i, x_j} in the free dialgebra: close the relations under one-letter
  // products on both sides with both operations up to length d + extra, then
  // count echelon pivots of length <= d (the order is length-first).
  std::size_t enveloping_oracle_rank(LeibnizAlgebra const& L, std::size_t d, std::size_t extra) {
    using Key = std::tuple<long, std::vector<Letter>, std::size_t>;  // (-length, letters, center)
    auto key  = [](Diword const& u) { return Key{-static_cast<long>(u.size()), plain(u.letters()), u.center()}; };
    auto row  = [&key](DiPolynomial const& p) {
      Echelon<Key>::Row r;
      for (auto const& [u, c] : p) r[key(u)] += c;
      return r;
    };
    std::size_t const n     = L.dim();
    std::size_t const bound = d + extra;
    auto x = [](std::size_t i) { return DiPolynomial(Diword(Word{static_cast<Letter>(i)}, 0)); };

    Echelon<Key> E;
    std::vector<DiPolynomial> frontier;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        DiPolynomial f = di_right(x(i), x(j)) - di_left(x(j), x(i));
        for (std::size_t k = 0; k < n; ++k) f.add_term(Diword(Word{static_cast<Letter>(k)}, 0), -L.alpha(i, j, k));
        if (!f.is_zero() && E.insert(row(f))) frontier.push_back(f);
      }
    }
    for (std::size_t len = 2; len < bound; ++len) {
      std::vector<DiPolynomial> next;
      for (auto const& p : frontier) {
        for (std::size_t a = 0; a < n; ++a) {
          for (auto const& q : {di_left(x(a), p), di_right(x(a), p), di_left(p, x(a)), di_right(p, x(a))}) {
            if (!q.is_zero() && E.insert(row(q))) next.push_back(q);
          }
        }
      }
      frontier = std::move(next);
    }
    std::size_t r = 0;
    for (auto const& k : E.pivots()) r += static_cast<std::size_t>(-std::get<0>(k)) <= d ? 1 : 0;
    return r;
  }

  bool leibniz_pbw() {
    LeibnizAlgebra L(2);
    L.set_bracket(1, 1, {Scalar(1), Scalar(0)});
    for (std::size_t d = 1; d <= 3; ++d) {
      std::size_t total = 0;
      for (std::size_t l = 1; l <= d; ++l) {
        std::size_t p = l;
        for (std::size_t i = 0; i < l; ++i) p *= 2;
        total += p;
      }
      std::size_t const rank = enveloping_oracle_rank(L, d, 2);
      if (rank != enveloping_oracle_rank(L, d, 3)) return false;  // truncation has settled
      std::size_t const pbw = pbw_basis(L, d).size();
      if (pbw != total - rank || pbw != 2 * d) return false;
    }
    return true;
  }

  bool module_cd_lemma() {
    std::mt19937 rng(5032);
    for (int t = 0; t < 50; ++t) {
      auto S = test::random_module_system(rng, 3);
      if (!module_cd_check(S, 5).agree()) return false;
    }
    return true;
  }

  bool hall_basis() {
    auto S   = hall_gsb(Alphabet({"x", "y"}), 5);
    auto rep = ac_gsb_check_bounded(S, 5);
    if (!rep.all_hold()) return false;
    std::vector<std::size_t> const expected{2, 1, 2, 3, 6};
    for (std::size_t n = 1; n <= 5; ++n) {
      if (rep.irr_counts[n] != witt(2, static_cast<long>(n)) || rep.irr_counts[n] != expected[n - 1]) return false;
    }
    return true;
  }

  bool lyndon_shirshov() {
    for (std::size_t n = 1; n <= 7; ++n) {
      auto ls = ls_words(2, n);
      if (ls.size() != witt(2, static_cast<long>(n))) return false;
      for (auto const& u : ls) {
        if (flatten(ls_bracketing(u)) != u) return false;
        // strictly greater than every proper rotation
        for (std::size_t r = 1; r < n; ++r) {
          Word rot = u.suffix(n - r) * u.prefix(r);
          if (!std::lexicographical_compare(rot.begin(), rot.end(), u.begin(), u.end())) return false;
        }
      }
    }
    return true;
  }

  bool completion_soundness() {
    DegLexOrder const ord(Alphabet({"y", "x"}));  // y < x
    Polynomial s;
    s.add_term(Word{1, 1}, 1);
    s.add_term(Word{0, 1}, -1);
    RewriteSystem const S(ord, {s});
    auto rep = shirshov_complete(S, 6, 200);
    for (auto const& c : all_compositions(rep.basis)) {
      if (c.w.size() <= 6 && !normal_form(c.result, rep.basis).is_zero()) return false;
    }
    // Membership oracle: the relation is homogeneous, so the degree-d part of
    // the ideal is spanned by a s b with |a| + |b| = d - 2.
    auto counts = irr_counts(rep.basis, 6);
    for (std::size_t d = 0; d <= 6; ++d) {
      Echelon<std::vector<Letter>> E;
      if (d >= 2) {
        for (std::size_t i = 0; i + 2 <= d; ++i) {
          for (auto const& a : all_words(2, i)) {
            for (auto const& b : all_words(2, d - 2 - i)) {
              Echelon<std::vector<Letter>>::Row r;
              for (auto const& [w, c] : s) r[plain(a * w * b)] += c;
              E.insert(std::move(r));
            }
          }
        }
      }
      if (counts[d] != all_words(2, d).size() - E.rank()) return false;
    }
    return true;
  }

  bool cd_equivalence() {
    std::vector<RewriteSystem> catalog_bases;
    for (std::size_t k = 1; k <= 3; ++k) catalog_bases.push_back(catalog::chinese_gsb(k));
    for (std::size_t nx = 1; nx <= 2; ++nx) {
      for (std::size_t ny = 1; ny <= 2; ++ny) catalog_bases.push_back(catalog::tensor_relations(nx, ny));
    }
    for (auto const& S : catalog_bases) {
      auto rep = cd_lemma_check(S, 5);
      if (!rep.agree() || !rep.all_hold()) return false;
    }
    std::mt19937 rng(1877);
    for (int t = 0; t < 20; ++t) {
      auto rep = cd_lemma_check(test::random_closed_set(rng), 6);
      if (!rep.agree() || !rep.all_hold()) return false;
    }
    for (int t = 0; t < 20; ++t) {
      auto rep = cd_lemma_check(test::random_broken_set(rng), 5);
      if (rep.compositions_trivial) return false;
      if (rep.leading_reducible && rep.irr_is_basis) return false;
    }
    return true;
  }

  struct Criterion {
    int id;
    char const* name;
    double limit_s;
    std::function<bool()> run;
  };

}  // namespace

int main() {
  std::vector<Criterion> const criteria = {
      {1, "Chinese monoid basis, rank 2", 10, [] { return chinese_is_gsb(2); }},
      {1, "Chinese monoid basis, rank 3", 10, [] { return chinese_is_gsb(3); }},
      {2, "Chinese staircase normal forms", 30, chinese_staircase},
      {3, "tensor product", 5, tensor_product},
      {4, "dialgebra axioms", 10, dialgebra_axioms},
      {5, "Leibniz PBW basis", 30, leibniz_pbw},
      {6, "module CD-lemma, 50 random systems", 60, module_cd_lemma},
      {7, "Hall basis", 30, hall_basis},
      {8, "Lyndon-Shirshov words", 5, lyndon_shirshov},
      {9, "completion soundness", 60, completion_soundness},
      {10, "CD-lemma equivalence", 120, cd_equivalence},
  };
  int failed = 0;
  for (auto const& c : criteria) {
    auto const t0 = std::chrono::steady_clock::now();
    bool ok       = false;
    std::string note;
    try {
      ok = c.run();
    } catch (std::exception const& e) {
      note = std::string(" exception: ") + e.what();
    }
    double const s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (ok && s > c.limit_s) note = " over time limit";
    bool const pass = ok && s <= c.limit_s;
    failed += pass ? 0 : 1;
    std::printf("%s criterion %d: %s (%.2fs, limit %.0fs)%s\n", pass ? "PASS" : "FAIL", c.id, c.name, s, c.limit_s,
                note.c_str());
  }
  return failed;
}
