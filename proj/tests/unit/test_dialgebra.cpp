#include <catch_amalgamated.hpp>

#include <random>
#include <tuple>

#include "gsb/dialgebra/leibniz.hpp"
#include "support.hpp"

using namespace gsb;

namespace {

  Alphabet const XY({"x", "y"});

  Diword dw(std::string const& letters, std::size_t center, Alphabet const& A = XY) {
    return Diword(test::wd(letters, A), center);
  }

  // Weight tuple (length, m, letters) compared lexicographically.
  std::tuple<std::size_t, std::size_t, std::vector<Letter>> weight(Diword const& u) {
    auto l = u.letters().letters();
    return {u.size(), u.center(), std::vector<Letter>(l.begin(), l.end())};
  }

  std::vector<Diword> diwords_up_to(std::size_t n, std::size_t max_len) {
    std::vector<Diword> out;
    for (std::size_t l = 1; l <= max_len; ++l) {
      auto v = diwords_of_length(n, l);
      out.insert(out.end(), v.begin(), v.end());
    }
    return out;
  }

  LeibnizAlgebra preset_dim2() {
    LeibnizAlgebra L(2);
    L.set_bracket(1, 1, {1, 0});
    return L;
  }

  std::size_t total_diwords(std::size_t n, std::size_t max_len) { return diwords_up_to(n, max_len).size(); }

  DiPolynomial random_dipoly(std::mt19937& rng, std::size_t n, std::size_t max_len, std::size_t terms) {
    std::uniform_int_distribution<std::size_t> len(1, max_len);
    DiPolynomial p;
    for (std::size_t i = 0; i < terms; ++i) {
      std::size_t l = len(rng);
      std::uniform_int_distribution<std::size_t> c(0, l - 1);
      p.add_term(Diword(test::random_word(rng, n, l), c(rng)), test::random_scalar(rng));
    }
    return p;
  }

  // Brute-force bracket on coordinate vectors.
  using Vec = std::vector<Scalar>;
  Vec br(LeibnizAlgebra const& L, Vec const& a, Vec const& b) {
    Vec v(L.dim());
    for (std::size_t i = 0; i < L.dim(); ++i)
      for (std::size_t j = 0; j < L.dim(); ++j)
        for (std::size_t k = 0; k < L.dim(); ++k) v[k] += a[i] * b[j] * L.alpha(i, j, k);
    return v;
  }

}  // namespace

TEST_CASE("Diword rejects bad centers", "[dialgebra]") {
  CHECK_THROWS_AS(Diword(Word{}, 0), InvalidWord);
  CHECK_THROWS_AS(Diword(Word{0, 1}, 2), InvalidWord);
}

TEST_CASE("diword_cmp", "[dialgebra]") {
  CHECK(diword_cmp(dw("x", 0), dw("xy", 0)) < 0);
  CHECK(diword_cmp(dw("xy", 0), dw("xy", 1)) < 0);
  CHECK(diword_cmp(dw("xy", 0), dw("yx", 0)) < 0);

  auto all = diwords_of_length(2, 2);
  REQUIRE(all.size() == 8);
  auto sorted = all;
  std::sort(sorted.begin(), sorted.end(), DiwordLess{});
  auto by_weight = all;
  std::sort(by_weight.begin(), by_weight.end(),
            [](Diword const& a, Diword const& b) { return weight(a) < weight(b); });
  CHECK(sorted == by_weight);
  CHECK(sorted
        == std::vector<Diword>{dw("xx", 0), dw("xy", 0), dw("yx", 0), dw("yy", 0), dw("xx", 1), dw("xy", 1),
                               dw("yx", 1), dw("yy", 1)});
}

TEST_CASE("diword_cmp is a total order", "[dialgebra][property]") {
  auto all = diwords_up_to(2, 3);
  for (auto const& u : all) {
    for (auto const& v : all) {
      auto c = diword_cmp(u, v);
      REQUIRE((c == 0) == (u == v));
      REQUIRE(c == (weight(u) <=> weight(v)));
    }
  }
}

TEST_CASE("di_left and di_right", "[dialgebra]") {
  CHECK(di_left(dw("x", 0), dw("y", 0)) == dw("xy", 1));
  CHECK(di_right(dw("x", 0), dw("y", 0)) == dw("xy", 0));
  Alphabet const ABC({"a", "b", "c"});
  auto a = dw("a", 0, ABC), b = dw("b", 0, ABC), c = dw("c", 0, ABC);
  CHECK(di_left(a, di_right(b, c)) == dw("abc", 1, ABC));
  CHECK(di_right(di_left(a, b), c) == dw("abc", 1, ABC));
  CHECK(di_left(di_right(a, b), c) == dw("abc", 2, ABC));
  CHECK(di_left(a, di_left(b, c)) == dw("abc", 2, ABC));
  CHECK(di_right(a, di_left(b, c)) == dw("abc", 0, ABC));
  CHECK(di_right(di_right(a, b), c) == dw("abc", 0, ABC));

  DiPolynomial p(dw("x", 0));
  p.add_term(dw("y", 0), 1);
  auto q = di_right(p, DiPolynomial(dw("x", 0)));
  CHECK(q == DiPolynomial::from_terms({{dw("xx", 0), 1}, {dw("yx", 0), 1}}));
}

TEST_CASE("dialgebra axioms hold exhaustively", "[dialgebra][property]") {
  auto all = diwords_up_to(2, 4);
  std::size_t triples = 0;
  for (auto const& a : all) {
    for (auto const& b : all) {
      if (a.size() + b.size() > 5) continue;
      for (auto const& c : all) {
        if (a.size() + b.size() + c.size() > 6) continue;
        ++triples;
        REQUIRE(di_left(di_left(a, b), c) == di_left(a, di_left(b, c)));
        REQUIRE(di_right(di_right(a, b), c) == di_right(a, di_right(b, c)));
        REQUIRE(di_right(a, di_left(b, c)) == di_right(di_right(a, b), c));
        REQUIRE(di_left(di_right(a, b), c) == di_left(di_left(a, b), c));
        REQUIRE(di_left(a, di_right(b, c)) == di_right(di_left(a, b), c));
      }
    }
  }
  CHECK(triples > 0);
}

TEST_CASE("products respect the order in one factor each", "[dialgebra][property]") {
  auto all = diwords_up_to(2, 3);
  for (auto const& u : all) {
    for (auto const& v : all) {
      if (!DiwordLess{}(u, v)) continue;
      for (auto const& w : all) {
        REQUIRE(DiwordLess{}(di_left(w, u), di_left(w, v)));
        REQUIRE(DiwordLess{}(di_right(u, w), di_right(v, w)));
      }
    }
  }
  // The other two factors are not monotone: the weight compares centers
  // before letters, and the product forgets that factor's center.
  auto u = dw("yx", 0), v = dw("xy", 1), w = dw("x", 0);
  REQUIRE(DiwordLess{}(u, v));
  CHECK(DiwordLess{}(di_left(v, w), di_left(u, w)));
  CHECK(DiwordLess{}(di_right(w, v), di_right(w, u)));
}

TEST_CASE("leading diwords multiply on monomials", "[dialgebra][property]") {
  auto all = diwords_up_to(2, 3);
  for (auto const& u : all) {
    for (auto const& v : all) {
      DiPolynomial pu(u), pv(v);
      REQUIRE(di_left(pu, pv).leading_monomial() == di_left(u, v));
      REQUIRE(di_right(pu, pv).leading_monomial() == di_right(u, v));
    }
  }
}

TEST_CASE("the dialgebra commutator satisfies the Leibniz identity", "[dialgebra][property]") {
  Alphabet const A({"a", "b", "c"});
  auto comm = [](DiPolynomial const& p, DiPolynomial const& q) { return di_right(p, q) - di_left(q, p); };
  std::vector<DiPolynomial> gens;
  for (auto const& u : diwords_up_to(3, 2)) gens.emplace_back(u);
  bool variant_fails = false;
  for (auto const& x : gens) {
    for (auto const& y : gens) {
      for (auto const& z : gens) {
        auto lhs = comm(comm(x, y), z);
        REQUIRE(lhs == comm(comm(x, z), y) + comm(x, comm(y, z)));
        if (lhs != comm(comm(x, z), y) + comm(comm(y, z), x)) variant_fails = true;
      }
    }
  }
  CHECK(variant_fails);
}

TEST_CASE("leibniz_check", "[dialgebra]") {
  CHECK(leibniz_check(preset_dim2()));
  CHECK(leibniz_check(LeibnizAlgebra(3)));

  LeibnizAlgebra L(2);
  L.set_bracket(0, 1, {1, 0});
  CHECK(leibniz_check(L));

  // {e1,e2} = e2 with {e2,e1} = e1 is not Leibniz.
  LeibnizAlgebra M(2);
  M.set_bracket(0, 1, {0, 1});
  M.set_bracket(1, 0, {1, 0});
  CHECK_FALSE(leibniz_check(M));
  CHECK_THROWS_AS(leibniz_enveloping(M), InvalidAlgebra);
}

TEST_CASE("leibniz_check agrees with brute-force expansion", "[dialgebra][property]") {
  std::mt19937 rng(41);
  std::uniform_int_distribution<int> coin(0, 3);
  for (int t = 0; t < 300; ++t) {
    LeibnizAlgebra L(2);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) L.set_bracket(i, j, {coin(rng) == 2 ? 1 : 0, coin(rng) == 0 ? 1 : 0});
    bool ok = true;
    for (std::size_t x = 0; x < 2; ++x)
      for (std::size_t y = 0; y < 2; ++y)
        for (std::size_t z = 0; z < 2; ++z) {
          auto ex = L.unit(x), ey = L.unit(y), ez = L.unit(z);
          auto lhs = br(L, br(L, ex, ey), ez);
          auto a   = br(L, br(L, ex, ez), ey);
          auto b   = br(L, ex, br(L, ey, ez));
          for (std::size_t k = 0; k < 2; ++k) ok = ok && lhs[k] == a[k] + b[k];
        }
    REQUIRE(leibniz_check(L) == ok);
  }
}

TEST_CASE("I0 and basis adaptation", "[dialgebra]") {
  CHECK(coordinate_i0(preset_dim2()) == std::vector<std::size_t>{0});
  CHECK(coordinate_i0(LeibnizAlgebra(2)) == std::vector<std::size_t>{});

  LeibnizAlgebra L(3);
  L.set_bracket(2, 2, {1, 1, 0});
  REQUIRE(leibniz_check(L));
  CHECK_FALSE(coordinate_i0(L));
  auto ad = adapt_basis(L);
  CHECK(ad.basis_changed);
  CHECK(ad.i0 == std::vector<std::size_t>{0});
  CHECK(ad.algebra.basis().names() == std::vector<std::string>{"b1", "b2", "b3"});
  CHECK(ad.algebra.bracket(2, 2) == LeibnizAlgebra::Vector{1, 0, 0});
  // Structure constants transform covariantly: {v_i, v_j} in old
  // coordinates equals sum_k beta_ij^k v_k.
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      auto old = br(L, ad.change[i], ad.change[j]);
      Vec rebuilt(3);
      for (std::size_t k = 0; k < 3; ++k)
        for (std::size_t c = 0; c < 3; ++c) rebuilt[c] += ad.algebra.alpha(i, j, k) * ad.change[k][c];
      CHECK(old == rebuilt);
    }
  }
}

TEST_CASE("leibniz_enveloping", "[dialgebra]") {
  auto S = leibniz_enveloping(preset_dim2());
  // 4 + 1*2 + 1*2 + 1*2 + 1*2
  CHECK(S.size() == 12);
  auto const e1 = di_letter(0), e2 = di_letter(1);
  auto f21 = di_left(e2, e1) - di_right(e1, e2);
  CHECK(S[2] == f21);
  auto f22 = di_left(e2, e2) - di_right(e2, e2) + e1;
  CHECK(S[3] == f22);

  auto A = leibniz_enveloping(LeibnizAlgebra(2));
  CHECK(A.size() == 4 + 2 + 2);
  for (std::size_t j = 0; j < 2; ++j) {
    for (std::size_t i = 0; i < 2; ++i) {
      auto f = di_left(di_letter(j), di_letter(i)) - di_right(di_letter(i), di_letter(j));
      if (f.is_zero()) continue;
      CHECK(std::find(A.elements().begin(), A.elements().end(), f.monic()) != A.elements().end());
    }
  }
}

TEST_CASE("di_reduce", "[dialgebra]") {
  auto S = leibniz_enveloping(preset_dim2());
  auto const e1 = di_letter(0), e2 = di_letter(1);
  auto r = di_reduce(di_left(e2, e1), S);
  CHECK(r == di_right(e1, e2));

  DiSystem empty(Alphabet::indexed("e", 2), {});
  auto m = DiPolynomial(Diword(Word{0, 1}, 0));
  CHECK(di_reduce(m, empty) == m);
  CHECK(di_reduce(m, S) == m);
  CHECK(di_reduce(di_right(e1, e1), S).is_zero());
  CHECK(di_reduce(di_right(e2, e1), S).is_zero());
}

TEST_CASE("di_reduce is idempotent and sound", "[dialgebra][property]") {
  std::mt19937 rng(43);
  auto S = leibniz_enveloping(preset_dim2());
  auto span = di_ideal_span(S, 4);
  for (int t = 0; t < 80; ++t) {
    auto p  = random_dipoly(rng, 2, 4, 4);
    auto nf = di_reduce(p, S);
    REQUIRE(di_reduce(nf, S) == nf);
    for (auto const& [u, c] : nf) REQUIRE_FALSE(di_is_reducible(u, S));
    if (!(p - nf).is_zero()) REQUIRE(span.contains(p - nf));
  }
}

TEST_CASE("di_gsb_check_bounded", "[dialgebra]") {
  DiSystem empty(XY, {});
  auto e = di_gsb_check_bounded(empty, 3);
  CHECK(e.holds());
  CHECK(e.irr_counts == std::vector<std::size_t>{0, 2, 8, 24});

  auto S   = leibniz_enveloping(preset_dim2());
  auto rep = di_gsb_check_bounded(S, 3);
  CHECK(rep.leading_reducible);
  CHECK(rep.irr_is_basis);
  CHECK(rep.irr_counts == std::vector<std::size_t>{0, 2, 2, 2});

  DiSystem mono(Alphabet::indexed("e", 2), {DiPolynomial(Diword(Word{1, 1}, 1))});
  auto m = di_gsb_check_bounded(mono, 2);
  CHECK(m.irr_is_basis);
  CHECK(m.irr_counts == std::vector<std::size_t>{0, 2, 7});

  CHECK_THROWS_AS(di_gsb_check_bounded(S, 1), BoundTooSmall);
}

TEST_CASE("pbw_basis", "[dialgebra]") {
  auto L = preset_dim2();
  CHECK(pbw_basis(L, 2) == std::vector<Diword>{Diword(Word{0}, 0), Diword(Word{1}, 0), Diword(Word{0, 1}, 0),
                                               Diword(Word{1, 1}, 0)});
  CHECK(pbw_basis(L, 1).size() == L.dim());
  CHECK(pbw_basis(LeibnizAlgebra(3), 1).size() == 3);
  CHECK(pbw_basis(L, 0).empty());
}

TEST_CASE("pbw_basis counts the enveloping dialgebra", "[dialgebra][property]") {
  auto L = preset_dim2();
  auto S = leibniz_enveloping(L);
  for (std::size_t d = 1; d <= 4; ++d) {
    auto span = di_ideal_span(S, d);
    auto pbw  = pbw_basis(L, d);
    REQUIRE(pbw.size() == total_diwords(2, d) - span.rank());
    REQUIRE(pbw.size() == 2 * d);
    std::vector<Diword> irr;
    for (auto const& level : di_irr_words(S, d)) irr.insert(irr.end(), level.begin(), level.end());
    REQUIRE(irr == pbw);
  }
}

TEST_CASE("pbw_basis after a change of basis", "[dialgebra][property]") {
  LeibnizAlgebra L(3);
  L.set_bracket(2, 2, {1, 1, 0});
  auto S = leibniz_enveloping(L);
  CHECK(S.alphabet().names() == std::vector<std::string>{"b1", "b2", "b3"});
  CHECK(S.max_length() == 3);
  for (std::size_t d = 3; d <= 4; ++d) {
    auto rep = di_gsb_check_bounded(S, d);
    REQUIRE(rep.holds());
    auto pbw = pbw_basis(L, d);
    REQUIRE(pbw.size() == total_diwords(3, d) - rep.rank);
    for (std::size_t l = 1; l <= d; ++l) REQUIRE(rep.irr_counts[l] == 3 * l);
  }
}
