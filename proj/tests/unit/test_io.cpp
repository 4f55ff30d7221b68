#include <catch_amalgamated.hpp>

#include <filesystem>

#include "gsb/catalog/chinese.hpp"
#include "gsb/io/parser.hpp"
#include "gsb/io/printer.hpp"
#include "gsb/rewrite/normal_form.hpp"

using namespace gsb;
using namespace gsb::io;

namespace {

  std::string fixture(char const* name) { return std::string(GSB_FIXTURE_DIR) + "/" + name; }

  std::pair<std::size_t, std::size_t> error_position(std::string const& text) {
    try {
      parse(text);
    } catch (ParseError const& e) {
      return {e.line(), e.column()};
    }
    return {0, 0};
  }

}  // namespace

TEST_CASE("parse assoc", "[io]") {
  auto f  = parse("kind assoc\ngens x y\nrel y*x - x*y\n");
  auto& P = std::get<AssocPresentation>(f);
  CHECK(P.gens.names() == std::vector<std::string>{"x", "y"});
  REQUIRE(P.rels.size() == 1);
  CHECK(P.rels[0] == Polynomial::from_terms({{Word{1, 0}, 1}, {Word{0, 1}, -1}}));
  CHECK(format(P.rels[0], P.gens) == "y*x - x*y");
}

TEST_CASE("rational coefficients and the empty word", "[io]") {
  auto P = std::get<AssocPresentation>(parse("kind assoc\ngens x\nrel x*x - 3/2*x + 1\n"));
  CHECK(P.rels[0].coeff(Word{0, 0}) == 1);
  CHECK(P.rels[0].coeff(Word{0}) == make_scalar(-3, 2));
  CHECK(P.rels[0].coeff(Word{}) == 1);
  CHECK(format(P.rels[0], P.gens) == "x*x - 3/2*x + 1");
  CHECK(format(parse_polynomial("-2 + x*2/4*x", P.gens), P.gens) == "1/2*x*x - 2");
  CHECK(format(Polynomial{}, P.gens) == "0");
  CHECK(format(parse_polynomial("x - x", P.gens), P.gens) == "0");
}

TEST_CASE("parse errors carry line and column", "[io]") {
  CHECK(error_position("kind assoc\ngens x y\nrel x**y\n") == std::pair<std::size_t, std::size_t>{3, 7});
  CHECK(error_position("kind assoc\ngens x y\nrel x*z\n") == std::pair<std::size_t, std::size_t>{3, 7});
  CHECK(error_position("kind assoc\nkind assoc\n") == std::pair<std::size_t, std::size_t>{2, 1});
  CHECK(error_position("gens x\n") == std::pair<std::size_t, std::size_t>{1, 1});
  CHECK(error_position("kind lie\n") == std::pair<std::size_t, std::size_t>{1, 6});
  CHECK(error_position("kind assoc\ngens x x\n") == std::pair<std::size_t, std::size_t>{2, 1});
  CHECK(error_position("kind assoc\ngens x\nrel x +\n") == std::pair<std::size_t, std::size_t>{3, 8});
  CHECK(error_position("kind assoc\ngens x\nrel x $ x\n") == std::pair<std::size_t, std::size_t>{3, 7});
  CHECK(error_position("kind assoc\ngens x\nrel 1/ \n") == std::pair<std::size_t, std::size_t>{3, 7});
  CHECK(error_position("kind assoc\n") == std::pair<std::size_t, std::size_t>{2, 1});
  CHECK(error_position("kind assoc\ngens x\nmgens y\n") == std::pair<std::size_t, std::size_t>{3, 1});
  CHECK(error_position("kind assoc\ngens x\nfoo x\n") == std::pair<std::size_t, std::size_t>{3, 1});
  CHECK(error_position("kind dialgebra\ngens x y\nrel x*y\n") == std::pair<std::size_t, std::size_t>{3, 5});
  CHECK(error_position("kind dialgebra\ngens x y\nrel @x*@y\n") == std::pair<std::size_t, std::size_t>{3, 8});
  CHECK(error_position("kind module\ngens x\nmgens y\nrel [y]*x\n") == std::pair<std::size_t, std::size_t>{4, 9});
  CHECK(error_position("kind module\ngens x\nmgens y\nrel x*x\n") == std::pair<std::size_t, std::size_t>{4, 5});
  CHECK(error_position("kind ac\ngens x y\nrel (x y\n") == std::pair<std::size_t, std::size_t>{3, 9});
  CHECK(error_position("kind ac\ngens x y\nrel x*y\n") == std::pair<std::size_t, std::size_t>{3, 7});
  CHECK(error_position("kind dialgebra\ngens x y\nbracket y y = y\n") == std::pair<std::size_t, std::size_t>{3, 1});
  CHECK(error_position("kind dialgebra\ngens x y\nbracket 1 3 = y\n") == std::pair<std::size_t, std::size_t>{3, 11});
  CHECK(error_position("kind dialgebra\ngens x y\nbracket 1 1 = y*y\n") == std::pair<std::size_t, std::size_t>{3, 15});
}

TEST_CASE("comments and blank lines", "[io]") {
  auto P = std::get<AssocPresentation>(parse("# header\n\nkind assoc # trailing\n  gens a b\nrel b # x*y\n"));
  CHECK(P.rels.size() == 1);
  CHECK(P.rels[0] == Polynomial(Word{1}));
}

TEST_CASE("parse dialgebra and Leibniz structure", "[io]") {
  auto D = std::get<DialgebraPresentation>(parse("kind dialgebra\ngens x y\nrel y*@x - 2*@x + y\n"));
  REQUIRE(D.rels.size() == 1);
  auto const& r = D.rels[0];
  CHECK(r.coeff(Diword(Word{1, 0}, 1)) == 1);
  CHECK(r.coeff(Diword(Word{0}, 0)) == -2);
  CHECK(r.coeff(Diword(Word{1}, 0)) == 1);
  CHECK(format(r, D.gens) == "y*@x + @y - 2*@x");

  auto L = std::get<DialgebraPresentation>(parse("kind dialgebra\ngens e1 e2\nbracket 2 e2 = e1\n"));
  REQUIRE(L.leibniz);
  CHECK(L.leibniz->alpha(1, 1, 0) == 1);
  CHECK(L.system().size() == leibniz_enveloping(*L.leibniz).size());
}

TEST_CASE("parse module and ac", "[io]") {
  auto M = std::get<ModulePresentation>(parse_file(fixture("module.gsb")));
  CHECK(M.mgens.names() == std::vector<std::string>{"y1", "y2"});
  CHECK(M.algebra_rels.size() == 1);
  REQUIRE(M.rels.size() == 2);
  CHECK(M.rels[0].coeff(ModuleWord{Word{1}, 0}) == 1);
  CHECK(M.rels[0].coeff(ModuleWord{Word{0}, 1}) == -1);
  CHECK(format(M.rels[1], M.order()) == "x1*x1*[y2] - 1/2*[y1]");

  auto A = std::get<AcPresentation>(parse_file(fixture("ac.gsb")));
  REQUIRE(A.rels.size() == 2);
  // (x y) = -(y x)
  AcWord const x = AcWord::leaf(0), y = AcWord::leaf(1);
  CHECK(A.rels[1].coeff(AcWord::node(y, x)) == -1);
  CHECK(A.rels[1].coeff(y) == 1);
  CHECK(format(A.rels[1], A.gens) == "-(y x) + y");
  CHECK(format(parse_ac_polynomial("(x x) + 2*(x (x y))", A.gens), A.gens) == "2*((y x) x)");
}

TEST_CASE("fixture presentations agree with the catalog", "[io]") {
  auto P = std::get<AssocPresentation>(parse_file(fixture("chinese2.gsb")));
  auto S = catalog::chinese_gsb(2);
  CHECK(P.gens == S.alphabet());
  for (auto const& r : P.rels) CHECK(normal_form(r, S).is_zero());
  for (auto const& r : catalog::chinese_relations(2).relations) CHECK(normal_form(r, P.system()).is_zero());
}

TEST_CASE("round trip over the fixture corpus", "[io][property]") {
  std::size_t seen = 0;
  for (auto const& entry : std::filesystem::directory_iterator(GSB_FIXTURE_DIR)) {
    if (entry.path().extension() != ".gsb") continue;
    ++seen;
    auto P    = parse_file(entry.path().string());
    auto text = print(P);
    INFO(entry.path().filename().string() << "\n" << text);
    CHECK(parse(text) == P);
    CHECK(print(parse(text)) == text);
  }
  CHECK(seen >= 8);
}
