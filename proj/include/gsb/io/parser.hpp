#pragma once

#include <cctype>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "gsb/io/presentation_file.hpp"

namespace gsb::io {

  namespace detail {

    enum class Tok { number, ident, star, plus, minus, at, lbrack, rbrack, lparen, rparen, equals, end };

    struct Token {
      Tok kind;
      std::string text;
      std::size_t col;  // 1-based
    };

    inline bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
    inline bool ident_char(char c) {
      return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
    }
    inline bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

    // Tokens of one line; a '#' starts a comment.
    inline std::vector<Token> tokenize(std::string_view s, std::size_t line) {
      std::vector<Token> out;
      std::size_t i = 0;
      while (i < s.size() && s[i] != '#') {
        char const c = s[i];
        std::size_t const col = i + 1;
        if (c == ' ' || c == '\t' || c == '\r') {
          ++i;
        } else if (is_digit(c)) {
          std::size_t j = i;
          while (j < s.size() && is_digit(s[j])) ++j;
          if (j < s.size() && s[j] == '/') {
            ++j;
            if (j >= s.size() || !is_digit(s[j])) throw ParseError("expected a denominator", line, j + 1);
            while (j < s.size() && is_digit(s[j])) ++j;
          }
          out.push_back({Tok::number, std::string(s.substr(i, j - i)), col});
          i = j;
        } else if (ident_start(c)) {
          std::size_t j = i;
          while (j < s.size() && ident_char(s[j])) ++j;
          out.push_back({Tok::ident, std::string(s.substr(i, j - i)), col});
          i = j;
        } else {
          Tok k;
          switch (c) {
            case '*': k = Tok::star; break;
            case '+': k = Tok::plus; break;
            case '-': k = Tok::minus; break;
            case '@': k = Tok::at; break;
            case '[': k = Tok::lbrack; break;
            case ']': k = Tok::rbrack; break;
            case '(': k = Tok::lparen; break;
            case ')': k = Tok::rparen; break;
            case '=': k = Tok::equals; break;
            default: throw ParseError(std::string("unexpected character '") + c + "'", line, col);
          }
          out.push_back({k, std::string(1, c), col});
          ++i;
        }
      }
      out.push_back({Tok::end, "", i + 1});
      return out;
    }

    class Cursor {
     public:
      Cursor(std::vector<Token> tokens, std::size_t line) : toks_(std::move(tokens)), line_(line) {}

      Token const& peek() const { return toks_[pos_]; }
      bool at(Tok k) const { return peek().kind == k; }
      Token const& next() {
        Token const& t = toks_[pos_];
        if (t.kind != Tok::end) ++pos_;
        return t;
      }
      Token const& expect(Tok k, char const* what) {
        if (!at(k)) fail(std::string("expected ") + what);
        return next();
      }
      void expect_end() {
        if (!at(Tok::end)) fail("unexpected '" + peek().text + "'");
      }
      [[noreturn]] void fail(std::string const& msg) const { fail_at(msg, peek().col); }
      [[noreturn]] void fail_at(std::string const& msg, std::size_t col) const { throw ParseError(msg, line_, col); }
      std::size_t line() const noexcept { return line_; }

     private:
      std::vector<Token> toks_;
      std::size_t pos_ = 0;
      std::size_t line_;
    };

    inline Letter lookup(Cursor& c, Alphabet const& A, char const* what) {
      Token const& t = c.expect(Tok::ident, what);
      if (auto r = A.find(t.text)) return *r;
      c.fail_at("unknown generator '" + t.text + "'", t.col);
    }

    inline Scalar number(Token const& t) { return parse_scalar(t.text); }

    // sum := [+|-] term {(+|-) term}; term(c, sign) accumulates into the result.
    template <class Term>
    void parse_sum(Cursor& c, Term&& term) {
      Scalar sign(1);
      if (c.at(Tok::plus)) {
        c.next();
      } else if (c.at(Tok::minus)) {
        c.next();
        sign = -1;
      }
      term(c, sign);
      while (c.at(Tok::plus) || c.at(Tok::minus)) {
        sign = c.next().kind == Tok::minus ? Scalar(-1) : Scalar(1);
        term(c, sign);
      }
      c.expect_end();
    }

    inline Polynomial parse_assoc(Cursor& c, Alphabet const& A) {
      Polynomial p;
      parse_sum(c, [&](Cursor& c, Scalar coeff) {
        Word w;
        do {
          if (c.at(Tok::number)) {
            coeff *= number(c.next());
          } else {
            w.push_back(lookup(c, A, "a generator or a coefficient"));
          }
        } while (c.at(Tok::star) && (c.next(), true));
        p.add_term(w, coeff);
      });
      return p;
    }

    inline DiPolynomial parse_dialgebra(Cursor& c, Alphabet const& A) {
      DiPolynomial p;
      parse_sum(c, [&](Cursor& c, Scalar coeff) {
        std::size_t const start = c.peek().col;
        Word w;
        std::optional<std::size_t> center;
        do {
          if (c.at(Tok::number)) {
            coeff *= number(c.next());
          } else {
            if (c.at(Tok::at)) {
              if (center) c.fail("second center marker");
              c.next();
              center = w.size();
            }
            w.push_back(lookup(c, A, "a generator or a coefficient"));
          }
        } while (c.at(Tok::star) && (c.next(), true));
        if (w.empty()) c.fail_at("a dialgebra term needs at least one letter", start);
        if (!center) {
          if (w.size() != 1) c.fail_at("missing center marker '@'", start);
          center = 0;
        }
        p.add_term(Diword(std::move(w), *center), coeff);
      });
      return p;
    }

    inline ModuleElement parse_module(Cursor& c, ModuleOrder const& ord) {
      ModuleElement p;
      parse_sum(c, [&](Cursor& c, Scalar coeff) {
        std::size_t const start = c.peek().col;
        Word u;
        std::optional<Letter> y;
        do {
          if (y) c.fail("the module generator must be the last factor");
          if (c.at(Tok::number)) {
            coeff *= number(c.next());
          } else if (c.at(Tok::lbrack)) {
            c.next();
            y = lookup(c, ord.y(), "a module generator");
            c.expect(Tok::rbrack, "']'");
          } else {
            u.push_back(lookup(c, ord.x(), "a generator, a module generator or a coefficient"));
          }
        } while (c.at(Tok::star) && (c.next(), true));
        if (!y) c.fail_at("missing module generator [y]", start);
        p.add_term(ModuleWord{std::move(u), *y}, coeff);
      });
      return p;
    }

    inline AcWord parse_tree(Cursor& c, Alphabet const& A) {
      if (c.at(Tok::lparen)) {
        c.next();
        AcWord l = parse_tree(c, A);
        AcWord r = parse_tree(c, A);
        c.expect(Tok::rparen, "')'");
        return AcWord::node(l, r);
      }
      return AcWord::leaf(lookup(c, A, "a generator or '('"));
    }

    inline AcPolynomial parse_ac(Cursor& c, Alphabet const& A) {
      AcPolynomial p;
      parse_sum(c, [&](Cursor& c, Scalar coeff) {
        std::size_t const start = c.peek().col;
        std::optional<AcWord> tree;
        do {
          if (c.at(Tok::number)) {
            coeff *= number(c.next());
          } else {
            if (tree) c.fail("a term holds a single tree");
            tree = parse_tree(c, A);
          }
        } while (c.at(Tok::star) && (c.next(), true));
        if (!tree) c.fail_at("an anti-commutative term needs a tree", start);
        p.add_scaled(ac_evaluate(*tree), coeff);
      });
      return p;
    }

    inline std::vector<std::string> names(Cursor& c) {
      std::vector<std::string> out;
      while (c.at(Tok::ident)) out.push_back(c.next().text);
      c.expect_end();
      return out;
    }

    inline Alphabet make_alphabet(Cursor& c, std::size_t col) {
      auto list = names(c);
      if (list.empty()) c.fail_at("empty generator list", col);
      try {
        return Alphabet(std::move(list));
      } catch (std::invalid_argument const& e) {
        c.fail_at(e.what(), col);
      }
    }

    // A generator named by its name or by its 1-based rank.
    inline std::size_t bracket_index(Cursor& c, Alphabet const& A) {
      if (c.at(Tok::number)) {
        Token const& t = c.next();
        std::size_t const k = std::stoul(t.text);
        if (t.text.find('/') != std::string::npos || k < 1 || k > A.size()) {
          c.fail_at("generator index out of range", t.col);
        }
        return k - 1;
      }
      return lookup(c, A, "a generator");
    }

    template <class T>
    T parse_line(std::string_view text, std::size_t line, T (*f)(Cursor&, Alphabet const&), Alphabet const& A) {
      Cursor c(tokenize(text, line), line);
      return f(c, A);
    }

  }  // namespace detail

  inline Polynomial parse_polynomial(std::string_view text, Alphabet const& A) {
    return detail::parse_line<Polynomial>(text, 1, detail::parse_assoc, A);
  }

  inline DiPolynomial parse_dipolynomial(std::string_view text, Alphabet const& A) {
    return detail::parse_line<DiPolynomial>(text, 1, detail::parse_dialgebra, A);
  }

  inline ModuleElement parse_module_element(std::string_view text, ModuleOrder const& ord) {
    detail::Cursor c(detail::tokenize(text, 1), 1);
    return detail::parse_module(c, ord);
  }

  inline AcPolynomial parse_ac_polynomial(std::string_view text, Alphabet const& A) {
    return detail::parse_line<AcPolynomial>(text, 1, detail::parse_ac, A);
  }

  inline PresentationFile parse(std::string_view text) {
    using detail::Cursor;
    using detail::Tok;
    using detail::Token;

    std::optional<PresentationFile> file;
    bool have_gens = false, have_mgens = false;
    std::size_t first_bracket = 0;
    std::vector<std::pair<std::size_t, std::size_t>> bracketed;
    std::size_t line = 0;

    std::istringstream in{std::string(text)};
    std::string raw;
    while (std::getline(in, raw)) {
      ++line;
      Cursor c(detail::tokenize(raw, line), line);
      if (c.at(Tok::end)) continue;
      Token const head = c.expect(Tok::ident, "a directive");
      std::string const& d = head.text;

      if (d == "kind") {
        if (file) c.fail_at("duplicate kind", head.col);
        Token const k = c.expect(Tok::ident, "a structure kind");
        c.expect_end();
        if (k.text == "assoc") file = AssocPresentation{};
        else if (k.text == "dialgebra") file = DialgebraPresentation{};
        else if (k.text == "module") file = ModulePresentation{};
        else if (k.text == "ac") file = AcPresentation{};
        else c.fail_at("unknown kind '" + k.text + "' (expected assoc, dialgebra, module or ac)", k.col);
        continue;
      }
      if (!file) c.fail_at("'kind' must come first", head.col);

      if (d == "gens") {
        if (have_gens) c.fail_at("duplicate gens", head.col);
        Alphabet A = detail::make_alphabet(c, head.col);
        std::visit([&A](auto& P) { P.gens = A; }, *file);
        have_gens = true;
        continue;
      }
      if (!have_gens) c.fail_at("'gens' must come before '" + d + "'", head.col);

      if (d == "mgens") {
        auto* M = std::get_if<ModulePresentation>(&*file);
        if (!M) c.fail_at("'mgens' is only valid for kind module", head.col);
        if (have_mgens) c.fail_at("duplicate mgens", head.col);
        M->mgens   = detail::make_alphabet(c, head.col);
        have_mgens = true;
      } else if (d == "bracket") {
        auto* D = std::get_if<DialgebraPresentation>(&*file);
        if (!D) c.fail_at("'bracket' is only valid for kind dialgebra", head.col);
        if (!D->leibniz) {
          D->leibniz    = LeibnizAlgebra(D->gens);
          first_bracket = line;
        }
        std::size_t const i = detail::bracket_index(c, D->gens);
        std::size_t const j = detail::bracket_index(c, D->gens);
        if (std::find(bracketed.begin(), bracketed.end(), std::pair{i, j}) != bracketed.end()) {
          c.fail_at("duplicate bracket", head.col);
        }
        bracketed.emplace_back(i, j);
        c.expect(Tok::equals, "'='");
        std::size_t const col = c.peek().col;
        Polynomial v = detail::parse_assoc(c, D->gens);
        LeibnizAlgebra::Vector value(D->gens.size());
        for (auto const& [w, a] : v) {
          if (w.size() != 1) c.fail_at("a bracket value is a linear combination of generators", col);
          value[w[0]] = a;
        }
        D->leibniz->set_bracket(i, j, value);
      } else if (d == "rel" || d == "arel") {
        std::visit(
            [&](auto& P) {
              using T = std::decay_t<decltype(P)>;
              if constexpr (std::is_same_v<T, ModulePresentation>) {
                if (d == "arel") {
                  P.algebra_rels.push_back(detail::parse_assoc(c, P.gens));
                  return;
                }
                if (!have_mgens) c.fail_at("'mgens' must come before 'rel'", head.col);
                P.rels.push_back(detail::parse_module(c, P.order()));
              } else {
                if (d == "arel") c.fail_at("'arel' is only valid for kind module", head.col);
                if constexpr (std::is_same_v<T, AssocPresentation>) P.rels.push_back(detail::parse_assoc(c, P.gens));
                if constexpr (std::is_same_v<T, DialgebraPresentation>) {
                  P.rels.push_back(detail::parse_dialgebra(c, P.gens));
                }
                if constexpr (std::is_same_v<T, AcPresentation>) P.rels.push_back(detail::parse_ac(c, P.gens));
              }
            },
            *file);
      } else {
        c.fail_at("unknown directive '" + d + "'", head.col);
      }
    }

    if (!file) throw ParseError("missing 'kind'", line + 1, 1);
    if (!have_gens) throw ParseError("missing 'gens'", line + 1, 1);
    if (std::holds_alternative<ModulePresentation>(*file) && !have_mgens) {
      throw ParseError("missing 'mgens'", line + 1, 1);
    }
    if (auto* D = std::get_if<DialgebraPresentation>(&*file); D && D->leibniz && !leibniz_check(*D->leibniz)) {
      throw ParseError("structure constants violate the Leibniz identity", first_bracket, 1);
    }
    return *file;
  }

  inline PresentationFile parse_file(std::string const& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
  }

}  // namespace gsb::io
