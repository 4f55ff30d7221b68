#pragma once

#include <sstream>
#include <string>

#include "gsb/ac/ac_word.hpp"
#include "gsb/core/polynomial.hpp"
#include "gsb/dialgebra/diword.hpp"
#include "gsb/io/presentation_file.hpp"
#include "gsb/module/module_word.hpp"

namespace gsb::io {

  // Terms in descending order; unit coefficients omitted; signs folded
  // into the joins. A term whose monomial prints as empty is the bare
  // coefficient. The zero element prints as 0.
  template <class Mono, class Less, class F>
  std::string format_terms(LinearCombination<Mono, Less> const& p, F&& mono) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto const& [m, c] : p) {
      bool const neg = c < 0;
      Scalar const a = neg ? Scalar(-c) : c;
      if (first) {
        if (neg) out += "-";
      } else {
        out += neg ? " - " : " + ";
      }
      first = false;
      std::string const w = mono(m);
      if (w.empty()) {
        out += a.get_str();
      } else if (a == 1) {
        out += w;
      } else {
        out += a.get_str() + "*" + w;
      }
    }
    return out;
  }

  inline std::string format(Polynomial const& p, Alphabet const& A) {
    return format_terms(p, [&A](Word const& w) { return w.empty() ? std::string() : to_string(w, A); });
  }

  inline std::string format(DiPolynomial const& p, Alphabet const& A) {
    return format_terms(p, [&A](Diword const& u) { return to_string(u, A); });
  }

  inline std::string format(ModuleElement const& p, ModuleOrder const& ord) {
    return format_terms(p, [&ord](ModuleWord const& w) { return to_string(w, ord); });
  }

  inline std::string format(AcPolynomial const& p, Alphabet const& A) {
    return format_terms(p, [&A](AcWord const& u) { return to_string(u, A); });
  }

  namespace detail {
    inline std::string join(std::vector<std::string> const& names) {
      std::string s;
      for (std::size_t i = 0; i < names.size(); ++i) {
        if (i) s += ' ';
        s += names[i];
      }
      return s;
    }
  }  // namespace detail

  // The canonical file text of a presentation.
  inline std::string print(PresentationFile const& file) {
    std::ostringstream os;
    std::visit(
        [&os](auto const& P) {
          using T = std::decay_t<decltype(P)>;
          os << "kind " << kind_name<T>() << "\n";
          os << "gens " << detail::join(P.gens.names()) << "\n";
          if constexpr (std::is_same_v<T, ModulePresentation>) {
            os << "mgens " << detail::join(P.mgens.names()) << "\n";
            for (auto const& r : P.algebra_rels) os << "arel " << format(r, P.gens) << "\n";
            ModuleOrder const ord(P.gens, P.mgens);
            for (auto const& r : P.rels) os << "rel " << format(r, ord) << "\n";
          } else {
            if constexpr (std::is_same_v<T, DialgebraPresentation>) {
              if (P.leibniz) {
                auto const& L = *P.leibniz;
                for (std::size_t i = 0; i < L.dim(); ++i) {
                  for (std::size_t j = 0; j < L.dim(); ++j) {
                    Polynomial v;
                    for (std::size_t k = 0; k < L.dim(); ++k) v.add_term(Word{static_cast<Letter>(k)}, L.alpha(i, j, k));
                    if (v.is_zero()) continue;
                    os << "bracket " << P.gens.name(static_cast<Letter>(i)) << " "
                       << P.gens.name(static_cast<Letter>(j)) << " = " << format(v, P.gens) << "\n";
                  }
                }
              }
            }
            for (auto const& r : P.rels) os << "rel " << format(r, P.gens) << "\n";
          }
        },
        file);
    return os.str();
  }

}  // namespace gsb::io
