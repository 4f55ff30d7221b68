#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "gsb/ac/ac_system.hpp"
#include "gsb/dialgebra/di_system.hpp"
#include "gsb/dialgebra/leibniz.hpp"
#include "gsb/module/module_system.hpp"
#include "gsb/rewrite/rewrite_system.hpp"

namespace gsb::io {

  struct AssocPresentation {
    Alphabet gens;
    std::vector<Polynomial> rels;

    RewriteSystem system() const { return RewriteSystem(DegLexOrder(gens), rels); }
    bool operator==(AssocPresentation const&) const = default;
  };

  struct DialgebraPresentation {
    Alphabet gens;
    std::optional<LeibnizAlgebra> leibniz;
    std::vector<DiPolynomial> rels;

    // The enveloping relations of the Leibniz structure, if any, followed
    // by the listed relations. When the structure needs a change of basis
    // the listed relations would be in the wrong coordinates, so they are
    // refused.
    DiSystem system() const {
      if (!leibniz) return DiSystem(gens, rels);
      if (!rels.empty() && adapt_basis(*leibniz).basis_changed) {
        throw InvalidAlgebra("extra relations need a basis in which {L,L} is spanned by generators");
      }
      auto env = leibniz_enveloping(*leibniz);
      std::vector<DiPolynomial> all = env.elements();
      all.insert(all.end(), rels.begin(), rels.end());
      return DiSystem(env.alphabet(), std::move(all));
    }
    bool operator==(DialgebraPresentation const&) const = default;
  };

  struct ModulePresentation {
    Alphabet gens;
    Alphabet mgens;
    std::vector<Polynomial> algebra_rels;  // relations of the acting algebra
    std::vector<ModuleElement> rels;

    ModuleOrder order() const { return ModuleOrder(gens, mgens); }
    ModuleSystem system() const { return ModuleSystem(order(), rels); }
    RewriteSystem algebra() const { return RewriteSystem(DegLexOrder(gens), algebra_rels); }
    bool operator==(ModulePresentation const&) const = default;
  };

  struct AcPresentation {
    Alphabet gens;
    std::vector<AcPolynomial> rels;

    AcSystem system() const { return AcSystem(gens, rels); }
    bool operator==(AcPresentation const&) const = default;
  };

  using PresentationFile = std::variant<AssocPresentation, DialgebraPresentation, ModulePresentation, AcPresentation>;

  template <class T>
  constexpr char const* kind_name() {
    if constexpr (std::is_same_v<T, AssocPresentation>) return "assoc";
    else if constexpr (std::is_same_v<T, DialgebraPresentation>) return "dialgebra";
    else if constexpr (std::is_same_v<T, ModulePresentation>) return "module";
    else return "ac";
  }

}  // namespace gsb::io
