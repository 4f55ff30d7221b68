#pragma once

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <new>
#include <ostream>
#include <string>
#include <vector>

#include "gsb/catalog/chinese.hpp"
#include "gsb/catalog/tensor.hpp"
#include "gsb/composition/cd_lemma.hpp"
#include "gsb/composition/completion.hpp"
#include "gsb/io/parser.hpp"
#include "gsb/io/printer.hpp"

namespace gsb::cli {

  enum ExitCode : int { exit_ok = 0, exit_false = 1, exit_parse = 2, exit_resource = 3 };

  class ResourceLimit : public Error {
   public:
    using Error::Error;
  };

  // Upper bound on the number of monomials a bounded enumeration may touch.
  inline constexpr double enumeration_limit = 2e7;

  namespace detail {

    using namespace gsb::io;

    inline char const* yes(bool b) { return b ? "true" : "false"; }

    template <class T>
    std::string counts(std::vector<T> const& v) {
      std::string s;
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(v[i]);
      }
      return s;
    }

    inline void header(std::ostream& out, char const* command) {
      out << "format: 1\n"
          << "command: " << command << "\n";
    }

    inline void header(std::ostream& out, char const* command, PresentationFile const& file) {
      header(out, command);
      out << "kind: " << std::visit([](auto const& P) { return kind_name<std::decay_t<decltype(P)>>(); }, file)
          << "\n";
    }

    // Monomials of length <= len over n letters, times a per-word factor.
    inline void guard(std::size_t n, std::size_t len, std::size_t factor = 1) {
      double total = 0, level = 1;
      for (std::size_t l = 0; l <= len; ++l) {
        total += level * static_cast<double>(factor);
        level *= static_cast<double>(n);
        if (total > enumeration_limit) {
          throw ResourceLimit("bound " + std::to_string(len) + " would enumerate more than "
                              + std::to_string(static_cast<long long>(enumeration_limit)) + " monomials");
        }
      }
    }

    inline void guard(PresentationFile const& file, std::size_t len) {
      std::visit(
          [len](auto const& P) {
            using T = std::decay_t<decltype(P)>;
            if constexpr (std::is_same_v<T, DialgebraPresentation>) guard(P.gens.size(), len, len);
            else if constexpr (std::is_same_v<T, ModulePresentation>) guard(P.gens.size(), len, P.mgens.size());
            else guard(P.gens.size(), len);
          },
          file);
    }

    template <class Conditions>
    void print_conditions(std::ostream& out, Conditions const& c) {
      out << "leading_reducible: " << yes(c.leading_reducible) << "\n"
          << "irr_is_basis: " << yes(c.irr_is_basis) << "\n"
          << "irr_counts: " << counts(c.irr_counts) << "\n"
          << "quotient_dims: " << counts(c.quotient_dims) << "\n";
    }

    inline int check_assoc(RewriteSystem const& S, std::optional<std::size_t> max_deg, std::ostream& out) {
      auto rep = is_gsb(S, max_deg);
      out << "elements: " << S.size() << "\n"
          << "compositions: " << rep.checked << "\n"
          << "failing: " << rep.failing.size() << "\n";
      for (auto const& f : rep.failing) {
        auto const& c = f.composition;
        out << "  " << to_string(c.kind) << " w=" << to_string(c.w, S.alphabet()) << " left=" << c.left + 1
            << " right=" << c.right + 1 << " nf=" << format(f.normal_form, S.alphabet()) << "\n";
      }
      out << "gsb: " << yes(rep.is_gsb) << "\n";
      return rep.is_gsb ? exit_ok : exit_false;
    }

    inline int check(PresentationFile const& file, std::optional<std::size_t> max_deg, std::ostream& out) {
      header(out, "check", file);
      if (max_deg) out << "max_deg: " << *max_deg << "\n";
      return std::visit(
          [&](auto const& P) -> int {
            using T = std::decay_t<decltype(P)>;
            if constexpr (std::is_same_v<T, AssocPresentation>) {
              return check_assoc(P.system(), max_deg, out);
            } else if constexpr (std::is_same_v<T, ModulePresentation>) {
              auto S   = P.system();
              auto rep = module_is_gsb(S, max_deg);
              out << "elements: " << S.size() << "\n"
                  << "compositions: " << rep.checked << "\n"
                  << "failing: " << rep.failing.size() << "\n";
              for (auto const& [c, nf] : rep.failing) {
                out << "  w=" << to_string(c.w, S.order()) << " left=" << c.left + 1 << " right=" << c.right + 1
                    << " nf=" << format(nf, S.order()) << "\n";
              }
              out << "gsb: " << yes(rep.is_gsb) << "\n";
              return rep.is_gsb ? exit_ok : exit_false;
            } else if constexpr (std::is_same_v<T, AcPresentation>) {
              auto S   = P.system();
              auto rep = ac_is_gsb(S, max_deg);
              out << "elements: " << S.size() << "\n"
                  << "compositions: " << rep.checked << "\n"
                  << "failing: " << rep.failing.size() << "\n";
              for (auto const& [c, nf] : rep.failing) {
                out << "  w=" << to_string(c.w, S.alphabet()) << " left=" << c.left + 1
                    << " right=" << c.right + 1 << " nf=" << format(nf, S.alphabet()) << "\n";
              }
              out << "gsb: " << yes(rep.is_gsb) << "\n";
              return rep.is_gsb ? exit_ok : exit_false;
            } else {
              // Bounded check only: the leading words of the truncated ideal
              // against the irreducible words.
              auto S = P.system();
              std::size_t const bound = max_deg.value_or(S.max_length() + 1);
              guard(file, bound);
              if (!max_deg) out << "max_deg: " << bound << "\n";
              auto rep = di_gsb_check_bounded(S, bound);
              out << "elements: " << S.size() << "\n";
              print_conditions(out, rep);
              out << "holds: " << yes(rep.holds()) << "\n";
              return rep.holds() ? exit_ok : exit_false;
            }
          },
          file);
    }

    inline int cdcheck(PresentationFile const& file, std::size_t max_deg, std::ostream& out) {
      header(out, "cdcheck", file);
      guard(file, max_deg);
      out << "max_deg: " << max_deg << "\n";
      return std::visit(
          [&](auto const& P) -> int {
            using T = std::decay_t<decltype(P)>;
            if constexpr (std::is_same_v<T, DialgebraPresentation>) {
              auto rep = di_gsb_check_bounded(P.system(), max_deg);
              print_conditions(out, rep);
              out << "holds: " << yes(rep.holds()) << "\n";
              return rep.holds() ? exit_ok : exit_false;
            } else {
              auto S   = P.system();
              auto rep = [&] {
                if constexpr (std::is_same_v<T, AssocPresentation>) return cd_lemma_check(S, max_deg);
                else if constexpr (std::is_same_v<T, ModulePresentation>) return module_cd_check(S, max_deg);
                else return ac_gsb_check_bounded(S, max_deg);
              }();
              out << "compositions: " << rep.compositions_checked << "\n"
                  << "compositions_trivial: " << yes(rep.compositions_trivial) << "\n";
              print_conditions(out, rep);
              out << "agree: " << yes(rep.agree()) << "\n"
                  << "holds: " << yes(rep.all_hold()) << "\n";
              return rep.all_hold() ? exit_ok : exit_false;
            }
          },
          file);
    }

    template <class Mono, class Print>
    void print_levels(std::vector<std::vector<Mono>> const& levels, bool count_only, Print&& print,
                      std::ostream& out) {
      std::vector<std::size_t> n;
      for (auto const& l : levels) n.push_back(l.size());
      out << "counts: " << counts(n) << "\n";
      if (count_only) return;
      for (std::size_t d = 0; d < levels.size(); ++d) {
        out << "length " << d << ":";
        for (auto const& m : levels[d]) out << " " << print(m);
        out << "\n";
      }
    }

    inline void irr_assoc(RewriteSystem const& S, std::size_t max_len, bool count_only, std::ostream& out) {
      std::vector<std::vector<Word>> levels(max_len + 1);
      for (auto& w : irr_words(S, max_len)) levels[w.size()].push_back(std::move(w));
      print_levels(levels, count_only, [&S](Word const& w) { return to_string(w, S.alphabet()); }, out);
    }

    inline int irr(PresentationFile const& file, std::size_t max_len, bool count_only, std::ostream& out) {
      header(out, "irr", file);
      out << "max_len: " << max_len << "\n";
      std::visit(
          [&](auto const& P) {
            using T = std::decay_t<decltype(P)>;
            if constexpr (std::is_same_v<T, AssocPresentation>) {
              irr_assoc(P.system(), max_len, count_only, out);
            } else if constexpr (std::is_same_v<T, DialgebraPresentation>) {
              guard(file, max_len);
              auto S = P.system();
              print_levels(di_irr_words(S, max_len), count_only,
                           [&S](Diword const& u) { return to_string(u, S.alphabet()); }, out);
            } else if constexpr (std::is_same_v<T, ModulePresentation>) {
              guard(file, max_len);
              auto S = P.system();
              std::vector<std::vector<ModuleWord>> levels(max_len + 1);
              for (auto& w : module_irr_words(S, max_len)) levels[w.u.size()].push_back(std::move(w));
              print_levels(levels, count_only, [&S](ModuleWord const& w) { return to_string(w, S.order()); }, out);
            } else {
              guard(file, max_len);
              auto S = P.system();
              print_levels(ac_irr_words(S, max_len), count_only,
                           [&S](AcWord const& u) { return to_string(u, S.alphabet()); }, out);
            }
          },
          file);
      return exit_ok;
    }

    inline int nf(PresentationFile const& file, std::string const& expr, std::ostream& out) {
      auto result = std::visit(
          [&](auto const& P) -> std::string {
            using T = std::decay_t<decltype(P)>;
            if constexpr (std::is_same_v<T, AssocPresentation>) {
              return format(normal_form(parse_polynomial(expr, P.gens), P.system()), P.gens);
            } else if constexpr (std::is_same_v<T, DialgebraPresentation>) {
              auto S = P.system();
              return format(di_reduce(parse_dipolynomial(expr, S.alphabet()), S), S.alphabet());
            } else if constexpr (std::is_same_v<T, ModulePresentation>) {
              auto S = P.system();
              auto A = P.algebra();
              auto p = parse_module_element(expr, S.order());
              return format(module_normal_form(p, S, A.empty() ? nullptr : &A), S.order());
            } else {
              return format(ac_normal_form(parse_ac_polynomial(expr, P.gens), P.system()), P.gens);
            }
          },
          file);
      header(out, "nf", file);
      out << "nf: " << result << "\n";
      return exit_ok;
    }

    struct CompleteOptions {
      std::size_t max_deg   = 0;
      std::size_t max_elems = 0;
      std::optional<double> timeout;
      std::string out_path;
    };

    inline int complete(PresentationFile const& file, CompleteOptions const& o, std::ostream& out) {
      auto const* P = std::get_if<AssocPresentation>(&file);
      if (!P) throw std::invalid_argument("complete works on kind assoc only");
      std::optional<std::chrono::steady_clock::duration> budget;
      if (o.timeout) {
        budget = std::chrono::duration_cast<std::chrono::steady_clock::duration>(std::chrono::duration<double>(*o.timeout));
      }
      auto rep = shirshov_complete(P->system(), o.max_deg, o.max_elems, budget);
      header(out, "complete", file);
      out << "max_deg: " << o.max_deg << "\n"
          << "max_elems: " << o.max_elems << "\n"
          << "status: " << to_string(rep.status) << "\n"
          << "iterations: " << rep.iterations << "\n"
          << "added: " << rep.added << "\n"
          << "elements: " << rep.basis.size() << "\n";
      for (auto const& s : rep.basis.elements()) out << "  " << format(s, P->gens) << "\n";
      if (!o.out_path.empty()) {
        std::ofstream f(o.out_path);
        if (!f) throw std::runtime_error("cannot write " + o.out_path);
        f << print(AssocPresentation{P->gens, rep.basis.elements()});
      }
      switch (rep.status) {
        case CompletionStatus::completed: return exit_ok;
        case CompletionStatus::time_capped: return exit_resource;
        default: return exit_false;
      }
    }

    struct CatalogOptions {
      bool check = false;
      std::optional<std::size_t> irr;
      bool count_only = false;
      std::string nf;
    };

    inline int catalog(char const* name, RewriteSystem const& S, CatalogOptions const& o, std::ostream& out) {
      AssocPresentation const P{S.alphabet(), S.elements()};
      int code = exit_ok;
      if (o.check) {
        header(out, "check");
        out << "preset: " << name << "\n";
        code = std::max(code, check_assoc(S, std::nullopt, out));
      }
      if (o.irr) {
        header(out, "irr");
        out << "preset: " << name << "\n"
            << "max_len: " << *o.irr << "\n";
        irr_assoc(S, *o.irr, o.count_only, out);
      }
      if (!o.nf.empty()) {
        auto const r = format(normal_form(parse_polynomial(o.nf, P.gens), S), P.gens);
        header(out, "nf");
        out << "preset: " << name << "\n"
            << "nf: " << r << "\n";
      }
      if (!o.check && !o.irr && o.nf.empty()) out << print(P);
      return code;
    }

  }  // namespace detail

  // Runs one command line (without the program name). Results go to out,
  // diagnostics to err.
  inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Groebner-Shirshov bases: checks, completion and normal forms"};
    app.name("gsb");
    app.require_subcommand(1);

    std::string path;
    std::optional<std::size_t> check_deg;
    auto* check = app.add_subcommand("check", "Composition check (bounded for dialgebras)");
    check->add_option("file", path, "Presentation file")->required();
    check->add_option("--max-deg", check_deg, "Only compositions with ambient degree <= N");

    detail::CompleteOptions co;
    auto* complete = app.add_subcommand("complete", "Bounded Shirshov completion (kind assoc)");
    complete->add_option("file", path, "Presentation file")->required();
    complete->add_option("--max-deg", co.max_deg, "Degree cap")->required();
    complete->add_option("--max-elems", co.max_elems, "Element cap")->required();
    complete->add_option("--out", co.out_path, "Write the resulting basis as a presentation file");
    complete->add_option("--timeout", co.timeout, "Wall-clock budget in seconds");

    std::string elem;
    auto* nf = app.add_subcommand("nf", "Normal form of an element");
    nf->add_option("file", path, "Presentation file")->required();
    nf->add_option("--elem", elem, "Element in presentation syntax")->required();

    std::size_t max_len = 0;
    bool count_only     = false;
    auto* irr = app.add_subcommand("irr", "Irreducible words up to a length");
    irr->add_option("file", path, "Presentation file")->required();
    irr->add_option("--max-len", max_len, "Length bound")->required();
    irr->add_flag("--count-only", count_only, "Print counts only");

    std::size_t cd_deg = 0;
    auto* cdcheck = app.add_subcommand("cdcheck", "Bounded comparison of the three basis conditions");
    cdcheck->add_option("file", path, "Presentation file")->required();
    cdcheck->add_option("--max-deg", cd_deg, "Degree bound")->required();

    detail::CatalogOptions cat;
    std::size_t rank = 0, nx = 0, ny = 0;
    auto* catalog = app.add_subcommand("catalog", "Built-in presentations");
    catalog->require_subcommand(1);
    auto* chinese = catalog->add_subcommand("chinese", "Chinese monoid basis");
    chinese->add_option("--rank", rank, "Number of generators")->required();
    auto* tensor = catalog->add_subcommand("tensor", "Tensor product of free algebras");
    tensor->add_option("--nx", nx, "Generators of the first factor")->required();
    tensor->add_option("--ny", ny, "Generators of the second factor")->required();
    for (auto* sub : {chinese, tensor}) {
      sub->add_flag("--check", cat.check, "Run the composition check");
      sub->add_option("--irr", cat.irr, "List irreducible words up to this length");
      sub->add_flag("--count-only", cat.count_only, "With --irr, print counts only");
      sub->add_option("--nf", cat.nf, "Normal form of an element");
    }

    std::reverse(args.begin(), args.end());
    try {
      app.parse(std::move(args));
    } catch (CLI::ParseError const& e) {
      int const code = app.exit(e, out, err);
      return code == 0 ? exit_ok : exit_parse;
    }

    try {
      if (catalog->parsed()) {
        if (chinese->parsed()) return detail::catalog("chinese", catalog::chinese_gsb(rank), cat, out);
        return detail::catalog("tensor", catalog::tensor_relations(nx, ny), cat, out);
      }
      auto const file = io::parse_file(path);
      if (check->parsed()) return detail::check(file, check_deg, out);
      if (complete->parsed()) return detail::complete(file, co, out);
      if (nf->parsed()) return detail::nf(file, elem, out);
      if (irr->parsed()) return detail::irr(file, max_len, count_only, out);
      return detail::cdcheck(file, cd_deg, out);
    } catch (ParseError const& e) {
      err << "parse error: " << e.what() << "\n";
      return exit_parse;
    } catch (ResourceLimit const& e) {
      err << "resource limit exceeded: " << e.what() << "\n";
      return exit_resource;
    } catch (std::bad_alloc const&) {
      err << "resource limit exceeded: out of memory\n";
      return exit_resource;
    } catch (std::exception const& e) {
      err << "error: " << e.what() << "\n";
      return exit_parse;
    }
  }

}  // namespace gsb::cli
