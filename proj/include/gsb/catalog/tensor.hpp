#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "gsb/rewrite/rewrite_system.hpp"

namespace gsb::catalog {

  // x1 < ... < x_nx < y1 < ... < y_ny: every y is greater than every x.
  inline Alphabet tensor_alphabet(std::size_t nx, std::size_t ny) {
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= nx; ++i) {
      names.push_back("x" + std::to_string(i));
    }
    for (std::size_t i = 1; i <= ny; ++i) {
      names.push_back("y" + std::to_string(i));
    }
    return Alphabet(std::move(names));
  }

  // The commutation relations yx = xy presenting k<X> (x) k<Y>.
  inline RewriteSystem tensor_relations(std::size_t nx, std::size_t ny) {
    if (nx < 1 || ny < 1) {
      throw std::invalid_argument("tensor_relations: both alphabets must be nonempty");
    }
    std::vector<Polynomial> rels;
    for (Letter y = 0; y < ny; ++y) {
      for (Letter x = 0; x < nx; ++x) {
        Letter const yy = static_cast<Letter>(nx) + y;
        Polynomial p(Word{yy, x});
        p.add_term(Word{x, yy}, Scalar(-1));
        rels.push_back(std::move(p));
      }
    }
    return RewriteSystem(DegLexOrder(tensor_alphabet(nx, ny)), std::move(rels));
  }

  // Whether every x-letter precedes every y-letter.
  inline bool is_xy_shaped(Word const& w, std::size_t nx) {
    bool seen_y = false;
    for (Letter l : w) {
      if (l >= nx) {
        seen_y = true;
      } else if (seen_y) {
        return false;
      }
    }
    return true;
  }

}  // namespace gsb::catalog
