#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace gsb {

  // Exact rational coefficients. mpq_class keeps values canonical after
  // arithmetic; make_scalar canonicalizes explicit fractions.
  using Scalar = mpq_class;

  inline Scalar make_scalar(long num, long den = 1) {
    if (den == 0) {
      throw std::domain_error("zero denominator");
    }
    Scalar q(num, den);
    q.canonicalize();
    return q;
  }

  inline Scalar parse_scalar(std::string const& text) {
    Scalar q;
    if (q.set_str(text, 10) != 0 || q.get_den() == 0) {
      throw std::invalid_argument("not a rational number: " + text);
    }
    q.canonicalize();
    return q;
  }

  inline std::string to_string(Scalar const& q) {
    return q.get_str();
  }

}  // namespace gsb
