#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gsb {

  // Base class of every exception thrown by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // A letter index outside of the ambient alphabet.
  class InvalidWord : public Error {
   public:
    using Error::Error;
  };

  // Leading term requested from the zero element.
  class NoLeadingTerm : public Error {
   public:
    NoLeadingTerm() : Error("the zero element has no leading term") {}
  };

  class DimensionMismatch : public Error {
   public:
    using Error::Error;
  };

  // A degree/length bound that is too small for the requested check.
  class BoundTooSmall : public Error {
   public:
    using Error::Error;
  };

  // A relation that cannot live in a rewrite system (zero, or a constant
  // leading term that would collapse the quotient).
  class InvalidRelation : public Error {
   public:
    using Error::Error;
  };

  // Structure constants that violate the Leibniz identity.
  class InvalidAlgebra : public Error {
   public:
    using Error::Error;
  };

  class ParseError : public Error {
   public:
    ParseError(std::string const& msg, std::size_t line, std::size_t column)
        : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
          line_(line),
          column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

   private:
    std::size_t line_;
    std::size_t column_;
  };

}  // namespace gsb
