#ifndef COSTLTL_ERROR_HPP_
#define COSTLTL_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace costltl {

  //! Base class of every exception thrown by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  //! An argument lies outside the domain of an operation (letter not in the
  //! alphabet, sharp of a non-idempotent, empty word where A+ is required...).
  class DomainError : public Error {
   public:
    using Error::Error;
  };

  //! Malformed textual input. `position` is a byte offset (formulae) or a
  //! line number (files), as stated by the thrower.
  class SyntaxError : public Error {
   public:
    SyntaxError(std::string const& what, std::size_t position)
        : Error(what + " (at " + std::to_string(position) + ")"),
          _position(position) {}

    std::size_t position() const noexcept {
      return _position;
    }

   private:
    std::size_t _position;
  };

  //! A search or closure exceeded its configured size limit.
  class ResourceError : public Error {
   public:
    using Error::Error;
  };

}  // namespace costltl

#endif  // COSTLTL_ERROR_HPP_
