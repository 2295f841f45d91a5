#ifndef COSTLTL_MINIMIZE_HPP_
#define COSTLTL_MINIMIZE_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "semigroup.hpp"

namespace costltl {

  //! A total self-map of the elements, s -> map[s].
  using ContextFunction = std::vector<Elem>;

  //! The composition-closed set generated by the identity, the left and
  //! right multiplications, and s -> (s^w)#. Throws ResourceError beyond
  //! `limit` maps.
  std::vector<ContextFunction> context_closure(StabSemigroup const& sg,
                                               std::size_t limit = 1000000);

  //! The recognizer restricted to the elements generated by h(A).
  Recognizer restrict_to_generated(Recognizer const& rec);

  struct Quotient {
    Recognizer rec;
    //! Class of every element of the input, or nullopt when the element is
    //! not generated by h(A).
    std::vector<std::optional<Elem>> class_of;
  };

  //! The minimal stabilization semigroup of the recognized function.
  //! Elements are identified when no context separates them with respect
  //! to the ideal. Throws DomainError when the induced order is not
  //! antisymmetric or when sharp is not well defined on classes.
  Quotient syntactic_quotient(Recognizer const& rec);

  struct AperiodicReport {
    bool                aperiodic;
    std::size_t         k = 0;  // least k with s^(k+1) = s^k for all s
    std::optional<Elem> witness;  // an element with s^(|S|+1) != s^|S|
  };

  AperiodicReport is_aperiodic(StabSemigroup const& sg);

  bool is_ltl_definable(Recognizer const& rec);

}  // namespace costltl

#endif  // COSTLTL_MINIMIZE_HPP_
