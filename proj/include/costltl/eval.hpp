#ifndef COSTLTL_EVAL_HPP_
#define COSTLTL_EVAL_HPP_

#include <cstddef>
#include <cstdint>

#include "core.hpp"
#include "formula.hpp"

namespace costltl {

  //! (u, n, i) |= phi, for 0 <= i <= |u|; position |u| is the end of the word.
  //!
  //! U#: some j >= i satisfies the right operand and the left operand fails
  //! at most n times in [i, j).
  //! R#: every j >= i (up to |u|) satisfies the right operand or sees the left
  //! operand at least n times in [i, j).
  bool models(Word const& u, std::uint64_t n, Formula const& phi,
              std::size_t i = 0);

  //! inf { n : (u, n) |= phi }. Requires a formula without R#.
  CostValue sem_inf(Formula const& phi, Word const& u);

  //! sup { n : (u, n) |= phi }, with sup of the empty set being 0. Requires a
  //! formula without U#.
  CostValue sem_sup(Formula const& phi, Word const& u);

}  // namespace costltl

#endif  // COSTLTL_EVAL_HPP_
