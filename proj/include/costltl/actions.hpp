#ifndef COSTLTL_ACTIONS_HPP_
#define COSTLTL_ACTIONS_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "core.hpp"

namespace costltl {

  //! Atomic counter actions. B-automata use e, ic, r; S-automata use e, i,
  //! r, cr.
  enum class CounterOp : std::uint8_t { e, ic, r, i, cr };

  using OpSeq = std::vector<CounterOp>;

  bool        is_b_op(CounterOp op) noexcept;
  bool        is_s_op(CounterOp op) noexcept;
  std::string to_string(CounterOp op);
  CounterOp   parse_counter_op(std::string_view token);
  //! Space separated tokens; the empty sequence prints as "e".
  std::string to_string(OpSeq const& seq);
  OpSeq       parse_op_seq(std::string_view text);

  struct BSeqResult {
    std::uint64_t value;  // largest checked value, 0 if nothing was checked
    std::uint64_t final;
  };

  //! Runs a B sequence on one counter starting at `start`.
  BSeqResult b_seq_value(OpSeq const& seq, std::uint64_t start = 0);

  //! The largest action of the sequence for e < ic < r; e if empty.
  CounterOp contract_max(OpSeq const& seq);

  ////////////////////////////////////////////////////////////////////////
  // The seven element semigroup of S-actions
  ////////////////////////////////////////////////////////////////////////

  enum class SElem : std::uint8_t { omega, i, e, r, cromega, cr, bot };

  inline constexpr std::size_t kSElemCount = 7;
  inline constexpr std::array<SElem, kSElemCount> kSElems
      = {SElem::omega, SElem::i,  SElem::e,  SElem::r,
         SElem::cromega, SElem::cr, SElem::bot};

  //! "omega", "i", "e", "r", "cromega", "cr", "bot".
  std::string to_string(SElem x);
  SElem       parse_selem(std::string_view name);

  SElem s_product(SElem x, SElem y) noexcept;
  bool  s_sharp_defined(SElem x) noexcept;
  //! Throws DomainError on cr.
  SElem s_sharp(SElem x);
  bool  s_leq(SElem x, SElem y) noexcept;

  //! e -> e, i -> i, r -> r, cr -> cr. Throws DomainError on ic.
  SElem atomic_s_to_elem(CounterOp op);
  //! Product of the embeddings, e for the empty sequence.
  SElem compose_s(OpSeq const& seq);

  //! One component per counter.
  using SActionVec = std::vector<SElem>;

  SActionVec s_neutral(std::size_t counters);
  SActionVec s_product(SActionVec const& x, SActionVec const& y);
  bool       s_sharp_defined(SActionVec const& x) noexcept;
  SActionVec s_sharp(SActionVec const& x);
  bool       s_leq(SActionVec const& x, SActionVec const& y) noexcept;
  //! No component in {cr, cromega, bot}.
  bool        s_is_good(SActionVec const& x) noexcept;
  std::string to_string(SActionVec const& x);

}  // namespace costltl

#endif  // COSTLTL_ACTIONS_HPP_
