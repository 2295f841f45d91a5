#ifndef COSTLTL_BATCH_HPP_
#define COSTLTL_BATCH_HPP_

#include <span>
#include <vector>

#include "automata.hpp"
#include "core.hpp"
#include "formula.hpp"
#include "semigroup.hpp"

namespace costltl {

  // Word-parallel evaluation. Every kernel is a pure function of one word,
  // so the parallel versions return exactly the serial results, in order.

  enum class Execution : std::uint8_t { serial, parallel };

  std::vector<CostValue> sem_inf_batch(Formula const&        phi,
                                       std::span<Word const> words,
                                       Execution exec = Execution::parallel);
  std::vector<CostValue> sem_sup_batch(Formula const&        phi,
                                       std::span<Word const> words,
                                       Execution exec = Execution::parallel);
  std::vector<CostValue> evaluate_batch(CostAutomaton const&  aut,
                                        std::span<Word const> words,
                                        Execution exec = Execution::parallel);
  //! Empty words are not allowed, as in recognize.
  std::vector<CostValue> recognize_batch(Recognizer const&     rec,
                                         std::span<Word const> words,
                                         Execution exec = Execution::parallel);

}  // namespace costltl

#endif  // COSTLTL_BATCH_HPP_
