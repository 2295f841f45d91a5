#ifndef COSTLTL_BOUNDED_HPP_
#define COSTLTL_BOUNDED_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "actions.hpp"
#include "automata.hpp"
#include "formula.hpp"
#include "semigroup.hpp"

namespace costltl {

  //! A transition with its action sequences composed in the S-action
  //! semigroup. The letter and the index of the original transition are kept
  //! for witnesses only.
  struct ContractedTransition {
    std::size_t from;
    SActionVec  action;
    std::size_t to;
    Letter      letter;
    std::size_t origin;
  };

  //! Per (from, to) pair, only the minimal actions are kept.
  std::vector<ContractedTransition> contracted_transitions(
      CostAutomaton const& aut);

  //! A pumpable path: transitions, with nested cycles to be repeated.
  struct Witness {
    struct Item {
      std::optional<std::size_t> transition;  // index in the automaton
      std::vector<Item>          cycle;       // used when no transition
    };
    std::vector<Item> items;

    //! The word read when every cycle is taken n times.
    Word pump(CostAutomaton const& aut, std::uint64_t n) const;
    std::string describe(CostAutomaton const& aut) const;
  };

  struct BoundedReport {
    bool                   bounded;
    std::optional<Witness> witness;  // for unbounded verdicts
    std::size_t            explored = 0;
  };

  //! Search over memories of at most |counters|+2 frames; each frame is an
  //! action accumulated since a control point, the last frame ending at the
  //! current state.
  BoundedReport bounded_onthefly(CostAutomaton const& aut);

  struct RunSemigroup {
    //! One antichain of minimal actions per (from, to) pair, flattened.
    using Element = std::vector<std::vector<SActionVec>>;

    std::vector<Element>    elements;
    std::vector<std::size_t> depth;  // nested stabilizations used
    bool                    unbounded = false;
  };

  struct ClosureOptions {
    //! Stop applying sharp beyond this nesting depth.
    std::optional<std::size_t> max_depth;
    std::size_t                max_elements = 20000;
  };

  //! The elements generated by the letter images under product and
  //! stabilization. Elements are upward closed sets of partial runs, kept as
  //! their minimal actions. Throws ResourceError past max_elements.
  RunSemigroup run_semigroup_closure(CostAutomaton const& aut,
                                     ClosureOptions const& opts = {});

  //! The closure as a recognizer: its ideal holds the elements containing
  //! an accepting run with no component in {cr, cromega, bot}.
  Recognizer run_semigroup_recognizer(CostAutomaton const& aut,
                                      ClosureOptions const& opts = {});

  //! Pipeline: dual formula, S translation, on-the-fly search.
  BoundedReport bounded_formula(Formula const& phi);

}  // namespace costltl

#endif  // COSTLTL_BOUNDED_HPP_
