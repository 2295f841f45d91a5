#ifndef COSTLTL_AUTOMATA_HPP_
#define COSTLTL_AUTOMATA_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "actions.hpp"
#include "core.hpp"

namespace costltl {

  enum class Polarity : std::uint8_t { B, S };

  struct Transition {
    std::size_t        from;
    Letter             letter;
    std::size_t        to;
    std::vector<OpSeq> actions;  // one sequence per counter
  };

  //! A B- or S-automaton with counters. Counters are numbered 0..k-1 here
  //! and 1..k in files.
  struct CostAutomaton {
    Polarity                 polarity = Polarity::B;
    Alphabet                 alphabet;
    std::vector<std::string> states;
    //! Free text shown as a comment next to each state when saved.
    std::vector<std::string> notes;
    std::vector<std::size_t> initial;
    std::vector<std::size_t> final;
    std::size_t              counters = 0;
    std::vector<Transition>  transitions;

    std::size_t add_state(std::string name, std::string note = "");
    //! Throws DomainError for an unknown name.
    std::size_t state_index(std::string const& name) const;
    bool        is_initial(std::size_t q) const;
    bool        is_final(std::size_t q) const;
  };

  //! Every structural violation, one message each; empty iff well formed.
  std::vector<std::string> validate(CostAutomaton const& aut);
  //! Throws DomainError listing the diagnostics, if any.
  void check(CostAutomaton const& aut);

  //! inf over accepting runs of the largest checked value; inf if none.
  CostValue eval_b(CostAutomaton const& aut, Word const& u);
  //! sup over accepting runs of the least checked value; 0 if none.
  CostValue eval_s(CostAutomaton const& aut, Word const& u);
  CostValue evaluate(CostAutomaton const& aut, Word const& u);

  //! An accepting run of a B-automaton whose checked values stay <= n, as
  //! the indices of its transitions.
  std::optional<std::vector<std::size_t>> b_run_within(CostAutomaton const& aut,
                                                       Word const&          u,
                                                       std::uint64_t        n);

  //! Replaces each action sequence by its maximum; K is the largest value
  //! of a single sequence run from 0.
  std::pair<CostAutomaton, std::uint64_t> contract_b(CostAutomaton const& aut);

}  // namespace costltl

#endif  // COSTLTL_AUTOMATA_HPP_
