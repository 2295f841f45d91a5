#ifndef COSTLTL_TRANSLATE_HPP_
#define COSTLTL_TRANSLATE_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "automata.hpp"
#include "formula.hpp"

namespace costltl {

  //! Formula kinds of the translations: the AST kinds plus a weak next, which
  //! also holds at the end of the word. It carries R# obligations forward.
  enum class TKind : std::uint8_t {
    atom,
    end,
    conj,
    disj,
    next,
    until,
    until_leq,
    release_geq,
    weak_next
  };

  //! Hash-consed formulae; equal subtrees get equal ids.
  class FormulaTable {
   public:
    struct Entry {
      TKind       kind;
      Letter      letter;
      std::size_t left;
      std::size_t right;
      std::size_t size;
    };

    explicit FormulaTable(Formula const& phi);

    std::size_t intern(NodePtr const& x);
    std::size_t intern(TKind k, std::size_t child);  // next and weak_next

    Entry const& operator[](std::size_t id) const {
      return _entries[id];
    }
    std::size_t size() const noexcept {
      return _entries.size();
    }
    std::size_t root() const noexcept {
      return _root;
    }
    std::size_t counters() const noexcept {
      return _counters.size();
    }
    //! The counter of a U# or R# entry.
    std::optional<std::size_t> counter(std::size_t id) const;
    //! Reduced entries are atoms, END, and the two nexts.
    bool is_reduced(std::size_t id) const;
    //! Throws DomainError on a weak next.
    NodePtr     node(std::size_t id) const;
    std::string render(std::size_t id) const;

   private:
    std::size_t make(TKind k, Letter a, std::size_t l, std::size_t r);

    std::vector<Entry>                                      _entries;
    std::map<std::tuple<TKind, Letter, std::size_t, std::size_t>, std::size_t>
                                                            _ids;
    std::map<std::size_t, std::size_t>                      _counters;
    std::size_t                                             _root;
  };

  //! A set of formula ids, sorted.
  using PseudoState = std::vector<std::size_t>;

  struct ClosureEnd {
    PseudoState        members;
    std::vector<OpSeq> actions;  // one sequence per counter

    auto operator<=>(ClosureEnd const&) const = default;
  };

  std::string render(FormulaTable const& table, PseudoState const& y);

  //! Strips one next from each next member and drops the rest.
  PseudoState next_state(FormulaTable const& table, PseudoState const& z);

  //! All reduced consistent endpoints of the reduction chains from `y`,
  //! each with its combined actions. The largest non-reduced member is
  //! reduced first, ties going to the smallest id.
  std::vector<ClosureEnd> epsilon_closure(FormulaTable& table,
                                          PseudoState const& y,
                                          Polarity           polarity);

  //! Endpoints usable at the end of the word: no letter, no strong next.
  std::vector<ClosureEnd> end_closure(FormulaTable& table, PseudoState const& y,
                                      Polarity polarity);

  struct Compiled {
    CostAutomaton aut;
    FormulaTable  table;
    //! Formula set of every state; empty for the added S end state.
    std::vector<PseudoState> contents;
  };

  Compiled      compile_b(Formula const& phi);
  Compiled      compile_s(Formula const& phi);
  CostAutomaton ltl_to_b(Formula const& phi);
  CostAutomaton nltl_to_s(Formula const& phi);

  //! The value of the empty word, read off the closure of the initial state.
  CostValue accept_epsilon_value(Formula const& phi, Polarity polarity);

}  // namespace costltl

#endif  // COSTLTL_TRANSLATE_HPP_
