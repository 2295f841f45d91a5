#ifndef COSTLTL_IO_HPP_
#define COSTLTL_IO_HPP_

#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "automata.hpp"
#include "semigroup.hpp"

namespace costltl {

  //! First line of every file.
  inline constexpr char const* kFormatHeader = "costltl-format 1";

  // Line-oriented formats. Blank lines and lines starting with '#' are
  // ignored. SyntaxError positions are line numbers, starting at 1.
  //
  //   costltl-format 1
  //   kind B
  //   alphabet ab
  //   counters 1
  //   states q0 q1
  //   initial q0
  //   final q1
  //   note q0 free text
  //   transition q0 a q1 | ic r
  //
  // One "| seq" group per counter; an empty sequence is written "e".
  CostAutomaton read_automaton(std::istream& in);
  CostAutomaton load_automaton(std::string const& path);
  std::string   write_automaton(CostAutomaton const& aut);

  //   costltl-format 1
  //   elements bot a b
  //   product
  //   bot bot bot
  //   bot a a
  //   bot a b
  //   order bot<=a a<=b
  //   sharp bot:bot a:bot b:b
  //   neutral b
  //
  // A recognizer adds:
  //   alphabet ab
  //   h a:a b:b
  //   ideal bot
  //   height 9
  struct SemigroupFile {
    StabSemigroup             sg;
    std::optional<Recognizer> rec;
  };

  SemigroupFile read_semigroup(std::istream& in);
  SemigroupFile load_semigroup(std::string const& path);
  std::string   write_semigroup(StabSemigroup const& sg);
  std::string   write_recognizer(Recognizer const& rec);

  //   costltl-format 1
  //   alphabet ab
  //   formula (b | X a | X F a) U# END
  //
  // Formula texts are kept verbatim.
  struct FormulaFile {
    Alphabet                 alphabet;
    std::vector<std::string> formulas;
  };

  FormulaFile read_formulas(std::istream& in);
  FormulaFile load_formulas(std::string const& path);
  std::string write_formulas(FormulaFile const& file);

}  // namespace costltl

#endif  // COSTLTL_IO_HPP_
