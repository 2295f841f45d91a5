#ifndef COSTLTL_FORMULA_HPP_
#define COSTLTL_FORMULA_HPP_

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "core.hpp"

namespace costltl {

  enum class Kind : std::uint8_t {
    atom,
    end,
    conj,
    disj,
    next,
    until,
    until_leq,   // U#
    release_geq  // R#
  };

  struct Node;
  using NodePtr = std::shared_ptr<Node const>;

  struct Node {
    Kind    kind;
    Letter  letter = 0;  // atom only
    NodePtr left;        // also the operand of next
    NodePtr right;
  };

  namespace node {
    NodePtr atom(Letter a);
    NodePtr end();
    NodePtr conj(NodePtr l, NodePtr r);
    NodePtr disj(NodePtr l, NodePtr r);
    NodePtr next(NodePtr x);
    NodePtr until(NodePtr l, NodePtr r);
    NodePtr until_leq(NodePtr l, NodePtr r);
    NodePtr release_geq(NodePtr l, NodePtr r);
  }  // namespace node

  //! Structural comparison, a total order on trees.
  int  compare(Node const& x, Node const& y) noexcept;
  bool equal(NodePtr const& x, NodePtr const& y) noexcept;
  //! Node count.
  std::size_t size(Node const& x) noexcept;
  std::size_t depth(Node const& x) noexcept;
  bool        is_binary(Kind k) noexcept;

  class Formula {
   public:
    Formula(Alphabet alphabet, NodePtr root);

    Alphabet const& alphabet() const noexcept {
      return _alphabet;
    }
    NodePtr const& root() const noexcept {
      return _root;
    }

    bool contains(Kind k) const noexcept;
    //! No R#.
    bool is_ltl() const noexcept {
      return !contains(Kind::release_geq);
    }
    //! No U#.
    bool is_nltl() const noexcept {
      return !contains(Kind::until_leq);
    }

    bool operator==(Formula const& that) const noexcept {
      return _alphabet == that._alphabet && equal(_root, that._root);
    }

   private:
    Alphabet _alphabet;
    NodePtr  _root;
  };

  //! Sugar, expanded over `alphabet`.
  NodePtr negate_letter(Alphabet const& alphabet, Letter a);
  NodePtr some_letter(Alphabet const& alphabet);
  NodePtr top(Alphabet const& alphabet);
  NodePtr bottom(Alphabet const& alphabet);

  Formula     parse(std::string_view text, Alphabet const& alphabet);
  std::string render(Node const& x);
  std::string render(Formula const& f);

  //! Distinct subformulae, in pre-order of first occurrence.
  std::vector<NodePtr> subformulas(Formula const& f);

  //! The distinct U# and R# subformulae in pre-order of first occurrence;
  //! counter j of the translations belongs to entry j.
  std::vector<NodePtr> counted_subformulas(Formula const& f);

  //! Negation pushed to the leaves. Throws DomainError on an R# input.
  Formula dualize(Formula const& f);

}  // namespace costltl

#endif  // COSTLTL_FORMULA_HPP_
