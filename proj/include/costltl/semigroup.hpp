#ifndef COSTLTL_SEMIGROUP_HPP_
#define COSTLTL_SEMIGROUP_HPP_

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "core.hpp"

namespace costltl {

  using Elem = std::size_t;

  //! A finite semigroup with a partial order and a stabilization operation
  //! defined on (some) idempotents. The constructor only checks shapes; the
  //! axioms are checked by validate_axioms.
  class StabSemigroup {
   public:
    StabSemigroup() = default;
    //! `order` lists pairs x <= y; its reflexive-transitive closure is taken.
    StabSemigroup(std::vector<std::string>              names,
                  std::vector<std::vector<Elem>>        product,
                  std::vector<std::pair<Elem, Elem>>    order,
                  std::vector<std::optional<Elem>>      sharp,
                  std::optional<Elem>                   neutral = std::nullopt);

    std::size_t size() const noexcept {
      return _names.size();
    }
    std::string const& name(Elem x) const {
      return _names[x];
    }
    std::vector<std::string> const& names() const noexcept {
      return _names;
    }
    //! Throws DomainError for an unknown name.
    Elem index_of(std::string_view name) const;

    Elem product(Elem x, Elem y) const {
      return _product[x * size() + y];
    }
    bool leq(Elem x, Elem y) const {
      return _leq[x * size() + y];
    }
    bool has_sharp(Elem x) const {
      return _sharp[x].has_value();
    }
    //! Throws DomainError where undefined.
    Elem sharp(Elem x) const;
    std::optional<Elem> const& sharp_entry(Elem x) const {
      return _sharp[x];
    }
    bool is_idempotent(Elem x) const {
      return product(x, x) == x;
    }
    std::optional<Elem> neutral() const noexcept {
      return _neutral;
    }
    //! Covering pairs of the order, for printing.
    std::vector<std::pair<Elem, Elem>> hasse() const;

   private:
    std::vector<std::string>         _names;
    std::vector<Elem>                _product;
    std::vector<bool>                _leq;
    std::vector<std::optional<Elem>> _sharp;
    std::optional<Elem>              _neutral;
  };

  //! Every violated axiom, one message each; empty iff the structure is a
  //! stabilization semigroup (monoid if a neutral element is declared).
  std::vector<std::string> validate_axioms(StabSemigroup const& sg);

  //! The idempotent power of s.
  Elem idempotent_power(StabSemigroup const& sg, Elem s);

  //! Componentwise product; pairs are named "x,y".
  StabSemigroup direct_product(StabSemigroup const& x, StabSemigroup const& y);

  //! Elements generated by `seeds` under product and stabilization.
  std::vector<Elem> generated(StabSemigroup const&  sg,
                              std::span<Elem const> seeds);

  struct Recognizer {
    StabSemigroup     sg;
    Alphabet          alphabet;
    std::vector<Elem> h;      // indexed like alphabet.letters()
    std::vector<bool> ideal;  // indexed by element
    std::size_t       height = 0;

    Elem image(Letter a) const {
      return h[alphabet.index_of(a)];
    }
  };

  //! 3|S|.
  std::size_t default_height(StabSemigroup const& sg);

  //! Shape checks plus downward closure of the ideal.
  std::vector<std::string> validate(Recognizer const& rec);

  //! Values of the n-trees of height <= rec.height over w, sorted. Leaves
  //! have height 0. Idempotent nodes have 2..n children; stabilization nodes
  //! have more than n children, and at least one.
  std::vector<Elem> achievable_values(Recognizer const&     rec,
                                      std::span<Elem const> w,
                                      std::uint64_t         n);

  //! Least n at which no tree value lies in the ideal; inf if there is none.
  //! Throws DomainError on the empty word.
  CostValue recognize(Recognizer const& rec, Word const& u);

  ////////////////////////////////////////////////////////////////////////
  // Expressions
  ////////////////////////////////////////////////////////////////////////

  struct Expr;
  using ExprPtr = std::shared_ptr<Expr const>;

  struct Expr {
    enum class Op : std::uint8_t { letter, concat, omega, omega_sharp, sharp };
    Op      op;
    Letter  letter = 0;
    ExprPtr left;  // also the operand of the unary operators
    ExprPtr right;
  };

  //! Letters, parentheses, juxtaposition, and the postfix operators ^w, ^w#
  //! and ^#. Example: "a(ab)^w#b".
  ExprPtr     parse_expr(std::string_view text, Alphabet const& alphabet);
  std::string render(Expr const& e);

  //! Neither omega nor omega-sharp.
  bool is_sharp_expr(Expr const& e);
  //! No bare sharp.
  bool is_omega_sharp_expr(Expr const& e);

  //! Throws DomainError "not well-formed" when a bare sharp meets a
  //! non-idempotent element.
  Elem eval_expr(StabSemigroup const& sg, std::span<Elem const> h,
                 Alphabet const& alphabet, Expr const& e);
  Elem eval_expr(Recognizer const& rec, Expr const& e);

  //! Omega becomes k repetitions, sharp n repetitions, omega-sharp k*n.
  Word instantiate(Expr const& e, std::uint64_t k, std::uint64_t n);

  enum class ExprClass : std::uint8_t { bounded, divergent };
  std::string to_string(ExprClass c);

  //! divergent iff the value lies in the ideal.
  ExprClass classify(Recognizer const& rec, Expr const& e);

}  // namespace costltl

#endif  // COSTLTL_SEMIGROUP_HPP_
