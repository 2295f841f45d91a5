#ifndef COSTLTL_CORE_HPP_
#define COSTLTL_CORE_HPP_

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"

namespace costltl {

  //! An element of N u {inf}, ordered 0 < 1 < ... < inf.
  //!
  //! Infinity is a distinct state, never a sentinel integer.
  class CostValue {
   public:
    constexpr CostValue() noexcept = default;
    constexpr CostValue(std::uint64_t n) noexcept  // NOLINT(runtime/explicit)
        : _finite(true), _value(n) {}

    static constexpr CostValue infinity() noexcept {
      CostValue v;
      v._finite = false;
      return v;
    }

    constexpr bool is_finite() const noexcept {
      return _finite;
    }
    constexpr bool is_infinite() const noexcept {
      return !_finite;
    }

    //! Throws DomainError on infinity.
    std::uint64_t value() const;

    constexpr bool operator==(CostValue const& o) const noexcept {
      return _finite == o._finite && (!_finite || _value == o._value);
    }

    constexpr std::strong_ordering operator<=>(
        CostValue const& o) const noexcept {
      if (!_finite || !o._finite) {
        return static_cast<int>(!_finite) <=> static_cast<int>(!o._finite);
      }
      return _value <=> o._value;
    }

    std::string to_string() const;

   private:
    bool          _finite = true;
    std::uint64_t _value  = 0;
  };

  std::ostream& operator<<(std::ostream&, CostValue const&);

  constexpr CostValue min(CostValue a, CostValue b) noexcept {
    return b < a ? b : a;
  }
  constexpr CostValue max(CostValue a, CostValue b) noexcept {
    return a < b ? b : a;
  }

  //! Parses "inf" or a decimal natural.
  CostValue parse_cost_value(std::string_view text);

  using Letter = char32_t;
  using Word   = std::u32string;

  //! A nonempty finite set of distinct letters, kept in declaration order.
  class Alphabet {
   public:
    Alphabet() = default;
    explicit Alphabet(std::vector<Letter> letters);
    //! Letters given as a UTF-8 string, one code point per letter.
    static Alphabet from_string(std::string_view utf8);

    std::vector<Letter> const& letters() const noexcept {
      return _letters;
    }
    std::size_t size() const noexcept {
      return _letters.size();
    }
    bool contains(Letter a) const noexcept;
    //! Position of `a` in declaration order; throws DomainError if absent.
    std::size_t index_of(Letter a) const;
    //! Throws DomainError naming the first letter outside the alphabet.
    void check_word(Word const& u) const;

    std::string to_string() const;

    bool operator==(Alphabet const&) const = default;

   private:
    std::vector<Letter> _letters;
  };

  std::string to_utf8(Letter a);
  std::string to_utf8(Word const& u);
  //! Decodes UTF-8. The two-character spelling `""` denotes the empty word.
  Word word_from_utf8(std::string_view text);
  //! Decodes and checks membership of every letter.
  Word parse_word(std::string_view text, Alphabet const& alphabet);

  //! All words of length <= max_length, shortlex order, empty word first.
  std::vector<Word> words_up_to(Alphabet const& alphabet,
                                std::size_t     max_length);
  //! All words of length exactly `length`, lexicographic order.
  std::vector<Word> words_of_length(Alphabet const& alphabet,
                                    std::size_t     length);

  //! |u|_a. Throws DomainError if `a` is not in the alphabet.
  std::size_t count_letter(Alphabet const& alphabet, Word const& u, Letter a);

  using CostFunction = std::function<CostValue(Word const&)>;

  //! Finite table n -> alpha(n) of a correction function.
  using CorrectionTable = std::map<std::uint64_t, CostValue>;

  //! For every finite value n taken by g on `sample`,
  //! alpha(n) = sup { f(u) : u in sample, g(u) <= n }.
  CorrectionTable empirical_alpha(CostFunction const& f,
                                  CostFunction const& g,
                                  std::span<Word const> sample);

  struct DominanceReport {
    bool                holds = true;
    std::optional<Word> counterexample;
    CostValue           lhs;  // f(counterexample)
    CostValue           rhs;  // alpha(g(counterexample))
  };

  //! Checks f(u) <= alpha(g(u)) on every sample word, with alpha(inf) = inf.
  //! Only a test harness: a finite sample proves nothing about domination.
  DominanceReport check_dominance_on_sample(
      CostFunction const&                          f,
      CostFunction const&                          g,
      std::span<Word const>                        sample,
      std::function<CostValue(std::uint64_t)> const& alpha);

}  // namespace costltl

#endif  // COSTLTL_CORE_HPP_
