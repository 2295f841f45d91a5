#include "costltl/core.hpp"

#include <algorithm>
#include <charconv>
#include <set>

namespace costltl {

  std::uint64_t CostValue::value() const {
    if (!_finite) {
      throw DomainError("CostValue::value called on infinity");
    }
    return _value;
  }

  std::string CostValue::to_string() const {
    return _finite ? std::to_string(_value) : std::string("inf");
  }

  std::ostream& operator<<(std::ostream& os, CostValue const& v) {
    return os << v.to_string();
  }

  CostValue parse_cost_value(std::string_view text) {
    if (text == "inf") {
      return CostValue::infinity();
    }
    std::uint64_t n   = 0;
    auto const*   end = text.data() + text.size();
    auto [ptr, ec]    = std::from_chars(text.data(), end, n);
    if (ec != std::errc() || ptr != end || text.empty()) {
      throw SyntaxError("not a cost value: '" + std::string(text) + "'", 0);
    }
    return CostValue(n);
  }

  ////////////////////////////////////////////////////////////////////////
  // UTF-8
  ////////////////////////////////////////////////////////////////////////

  std::string to_utf8(Letter a) {
    std::string out;
    auto        c = static_cast<std::uint32_t>(a);
    if (c < 0x80) {
      out.push_back(static_cast<char>(c));
    } else if (c < 0x800) {
      out.push_back(static_cast<char>(0xC0 | (c >> 6)));
      out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
    } else if (c < 0x10000) {
      out.push_back(static_cast<char>(0xE0 | (c >> 12)));
      out.push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
    } else {
      out.push_back(static_cast<char>(0xF0 | (c >> 18)));
      out.push_back(static_cast<char>(0x80 | ((c >> 12) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
    }
    return out;
  }

  std::string to_utf8(Word const& u) {
    std::string out;
    for (Letter a : u) {
      out += to_utf8(a);
    }
    return out;
  }

  Word word_from_utf8(std::string_view text) {
    if (text == "\"\"") {
      return Word();
    }
    Word        out;
    std::size_t i = 0;
    while (i < text.size()) {
      auto        b   = static_cast<unsigned char>(text[i]);
      std::size_t len = b < 0x80 ? 1 : (b >> 5) == 0x6 ? 2 : (b >> 4) == 0xE ? 3
                                   : (b >> 3) == 0x1E ? 4
                                                      : 0;
      if (len == 0 || i + len > text.size()) {
        throw SyntaxError("invalid UTF-8", i);
      }
      std::uint32_t c = len == 1 ? b : b & (0x7F >> len);
      for (std::size_t k = 1; k < len; ++k) {
        auto cont = static_cast<unsigned char>(text[i + k]);
        if ((cont & 0xC0) != 0x80) {
          throw SyntaxError("invalid UTF-8", i + k);
        }
        c = (c << 6) | (cont & 0x3F);
      }
      out.push_back(static_cast<Letter>(c));
      i += len;
    }
    return out;
  }

  Word parse_word(std::string_view text, Alphabet const& alphabet) {
    Word u = word_from_utf8(text);
    alphabet.check_word(u);
    return u;
  }

  ////////////////////////////////////////////////////////////////////////
  // Alphabet
  ////////////////////////////////////////////////////////////////////////

  Alphabet::Alphabet(std::vector<Letter> letters) : _letters(std::move(letters)) {
    if (_letters.empty()) {
      throw DomainError("an alphabet must be nonempty");
    }
    std::set<Letter> seen(_letters.begin(), _letters.end());
    if (seen.size() != _letters.size()) {
      throw DomainError("duplicate letter in alphabet '" + to_string() + "'");
    }
  }

  Alphabet Alphabet::from_string(std::string_view utf8) {
    Word w = word_from_utf8(utf8);
    return Alphabet(std::vector<Letter>(w.begin(), w.end()));
  }

  bool Alphabet::contains(Letter a) const noexcept {
    return std::find(_letters.begin(), _letters.end(), a) != _letters.end();
  }

  std::size_t Alphabet::index_of(Letter a) const {
    auto it = std::find(_letters.begin(), _letters.end(), a);
    if (it == _letters.end()) {
      throw DomainError("letter '" + to_utf8(a) + "' is not in alphabet '"
                        + to_string() + "'");
    }
    return static_cast<std::size_t>(it - _letters.begin());
  }

  void Alphabet::check_word(Word const& u) const {
    for (Letter a : u) {
      if (!contains(a)) {
        throw DomainError("letter '" + to_utf8(a) + "' is not in alphabet '"
                          + to_string() + "'");
      }
    }
  }

  std::string Alphabet::to_string() const {
    return to_utf8(Word(_letters.begin(), _letters.end()));
  }

  std::vector<Word> words_of_length(Alphabet const& alphabet,
                                    std::size_t     length) {
    std::vector<Word> out{Word()};
    for (std::size_t k = 0; k < length; ++k) {
      std::vector<Word> next;
      next.reserve(out.size() * alphabet.size());
      for (auto const& w : out) {
        for (Letter a : alphabet.letters()) {
          next.push_back(w + a);
        }
      }
      out = std::move(next);
    }
    return out;
  }

  std::vector<Word> words_up_to(Alphabet const& alphabet,
                                std::size_t     max_length) {
    std::vector<Word> out;
    for (std::size_t len = 0; len <= max_length; ++len) {
      auto layer = words_of_length(alphabet, len);
      out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
  }

  std::size_t count_letter(Alphabet const& alphabet, Word const& u, Letter a) {
    alphabet.index_of(a);
    return static_cast<std::size_t>(std::count(u.begin(), u.end(), a));
  }

  ////////////////////////////////////////////////////////////////////////
  // Sample-based comparison
  ////////////////////////////////////////////////////////////////////////

  CorrectionTable empirical_alpha(CostFunction const&   f,
                                  CostFunction const&   g,
                                  std::span<Word const> sample) {
    std::vector<std::pair<CostValue, CostValue>> points;
    points.reserve(sample.size());
    for (auto const& u : sample) {
      points.emplace_back(g(u), f(u));
    }
    CorrectionTable alpha;
    for (auto const& [gv, fv] : points) {
      if (gv.is_finite()) {
        alpha.emplace(gv.value(), CostValue(0));
      }
    }
    for (auto& [n, sup] : alpha) {
      for (auto const& [gv, fv] : points) {
        if (gv <= CostValue(n)) {
          sup = max(sup, fv);
        }
      }
    }
    return alpha;
  }

  DominanceReport check_dominance_on_sample(
      CostFunction const&                            f,
      CostFunction const&                            g,
      std::span<Word const>                          sample,
      std::function<CostValue(std::uint64_t)> const& alpha) {
    for (auto const& u : sample) {
      CostValue fv = f(u);
      CostValue gv = g(u);
      CostValue bound
          = gv.is_finite() ? alpha(gv.value()) : CostValue::infinity();
      if (bound < fv) {
        return DominanceReport{false, u, fv, bound};
      }
    }
    return DominanceReport{};
  }

}  // namespace costltl
