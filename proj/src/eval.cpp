#include "costltl/eval.hpp"

#include <vector>

namespace costltl {

  namespace {
    using Table = std::vector<bool>;  // indexed by position 0..|u|

    Table truth(Node const& x, Word const& u, std::uint64_t n) {
      std::size_t const len = u.size();
      Table             out(len + 1, false);
      switch (x.kind) {
        case Kind::atom:
          for (std::size_t i = 0; i < len; ++i) {
            out[i] = u[i] == x.letter;
          }
          return out;
        case Kind::end: out[len] = true; return out;
        case Kind::conj:
        case Kind::disj: {
          Table l = truth(*x.left, u, n);
          Table r = truth(*x.right, u, n);
          for (std::size_t i = 0; i <= len; ++i) {
            out[i] = x.kind == Kind::conj ? (l[i] && r[i]) : (l[i] || r[i]);
          }
          return out;
        }
        case Kind::next: {
          Table l = truth(*x.left, u, n);
          for (std::size_t i = 0; i < len; ++i) {
            out[i] = l[i + 1];
          }
          return out;
        }
        default: break;
      }
      Table l = truth(*x.left, u, n);
      Table r = truth(*x.right, u, n);
      for (std::size_t i = 0; i <= len; ++i) {
        if (x.kind == Kind::release_geq) {
          bool          all  = true;
          std::uint64_t seen = 0;
          for (std::size_t j = i; j <= len && all; ++j) {
            all  = r[j] || seen >= n;
            seen += l[j] ? 1 : 0;
          }
          out[i] = all;
          continue;
        }
        // until and until_leq: mistakes are failures of the left operand
        std::uint64_t mistakes = 0;
        std::uint64_t allowed  = x.kind == Kind::until ? 0 : n;
        for (std::size_t j = i; j <= len && mistakes <= allowed; ++j) {
          if (r[j]) {
            out[i] = true;
            break;
          }
          mistakes += l[j] ? 0 : 1;
        }
      }
      return out;
    }
  }  // namespace

  bool models(Word const& u, std::uint64_t n, Formula const& phi,
              std::size_t i) {
    phi.alphabet().check_word(u);
    if (i > u.size()) {
      throw DomainError("position " + std::to_string(i)
                        + " is beyond the end of a word of length "
                        + std::to_string(u.size()));
    }
    return truth(*phi.root(), u, n)[i];
  }

  CostValue sem_inf(Formula const& phi, Word const& u) {
    if (!phi.is_ltl()) {
      throw DomainError("sem_inf expects a formula without R#");
    }
    phi.alphabet().check_word(u);
    // at most |u| mistakes can ever be made
    for (std::uint64_t n = 0; n <= u.size(); ++n) {
      if (truth(*phi.root(), u, n)[0]) {
        return CostValue(n);
      }
    }
    return CostValue::infinity();
  }

  CostValue sem_sup(Formula const& phi, Word const& u) {
    if (!phi.is_nltl()) {
      throw DomainError("sem_sup expects a formula without U#");
    }
    phi.alphabet().check_word(u);
    if (truth(*phi.root(), u, u.size() + 2)[0]) {
      return CostValue::infinity();
    }
    for (std::uint64_t n = u.size() + 1; n > 0; --n) {
      if (truth(*phi.root(), u, n)[0]) {
        return CostValue(n);
      }
    }
    return CostValue(0);
  }

}  // namespace costltl
