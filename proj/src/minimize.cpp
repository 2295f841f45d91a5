#include "costltl/minimize.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace costltl {

  namespace {
    // The context generators, as maps.
    std::vector<ContextFunction> generators(StabSemigroup const& sg) {
      std::size_t const            n = sg.size();
      std::vector<ContextFunction> out;
      for (Elem x = 0; x < n; ++x) {
        ContextFunction left(n), right(n);
        for (Elem s = 0; s < n; ++s) {
          left[s]  = sg.product(x, s);
          right[s] = sg.product(s, x);
        }
        out.push_back(std::move(left));
        out.push_back(std::move(right));
      }
      ContextFunction stab(n);
      for (Elem s = 0; s < n; ++s) {
        Elem e = idempotent_power(sg, s);
        if (!sg.has_sharp(e)) {
          throw DomainError("sharp is undefined on the idempotent '"
                            + sg.name(e) + "'");
        }
        stab[s] = sg.sharp(e);
      }
      out.push_back(std::move(stab));
      return out;
    }
  }  // namespace

  std::vector<ContextFunction> context_closure(StabSemigroup const& sg,
                                               std::size_t          limit) {
    auto            gens = generators(sg);
    ContextFunction id(sg.size());
    for (Elem s = 0; s < sg.size(); ++s) {
      id[s] = s;
    }
    std::set<ContextFunction>    seen{id};
    std::vector<ContextFunction> out{id};
    for (std::size_t k = 0; k < out.size(); ++k) {
      for (auto const& g : gens) {
        ContextFunction h(sg.size());
        for (Elem s = 0; s < sg.size(); ++s) {
          h[s] = g[out[k][s]];
        }
        if (seen.insert(h).second) {
          if (out.size() >= limit) {
            throw ResourceError("context closure exceeds "
                                + std::to_string(limit) + " maps");
          }
          out.push_back(std::move(h));
        }
      }
    }
    return out;
  }

  namespace {
    std::pair<Recognizer, std::vector<std::optional<Elem>>> restrict_impl(
        Recognizer const& rec) {
      auto const&       sg   = rec.sg;
      std::vector<Elem> keep = generated(sg, rec.h);
      std::vector<std::optional<Elem>> pos(sg.size());
      for (std::size_t k = 0; k < keep.size(); ++k) {
        pos[keep[k]] = k;
      }
      std::vector<std::string>           names;
      std::vector<std::vector<Elem>>     product;
      std::vector<std::pair<Elem, Elem>> order;
      std::vector<std::optional<Elem>>   sharp;
      for (auto x : keep) {
        names.push_back(sg.name(x));
        std::vector<Elem> row;
        for (auto y : keep) {
          row.push_back(*pos[sg.product(x, y)]);
          if (sg.leq(x, y)) {
            order.emplace_back(*pos[x], *pos[y]);
          }
        }
        product.push_back(std::move(row));
        sharp.push_back(sg.has_sharp(x) ? pos[sg.sharp(x)] : std::nullopt);
      }
      std::optional<Elem> neutral;
      if (sg.neutral() && pos[*sg.neutral()]) {
        neutral = pos[*sg.neutral()];
      }
      Recognizer out{StabSemigroup(std::move(names), std::move(product),
                                   std::move(order), std::move(sharp), neutral),
                     rec.alphabet,
                     {},
                     {},
                     rec.height};
      for (auto x : rec.h) {
        out.h.push_back(*pos[x]);
      }
      for (auto x : keep) {
        out.ideal.push_back(rec.ideal[x]);
      }
      return {std::move(out), std::move(pos)};
    }
  }  // namespace

  Recognizer restrict_to_generated(Recognizer const& rec) {
    return restrict_impl(rec).first;
  }

  Quotient syntactic_quotient(Recognizer const& input) {
    auto [rec, pos]   = restrict_impl(input);
    auto const&     sg = rec.sg;
    std::size_t const n = sg.size();
    auto gens           = generators(sg);

    // Coarsest partition that separates the ideal and is stable under
    // every generator.
    std::vector<Elem> cls(n);
    for (Elem s = 0; s < n; ++s) {
      cls[s] = rec.ideal[s] ? 1 : 0;
    }
    std::size_t count = 0;
    while (true) {
      std::map<std::vector<Elem>, Elem> ids;
      std::vector<Elem>                 next(n);
      for (Elem s = 0; s < n; ++s) {
        std::vector<Elem> sig{cls[s]};
        for (auto const& g : gens) {
          sig.push_back(cls[g[s]]);
        }
        next[s] = ids.emplace(sig, ids.size()).first->second;
      }
      cls = std::move(next);
      if (ids.size() == count) {
        break;
      }
      count = ids.size();
    }

    std::vector<Elem> rep(count, n);
    for (Elem s = 0; s < n; ++s) {
      if (rep[cls[s]] == n) {
        rep[cls[s]] = s;
      }
    }
    std::vector<std::string>       names;
    std::vector<std::vector<Elem>> product(count);
    for (Elem c = 0; c < count; ++c) {
      names.push_back(sg.name(rep[c]));
      for (Elem d = 0; d < count; ++d) {
        product[c].push_back(cls[sg.product(rep[c], rep[d])]);
      }
    }
    std::vector<std::optional<Elem>> sharp(count);
    for (Elem s = 0; s < n; ++s) {
      Elem c = cls[s];
      if (product[c][c] != c) {
        continue;
      }
      Elem v = cls[sg.sharp(idempotent_power(sg, s))];
      if (sharp[c] && *sharp[c] != v) {
        throw DomainError("sharp is not well defined on the class of '"
                          + names[c] + "'");
      }
      sharp[c] = v;
    }

    // least compatible order with e# <= e
    std::vector<std::vector<bool>> leq(count, std::vector<bool>(count, false));
    for (Elem c = 0; c < count; ++c) {
      leq[c][c] = true;
      if (sharp[c]) {
        leq[*sharp[c]][c] = true;
      }
    }
    for (bool changed = true; changed;) {
      changed  = false;
      auto set = [&](Elem x, Elem y) {
        if (!leq[x][y]) {
          leq[x][y] = changed = true;
        }
      };
      for (Elem x = 0; x < count; ++x) {
        for (Elem y = 0; y < count; ++y) {
          if (!leq[x][y]) {
            continue;
          }
          for (Elem z = 0; z < count; ++z) {
            set(product[z][x], product[z][y]);
            set(product[x][z], product[y][z]);
            if (leq[y][z]) {
              set(x, z);
            }
          }
          if (sharp[x] && sharp[y]) {
            set(*sharp[x], *sharp[y]);
          }
        }
      }
    }
    std::vector<std::pair<Elem, Elem>> order;
    for (Elem x = 0; x < count; ++x) {
      for (Elem y = 0; y < count; ++y) {
        if (x != y && leq[x][y]) {
          if (leq[y][x]) {
            throw DomainError("the induced order identifies '" + names[x]
                              + "' and '" + names[y] + "'");
          }
          order.emplace_back(x, y);
        }
      }
    }
    std::optional<Elem> neutral;
    if (sg.neutral()) {
      neutral = cls[*sg.neutral()];
    }

    Quotient q{Recognizer{StabSemigroup(std::move(names), std::move(product),
                                        std::move(order), std::move(sharp),
                                        neutral),
                          rec.alphabet,
                          {},
                          std::vector<bool>(count, false),
                          rec.height},
               {}};
    for (auto x : rec.h) {
      q.rec.h.push_back(cls[x]);
    }
    for (Elem s = 0; s < n; ++s) {
      if (rec.ideal[s]) {
        q.rec.ideal[cls[s]] = true;
      }
    }
    for (auto const& p : pos) {
      q.class_of.push_back(p ? std::optional<Elem>(cls[*p]) : std::nullopt);
    }
    return q;
  }

  AperiodicReport is_aperiodic(StabSemigroup const& sg) {
    std::size_t const n = sg.size();
    // pow[s] = s^k, starting at k = 1
    std::vector<Elem> pow(n);
    for (Elem s = 0; s < n; ++s) {
      pow[s] = s;
    }
    for (std::size_t k = 1; k <= n; ++k) {
      std::optional<Elem> moved;
      for (Elem s = 0; s < n; ++s) {
        Elem up = sg.product(pow[s], s);
        if (up != pow[s] && !moved) {
          moved = s;
        }
        pow[s] = up;
      }
      if (!moved) {
        return AperiodicReport{true, k, std::nullopt};
      }
      if (k == n) {
        return AperiodicReport{false, 0, moved};
      }
    }
    return AperiodicReport{false, 0, std::nullopt};
  }

  bool is_ltl_definable(Recognizer const& rec) {
    return is_aperiodic(syntactic_quotient(rec).rec.sg).aperiodic;
  }

}  // namespace costltl
