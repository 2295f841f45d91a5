#include "costltl/bounded.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "costltl/translate.hpp"

namespace costltl {

  namespace {
    void require_s(CostAutomaton const& aut) {
      if (aut.polarity != Polarity::S) {
        throw DomainError("boundedness is decided on S-automata");
      }
    }

    // Drops every action above another one, and duplicates.
    void keep_minimal(std::vector<SActionVec>& xs) {
      std::sort(xs.begin(), xs.end());
      xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
      std::vector<SActionVec> out;
      for (std::size_t k = 0; k < xs.size(); ++k) {
        bool dominated = false;
        for (std::size_t l = 0; l < xs.size() && !dominated; ++l) {
          dominated = l != k && s_leq(xs[l], xs[k]);
        }
        if (!dominated) {
          out.push_back(xs[k]);
        }
      }
      xs = std::move(out);
    }
  }  // namespace

  std::vector<ContractedTransition> contracted_transitions(
      CostAutomaton const& aut) {
    require_s(aut);
    std::vector<ContractedTransition> all;
    for (std::size_t t = 0; t < aut.transitions.size(); ++t) {
      auto const& tr = aut.transitions[t];
      SActionVec  action;
      for (auto const& seq : tr.actions) {
        action.push_back(compose_s(seq));
      }
      all.push_back({tr.from, std::move(action), tr.to, tr.letter, t});
    }
    std::vector<ContractedTransition> out;
    for (std::size_t k = 0; k < all.size(); ++k) {
      bool drop = false;
      for (std::size_t l = 0; l < all.size() && !drop; ++l) {
        if (l == k || all[l].from != all[k].from || all[l].to != all[k].to
            || !s_leq(all[l].action, all[k].action)) {
          continue;
        }
        // strictly smaller, or equal and earlier
        drop = all[l].action != all[k].action || l < k;
      }
      if (!drop) {
        out.push_back(all[k]);
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Witnesses
  ////////////////////////////////////////////////////////////////////////

  namespace {
    void pump_into(std::vector<Witness::Item> const& items,
                   CostAutomaton const& aut, std::uint64_t n, Word& out) {
      for (auto const& item : items) {
        if (item.transition) {
          out.push_back(aut.transitions[*item.transition].letter);
        } else {
          for (std::uint64_t k = 0; k < n; ++k) {
            pump_into(item.cycle, aut, n, out);
          }
        }
      }
    }

    void describe_into(std::vector<Witness::Item> const& items,
                       CostAutomaton const& aut, std::string& out) {
      for (auto const& item : items) {
        if (!out.empty() && out.back() != '(') {
          out += ' ';
        }
        if (item.transition) {
          auto const& tr = aut.transitions[*item.transition];
          out += aut.states[tr.from] + " -" + to_utf8(tr.letter) + "-> "
                 + aut.states[tr.to];
        } else {
          out += "(";
          describe_into(item.cycle, aut, out);
          out += ")^n";
        }
      }
    }
  }  // namespace

  Word Witness::pump(CostAutomaton const& aut, std::uint64_t n) const {
    Word out;
    pump_into(items, aut, n, out);
    return out;
  }

  std::string Witness::describe(CostAutomaton const& aut) const {
    std::string out;
    describe_into(items, aut, out);
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // On-the-fly search
  ////////////////////////////////////////////////////////////////////////

  namespace {
    struct Frame {
      SActionVec  action;
      std::size_t state;

      auto operator<=>(Frame const&) const = default;
    };

    using Memory = std::vector<Frame>;

    enum class Move : std::uint8_t { start, extend, open, close };

    struct Visit {
      Memory      memory;
      std::size_t parent;
      Move        move;
      std::size_t origin;  // transition index, for extend
    };

    Witness rebuild(std::vector<Visit> const& visits, std::size_t last) {
      std::vector<std::size_t> chain;
      for (std::size_t v = last; visits[v].move != Move::start;
           v = visits[v].parent) {
        chain.push_back(v);
      }
      std::reverse(chain.begin(), chain.end());
      std::vector<std::vector<Witness::Item>> stack(1);
      for (auto v : chain) {
        switch (visits[v].move) {
          case Move::extend:
            stack.back().push_back({visits[v].origin, {}});
            break;
          case Move::open: stack.emplace_back(); break;
          case Move::close: {
            auto cycle = std::move(stack.back());
            stack.pop_back();
            stack.back().push_back({std::nullopt, std::move(cycle)});
            break;
          }
          default: break;
        }
      }
      return Witness{std::move(stack.front())};
    }
  }  // namespace

  BoundedReport bounded_onthefly(CostAutomaton const& aut) {
    require_s(aut);
    auto const        moves  = contracted_transitions(aut);
    std::size_t const frames = aut.counters + 2;
    std::vector<std::vector<std::size_t>> from(aut.states.size());
    for (std::size_t k = 0; k < moves.size(); ++k) {
      from[moves[k].from].push_back(k);
    }

    std::vector<Visit> visits;
    std::set<Memory>   seen;
    auto push = [&](Memory m, std::size_t parent, Move mv, std::size_t origin) {
      if (seen.insert(m).second) {
        visits.push_back({std::move(m), parent, mv, origin});
      }
    };
    for (auto q : aut.initial) {
      push(Memory{{s_neutral(aut.counters), q}}, 0, Move::start, 0);
    }
    for (std::size_t v = 0; v < visits.size(); ++v) {
      Memory const mem = visits[v].memory;
      Frame const& top = mem.back();
      if (mem.size() == 1 && aut.is_final(top.state) && s_is_good(top.action)) {
        return BoundedReport{false, rebuild(visits, v), visits.size()};
      }
      for (auto k : from[top.state]) {
        Memory next      = mem;
        next.back()      = {s_product(top.action, moves[k].action), moves[k].to};
        push(std::move(next), v, Move::extend, moves[k].origin);
      }
      if (mem.size() < frames) {
        Memory next = mem;
        next.push_back({s_neutral(aut.counters), top.state});
        push(std::move(next), v, Move::open, 0);
      }
      if (mem.size() >= 2 && mem[mem.size() - 2].state == top.state
          && s_sharp_defined(top.action)) {
        Memory next = mem;
        next.pop_back();
        next.back().action
            = s_product(next.back().action, s_sharp(top.action));
        push(std::move(next), v, Move::close, 0);
      }
    }
    return BoundedReport{true, std::nullopt, visits.size()};
  }

  ////////////////////////////////////////////////////////////////////////
  // Run semigroup
  ////////////////////////////////////////////////////////////////////////

  namespace {
    using Element = RunSemigroup::Element;

    class RunAlgebra {
     public:
      explicit RunAlgebra(CostAutomaton const& aut)
          : _aut(aut), _q(aut.states.size()) {}

      Element letter(Letter a) const {
        Element e(_q * _q);
        for (auto const& tr : _aut.transitions) {
          if (tr.letter != a) {
            continue;
          }
          SActionVec action;
          for (auto const& seq : tr.actions) {
            action.push_back(compose_s(seq));
          }
          e[tr.from * _q + tr.to].push_back(std::move(action));
        }
        normalize(e);
        return e;
      }

      Element product(Element const& x, Element const& y) const {
        Element out(_q * _q);
        for (std::size_t p = 0; p < _q; ++p) {
          for (std::size_t q = 0; q < _q; ++q) {
            for (auto const& s : x[p * _q + q]) {
              for (std::size_t r = 0; r < _q; ++r) {
                for (auto const& t : y[q * _q + r]) {
                  out[p * _q + r].push_back(s_product(s, t));
                }
              }
            }
          }
        }
        normalize(out);
        return out;
      }

      // cr has no stabilization; a cycle whose best effect is cr can only
      // fail when repeated, which bot records.
      Element sharp(Element const& x) const {
        Element out(_q * _q);
        for (std::size_t q = 0; q < _q; ++q) {
          for (auto const& loop : x[q * _q + q]) {
            SActionVec stab(loop.size());
            for (std::size_t k = 0; k < loop.size(); ++k) {
              stab[k] = s_sharp_defined(loop[k]) ? s_sharp(loop[k]) : SElem::bot;
            }
            for (std::size_t p = 0; p < _q; ++p) {
              for (auto const& s : x[p * _q + q]) {
                SActionVec head = s_product(s, stab);
                for (std::size_t r = 0; r < _q; ++r) {
                  for (auto const& t : x[q * _q + r]) {
                    out[p * _q + r].push_back(s_product(head, t));
                  }
                }
              }
            }
          }
        }
        normalize(out);
        return out;
      }

      bool accepting(Element const& x) const {
        for (auto p : _aut.initial) {
          for (auto q : _aut.final) {
            for (auto const& s : x[p * _q + q]) {
              if (s_is_good(s)) {
                return true;
              }
            }
          }
        }
        return false;
      }

      // x <= y iff the runs of y are among those of x
      bool leq(Element const& x, Element const& y) const {
        for (std::size_t pq = 0; pq < _q * _q; ++pq) {
          for (auto const& t : y[pq]) {
            if (std::none_of(x[pq].begin(), x[pq].end(),
                             [&t](SActionVec const& s) { return s_leq(s, t); })) {
              return false;
            }
          }
        }
        return true;
      }

     private:
      static void normalize(Element& e) {
        for (auto& xs : e) {
          keep_minimal(xs);
        }
      }

      CostAutomaton const& _aut;
      std::size_t          _q;
    };

    struct Closure {
      RunSemigroup             result;
      std::map<Element, std::size_t> index;
    };

    Closure close(CostAutomaton const& aut, ClosureOptions const& opts,
                  RunAlgebra const& alg) {
      Closure c;
      auto&   elems = c.result.elements;
      auto&   depth = c.result.depth;
      auto    add   = [&](Element e, std::size_t d) {
        auto [it, fresh] = c.index.emplace(e, elems.size());
        if (fresh) {
          if (elems.size() >= opts.max_elements) {
            throw ResourceError(
                "run semigroup closure exceeds "
                + std::to_string(opts.max_elements) + " elements");
          }
          elems.push_back(std::move(e));
          depth.push_back(d);
        }
        return it->second;
      };
      for (Letter a : aut.alphabet.letters()) {
        add(alg.letter(a), 0);
      }
      std::size_t done_products = 0;  // elements whose products are known
      std::size_t done_sharps   = 0;
      for (std::size_t d = 0;; ++d) {
        // saturate under product
        for (; done_products < elems.size(); ++done_products) {
          std::size_t x = done_products;
          for (std::size_t y = 0; y <= x; ++y) {
            std::size_t dd = std::max(depth[x], depth[y]);
            add(alg.product(elems[x], elems[y]), dd);
            add(alg.product(elems[y], elems[x]), dd);
          }
        }
        if (opts.max_depth && d >= *opts.max_depth) {
          break;
        }
        std::size_t const before = elems.size();
        for (; done_sharps < before; ++done_sharps) {
          Element const x = elems[done_sharps];
          if (alg.product(x, x) == x) {
            add(alg.sharp(x), depth[done_sharps] + 1);
          }
        }
        if (elems.size() == before) {
          break;
        }
      }
      // the empty run checks nothing, so an accepted empty word has value inf
      for (auto q : aut.initial) {
        c.result.unbounded = c.result.unbounded || aut.is_final(q);
      }
      for (auto const& e : elems) {
        if (alg.accepting(e)) {
          c.result.unbounded = true;
          break;
        }
      }
      return c;
    }
  }  // namespace

  RunSemigroup run_semigroup_closure(CostAutomaton const& aut,
                                     ClosureOptions const& opts) {
    require_s(aut);
    RunAlgebra alg(aut);
    return close(aut, opts, alg).result;
  }

  Recognizer run_semigroup_recognizer(CostAutomaton const& aut,
                                      ClosureOptions const& opts) {
    require_s(aut);
    if (opts.max_depth) {
      throw DomainError("a recognizer needs the complete closure");
    }
    RunAlgebra        alg(aut);
    Closure           c     = close(aut, opts, alg);
    auto const&       elems = c.result.elements;
    std::size_t const n     = elems.size();
    std::vector<std::string>           names;
    std::vector<std::vector<Elem>>     product(n);
    std::vector<std::pair<Elem, Elem>> order;
    std::vector<std::optional<Elem>>   sharp(n);
    for (std::size_t x = 0; x < n; ++x) {
      names.push_back("e" + std::to_string(x));
      for (std::size_t y = 0; y < n; ++y) {
        product[x].push_back(c.index.at(alg.product(elems[x], elems[y])));
        if (x != y && alg.leq(elems[x], elems[y])) {
          order.emplace_back(x, y);
        }
      }
      if (product[x][x] == x) {
        sharp[x] = c.index.at(alg.sharp(elems[x]));
      }
    }
    Recognizer rec{StabSemigroup(std::move(names), std::move(product),
                                 std::move(order), std::move(sharp)),
                   aut.alphabet,
                   {},
                   {},
                   0};
    for (Letter a : aut.alphabet.letters()) {
      rec.h.push_back(c.index.at(alg.letter(a)));
    }
    for (auto const& e : elems) {
      rec.ideal.push_back(alg.accepting(e));
    }
    rec.height = default_height(rec.sg);
    return rec;
  }

  BoundedReport bounded_formula(Formula const& phi) {
    return bounded_onthefly(nltl_to_s(dualize(phi)));
  }

}  // namespace costltl
