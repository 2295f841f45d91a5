#include "costltl/translate.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace costltl {

  ////////////////////////////////////////////////////////////////////////
  // FormulaTable
  ////////////////////////////////////////////////////////////////////////

  namespace {
    constexpr std::size_t kNone = static_cast<std::size_t>(-1);

    TKind tkind(Kind k) {
      return static_cast<TKind>(static_cast<std::uint8_t>(k));
    }
  }  // namespace

  FormulaTable::FormulaTable(Formula const& phi) {
    _root = intern(phi.root());
    for (auto const& x : counted_subformulas(phi)) {
      std::size_t j = _counters.size();
      _counters.emplace(intern(x), j);
    }
  }

  std::size_t FormulaTable::make(TKind k, Letter a, std::size_t l,
                                 std::size_t r) {
    auto key = std::make_tuple(k, a, l, r);
    auto it  = _ids.find(key);
    if (it != _ids.end()) {
      return it->second;
    }
    std::size_t sz = 1 + (l == kNone ? 0 : _entries[l].size)
                     + (r == kNone ? 0 : _entries[r].size);
    _entries.push_back({k, a, l, r, sz});
    _ids.emplace(key, _entries.size() - 1);
    return _entries.size() - 1;
  }

  std::size_t FormulaTable::intern(NodePtr const& x) {
    std::size_t l = x->left ? intern(x->left) : kNone;
    std::size_t r = x->right ? intern(x->right) : kNone;
    return make(tkind(x->kind), x->letter, l, r);
  }

  std::size_t FormulaTable::intern(TKind k, std::size_t child) {
    if (k != TKind::next && k != TKind::weak_next) {
      throw DomainError("FormulaTable::intern expects a next kind");
    }
    return make(k, 0, child, kNone);
  }

  std::optional<std::size_t> FormulaTable::counter(std::size_t id) const {
    auto it = _counters.find(id);
    if (it == _counters.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  bool FormulaTable::is_reduced(std::size_t id) const {
    TKind k = _entries[id].kind;
    return k == TKind::atom || k == TKind::end || k == TKind::next
           || k == TKind::weak_next;
  }

  NodePtr FormulaTable::node(std::size_t id) const {
    Entry const& x = _entries[id];
    switch (x.kind) {
      case TKind::atom: return node::atom(x.letter);
      case TKind::end: return node::end();
      case TKind::next: return node::next(node(x.left));
      case TKind::conj: return node::conj(node(x.left), node(x.right));
      case TKind::disj: return node::disj(node(x.left), node(x.right));
      case TKind::until: return node::until(node(x.left), node(x.right));
      case TKind::until_leq:
        return node::until_leq(node(x.left), node(x.right));
      case TKind::release_geq:
        return node::release_geq(node(x.left), node(x.right));
      default: throw DomainError("a weak next has no formula counterpart");
    }
  }

  std::string FormulaTable::render(std::size_t id) const {
    Entry const& x = _entries[id];
    if (x.kind != TKind::weak_next) {
      return costltl::render(*node(id));
    }
    Entry const& child = _entries[x.left];
    if (child.kind == TKind::atom || child.kind == TKind::end) {
      return "X~ " + render(x.left);
    }
    return "X~ (" + render(x.left) + ")";
  }

  std::string render(FormulaTable const& table, PseudoState const& y) {
    std::string out = "{";
    for (std::size_t k = 0; k < y.size(); ++k) {
      out += (k == 0 ? "" : ", ") + table.render(y[k]);
    }
    return out + "}";
  }

  PseudoState next_state(FormulaTable const& table, PseudoState const& z) {
    PseudoState out;
    for (auto id : z) {
      TKind k = table[id].kind;
      if (k == TKind::next || k == TKind::weak_next) {
        out.push_back(table[id].left);
      } else if (!table.is_reduced(id)) {
        throw DomainError("next_state expects a reduced pseudo-state");
      }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Reduction
  ////////////////////////////////////////////////////////////////////////

  namespace {
    class Reducer {
     public:
      Reducer(FormulaTable& table, Polarity polarity)
          : _table(table), _polarity(polarity) {}

      std::vector<ClosureEnd> run(PseudoState const& y) {
        ClosureEnd start{{}, std::vector<OpSeq>(_table.counters())};
        for (auto id : y) {
          insert(start, id, false);
        }
        explore(std::move(start));
        return {_found.begin(), _found.end()};
      }

     private:
      // A fresh R# instance takes over a merged one: its obligation is the
      // stronger, so its counter restarts.
      void insert(ClosureEnd& b, std::size_t id, bool fresh) {
        auto it = std::lower_bound(b.members.begin(), b.members.end(), id);
        if (it == b.members.end() || *it != id) {
          b.members.insert(it, id);
        }
        if (fresh && _polarity == Polarity::S
            && _table[id].kind == TKind::release_geq) {
          b.actions[*_table.counter(id)].push_back(CounterOp::r);
        }
      }

      bool consistent(ClosureEnd const& b) const {
        std::size_t atoms       = 0;
        bool        has_end     = false;
        bool        strong_next = false;
        for (auto id : b.members) {
          TKind k = _table[id].kind;
          atoms += (k == TKind::atom || k == TKind::end) ? 1 : 0;
          has_end |= k == TKind::end;
          strong_next |= k == TKind::next;
        }
        return atoms <= 1 && !(has_end && strong_next);
      }

      void explore(ClosureEnd b) {
        if (!consistent(b)) {
          return;
        }
        std::size_t pick = kNone;
        for (auto id : b.members) {
          if (!_table.is_reduced(id)
              && (pick == kNone || _table[id].size > _table[pick].size)) {
            pick = id;
          }
        }
        if (pick == kNone) {
          _found.insert(std::move(b));
          return;
        }
        b.members.erase(
            std::lower_bound(b.members.begin(), b.members.end(), pick));
        auto const  x = _table[pick];
        auto const  j = _table.counter(pick);
        auto branch   = [&](std::initializer_list<std::size_t> add,
                          std::optional<CounterOp>           op) {
          ClosureEnd c = b;
          for (auto id : add) {
            insert(c, id, true);
          }
          if (op) {
            c.actions[*j].push_back(*op);
          }
          explore(std::move(c));
        };
        switch (x.kind) {
          case TKind::conj: branch({x.left, x.right}, std::nullopt); break;
          case TKind::disj:
            branch({x.left}, std::nullopt);
            branch({x.right}, std::nullopt);
            break;
          case TKind::until: {
            std::size_t again = _table.intern(TKind::next, pick);
            branch({x.left, again}, std::nullopt);
            branch({x.right}, std::nullopt);
            break;
          }
          case TKind::until_leq: {
            std::size_t again = _table.intern(TKind::next, pick);
            branch({x.left, again}, std::nullopt);
            branch({again}, CounterOp::ic);
            branch({x.right}, CounterOp::r);
            break;
          }
          case TKind::release_geq: {
            std::size_t again = _table.intern(TKind::weak_next, pick);
            branch({x.left, x.right, again}, CounterOp::i);
            branch({x.right, again}, std::nullopt);
            branch({}, CounterOp::cr);
            break;
          }
          default: break;
        }
      }

      FormulaTable&        _table;
      Polarity             _polarity;
      std::set<ClosureEnd> _found;
    };

    bool has_kind(FormulaTable const& table, PseudoState const& z, TKind k) {
      return std::any_of(z.begin(), z.end(),
                         [&](std::size_t id) { return table[id].kind == k; });
    }
  }  // namespace

  std::vector<ClosureEnd> epsilon_closure(FormulaTable& table,
                                          PseudoState const& y,
                                          Polarity           polarity) {
    return Reducer(table, polarity).run(y);
  }

  std::vector<ClosureEnd> end_closure(FormulaTable& table, PseudoState const& y,
                                      Polarity polarity) {
    std::vector<ClosureEnd> out;
    for (auto& z : epsilon_closure(table, y, polarity)) {
      if (!has_kind(table, z.members, TKind::atom)
          && !has_kind(table, z.members, TKind::next)) {
        out.push_back(std::move(z));
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Automaton construction
  ////////////////////////////////////////////////////////////////////////

  namespace {
    std::vector<OpSeq> concat(std::vector<OpSeq> x,
                              std::vector<OpSeq> const& y) {
      for (std::size_t k = 0; k < x.size(); ++k) {
        x[k].insert(x[k].end(), y[k].begin(), y[k].end());
      }
      return x;
    }

    bool check_free(std::vector<OpSeq> const& actions) {
      return std::all_of(actions.begin(), actions.end(), [](OpSeq const& s) {
        return std::find(s.begin(), s.end(), CounterOp::cr) == s.end();
      });
    }

    // Keeps the states from which a final state can be reached, and the
    // initial states.
    Compiled trim(Compiled c) {
      auto const&       aut = c.aut;
      std::size_t const n   = aut.states.size();
      std::vector<bool> live(n, false);
      for (auto q : aut.final) {
        live[q] = true;
      }
      for (bool changed = true; changed;) {
        changed = false;
        for (auto const& tr : aut.transitions) {
          if (live[tr.to] && !live[tr.from]) {
            live[tr.from] = changed = true;
          }
        }
      }
      std::vector<bool> keep = live;
      for (auto q : aut.initial) {
        keep[q] = true;
      }
      std::vector<std::size_t> rename(n, kNone);
      Compiled                 out{CostAutomaton{}, c.table, {}};
      out.aut.polarity = aut.polarity;
      out.aut.alphabet = aut.alphabet;
      out.aut.counters = aut.counters;
      for (std::size_t q = 0; q < n; ++q) {
        if (keep[q]) {
          rename[q] = out.aut.states.size();
          out.aut.add_state("q" + std::to_string(rename[q]), aut.notes[q]);
          out.contents.push_back(c.contents[q]);
        }
      }
      for (auto q : aut.initial) {
        out.aut.initial.push_back(rename[q]);
      }
      for (auto q : aut.final) {
        out.aut.final.push_back(rename[q]);
      }
      for (auto const& tr : aut.transitions) {
        if (live[tr.to] && keep[tr.from]) {
          out.aut.transitions.push_back(
              {rename[tr.from], tr.letter, rename[tr.to], tr.actions});
        }
      }
      return out;
    }

    Compiled compile(Formula const& phi, Polarity polarity) {
      Compiled     c{CostAutomaton{}, FormulaTable(phi), {}};
      auto&        aut   = c.aut;
      auto&        table = c.table;
      aut.polarity       = polarity;
      aut.alphabet       = phi.alphabet();
      aut.counters       = table.counters();

      std::map<PseudoState, std::size_t> index;
      auto state_of = [&](PseudoState const& y) {
        auto [it, fresh] = index.emplace(y, aut.states.size());
        if (fresh) {
          aut.add_state("", render(table, y));
          c.contents.push_back(y);
        }
        return it->second;
      };

      std::size_t const start = state_of({table.root()});
      // end-of-word closures, per state
      std::vector<std::vector<ClosureEnd>> ends;
      std::set<std::tuple<std::size_t, Letter, std::size_t,
                          std::vector<OpSeq>>>
          seen;
      auto add_transition = [&](std::size_t p, Letter a, std::size_t q,
                                std::vector<OpSeq> actions) {
        if (seen.emplace(p, a, q, actions).second) {
          aut.transitions.push_back({p, a, q, std::move(actions)});
        }
      };

      for (std::size_t p = 0; p < c.contents.size(); ++p) {
        PseudoState const y = c.contents[p];
        ends.push_back(end_closure(table, y, polarity));
        for (auto const& z : epsilon_closure(table, y, polarity)) {
          if (has_kind(table, z.members, TKind::end)) {
            continue;
          }
          std::optional<Letter> only;
          for (auto id : z.members) {
            if (table[id].kind == TKind::atom) {
              only = table[id].letter;
            }
          }
          auto actions = z.actions;
          if (polarity == Polarity::S) {
            for (auto id : z.members) {
              if (table[id].kind == TKind::next) {
                if (auto j = table.counter(table[id].left)) {
                  actions[*j].push_back(CounterOp::r);
                }
              }
            }
          }
          std::size_t q = state_of(next_state(table, z.members));
          for (Letter a : aut.alphabet.letters()) {
            if (!only || *only == a) {
              add_transition(p, a, q, actions);
            }
          }
        }
      }

      std::size_t const ordinary = aut.states.size();
      if (polarity == Polarity::B) {
        aut.initial.push_back(start);
        for (std::size_t p = 0; p < ordinary; ++p) {
          if (!ends[p].empty()) {
            aut.final.push_back(p);
          }
        }
        return trim(std::move(c));
      }

      // S: the end-of-word closure of the last state is folded into a
      // transition to a dedicated final state.
      std::size_t const sink = aut.add_state("", "end of word");
      c.contents.push_back({});
      aut.final.push_back(sink);
      std::size_t const letters_transitions = aut.transitions.size();
      for (std::size_t t = 0; t < letters_transitions; ++t) {
        Transition const tr = aut.transitions[t];
        for (auto const& z : ends[tr.to]) {
          add_transition(tr.from, tr.letter, sink, concat(tr.actions, z.actions));
        }
      }
      bool eps = std::any_of(ends[start].begin(), ends[start].end(),
                             [](ClosureEnd const& z) {
                               return check_free(z.actions);
                             });
      if (!eps) {
        aut.initial.push_back(start);
      } else {
        // A copy of the initial state accepts the empty word; the original
        // may be re-entered later and must stay non-final.
        std::size_t copy
            = aut.add_state("", render(table, c.contents[start]) + " initial");
        c.contents.push_back(c.contents[start]);
        aut.initial.push_back(copy);
        aut.final.push_back(copy);
        std::size_t const count = aut.transitions.size();
        for (std::size_t t = 0; t < count; ++t) {
          Transition tr = aut.transitions[t];
          if (tr.from == start) {
            tr.from = copy;
            add_transition(tr.from, tr.letter, tr.to, tr.actions);
          }
        }
      }
      return trim(std::move(c));
    }
  }  // namespace

  Compiled compile_b(Formula const& phi) {
    if (!phi.is_ltl()) {
      throw DomainError("the B translation expects a formula without R#");
    }
    return compile(phi, Polarity::B);
  }

  Compiled compile_s(Formula const& phi) {
    if (!phi.is_nltl()) {
      throw DomainError("the S translation expects a formula without U#");
    }
    return compile(phi, Polarity::S);
  }

  CostAutomaton ltl_to_b(Formula const& phi) {
    return compile_b(phi).aut;
  }

  CostAutomaton nltl_to_s(Formula const& phi) {
    return compile_s(phi).aut;
  }

  CostValue accept_epsilon_value(Formula const& phi, Polarity polarity) {
    FormulaTable table(phi);
    auto         ends = end_closure(table, {table.root()}, polarity);
    if (polarity == Polarity::B) {
      return ends.empty() ? CostValue::infinity() : CostValue(0);
    }
    bool free = std::any_of(ends.begin(), ends.end(), [](ClosureEnd const& z) {
      return check_free(z.actions);
    });
    return free ? CostValue::infinity() : CostValue(0);
  }

}  // namespace costltl
