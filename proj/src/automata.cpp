#include "costltl/automata.hpp"

#include <algorithm>
#include <map>

namespace costltl {

  std::size_t CostAutomaton::add_state(std::string name, std::string note) {
    states.push_back(std::move(name));
    notes.push_back(std::move(note));
    return states.size() - 1;
  }

  std::size_t CostAutomaton::state_index(std::string const& name) const {
    auto it = std::find(states.begin(), states.end(), name);
    if (it == states.end()) {
      throw DomainError("unknown state '" + name + "'");
    }
    return static_cast<std::size_t>(it - states.begin());
  }

  bool CostAutomaton::is_initial(std::size_t q) const {
    return std::find(initial.begin(), initial.end(), q) != initial.end();
  }

  bool CostAutomaton::is_final(std::size_t q) const {
    return std::find(final.begin(), final.end(), q) != final.end();
  }

  std::vector<std::string> validate(CostAutomaton const& aut) {
    std::vector<std::string> out;
    std::size_t const        n = aut.states.size();
    if (aut.alphabet.size() == 0) {
      out.push_back("empty alphabet");
    }
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (aut.states[p] == aut.states[q]) {
          out.push_back("duplicate state name '" + aut.states[p] + "'");
        }
      }
    }
    for (auto q : aut.initial) {
      if (q >= n) {
        out.push_back("initial state " + std::to_string(q) + " is undeclared");
      }
    }
    for (auto q : aut.final) {
      if (q >= n) {
        out.push_back("final state " + std::to_string(q) + " is undeclared");
      }
    }
    for (std::size_t t = 0; t < aut.transitions.size(); ++t) {
      auto const& tr  = aut.transitions[t];
      std::string tag = "transition " + std::to_string(t) + ": ";
      if (tr.from >= n || tr.to >= n) {
        out.push_back(tag + "dangling state");
      }
      if (!aut.alphabet.contains(tr.letter)) {
        out.push_back(tag + "letter '" + to_utf8(tr.letter)
                      + "' is not in the alphabet");
      }
      if (tr.actions.size() != aut.counters) {
        out.push_back(tag + "has " + std::to_string(tr.actions.size())
                      + " action sequences for "
                      + std::to_string(aut.counters) + " counters");
      }
      for (auto const& seq : tr.actions) {
        for (auto op : seq) {
          bool ok = aut.polarity == Polarity::B ? is_b_op(op) : is_s_op(op);
          if (!ok) {
            out.push_back(tag + "action '" + to_string(op) + "' in a "
                          + (aut.polarity == Polarity::B ? "B" : "S")
                          + "-automaton");
          }
        }
      }
    }
    return out;
  }

  void check(CostAutomaton const& aut) {
    auto diagnostics = validate(aut);
    if (!diagnostics.empty()) {
      std::string msg = "invalid automaton:";
      for (auto const& d : diagnostics) {
        msg += "\n  " + d;
      }
      throw DomainError(msg);
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Threshold reachability
  ////////////////////////////////////////////////////////////////////////

  namespace {
    // state followed by the counter values
    using Config = std::vector<std::uint32_t>;

    struct Step {
      std::size_t parent;
      std::size_t transition;
    };

    struct Layer {
      std::vector<Config> configs;
      std::vector<Step>   steps;
    };

    // Applies a transition under threshold n; false if the run dies.
    bool apply(Polarity pol, Transition const& tr, std::uint32_t n,
               Config& c) {
      for (std::size_t k = 0; k < tr.actions.size(); ++k) {
        std::uint32_t& v = c[k + 1];
        for (auto op : tr.actions[k]) {
          switch (op) {
            case CounterOp::ic:
              if (++v > n) {
                return false;
              }
              break;
            case CounterOp::i: v = std::min(v + 1, n); break;
            case CounterOp::r: v = 0; break;
            case CounterOp::cr:
              if (v < n) {
                return false;
              }
              v = 0;
              break;
            case CounterOp::e: break;
          }
        }
      }
      (void) pol;
      return true;
    }

    std::vector<std::vector<std::size_t>> outgoing(CostAutomaton const& aut) {
      std::vector<std::vector<std::size_t>> out(aut.states.size());
      for (std::size_t t = 0; t < aut.transitions.size(); ++t) {
        out[aut.transitions[t].from].push_back(t);
      }
      return out;
    }

    // For B: every checked value is <= n. For S: every checked value is >= n.
    std::vector<Layer> run_layers(CostAutomaton const& aut, Word const& u,
                                  std::uint32_t n) {
      auto               out = outgoing(aut);
      std::vector<Layer> layers(1);
      for (auto q : aut.initial) {
        Config c(aut.counters + 1, 0);
        c[0] = static_cast<std::uint32_t>(q);
        layers[0].configs.push_back(c);
        layers[0].steps.push_back({0, 0});
      }
      for (Letter a : u) {
        Layer const&                  prev = layers.back();
        Layer                         next;
        std::map<Config, std::size_t> seen;
        for (std::size_t p = 0; p < prev.configs.size(); ++p) {
          for (auto t : out[prev.configs[p][0]]) {
            auto const& tr = aut.transitions[t];
            if (tr.letter != a) {
              continue;
            }
            Config c = prev.configs[p];
            c[0]     = static_cast<std::uint32_t>(tr.to);
            if (apply(aut.polarity, tr, n, c)
                && seen.emplace(c, next.configs.size()).second) {
              next.configs.push_back(std::move(c));
              next.steps.push_back({p, t});
            }
          }
        }
        layers.push_back(std::move(next));
        if (layers.back().configs.empty()) {
          break;
        }
      }
      return layers;
    }

    std::optional<std::size_t> accepting(CostAutomaton const& aut,
                                         std::vector<Layer> const& layers,
                                         Word const&               u) {
      if (layers.size() != u.size() + 1) {
        return std::nullopt;
      }
      auto const& last = layers.back().configs;
      for (std::size_t c = 0; c < last.size(); ++c) {
        if (aut.is_final(last[c][0])) {
          return c;
        }
      }
      return std::nullopt;
    }

    bool reach(CostAutomaton const& aut, Word const& u, std::uint32_t n) {
      return accepting(aut, run_layers(aut, u, n), u).has_value();
    }

    std::uint32_t bound(CostAutomaton const& aut, Word const& u,
                        CounterOp inc) {
      std::size_t most = 0;
      for (auto const& tr : aut.transitions) {
        for (auto const& seq : tr.actions) {
          most = std::max<std::size_t>(
              most, std::count(seq.begin(), seq.end(), inc));
        }
      }
      return static_cast<std::uint32_t>(u.size() * most);
    }

    void require(CostAutomaton const& aut, Polarity pol, Word const& u) {
      if (aut.polarity != pol) {
        throw DomainError(std::string("expected a ")
                          + (pol == Polarity::B ? "B" : "S") + "-automaton");
      }
      aut.alphabet.check_word(u);
    }
  }  // namespace

  CostValue eval_b(CostAutomaton const& aut, Word const& u) {
    require(aut, Polarity::B, u);
    std::uint32_t hi = bound(aut, u, CounterOp::ic);
    if (!reach(aut, u, hi)) {
      return CostValue::infinity();
    }
    std::uint32_t lo = 0;  // least n with reach(n) lies in [lo, hi]
    while (lo < hi) {
      std::uint32_t mid = lo + (hi - lo) / 2;
      if (reach(aut, u, mid)) {
        hi = mid;
      } else {
        lo = mid + 1;
      }
    }
    return CostValue(lo);
  }

  CostValue eval_s(CostAutomaton const& aut, Word const& u) {
    require(aut, Polarity::S, u);
    std::uint32_t top = bound(aut, u, CounterOp::i);
    if (reach(aut, u, top + 1)) {
      return CostValue::infinity();
    }
    if (!reach(aut, u, 0)) {
      return CostValue(0);
    }
    std::uint32_t lo = 0, hi = top;  // largest n with reach(n) in [lo, hi]
    while (lo < hi) {
      std::uint32_t mid = lo + (hi - lo + 1) / 2;
      if (reach(aut, u, mid)) {
        lo = mid;
      } else {
        hi = mid - 1;
      }
    }
    return CostValue(lo);
  }

  CostValue evaluate(CostAutomaton const& aut, Word const& u) {
    return aut.polarity == Polarity::B ? eval_b(aut, u) : eval_s(aut, u);
  }

  std::optional<std::vector<std::size_t>> b_run_within(CostAutomaton const& aut,
                                                       Word const&          u,
                                                       std::uint64_t        n) {
    require(aut, Polarity::B, u);
    auto layers = run_layers(aut, u, static_cast<std::uint32_t>(n));
    auto hit    = accepting(aut, layers, u);
    if (!hit) {
      return std::nullopt;
    }
    std::vector<std::size_t> run(u.size());
    std::size_t              c = *hit;
    for (std::size_t k = u.size(); k > 0; --k) {
      run[k - 1] = layers[k].steps[c].transition;
      c          = layers[k].steps[c].parent;
    }
    return run;
  }

  std::pair<CostAutomaton, std::uint64_t> contract_b(CostAutomaton const& aut) {
    if (aut.polarity != Polarity::B) {
      throw DomainError("contract_b expects a B-automaton");
    }
    CostAutomaton out = aut;
    std::uint64_t K   = 0;
    for (auto& tr : out.transitions) {
      for (auto& seq : tr.actions) {
        K   = std::max(K, b_seq_value(seq).value);
        seq = OpSeq{contract_max(seq)};
      }
    }
    return {std::move(out), K};
  }

}  // namespace costltl
