#include <random>
#include <set>

#include "catch_amalgamated.hpp"

#include "costltl/eval.hpp"
#include "costltl/io.hpp"
#include "costltl/translate.hpp"
#include "oracles.hpp"

using namespace costltl;

namespace {
  Alphabet const ab = Alphabet::from_string("ab");

  std::set<std::string> endpoints(FormulaTable& table,
                                  std::vector<ClosureEnd> const& ends) {
    std::set<std::string> out;
    for (auto const& z : ends) {
      std::string text = render(table, z.members);
      for (auto const& seq : z.actions) {
        text += " | " + to_string(seq);
      }
      out.insert(text);
    }
    return out;
  }

  std::vector<std::string> corpus() {
    return load_formulas(std::string(COSTLTL_DATA) + "/corpus.ltl").formulas;
  }
}  // namespace

TEST_CASE("closure of a bounded until") {
  FormulaTable table(parse("a U# b", ab));
  CHECK(table.counters() == 1);
  CHECK(endpoints(table, epsilon_closure(table, {table.root()}, Polarity::B))
        == std::set<std::string>{"{a, X (a U# b)} | e", "{b} | r",
                                 "{X (a U# b)} | ic"});
  CHECK(end_closure(table, {table.root()}, Polarity::B).empty());
}

TEST_CASE("closure of a disjunction with END") {
  FormulaTable table(parse("a | END", ab));
  CHECK(endpoints(table, epsilon_closure(table, {table.root()}, Polarity::B))
        == std::set<std::string>{"{a}", "{END}"});
  CHECK(endpoints(table, end_closure(table, {table.root()}, Polarity::B))
        == std::set<std::string>{"{END}"});
}

TEST_CASE("closure of a bounded release") {
  FormulaTable table(parse("(a | b) R# b", ab));
  CHECK(endpoints(table, epsilon_closure(table, {table.root()}, Polarity::S))
        == std::set<std::string>{"{} | cr", "{b, X~ ((a | b) R# b)} | e",
                                 "{b, X~ ((a | b) R# b)} | i"});
  CHECK(endpoints(table, end_closure(table, {table.root()}, Polarity::S))
        == std::set<std::string>{"{} | cr"});
}

TEST_CASE("next state") {
  auto         phi = parse("X a & (X (a U b) & b)", ab);
  FormulaTable table(phi);
  auto         xa  = table.intern(parse("X a", ab).root());
  auto         xu  = table.intern(parse("X (a U b)", ab).root());
  auto         b   = table.intern(parse("b", ab).root());
  auto         a   = table.intern(parse("a", ab).root());
  auto         u   = table.intern(parse("a U b", ab).root());
  PseudoState  z{xa, xu, b};
  std::sort(z.begin(), z.end());
  PseudoState expected{a, u};
  std::sort(expected.begin(), expected.end());
  CHECK(next_state(table, z) == expected);
  CHECK(next_state(table, {b}).empty());
  auto wx = table.intern(TKind::weak_next, a);
  CHECK(next_state(table, {wx}) == PseudoState{a});
  CHECK(table.render(wx) == "X~ a");
  CHECK_THROWS_AS(table.node(wx), DomainError);
}

TEST_CASE("hash consing") {
  FormulaTable table(parse("(a U# b) & X (a U# b)", ab));
  CHECK(table.counters() == 1);
  auto id = table.intern(parse("a U# b", ab).root());
  CHECK(table.counter(id) == std::size_t{0});
  CHECK(table.intern(parse("a U# b", ab).root()) == id);
  CHECK_FALSE(table.counter(table.intern(parse("a", ab).root())));
}

TEST_CASE("value of the empty word") {
  CHECK(accept_epsilon_value(parse("a | END", ab), Polarity::B) == CostValue(0));
  CHECK(accept_epsilon_value(parse("a", ab), Polarity::B)
        == CostValue::infinity());
  CHECK(accept_epsilon_value(parse("END", ab), Polarity::B) == CostValue(0));
  CHECK(accept_epsilon_value(parse("a R# END", ab), Polarity::S)
        == CostValue::infinity());
  CHECK(accept_epsilon_value(parse("a", ab), Polarity::S) == CostValue(0));

  std::mt19937       rng(11);
  oracle::FormulaGen gen{ab};
  oracle::FormulaGen dual{ab, 4, 2, true};
  for (int k = 0; k < 300; ++k) {
    Formula phi(ab, gen(rng));
    CHECK(accept_epsilon_value(phi, Polarity::B) == sem_inf(phi, Word()));
    Formula psi(ab, dual(rng));
    CHECK(accept_epsilon_value(psi, Polarity::S) == sem_sup(psi, Word()));
  }
}

TEST_CASE("B translation is exact on the corpus") {
  auto const words = words_up_to(ab, 6);
  for (auto const& text : corpus()) {
    auto phi = parse(text, ab);
    auto aut = ltl_to_b(phi);
    CHECK(validate(aut).empty());
    for (auto const& u : words) {
      INFO(text << " on " << to_utf8(u));
      CHECK(eval_b(aut, u) == sem_inf(phi, u));
    }
  }
}

TEST_CASE("S translation is exact on the dual corpus") {
  auto const words = words_up_to(ab, 6);
  for (auto const& text : corpus()) {
    auto psi = dualize(parse(text, ab));
    auto aut = nltl_to_s(psi);
    CHECK(validate(aut).empty());
    for (auto const& u : words) {
      INFO(render(psi) << " on " << to_utf8(u));
      CHECK(eval_s(aut, u) == sem_sup(psi, u));
    }
  }
}

TEST_CASE("translations are exact on random formulae") {
  std::mt19937       rng(12);
  oracle::FormulaGen gen{ab};
  auto const         words = words_up_to(ab, 5);
  for (int k = 0; k < 150; ++k) {
    Formula phi(ab, gen(rng));
    auto    b = ltl_to_b(phi);
    auto    psi = dualize(phi);
    auto    s = nltl_to_s(psi);
    for (auto const& u : words) {
      INFO(render(phi) << " on " << to_utf8(u));
      CHECK(eval_b(b, u) == oracle::naive_inf(phi, u));
      CHECK(eval_s(s, u) == oracle::naive_sup(psi, u));
    }
  }
}

TEST_CASE("formulae on a three letter alphabet") {
  auto abc = Alphabet::from_string("abc");
  for (auto text : {"!a U# END", "(a | b) U# c", "G (a U# (b | END))",
                    "F (c & X (a U# END))"}) {
    auto phi = parse(text, abc);
    auto b   = ltl_to_b(phi);
    auto s   = nltl_to_s(dualize(phi));
    for (auto const& u : words_up_to(abc, 5)) {
      INFO(text << " on " << to_utf8(u));
      CHECK(eval_b(b, u) == sem_inf(phi, u));
      CHECK(eval_s(s, u) == sem_sup(dualize(phi), u));
    }
  }
}

// Along an accepting run within n, every formula of every visited state
// holds at its position with budget n.
TEST_CASE("states of accepting runs hold their formulae") {
  std::mt19937       rng(13);
  oracle::FormulaGen gen{ab};
  int                runs = 0;
  for (int k = 0; runs < 20 && k < 1000; ++k) {
    Formula phi(ab, gen(rng));
    if (!phi.contains(Kind::until_leq)) {
      continue;
    }
    auto c = compile_b(phi);
    auto u = oracle::random_word(rng, ab, 6);
    auto v = eval_b(c.aut, u);
    if (v.is_infinite()) {
      continue;
    }
    auto run = b_run_within(c.aut, u, v.value());
    REQUIRE(run);
    ++runs;
    std::vector<std::size_t> visited;
    for (auto t : *run) {
      visited.push_back(c.aut.transitions[t].from);
    }
    visited.push_back(run->empty() ? c.aut.initial.front()
                                   : c.aut.transitions[run->back()].to);
    for (std::size_t i = 0; i < visited.size(); ++i) {
      for (auto id : c.contents[visited[i]]) {
        if (c.table[id].kind == TKind::weak_next) {
          continue;
        }
        INFO(render(phi) << " on " << to_utf8(u) << " at " << i << ": "
                         << c.table.render(id));
        CHECK(models(u, v.value(), Formula(ab, c.table.node(id)), i));
      }
    }
  }
  CHECK(runs == 20);
}

TEST_CASE("translation domains") {
  CHECK_THROWS_AS(compile_b(parse("a R# b", ab)), DomainError);
  CHECK_THROWS_AS(compile_s(parse("a U# b", ab)), DomainError);
  auto b = ltl_to_b(parse("a U# END", ab));
  CHECK(b.polarity == Polarity::B);
  CHECK(b.counters == 1);
  auto s = nltl_to_s(parse("a R# END", ab));
  CHECK(s.polarity == Polarity::S);
  CHECK(s.counters == 1);
}
