#include "catch_amalgamated.hpp"

#include "costltl/actions.hpp"
#include "costltl/semigroup.hpp"

using namespace costltl;

namespace {
  using S = SElem;

  // rows and columns in the order omega i e r cromega cr bot
  S const kProduct[7][7] = {
      {S::omega, S::omega, S::omega, S::r, S::omega, S::r, S::bot},
      {S::omega, S::i, S::i, S::r, S::cromega, S::cr, S::bot},
      {S::omega, S::i, S::e, S::r, S::cromega, S::cr, S::bot},
      {S::omega, S::r, S::r, S::r, S::bot, S::bot, S::bot},
      {S::cromega, S::cromega, S::cromega, S::cr, S::cromega, S::cr, S::bot},
      {S::cromega, S::cr, S::cr, S::cr, S::bot, S::bot, S::bot},
      {S::bot, S::bot, S::bot, S::bot, S::bot, S::bot, S::bot},
  };

  // covering pairs of the order
  std::vector<std::pair<S, S>> const kCovers = {
      {S::omega, S::i}, {S::i, S::e},       {S::e, S::r},     {S::e, S::cromega},
      {S::r, S::cr},    {S::cromega, S::cr}, {S::cr, S::bot}};

  bool reachable(S x, S y) {
    if (x == y) {
      return true;
    }
    for (auto [a, b] : kCovers) {
      if (a == x && reachable(b, y)) {
        return true;
      }
    }
    return false;
  }

  StabSemigroup as_semigroup() {
    std::vector<std::string>           names;
    std::vector<std::vector<Elem>>     product(7);
    std::vector<std::pair<Elem, Elem>> order;
    std::vector<std::optional<Elem>>   sharp(7);
    for (Elem x = 0; x < 7; ++x) {
      names.push_back(to_string(kSElems[x]));
      for (Elem y = 0; y < 7; ++y) {
        product[x].push_back(static_cast<Elem>(s_product(kSElems[x], kSElems[y])));
        if (s_leq(kSElems[x], kSElems[y])) {
          order.emplace_back(x, y);
        }
      }
      if (s_sharp_defined(kSElems[x])) {
        sharp[x] = static_cast<Elem>(s_sharp(kSElems[x]));
      }
    }
    return StabSemigroup(names, product, order, sharp, static_cast<Elem>(S::e));
  }
}  // namespace

TEST_CASE("the product table, entry by entry") {
  for (int x = 0; x < 7; ++x) {
    for (int y = 0; y < 7; ++y) {
      INFO(to_string(kSElems[x]) << " * " << to_string(kSElems[y]));
      CHECK(s_product(kSElems[x], kSElems[y]) == kProduct[x][y]);
    }
  }
  CHECK(s_product(S::omega, S::cr) == S::r);
  CHECK(s_product(S::cr, S::omega) == S::cromega);
  for (auto x : kSElems) {
    CHECK(s_product(S::e, x) == x);
    CHECK(s_product(x, S::e) == x);
  }
}

TEST_CASE("sharp") {
  CHECK(s_sharp(S::omega) == S::omega);
  CHECK(s_sharp(S::i) == S::omega);
  CHECK(s_sharp(S::e) == S::e);
  CHECK(s_sharp(S::r) == S::r);
  CHECK(s_sharp(S::cromega) == S::cromega);
  CHECK(s_sharp(S::bot) == S::bot);
  CHECK_FALSE(s_sharp_defined(S::cr));
  CHECK_THROWS_AS(s_sharp(S::cr), DomainError);
}

TEST_CASE("the order is the closure of the covering pairs") {
  for (auto x : kSElems) {
    for (auto y : kSElems) {
      INFO(to_string(x) << " <= " << to_string(y));
      CHECK(s_leq(x, y) == reachable(x, y));
    }
  }
  CHECK_FALSE(s_leq(S::r, S::cromega));
  CHECK_FALSE(s_leq(S::cromega, S::r));
}

TEST_CASE("associativity on all 343 triples") {
  int checked = 0;
  for (auto x : kSElems) {
    for (auto y : kSElems) {
      for (auto z : kSElems) {
        CHECK(s_product(s_product(x, y), z) == s_product(x, s_product(y, z)));
        ++checked;
      }
    }
  }
  CHECK(checked == 343);
}

TEST_CASE("every element but cr is idempotent") {
  for (auto x : kSElems) {
    CHECK((s_product(x, x) == x) == (x != S::cr));
  }
  CHECK(s_product(S::cr, S::cr) == S::bot);
}

TEST_CASE("the action semigroup satisfies the stabilization axioms") {
  auto diagnostics = validate_axioms(as_semigroup());
  for (auto const& d : diagnostics) {
    UNSCOPED_INFO(d);
  }
  CHECK(diagnostics.empty());
}

TEST_CASE("corrupting one entry breaks the axioms") {
  auto sg = as_semigroup();
  std::vector<std::vector<Elem>> product(7);
  std::vector<std::optional<Elem>> sharp;
  std::vector<std::pair<Elem, Elem>> order;
  for (Elem x = 0; x < 7; ++x) {
    for (Elem y = 0; y < 7; ++y) {
      product[x].push_back(sg.product(x, y));
      if (sg.leq(x, y)) {
        order.emplace_back(x, y);
      }
    }
    sharp.push_back(sg.sharp_entry(x));
  }
  product[static_cast<Elem>(S::omega)][static_cast<Elem>(S::cr)]
      = static_cast<Elem>(S::omega);
  StabSemigroup bad(sg.names(), product, order, sharp, sg.neutral());
  auto          diagnostics = validate_axioms(bad);
  REQUIRE_FALSE(diagnostics.empty());
  bool assoc = false;
  for (auto const& d : diagnostics) {
    assoc = assoc || d.find("associativ") != std::string::npos;
  }
  CHECK(assoc);
}

TEST_CASE("B sequences") {
  auto r = b_seq_value(parse_op_seq("ic r ic ic"));
  CHECK(r.value == 2);
  CHECK(r.final == 2);
  CHECK(b_seq_value(parse_op_seq("e e e")).value == 0);
  CHECK(b_seq_value(parse_op_seq("ic ic ic")).value == 3);
  CHECK(b_seq_value(parse_op_seq("ic"), 4).value == 5);
  CHECK(b_seq_value(parse_op_seq("r"), 4).value == 0);
}

TEST_CASE("B sequences compose") {
  std::vector<CounterOp> const ops{CounterOp::e, CounterOp::ic, CounterOp::r};
  for (int mask = 0; mask < 729; ++mask) {
    OpSeq s1, s2;
    int   m = mask;
    for (int k = 0; k < 3; ++k, m /= 3) {
      s1.push_back(ops[m % 3]);
    }
    for (int k = 0; k < 3; ++k, m /= 3) {
      s2.push_back(ops[m % 3]);
    }
    OpSeq both = s1;
    both.insert(both.end(), s2.begin(), s2.end());
    auto first  = b_seq_value(s1);
    auto second = b_seq_value(s2, first.final);
    CHECK(b_seq_value(both).value == std::max(first.value, second.value));
    CHECK(b_seq_value(both).final == second.final);
  }
}

TEST_CASE("contraction keeps the largest action") {
  CHECK(contract_max(parse_op_seq("ic r ic ic")) == CounterOp::r);
  CHECK(contract_max(parse_op_seq("e e")) == CounterOp::e);
  CHECK(contract_max(parse_op_seq("ic ic")) == CounterOp::ic);
  CHECK(contract_max(OpSeq()) == CounterOp::e);
}

TEST_CASE("S atomic actions embed") {
  CHECK(atomic_s_to_elem(CounterOp::i) == S::i);
  CHECK(atomic_s_to_elem(CounterOp::cr) == S::cr);
  CHECK(atomic_s_to_elem(CounterOp::e) == S::e);
  CHECK(atomic_s_to_elem(CounterOp::r) == S::r);
  CHECK_THROWS_AS(atomic_s_to_elem(CounterOp::ic), DomainError);
  CHECK(compose_s(parse_op_seq("i cr")) == S::cr);
  CHECK(compose_s(parse_op_seq("i i")) == S::i);
  CHECK(compose_s(OpSeq()) == S::e);
}

TEST_CASE("action vectors act componentwise") {
  SActionVec x{S::i, S::cr}, y{S::cr, S::omega};
  CHECK(s_product(x, y) == SActionVec{S::cr, S::cromega});
  CHECK_FALSE(s_sharp_defined(x));
  CHECK(s_sharp(SActionVec{S::i, S::e}) == SActionVec{S::omega, S::e});
  CHECK(s_leq(SActionVec{S::omega, S::e}, SActionVec{S::i, S::e}));
  CHECK_FALSE(s_leq(SActionVec{S::omega, S::r}, SActionVec{S::i, S::cromega}));
  CHECK(s_neutral(3) == SActionVec(3, S::e));
  CHECK(s_is_good(SActionVec{S::r, S::omega}));
  CHECK_FALSE(s_is_good(SActionVec{S::r, S::cromega}));
  CHECK_FALSE(s_is_good(SActionVec{S::bot}));
}

TEST_CASE("action tokens") {
  CHECK(to_string(parse_op_seq("ic  r")) == "ic r");
  CHECK(to_string(OpSeq()) == "e");
  CHECK(parse_op_seq("e") == OpSeq{CounterOp::e});
  CHECK_THROWS_AS(parse_counter_op("x"), SyntaxError);
  for (auto x : kSElems) {
    CHECK(parse_selem(to_string(x)) == x);
  }
  CHECK(is_b_op(CounterOp::ic));
  CHECK_FALSE(is_b_op(CounterOp::cr));
  CHECK(is_s_op(CounterOp::cr));
  CHECK_FALSE(is_s_op(CounterOp::ic));
}
