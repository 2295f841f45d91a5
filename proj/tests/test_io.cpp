#include <filesystem>
#include <fstream>
#include <sstream>

#include "catch_amalgamated.hpp"

#include "costltl/io.hpp"

using namespace costltl;

namespace {
  std::string const data = COSTLTL_DATA;

  std::string slurp(std::string const& path) {
    std::ifstream      in(path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
  }

  std::size_t error_line(auto&& read, std::string const& text) {
    std::istringstream in(text);
    try {
      read(in);
    } catch (SyntaxError const& e) {
      return e.position();
    }
    return 0;
  }

  auto const read_aut = [](std::istream& in) { return read_automaton(in); };
  auto const read_sg  = [](std::istream& in) { return read_semigroup(in); };
  auto const read_ltl = [](std::istream& in) { return read_formulas(in); };
}  // namespace

TEST_CASE("data files round trip byte for byte") {
  for (auto const& entry : std::filesystem::directory_iterator(data)) {
    auto path = entry.path().string();
    auto ext  = entry.path().extension();
    INFO(path);
    if (ext == ".aut") {
      CHECK(write_automaton(load_automaton(path)) == slurp(path));
    } else if (ext == ".sg") {
      auto file = load_semigroup(path);
      auto text = file.rec ? write_recognizer(*file.rec)
                           : write_semigroup(file.sg);
      CHECK(text == slurp(path));
    } else if (ext == ".ltl") {
      CHECK(write_formulas(load_formulas(path)) == slurp(path));
    }
  }
}

TEST_CASE("automaton files") {
  auto aut = load_automaton(data + "/min-block.aut");
  CHECK(aut.polarity == Polarity::B);
  CHECK(aut.states == std::vector<std::string>{"q1", "q2", "q3"});
  CHECK(aut.initial == std::vector<std::size_t>{0, 1});
  CHECK(aut.counters == 1);
  std::istringstream in(
      "costltl-format 1\n"
      "# comment\n"
      "\n"
      "kind S\n"
      "alphabet ab\n"
      "counters 2\n"
      "states p q\n"
      "initial p\n"
      "final q\n"
      "transition p a q | i i | e\n");
  auto s = read_automaton(in);
  CHECK(s.polarity == Polarity::S);
  REQUIRE(s.transitions.size() == 1);
  CHECK(s.transitions[0].actions
        == std::vector<OpSeq>{{CounterOp::i, CounterOp::i}, {CounterOp::e}});
}

TEST_CASE("automaton errors carry line numbers") {
  std::string const head
      = "costltl-format 1\nkind B\nalphabet ab\ncounters 1\nstates p\n"
        "initial p\nfinal p\n";
  CHECK(error_line(read_aut, "costltl-format 2\n") == 1);
  CHECK(error_line(read_aut, head + "transition p a q | ic\n") == 8);
  CHECK(error_line(read_aut, head + "transition p a p\n") == 8);
  CHECK(error_line(read_aut, head + "transition p c p | ic\n") == 8);
  CHECK(error_line(read_aut, head + "transition p a p | ic\nfrob x\n") == 9);
  CHECK(error_line(read_aut, head + "\n\ntransition p a p | cr\n") == 10);
  CHECK(error_line(read_aut, head + "kind S\n") == 8);
  CHECK(error_line(read_aut, "costltl-format 1\nkind X\n") == 2);
  CHECK_THROWS_WITH(load_automaton(data + "/missing.aut"),
                    Catch::Matchers::ContainsSubstring("cannot open"));
}

TEST_CASE("semigroup errors carry line numbers") {
  std::string const table
      = "costltl-format 1\nelements x y\nproduct\nx x\nx y\n";
  CHECK(error_line(read_sg, table + "sharp x:x y:y\n") == 0);
  CHECK(error_line(read_sg, table + "sharp x:z\n") == 6);
  CHECK(error_line(read_sg, table + "order x<y\n") == 6);
  CHECK(error_line(read_sg, "costltl-format 1\nelements x y\nproduct\nx x\n")
        > 0);
  CHECK(error_line(read_sg, "costltl-format 1\nelements x y\nproduct\nx x\ny\n")
        == 5);
  CHECK(error_line(read_sg, table + "sharp x:x y:y\nalphabet a\n") > 0);
}

TEST_CASE("recognizer height defaults") {
  std::istringstream in(
      "costltl-format 1\nelements x\nproduct\nx\nsharp x:x\n"
      "alphabet a\nh a:x\nideal\n");
  auto file = read_semigroup(in);
  REQUIRE(file.rec);
  CHECK(file.rec->height == 3);
  CHECK(file.rec->ideal == std::vector<bool>{false});
}

TEST_CASE("formula files") {
  auto file = load_formulas(data + "/future-a.ltl");
  CHECK(file.alphabet == Alphabet::from_string("ab"));
  CHECK(file.formulas
        == std::vector<std::string>{"(b | X a | X F a) U# END",
                                    "(a | X a | X F a) U# END"});
  CHECK(error_line(read_ltl, "costltl-format 1\nalphabet ab\nformula\n") == 3);
  CHECK(error_line(read_ltl, "costltl-format 1\nalphabet ab\nformla a\n") == 3);
}
