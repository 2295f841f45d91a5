// costltl: command-line front end.
//
// Exit codes: 0 success or affirmative verdict, 1 negative verdict, 2 usage
// or input error.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "costltl/automata.hpp"
#include "costltl/batch.hpp"
#include "costltl/bounded.hpp"
#include "costltl/eval.hpp"
#include "costltl/formula.hpp"
#include "costltl/io.hpp"
#include "costltl/minimize.hpp"
#include "costltl/semigroup.hpp"
#include "costltl/translate.hpp"

namespace fs = std::filesystem;
using namespace costltl;

namespace {

  struct Options {
    std::string                alphabet;
    std::string                formula;
    std::string                word;
    std::string                automaton;
    std::string                semigroup;
    std::string                output;
    std::string                expr;
    std::string                method = "onthefly";
    std::string                directory;
    std::optional<std::size_t> height;
    std::size_t                length = 6;
    bool                       porcelain = false;
    bool                       contract  = false;
    bool                       nltl      = false;
    bool                       sup       = false;
  };

  Alphabet need_alphabet(Options const& o) {
    if (o.alphabet.empty()) {
      throw Error("--alphabet is required with -f");
    }
    return Alphabet::from_string(o.alphabet);
  }

  Formula need_formula(Options const& o) {
    if (o.formula.empty()) {
      throw Error("-f <formula> is required");
    }
    return parse(o.formula, need_alphabet(o));
  }

  void emit(Options const& o, std::string const& text) {
    if (o.output.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream out(o.output);
    if (!out) {
      throw Error("cannot write '" + o.output + "'");
    }
    out << text;
  }

  Recognizer need_recognizer(Options const& o) {
    auto file = load_semigroup(o.semigroup);
    if (!file.rec) {
      throw Error("'" + o.semigroup + "' has no recognizer block");
    }
    if (o.height) {
      file.rec->height = *o.height;
    }
    return *file.rec;
  }

  ////////////////////////////////////////////////////////////////////////
  // Commands
  ////////////////////////////////////////////////////////////////////////

  int cmd_eval(Options const& o) {
    Formula phi = need_formula(o);
    Word    u   = parse_word(o.word, phi.alphabet());
    bool    sup = o.sup || !phi.is_ltl();
    std::cout << (sup ? sem_sup(phi, u) : sem_inf(phi, u)) << "\n";
    return 0;
  }

  int cmd_eval_aut(Options const& o) {
    auto aut = load_automaton(o.automaton);
    std::cout << evaluate(aut, parse_word(o.word, aut.alphabet)) << "\n";
    return 0;
  }

  int cmd_compile_b(Options const& o) {
    Formula phi = need_formula(o);
    if (!phi.is_ltl()) {
      throw DomainError("compile-b takes an LTL formula (no R#)");
    }
    auto aut = ltl_to_b(phi);
    if (o.contract) {
      auto [contracted, k] = contract_b(aut);
      emit(o, write_automaton(contracted) + "# K " + std::to_string(k) + "\n");
      return 0;
    }
    emit(o, write_automaton(aut));
    return 0;
  }

  Formula s_input(Options const& o) {
    Formula phi = need_formula(o);
    if (o.nltl) {
      if (!phi.is_nltl()) {
        throw DomainError("--nltl takes a formula without U#");
      }
      return phi;
    }
    if (!phi.is_ltl()) {
      throw DomainError("expected an LTL formula (no R#); use --nltl");
    }
    return dualize(phi);
  }

  int cmd_compile_s(Options const& o) {
    emit(o, write_automaton(nltl_to_s(s_input(o))));
    return 0;
  }

  int cmd_bounded(Options const& o) {
    if (o.method != "onthefly" && o.method != "closure" && o.method != "both") {
      throw Error("--method must be onthefly, closure or both");
    }
    CostAutomaton aut;
    if (!o.automaton.empty()) {
      aut = load_automaton(o.automaton);
      if (aut.polarity != Polarity::S) {
        throw DomainError("boundedness is decided on S-automata");
      }
    } else {
      aut = nltl_to_s(s_input(o));
    }
    std::optional<BoundedReport> fly;
    std::optional<bool>          closure;
    if (o.method != "closure") {
      fly = bounded_onthefly(aut);
    }
    if (o.method != "onthefly") {
      closure = !run_semigroup_closure(aut).unbounded;
    }
    if (fly && closure && fly->bounded != *closure) {
      std::cerr << "error: the two methods disagree (onthefly: "
                << (fly->bounded ? "bounded" : "unbounded")
                << ", closure: " << (*closure ? "bounded" : "unbounded")
                << ")\n";
      return 2;
    }
    bool const bounded = fly ? fly->bounded : *closure;
    std::cout << (bounded ? "bounded" : "unbounded") << "\n";
    if (!o.porcelain && fly && fly->witness) {
      std::cout << "witness: " << fly->witness->describe(aut) << "\n";
      std::cout << "word(n=2): " << to_utf8(fly->witness->pump(aut, 2))
                << "\n";
    }
    return bounded ? 0 : 1;
  }

  int cmd_sg_check(Options const& o) {
    auto file = load_semigroup(o.semigroup);
    auto diag = validate_axioms(file.sg);
    if (file.rec) {
      auto more = validate(*file.rec);
      diag.insert(diag.end(), more.begin(), more.end());
    }
    if (diag.empty()) {
      std::cout << "OK\n";
      return 0;
    }
    for (auto const& d : diag) {
      std::cout << d << "\n";
    }
    return 1;
  }

  int cmd_sg_recognize(Options const& o) {
    auto rec = need_recognizer(o);
    std::cout << recognize(rec, parse_word(o.word, rec.alphabet)) << "\n";
    return 0;
  }

  int cmd_sg_classify(Options const& o) {
    auto rec = need_recognizer(o);
    auto e   = parse_expr(o.expr, rec.alphabet);
    std::cout << to_string(classify(rec, *e)) << "\n";
    return 0;
  }

  int cmd_minimize(Options const& o) {
    auto q = syntactic_quotient(need_recognizer(o));
    emit(o, write_recognizer(q.rec));
    if (!o.output.empty() && !o.porcelain) {
      std::cout << q.rec.sg.size() << " classes\n";
    }
    return 0;
  }

  int cmd_aperiodic(Options const& o) {
    auto file = load_semigroup(o.semigroup);
    auto r    = is_aperiodic(file.sg);
    if (o.porcelain) {
      std::cout << (r.aperiodic ? "true" : "false") << "\n";
    } else if (r.aperiodic) {
      std::cout << "aperiodic (k = " << r.k << ")\n";
    } else {
      std::cout << "not aperiodic";
      if (r.witness) {
        std::cout << " (" << file.sg.name(*r.witness) << ")";
      }
      std::cout << "\n";
    }
    return r.aperiodic ? 0 : 1;
  }

  int cmd_definable(Options const& o) {
    Recognizer rec;
    if (!o.semigroup.empty()) {
      rec = need_recognizer(o);
    } else {
      ClosureOptions opts;
      rec = run_semigroup_recognizer(nltl_to_s(s_input(o)), opts);
    }
    auto q = syntactic_quotient(rec);
    bool ok = is_aperiodic(q.rec.sg).aperiodic;
    std::cout << (ok ? "definable" : "not definable");
    if (!o.porcelain) {
      std::cout << " (" << q.rec.sg.size() << " classes)";
    }
    std::cout << "\n";
    return ok ? 0 : 1;
  }

  ////////////////////////////////////////////////////////////////////////
  // Corpus
  ////////////////////////////////////////////////////////////////////////

  struct Row {
    std::string file;
    std::string item;
    std::string check;
    bool        pass = true;
    std::string detail;
  };

  bool within_one(CostValue x, CostValue y) {
    if (x.is_infinite() || y.is_infinite()) {
      return x == y;
    }
    auto a = x.value(), b = y.value();
    return (a > b ? a - b : b - a) <= 1;
  }

  std::string mismatch(Word const& u, CostValue x, CostValue y) {
    return "u=\"" + to_utf8(u) + "\": " + x.to_string() + " vs "
           + y.to_string();
  }

  // One formula of a corpus file: exact translation, duality, oracles.
  std::vector<Row> formula_rows(std::string const& file, Alphabet const& alpha,
                                std::string const& text, std::size_t length) {
    std::vector<Row> rows;
    Formula          phi   = parse(text, alpha);
    auto const       words = words_up_to(alpha, length);
    auto             exact = [&](std::string check, CostAutomaton const& aut,
                     auto const& sem) {
      Row row{file, text, std::move(check), true, ""};
      for (auto const& u : words) {
        auto x = evaluate(aut, u), y = sem(u);
        if (x != y) {
          row.pass   = false;
          row.detail = mismatch(u, x, y);
          break;
        }
      }
      rows.push_back(std::move(row));
    };
    if (phi.is_ltl()) {
      exact("B translation", ltl_to_b(phi),
            [&](Word const& u) { return sem_inf(phi, u); });
      Formula dual = dualize(phi);
      auto    s    = nltl_to_s(dual);
      Row     row{file, text, "duality", true, ""};
      for (auto const& u : words) {
        auto x = eval_s(s, u), y = sem_inf(phi, u);
        if (!within_one(x, y) || !within_one(sem_sup(dual, u), y)) {
          row.pass   = false;
          row.detail = mismatch(u, x, y);
          break;
        }
      }
      rows.push_back(std::move(row));
      bool fly = bounded_onthefly(s).bounded;
      bool cl  = !run_semigroup_closure(s).unbounded;
      rows.push_back({file, text, "oracles", fly == cl,
                      fly ? "bounded" : "unbounded"});
    }
    if (phi.is_nltl()) {
      exact("S translation", nltl_to_s(phi),
            [&](Word const& u) { return sem_sup(phi, u); });
    }
    return rows;
  }

  std::vector<Row> automaton_rows(std::string const& file) {
    std::vector<Row> rows;
    std::ifstream    in(file);
    std::stringstream text;
    text << in.rdbuf();
    std::istringstream again(text.str());
    auto               aut = read_automaton(again);
    rows.push_back({file, "-", "round trip", write_automaton(aut) == text.str(),
                    ""});
    if (aut.polarity == Polarity::S) {
      bool fly = bounded_onthefly(aut).bounded;
      bool cl  = !run_semigroup_closure(aut).unbounded;
      rows.push_back(
          {file, "-", "oracles", fly == cl, fly ? "bounded" : "unbounded"});
    }
    return rows;
  }

  std::vector<Row> semigroup_rows(std::string const& file,
                                  std::size_t        length) {
    std::vector<Row> rows;
    std::ifstream    in(file);
    std::stringstream text;
    text << in.rdbuf();
    std::istringstream again(text.str());
    auto               sg   = read_semigroup(again);
    auto               diag = validate_axioms(sg.sg);
    rows.push_back({file, "-", "axioms", diag.empty(),
                    diag.empty() ? "" : diag.front()});
    std::string back
        = sg.rec ? write_recognizer(*sg.rec) : write_semigroup(sg.sg);
    rows.push_back({file, "-", "round trip", back == text.str(), ""});
    if (sg.rec) {
      auto q = syntactic_quotient(*sg.rec);
      std::vector<Word> sample;
      for (auto& u : words_up_to(sg.rec->alphabet, length)) {
        if (!u.empty()) {
          sample.push_back(std::move(u));
        }
      }
      // the two recognize the same cost function, which only fixes values
      // up to a correction function: demand exact agreement on where the
      // value is infinite, and report whether the finite values agree too
      bool exact = true, same_support = true;
      for (auto const& u : sample) {
        auto x = recognize(*sg.rec, u), y = recognize(q.rec, u);
        exact        = exact && x == y;
        same_support = same_support && x.is_finite() == y.is_finite();
      }
      Row row{file, "-", "quotient", same_support,
              std::to_string(q.rec.sg.size()) + " classes, "
                  + (exact ? "exact" : "finite values differ")};
      rows.push_back(std::move(row));
    }
    return rows;
  }

  int cmd_corpus(Options const& o) {
    std::vector<fs::path> paths;
    for (auto const& entry : fs::directory_iterator(o.directory)) {
      if (entry.is_regular_file()) {
        paths.push_back(entry.path());
      }
    }
    std::sort(paths.begin(), paths.end());

    std::vector<std::function<std::vector<Row>()>> cases;
    for (auto const& p : paths) {
      std::string const name = p.filename().string();
      std::string const ext  = p.extension().string();
      if (ext == ".ltl") {
        auto file = load_formulas(p.string());
        for (auto const& text : file.formulas) {
          cases.push_back([=, alpha = file.alphabet] {
            return formula_rows(name, alpha, text, o.length);
          });
        }
      } else if (ext == ".aut") {
        cases.push_back([=] { return automaton_rows(p.string()); });
      } else if (ext == ".sg") {
        cases.push_back([=] { return semigroup_rows(p.string(), o.length); });
      }
    }

    std::vector<std::vector<Row>> results(cases.size());
    auto const                    n = static_cast<std::ptrdiff_t>(cases.size());
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t k = 0; k < n; ++k) {
      try {
        results[k] = cases[k]();
      } catch (std::exception const& e) {
        results[k] = {{"?", "?", "load", false, e.what()}};
      }
    }

    std::size_t passed = 0, total = 0;
    for (auto const& rows : results) {
      for (auto const& r : rows) {
        ++total;
        passed += r.pass;
        if (o.porcelain) {
          std::cout << r.file << "\t" << r.item << "\t" << r.check << "\t"
                    << (r.pass ? "pass" : "FAIL") << "\t" << r.detail << "\n";
        } else {
          std::cout << (r.pass ? "pass  " : "FAIL  ") << r.file << "  "
                    << r.item << "  [" << r.check << "]"
                    << (r.detail.empty() ? "" : "  " + r.detail) << "\n";
        }
      }
    }
    std::cout << passed << "/" << total << " checks passed\n";
    return passed == total ? 0 : 1;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cost LTL over finite words: evaluation, translation to cost "
               "automata, boundedness, stabilization semigroups."};
  app.require_subcommand(1);
  Options                  o;
  std::function<int()>     run;

  auto formula_flags = [&](CLI::App* c) {
    c->add_option("--alphabet", o.alphabet, "letters, e.g. ab");
    c->add_option("-f,--formula", o.formula, "formula text");
  };
  auto porcelain = [&](CLI::App* c) {
    c->add_flag("--porcelain", o.porcelain, "stable machine-readable output");
  };

  auto* eval = app.add_subcommand("eval", "value of a formula on a word");
  formula_flags(eval);
  eval->add_option("-w,--word", o.word, "the word; \"\" for empty")->required();
  eval->add_flag("--sup", o.sup, "sup semantics (default for R# formulae)");
  eval->callback([&] { run = [&] { return cmd_eval(o); }; });

  auto* eval_aut = app.add_subcommand("eval-aut", "value of an automaton");
  eval_aut->add_option("-a,--automaton", o.automaton)->required();
  eval_aut->add_option("-w,--word", o.word)->required();
  eval_aut->callback([&] { run = [&] { return cmd_eval_aut(o); }; });

  auto* compile_b = app.add_subcommand("compile-b", "formula to B-automaton");
  formula_flags(compile_b);
  compile_b->add_option("-o,--output", o.output);
  compile_b->add_flag("--contract", o.contract, "one atomic action per counter");
  compile_b->callback([&] { run = [&] { return cmd_compile_b(o); }; });

  auto* compile_s = app.add_subcommand("compile-s", "formula to S-automaton");
  formula_flags(compile_s);
  compile_s->add_option("-o,--output", o.output);
  compile_s->add_flag("--nltl", o.nltl, "the input is already dual (R#)");
  compile_s->callback([&] { run = [&] { return cmd_compile_s(o); }; });

  auto* bounded = app.add_subcommand("bounded", "boundedness decision");
  formula_flags(bounded);
  bounded->add_option("-a,--automaton", o.automaton, "an S-automaton file");
  bounded->add_flag("--nltl", o.nltl);
  bounded->add_option("--method", o.method, "onthefly, closure or both");
  porcelain(bounded);
  bounded->callback([&] { run = [&] { return cmd_bounded(o); }; });

  auto* sg = app.add_subcommand("semigroup", "stabilization semigroups");
  sg->require_subcommand(1);
  auto* check = sg->add_subcommand("check", "validate axioms");
  check->add_option("-s,--semigroup", o.semigroup)->required();
  check->callback([&] { run = [&] { return cmd_sg_check(o); }; });
  auto* recog = sg->add_subcommand("recognize", "value of a word");
  recog->add_option("-s,--semigroup", o.semigroup)->required();
  recog->add_option("-w,--word", o.word)->required();
  recog->add_option("--height", o.height);
  recog->callback([&] { run = [&] { return cmd_sg_recognize(o); }; });
  auto* classify = sg->add_subcommand("classify", "bounded or divergent");
  classify->add_option("-s,--semigroup", o.semigroup)->required();
  classify->add_option("-e,--expr", o.expr, "e.g. \"(ab)^w#\"")->required();
  classify->callback([&] { run = [&] { return cmd_sg_classify(o); }; });

  auto* minimize = app.add_subcommand("minimize", "syntactic quotient");
  minimize->add_option("-s,--semigroup", o.semigroup)->required();
  minimize->add_option("-o,--output", o.output);
  porcelain(minimize);
  minimize->callback([&] { run = [&] { return cmd_minimize(o); }; });

  auto* aperiodic = app.add_subcommand("aperiodic", "aperiodicity test");
  aperiodic->add_option("-s,--semigroup", o.semigroup)->required();
  porcelain(aperiodic);
  aperiodic->callback([&] { run = [&] { return cmd_aperiodic(o); }; });

  auto* definable = app.add_subcommand("definable", "LTL definability");
  definable->add_option("-s,--semigroup", o.semigroup);
  formula_flags(definable);
  porcelain(definable);
  definable->callback([&] { run = [&] { return cmd_definable(o); }; });

  auto* corpus = app.add_subcommand("corpus", "run the checks over a directory");
  corpus->add_option("directory", o.directory)->required();
  corpus->add_option("--length", o.length, "longest sample word (default 6)");
  porcelain(corpus);
  corpus->callback([&] { run = [&] { return cmd_corpus(o); }; });

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return 2;
  }
  try {
    return run();
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
