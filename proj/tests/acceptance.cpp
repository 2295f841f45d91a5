// One line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "costltl/bounded.hpp"
#include "costltl/eval.hpp"
#include "costltl/io.hpp"
#include "costltl/minimize.hpp"
#include "costltl/translate.hpp"
#include "oracles.hpp"

using namespace costltl;

namespace {
  Alphabet const    ab   = Alphabet::from_string("ab");
  std::string const data = COSTLTL_DATA;

  // pinned tolerances
  constexpr std::size_t   kCorpusMin        = 30;
  constexpr std::size_t   kCorpusDepth      = 5;
  constexpr std::size_t   kCorpusBounded    = 2;
  constexpr std::size_t   kCorpusWordLength = 7;
  constexpr double        kCorpusSeconds    = 300;
  constexpr std::size_t   kCountLength      = 10;
  constexpr std::uint64_t kFutureMax        = 2;
  constexpr std::size_t   kFutureLength     = 8;
  constexpr std::uint64_t kFuturePump       = 12;
  constexpr double        kAlgebraSeconds   = 1;
  constexpr std::uint64_t kWitnessPump      = 6;
  constexpr std::size_t   kRecognizeHeight  = 9;
  constexpr std::size_t   kParityClasses    = 4;
  constexpr std::size_t   kCountClasses     = 3;
  constexpr std::size_t   kPaddedClasses    = 3;
  constexpr int           kDualityPairs     = 200;
  constexpr std::size_t   kDualityLength    = 6;
  constexpr std::uint64_t kDualitySlack     = 1;

  int failures = 0;

  void report(int number, bool pass, std::string const& what,
              std::string const& observed) {
    std::printf("criterion %d: %s  %s [%s]\n", number, pass ? "PASS" : "FAIL",
                what.c_str(), observed.c_str());
    std::fflush(stdout);
    failures += pass ? 0 : 1;
  }

  std::string slurp(std::string const& path) {
    std::ifstream      in(path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
  }

  double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now()
                                         - start)
        .count();
  }

  std::size_t count_kind(Node const& x, Kind k) {
    std::size_t n = x.kind == k ? 1 : 0;
    if (x.left) {
      n += count_kind(*x.left, k);
    }
    if (x.right) {
      n += count_kind(*x.right, k);
    }
    return n;
  }

  std::vector<Formula> corpus() {
    std::vector<Formula> out;
    for (auto const& text : load_formulas(data + "/corpus.ltl").formulas) {
      out.push_back(parse(text, ab));
    }
    return out;
  }

  // distance, with inf only at distance 0 from inf
  bool within(CostValue x, CostValue y, std::uint64_t slack) {
    if (x.is_infinite() || y.is_infinite()) {
      return x == y;
    }
    auto p = x.value(), q = y.value();
    return (p > q ? p - q : q - p) <= slack;
  }

  void criterion_1() {
    auto        start = std::chrono::steady_clock::now();
    auto        phis  = corpus();
    auto const  words = words_up_to(ab, kCorpusWordLength);
    bool        shape = phis.size() >= kCorpusMin;
    std::size_t mismatches = 0;
    for (auto const& phi : phis) {
      shape = shape && depth(*phi.root()) <= kCorpusDepth
              && count_kind(*phi.root(), Kind::until_leq) <= kCorpusBounded;
      auto aut = ltl_to_b(phi);
      for (auto const& u : words) {
        mismatches += eval_b(aut, u) == sem_inf(phi, u) ? 0 : 1;
      }
    }
    double secs = seconds_since(start);
    report(1, shape && mismatches == 0 && secs < kCorpusSeconds,
           "B translation exact on the corpus, words <= 7",
           std::to_string(phis.size()) + " formulae x "
               + std::to_string(words.size()) + " words, "
               + std::to_string(mismatches) + " mismatches, "
               + std::to_string(secs) + " s");
  }

  void criterion_2() {
    auto        phi = parse("!a U# END", ab);
    auto        aut = ltl_to_b(phi);
    std::size_t n = 0, bad = 0;
    for (auto const& u : words_up_to(ab, kCountLength)) {
      if (u.empty()) {
        continue;
      }
      ++n;
      CostValue a = count_letter(ab, u, U'a');
      bad += sem_inf(phi, u) == a && eval_b(aut, u) == a ? 0 : 1;
    }
    report(2, n == 2046 && bad == 0, "(!a) U# END counts a's",
           std::to_string(n) + " words, " + std::to_string(bad) + " wrong");
  }

  void criterion_3() {
    auto yes = parse("(b | X a | X F a) U# END", ab);
    auto no  = parse("(a | X a | X F a) U# END", ab);
    bool yes_bounded = bounded_formula(yes).bounded;
    bool no_bounded  = bounded_formula(no).bounded;
    CostValue most = 0;
    for (auto const& u : words_up_to(ab, kFutureLength)) {
      most = max(most, sem_inf(yes, u));
    }
    bool pumps = true;
    for (std::uint64_t n = 0; n <= kFuturePump; ++n) {
      pumps = pumps && sem_inf(no, Word(n, U'b')) == CostValue(n);
    }
    report(3,
           yes_bounded && !no_bounded && most == CostValue(kFutureMax) && pumps,
           "future formulae: bounded with max 2, unbounded with b^n -> n",
           std::string("verdicts ") + (yes_bounded ? "bounded" : "unbounded")
               + "/" + (no_bounded ? "bounded" : "unbounded")
               + ", max over words <= 8 is " + most.to_string()
               + ", b^n -> n " + (pumps ? "holds" : "fails"));
  }

  void criterion_4() {
    auto                               start = std::chrono::steady_clock::now();
    std::vector<std::string>           names;
    std::vector<std::vector<Elem>>     product(kSElemCount);
    std::vector<std::pair<Elem, Elem>> order;
    std::vector<std::optional<Elem>>   sharp;
    auto index = [](SElem x) {
      return Elem(std::find(kSElems.begin(), kSElems.end(), x) - kSElems.begin());
    };
    for (auto x : kSElems) {
      names.push_back(to_string(x));
      for (auto y : kSElems) {
        product[index(x)].push_back(index(s_product(x, y)));
        if (s_leq(x, y)) {
          order.emplace_back(index(x), index(y));
        }
      }
      sharp.push_back(s_sharp_defined(x) ? std::optional(index(s_sharp(x)))
                                         : std::nullopt);
    }
    StabSemigroup built(names, product, order, sharp, index(SElem::e));
    bool exact = write_semigroup(built) == slurp(data + "/saction.sg");

    auto        sg      = load_semigroup(data + "/saction.sg").sg;
    std::size_t triples = 0, broken = 0;
    for (Elem x = 0; x < sg.size(); ++x) {
      for (Elem y = 0; y < sg.size(); ++y) {
        for (Elem z = 0; z < sg.size(); ++z) {
          ++triples;
          broken += sg.product(sg.product(x, y), z)
                            == sg.product(x, sg.product(y, z))
                        ? 0
                        : 1;
        }
      }
    }
    auto   axioms = validate_axioms(sg);
    double secs   = seconds_since(start);
    report(4,
           exact && triples == 343 && broken == 0 && axioms.empty()
               && secs < kAlgebraSeconds,
           "S-action semigroup: table, associativity, sharp, order",
           std::string(exact ? "fixture bit-exact" : "fixture differs") + ", "
               + std::to_string(broken) + "/" + std::to_string(triples)
               + " non-associative, " + std::to_string(axioms.size())
               + " axiom violations, " + std::to_string(secs) + " s");
  }

  bool witness_pumps(CostAutomaton const& aut, BoundedReport const& rep) {
    if (!rep.witness) {
      return false;
    }
    for (std::uint64_t n = 1; n <= kWitnessPump; ++n) {
      if (eval_s(aut, rep.witness->pump(aut, n)) < CostValue(n)) {
        return false;
      }
    }
    return true;
  }

  void criterion_5() {
    std::vector<CostAutomaton> auts;
    for (auto const& phi : corpus()) {
      auts.push_back(nltl_to_s(dualize(phi)));
    }
    auts.push_back(load_automaton(data + "/count-a-s.aut"));
    auts.push_back(load_automaton(data + "/blocks-s.aut"));
    std::size_t disagree = 0, unbounded = 0, weak = 0;
    for (auto const& aut : auts) {
      auto rep = bounded_onthefly(aut);
      disagree += rep.bounded == !run_semigroup_closure(aut).unbounded ? 0 : 1;
      if (!rep.bounded) {
        ++unbounded;
        weak += witness_pumps(aut, rep) ? 0 : 1;
      }
    }
    report(5, disagree == 0 && weak == 0,
           "on-the-fly and closure agree; witnesses pump",
           std::to_string(auts.size()) + " automata, "
               + std::to_string(disagree) + " disagreements, "
               + std::to_string(unbounded) + " unbounded, "
               + std::to_string(weak) + " weak witnesses");
  }

  void criterion_6() {
    auto const    words = words_up_to(ab, kCorpusWordLength);
    std::size_t   bad   = 0;
    std::uint64_t most_k = 0;
    for (auto const& phi : corpus()) {
      auto aut             = ltl_to_b(phi);
      auto [contracted, K] = contract_b(aut);
      most_k               = std::max(most_k, K);
      for (auto const& u : words) {
        auto exact = eval_b(aut, u), coarse = eval_b(contracted, u);
        bool ok = coarse <= exact
                  && (coarse.is_infinite()
                          ? exact.is_infinite()
                          : exact <= CostValue(2 * K * coarse.value() + 2 * K));
        bad += ok ? 0 : 1;
      }
    }
    report(6, bad == 0, "contraction within 2Kn+2K",
           std::to_string(bad) + " violations, largest K "
               + std::to_string(most_k));
  }

  void criterion_7() {
    auto        rec = *load_semigroup(data + "/count-a.sg").rec;
    std::size_t n = 0, bad = 0;
    for (auto const& u : words_up_to(ab, kCountLength)) {
      if (u.empty()) {
        continue;
      }
      ++n;
      bad += recognize(rec, u) == CostValue(count_letter(ab, u, U'a')) ? 0 : 1;
    }
    report(7, rec.height == kRecognizeHeight && bad == 0,
           "recognizer with H = 9 computes |u|_a",
           std::to_string(n) + " words, " + std::to_string(bad) + " wrong");
  }

  void criterion_8() {
    auto parity = syntactic_quotient(*load_semigroup(data + "/parity-product.sg").rec);
    auto even   = syntactic_quotient(*load_semigroup(data + "/even-or-inf.sg").rec);
    auto count  = syntactic_quotient(*load_semigroup(data + "/count-a.sg").rec);
    auto padded = syntactic_quotient(*load_semigroup(data + "/count-a-padded.sg").rec);

    // the relations, evaluated in the quotient of the parity recognizer
    auto const& q   = parity.rec;
    Elem        a   = q.image(U'a');
    Elem        aa  = q.sg.product(a, a);
    Elem        aas = q.sg.sharp(idempotent_power(q.sg, aa));
    bool relations  = q.sg.product(aa, a) == a
                     && q.sg.product(q.sg.product(aas, a), a) == aas;

    bool min3  = is_aperiodic(load_semigroup(data + "/min3.sg").sg).aperiodic;
    bool sharp = is_aperiodic(load_semigroup(data + "/even-or-inf.sg").sg).aperiodic;
    bool def_count = is_ltl_definable(*load_semigroup(data + "/count-a.sg").rec);
    bool def_even  = is_ltl_definable(*load_semigroup(data + "/even-or-inf.sg").rec);
    bool def_parity
        = is_ltl_definable(*load_semigroup(data + "/parity-product.sg").rec);

    report(8,
           q.sg.size() == kParityClasses && even.rec.sg.size() == kParityClasses
               && relations && count.rec.sg.size() == kCountClasses
               && padded.rec.sg.size() == kPaddedClasses && min3 && !sharp
               && def_count && !def_even && !def_parity,
           "minimization: parity 4, counting 3, padded 3; aperiodicity",
           "parity " + std::to_string(q.sg.size()) + " classes, even-or-inf "
               + std::to_string(even.rec.sg.size()) + ", relations "
               + (relations ? "hold" : "fail") + ", counting "
               + std::to_string(count.rec.sg.size()) + ", padded "
               + std::to_string(padded.rec.sg.size()) + ", aperiodic "
               + (min3 ? "true" : "false") + "/" + (sharp ? "true" : "false")
               + ", definable " + (def_count ? "true" : "false") + "/"
               + (def_even ? "true" : "false") + "/"
               + (def_parity ? "true" : "false"));
  }

  void criterion_9() {
    std::mt19937       rng(2024);
    oracle::FormulaGen gen{ab};
    std::size_t        bad_sup = 0, bad_s = 0;
    for (int k = 0; k < kDualityPairs; ++k) {
      Formula phi(ab, gen(rng));
      auto    u   = oracle::random_word(rng, ab, kDualityLength);
      auto    psi = dualize(phi);
      auto    sup = sem_sup(psi, u);
      bad_sup += within(sup, sem_inf(phi, u), kDualitySlack) ? 0 : 1;
      bad_s += within(eval_s(nltl_to_s(psi), u), sup, kDualitySlack) ? 0 : 1;
    }
    report(9, bad_sup == 0 && bad_s == 0, "duality within 1",
           std::to_string(kDualityPairs) + " pairs, "
               + std::to_string(bad_sup) + " sem_sup and "
               + std::to_string(bad_s) + " S-automaton deviations");
  }

  void criterion_10() {
    struct Language {
      char const*                       formula;
      std::function<bool(Word const&)> member;
    };
    std::vector<Language> languages{
        {"F (a & X b)",
         [](Word const& u) { return u.find(U"ab") != Word::npos; }},
        {"F (b & X END)",
         [](Word const& u) { return !u.empty() && u.back() == U'b'; }},
        {"a U G b",
         [](Word const& u) { return u.find(U"ba") == Word::npos; }}};
    std::size_t wrong = 0;
    std::string counts;
    bool        sizes = true;
    for (auto const& l : languages) {
      auto phi = parse(l.formula, ab);
      for (auto const& u : words_up_to(ab, 8)) {
        auto v = sem_inf(phi, u);
        wrong += v == (l.member(u) ? CostValue(0) : CostValue::infinity()) ? 0 : 1;
      }
      auto q      = syntactic_quotient(oracle::classical_recognizer(ltl_to_b(phi)));
      auto brute  = oracle::syntactic_semigroup_size(l.member, ab, 5, 3);
      sizes       = sizes && q.rec.sg.size() == brute;
      counts += (counts.empty() ? "" : ", ") + std::to_string(q.rec.sg.size())
                + "/" + std::to_string(brute);
    }
    report(10, wrong == 0 && sizes, "counter-free languages",
           std::to_string(wrong) + " membership errors, classes " + counts);
  }
}  // namespace

int main() {
  try {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
  } catch (std::exception const& e) {
    std::printf("error: %s\n", e.what());
    return 2;
  }
  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
