// Serial against parallel batch evaluation.
//
//   bench_batch [max word length]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>

#include "costltl/batch.hpp"
#include "costltl/translate.hpp"

using namespace costltl;

namespace {
  double time_it(std::function<void()> const& f) {
    auto start = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now()
                                         - start)
        .count();
  }
}  // namespace

int main(int argc, char** argv) {
  std::size_t length = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 12;
  auto        ab     = Alphabet::from_string("ab");
  auto        words  = words_up_to(ab, length);
  std::printf("%zu words of length <= %zu\n", words.size(), length);
  for (auto text : {"!a U# END", "G (a U# b | END)", "F (b & X (a U# END))"}) {
    auto phi = parse(text, ab);
    auto aut = ltl_to_b(phi);
    for (auto [name, run] :
         {std::pair<char const*, std::function<void(Execution)>>{
              "sem_inf",
              [&](Execution x) { sem_inf_batch(phi, words, x); }},
          {"eval_b", [&](Execution x) { evaluate_batch(aut, words, x); }}}) {
      double serial   = time_it([&] { run(Execution::serial); });
      double parallel = time_it([&] { run(Execution::parallel); });
      std::printf("%-24s %-8s serial %8.3f s  parallel %8.3f s  x%.1f\n", text,
                  name, serial, parallel, serial / parallel);
    }
  }
}
