#include "costltl/batch.hpp"

#include <exception>

#include "costltl/eval.hpp"

namespace costltl {

  namespace {
    template <typename F>
    std::vector<CostValue> map_words(std::span<Word const> words,
                                     Execution exec, F const& f) {
      std::vector<CostValue> out(words.size());
      if (exec == Execution::serial) {
        for (std::size_t k = 0; k < words.size(); ++k) {
          out[k] = f(words[k]);
        }
        return out;
      }
      // exceptions cannot leave an OpenMP region; keep the first by index
      std::vector<std::exception_ptr> errors(words.size());
      auto const n = static_cast<std::ptrdiff_t>(words.size());
#pragma omp parallel for schedule(dynamic, 16)
      for (std::ptrdiff_t k = 0; k < n; ++k) {
        try {
          out[k] = f(words[k]);
        } catch (...) {
          errors[k] = std::current_exception();
        }
      }
      for (auto const& e : errors) {
        if (e) {
          std::rethrow_exception(e);
        }
      }
      return out;
    }
  }  // namespace

  std::vector<CostValue> sem_inf_batch(Formula const&        phi,
                                       std::span<Word const> words,
                                       Execution             exec) {
    return map_words(words, exec,
                     [&](Word const& u) { return sem_inf(phi, u); });
  }

  std::vector<CostValue> sem_sup_batch(Formula const&        phi,
                                       std::span<Word const> words,
                                       Execution             exec) {
    return map_words(words, exec,
                     [&](Word const& u) { return sem_sup(phi, u); });
  }

  std::vector<CostValue> evaluate_batch(CostAutomaton const&  aut,
                                        std::span<Word const> words,
                                        Execution             exec) {
    check(aut);
    return map_words(words, exec,
                     [&](Word const& u) { return evaluate(aut, u); });
  }

  std::vector<CostValue> recognize_batch(Recognizer const&     rec,
                                         std::span<Word const> words,
                                         Execution             exec) {
    return map_words(words, exec,
                     [&](Word const& u) { return recognize(rec, u); });
  }

}  // namespace costltl
