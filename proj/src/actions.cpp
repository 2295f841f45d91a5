#include "costltl/actions.hpp"

#include <algorithm>
#include <sstream>

namespace costltl {

  bool is_b_op(CounterOp op) noexcept {
    return op == CounterOp::e || op == CounterOp::ic || op == CounterOp::r;
  }

  bool is_s_op(CounterOp op) noexcept {
    return op != CounterOp::ic;
  }

  std::string to_string(CounterOp op) {
    switch (op) {
      case CounterOp::e: return "e";
      case CounterOp::ic: return "ic";
      case CounterOp::r: return "r";
      case CounterOp::i: return "i";
      default: return "cr";
    }
  }

  CounterOp parse_counter_op(std::string_view token) {
    if (token == "e") return CounterOp::e;
    if (token == "ic") return CounterOp::ic;
    if (token == "r") return CounterOp::r;
    if (token == "i") return CounterOp::i;
    if (token == "cr") return CounterOp::cr;
    throw SyntaxError("unknown counter action '" + std::string(token) + "'", 0);
  }

  std::string to_string(OpSeq const& seq) {
    if (seq.empty()) {
      return "e";
    }
    std::string out;
    for (auto op : seq) {
      if (!out.empty()) {
        out += ' ';
      }
      out += to_string(op);
    }
    return out;
  }

  OpSeq parse_op_seq(std::string_view text) {
    std::istringstream in{std::string(text)};
    OpSeq              out;
    std::string        token;
    while (in >> token) {
      out.push_back(parse_counter_op(token));
    }
    return out;
  }

  BSeqResult b_seq_value(OpSeq const& seq, std::uint64_t start) {
    BSeqResult res{0, start};
    for (auto op : seq) {
      if (op == CounterOp::ic) {
        ++res.final;
        res.value = std::max(res.value, res.final);
      } else if (op == CounterOp::r) {
        res.final = 0;
      } else if (op != CounterOp::e) {
        throw DomainError("'" + to_string(op) + "' is not a B action");
      }
    }
    return res;
  }

  CounterOp contract_max(OpSeq const& seq) {
    auto rank = [](CounterOp op) {
      switch (op) {
        case CounterOp::e: return 0;
        case CounterOp::ic: return 1;
        case CounterOp::r: return 2;
        default:
          throw DomainError("'" + to_string(op) + "' is not a B action");
      }
    };
    CounterOp best = CounterOp::e;
    for (auto op : seq) {
      if (rank(op) > rank(best)) {
        best = op;
      }
    }
    return best;
  }

  ////////////////////////////////////////////////////////////////////////
  // S-actions
  ////////////////////////////////////////////////////////////////////////

  namespace {
    using enum SElem;

    // rows and columns: omega i e r cromega cr bot
    constexpr SElem kProduct[7][7] = {
        {omega, omega, omega, r, omega, r, bot},
        {omega, i, i, r, cromega, cr, bot},
        {omega, i, e, r, cromega, cr, bot},
        {omega, r, r, r, bot, bot, bot},
        {cromega, cromega, cromega, cr, cromega, cr, bot},
        {cromega, cr, cr, cr, bot, bot, bot},
        {bot, bot, bot, bot, bot, bot, bot}};

    // cr has no stabilization; its entry is never read
    constexpr SElem kSharp[7] = {omega, omega, e, r, cromega, cr, bot};

    // kLeq[x][y] iff x <= y
    constexpr bool kLeq[7][7] = {
        {1, 1, 1, 1, 1, 1, 1},
        {0, 1, 1, 1, 1, 1, 1},
        {0, 0, 1, 1, 1, 1, 1},
        {0, 0, 0, 1, 0, 1, 1},
        {0, 0, 0, 0, 1, 1, 1},
        {0, 0, 0, 0, 0, 1, 1},
        {0, 0, 0, 0, 0, 0, 1}};

    constexpr std::size_t idx(SElem x) {
      return static_cast<std::size_t>(x);
    }
  }  // namespace

  std::string to_string(SElem x) {
    constexpr char const* names[]
        = {"omega", "i", "e", "r", "cromega", "cr", "bot"};
    return names[idx(x)];
  }

  SElem parse_selem(std::string_view name) {
    for (auto x : kSElems) {
      if (to_string(x) == name) {
        return x;
      }
    }
    throw SyntaxError("unknown S-action '" + std::string(name) + "'", 0);
  }

  SElem s_product(SElem x, SElem y) noexcept {
    return kProduct[idx(x)][idx(y)];
  }

  bool s_sharp_defined(SElem x) noexcept {
    return x != cr;
  }

  SElem s_sharp(SElem x) {
    if (x == cr) {
      throw DomainError("sharp undefined on non-idempotent 'cr'");
    }
    return kSharp[idx(x)];
  }

  bool s_leq(SElem x, SElem y) noexcept {
    return kLeq[idx(x)][idx(y)];
  }

  SElem atomic_s_to_elem(CounterOp op) {
    switch (op) {
      case CounterOp::e: return e;
      case CounterOp::i: return i;
      case CounterOp::r: return r;
      case CounterOp::cr: return cr;
      default: throw DomainError("'ic' is not an S action");
    }
  }

  SElem compose_s(OpSeq const& seq) {
    SElem acc = e;
    for (auto op : seq) {
      acc = s_product(acc, atomic_s_to_elem(op));
    }
    return acc;
  }

  SActionVec s_neutral(std::size_t counters) {
    return SActionVec(counters, e);
  }

  SActionVec s_product(SActionVec const& x, SActionVec const& y) {
    SActionVec out(x.size());
    for (std::size_t k = 0; k < x.size(); ++k) {
      out[k] = s_product(x[k], y[k]);
    }
    return out;
  }

  bool s_sharp_defined(SActionVec const& x) noexcept {
    return std::none_of(x.begin(), x.end(), [](SElem c) { return c == cr; });
  }

  SActionVec s_sharp(SActionVec const& x) {
    SActionVec out(x.size());
    for (std::size_t k = 0; k < x.size(); ++k) {
      out[k] = s_sharp(x[k]);
    }
    return out;
  }

  bool s_leq(SActionVec const& x, SActionVec const& y) noexcept {
    for (std::size_t k = 0; k < x.size(); ++k) {
      if (!s_leq(x[k], y[k])) {
        return false;
      }
    }
    return true;
  }

  bool s_is_good(SActionVec const& x) noexcept {
    return std::none_of(x.begin(), x.end(), [](SElem c) {
      return c == cr || c == cromega || c == bot;
    });
  }

  std::string to_string(SActionVec const& x) {
    std::string out = "(";
    for (std::size_t k = 0; k < x.size(); ++k) {
      out += (k == 0 ? "" : ",") + to_string(x[k]);
    }
    return out + ")";
  }

}  // namespace costltl
