#include "costltl/semigroup.hpp"

#include <algorithm>
#include <deque>

namespace costltl {

  StabSemigroup::StabSemigroup(std::vector<std::string>           names,
                               std::vector<std::vector<Elem>>     product,
                               std::vector<std::pair<Elem, Elem>> order,
                               std::vector<std::optional<Elem>>   sharp,
                               std::optional<Elem>                neutral)
      : _names(std::move(names)), _sharp(std::move(sharp)), _neutral(neutral) {
    std::size_t const n = _names.size();
    if (n == 0) {
      throw DomainError("a semigroup needs at least one element");
    }
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = x + 1; y < n; ++y) {
        if (_names[x] == _names[y]) {
          throw DomainError("duplicate element name '" + _names[x] + "'");
        }
      }
    }
    if (product.size() != n) {
      throw DomainError("the product table needs " + std::to_string(n)
                        + " rows");
    }
    for (auto const& row : product) {
      if (row.size() != n) {
        throw DomainError("the product table needs " + std::to_string(n)
                          + " columns");
      }
      for (auto z : row) {
        if (z >= n) {
          throw DomainError("product entry out of range");
        }
        _product.push_back(z);
      }
    }
    if (_sharp.size() != n) {
      throw DomainError("the sharp table needs one entry per element");
    }
    for (auto const& s : _sharp) {
      if (s && *s >= n) {
        throw DomainError("sharp entry out of range");
      }
    }
    if (_neutral && *_neutral >= n) {
      throw DomainError("neutral element out of range");
    }
    _leq.assign(n * n, false);
    for (std::size_t x = 0; x < n; ++x) {
      _leq[x * n + x] = true;
    }
    for (auto [x, y] : order) {
      if (x >= n || y >= n) {
        throw DomainError("order pair out of range");
      }
      _leq[x * n + y] = true;
    }
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t x = 0; x < n; ++x) {
        if (_leq[x * n + k]) {
          for (std::size_t y = 0; y < n; ++y) {
            if (_leq[k * n + y]) {
              _leq[x * n + y] = true;
            }
          }
        }
      }
    }
  }

  Elem StabSemigroup::index_of(std::string_view name) const {
    auto it = std::find(_names.begin(), _names.end(), name);
    if (it == _names.end()) {
      throw DomainError("unknown element '" + std::string(name) + "'");
    }
    return static_cast<Elem>(it - _names.begin());
  }

  Elem StabSemigroup::sharp(Elem x) const {
    if (!_sharp[x]) {
      throw DomainError("sharp undefined on '" + _names[x] + "'");
    }
    return *_sharp[x];
  }

  std::vector<std::pair<Elem, Elem>> StabSemigroup::hasse() const {
    std::vector<std::pair<Elem, Elem>> out;
    std::size_t const                  n = size();
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
        if (x == y || !leq(x, y)) {
          continue;
        }
        bool covered = true;
        for (Elem z = 0; z < n && covered; ++z) {
          if (z != x && z != y && leq(x, z) && leq(z, y)) {
            covered = false;
          }
        }
        if (covered) {
          out.emplace_back(x, y);
        }
      }
    }
    return out;
  }

  std::vector<std::string> validate_axioms(StabSemigroup const& sg) {
    std::vector<std::string> out;
    std::size_t const        n    = sg.size();
    auto                     nm   = [&sg](Elem x) { return sg.name(x); };
    std::size_t              cut  = 0;
    auto                     fail = [&](std::string msg) {
      if (cut++ < 50) {
        out.push_back(std::move(msg));
      }
    };
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
        for (Elem z = 0; z < n; ++z) {
          if (sg.product(sg.product(x, y), z) != sg.product(x, sg.product(y, z))) {
            fail("associativity fails on (" + nm(x) + ", " + nm(y) + ", "
                 + nm(z) + ")");
          }
        }
      }
    }
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
        if (x != y && sg.leq(x, y) && sg.leq(y, x)) {
          if (x < y) {
            fail("order is not antisymmetric on " + nm(x) + ", " + nm(y));
          }
          continue;
        }
        if (!sg.leq(x, y)) {
          continue;
        }
        for (Elem z = 0; z < n; ++z) {
          if (!sg.leq(sg.product(z, x), sg.product(z, y))
              || !sg.leq(sg.product(x, z), sg.product(y, z))) {
            fail("order is not compatible with the product: " + nm(x)
                 + " <= " + nm(y) + ", multiplier " + nm(z));
          }
        }
      }
    }
    for (Elem e = 0; e < n; ++e) {
      if (sg.has_sharp(e) != sg.is_idempotent(e)) {
        fail("sharp must be defined exactly on idempotents: " + nm(e));
        continue;
      }
      if (!sg.has_sharp(e)) {
        continue;
      }
      Elem s = sg.sharp(e);
      if (!sg.has_sharp(s) || sg.sharp(s) != s) {
        fail("(" + nm(e) + "#)# differs from " + nm(e) + "#");
      }
      if (!sg.leq(s, e)) {
        fail(nm(e) + "# is not below " + nm(e));
      }
      if (sg.product(e, s) != s || sg.product(s, e) != s) {
        fail(nm(e) + "# is not absorbed by " + nm(e));
      }
      for (Elem f = 0; f < n; ++f) {
        if (f != e && sg.is_idempotent(f) && sg.has_sharp(f) && sg.leq(e, f)
            && !sg.leq(s, sg.sharp(f))) {
          fail("sharp is not monotone on " + nm(e) + " <= " + nm(f));
        }
      }
    }
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        Elem ab = sg.product(a, b), ba = sg.product(b, a);
        if (!sg.is_idempotent(ab) || !sg.is_idempotent(ba)
            || !sg.has_sharp(ab) || !sg.has_sharp(ba)) {
          continue;
        }
        if (sg.sharp(ab) != sg.product(sg.product(a, sg.sharp(ba)), b)) {
          fail("(" + nm(a) + nm(b) + ")# differs from " + nm(a) + "("
               + nm(b) + nm(a) + ")#" + nm(b));
        }
      }
    }
    if (auto one = sg.neutral()) {
      for (Elem x = 0; x < n; ++x) {
        if (sg.product(*one, x) != x || sg.product(x, *one) != x) {
          fail(nm(*one) + " is not neutral for " + nm(x));
        }
      }
      if (!sg.has_sharp(*one) || sg.sharp(*one) != *one) {
        fail("the neutral element must be its own sharp");
      }
    }
    if (cut > 50) {
      out.push_back(std::to_string(cut - 50) + " further violations");
    }
    return out;
  }

  Elem idempotent_power(StabSemigroup const& sg, Elem s) {
    Elem p = s;
    for (std::size_t k = 0; k <= sg.size(); ++k) {
      if (sg.is_idempotent(p)) {
        return p;
      }
      p = sg.product(p, s);
    }
    throw DomainError("no idempotent power; the product is not associative");
  }

  StabSemigroup direct_product(StabSemigroup const& x, StabSemigroup const& y) {
    std::size_t const nx = x.size(), ny = y.size();
    auto pair = [ny](Elem a, Elem b) { return a * ny + b; };
    std::vector<std::string>           names;
    std::vector<std::vector<Elem>>     product(nx * ny);
    std::vector<std::pair<Elem, Elem>> order;
    std::vector<std::optional<Elem>>   sharp;
    for (Elem a = 0; a < nx; ++a) {
      for (Elem b = 0; b < ny; ++b) {
        names.push_back(x.name(a) + "," + y.name(b));
        for (Elem c = 0; c < nx; ++c) {
          for (Elem d = 0; d < ny; ++d) {
            product[pair(a, b)].push_back(
                pair(x.product(a, c), y.product(b, d)));
            if (x.leq(a, c) && y.leq(b, d)) {
              order.emplace_back(pair(a, b), pair(c, d));
            }
          }
        }
        if (x.has_sharp(a) && y.has_sharp(b)) {
          sharp.emplace_back(pair(x.sharp(a), y.sharp(b)));
        } else {
          sharp.emplace_back(std::nullopt);
        }
      }
    }
    std::optional<Elem> neutral;
    if (x.neutral() && y.neutral()) {
      neutral = pair(*x.neutral(), *y.neutral());
    }
    return StabSemigroup(std::move(names), std::move(product),
                         std::move(order), std::move(sharp), neutral);
  }

  std::vector<Elem> generated(StabSemigroup const&  sg,
                              std::span<Elem const> seeds) {
    std::vector<bool> in(sg.size(), false);
    std::vector<Elem> out;
    std::deque<Elem>  todo;
    auto              add = [&](Elem x) {
      if (!in[x]) {
        in[x] = true;
        out.push_back(x);
        todo.push_back(x);
      }
    };
    for (auto s : seeds) {
      add(s);
    }
    while (!todo.empty()) {
      Elem x = todo.front();
      todo.pop_front();
      if (sg.has_sharp(x)) {
        add(sg.sharp(x));
      }
      std::size_t const known = out.size();
      for (std::size_t k = 0; k < known; ++k) {
        add(sg.product(x, out[k]));
        add(sg.product(out[k], x));
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Recognizers
  ////////////////////////////////////////////////////////////////////////

  std::size_t default_height(StabSemigroup const& sg) {
    return 3 * sg.size();
  }

  std::vector<std::string> validate(Recognizer const& rec) {
    std::vector<std::string> out;
    std::size_t const        n = rec.sg.size();
    if (rec.h.size() != rec.alphabet.size()) {
      out.push_back("h needs one image per letter");
    }
    for (auto x : rec.h) {
      if (x >= n) {
        out.push_back("letter image out of range");
      }
    }
    if (rec.ideal.size() != n) {
      out.push_back("the ideal needs one flag per element");
      return out;
    }
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
        if (rec.ideal[y] && !rec.ideal[x] && rec.sg.leq(x, y)) {
          out.push_back("the ideal is not downward closed: " + rec.sg.name(x)
                        + " <= " + rec.sg.name(y));
        }
      }
    }
    if (rec.height == 0) {
      out.push_back("the height bound must be positive");
    }
    return out;
  }

  namespace {
    // membership flags plus the member list
    struct ElemSet {
      std::vector<char> mark;
      std::vector<Elem> list;

      explicit ElemSet(std::size_t n = 0) : mark(n, 0) {}

      void add(Elem x) {
        if (!mark[x]) {
          mark[x] = 1;
          list.push_back(x);
        }
      }
      bool has(Elem x) const {
        return mark[x] != 0;
      }
    };
  }  // namespace

  std::vector<Elem> achievable_values(Recognizer const&     rec,
                                      std::span<Elem const> w,
                                      std::uint64_t         n) {
    if (w.empty()) {
      throw DomainError("achievable_values needs a nonempty sequence");
    }
    auto const&       sg  = rec.sg;
    std::size_t const len = w.size();
    std::size_t const S   = sg.size();
    // cell[i][j] for the factor w[i..j), j > i
    auto cells = [&] {
      return std::vector<std::vector<ElemSet>>(
          len, std::vector<ElemSet>(len + 1, ElemSet(S)));
    };
    auto prev = cells();
    for (std::size_t i = 0; i < len; ++i) {
      prev[i][i + 1].add(w[i]);
    }
    std::vector<Elem> idempotents;
    for (Elem e = 0; e < S; ++e) {
      if (sg.is_idempotent(e)) {
        idempotents.push_back(e);
      }
    }
    for (std::size_t h = 1; h <= rec.height; ++h) {
      auto next = prev;
      for (std::size_t i = 0; i < len; ++i) {
        for (std::size_t j = i + 2; j <= len; ++j) {
          for (std::size_t k = i + 1; k < j; ++k) {
            for (auto x : prev[i][k].list) {
              for (auto y : prev[k][j].list) {
                next[i][j].add(sg.product(x, y));
              }
            }
          }
        }
      }
      for (auto e : idempotents) {
        for (std::size_t i = 0; i < len; ++i) {
          // parts[t][p]: w[i..p) splits into t factors of value e
          std::vector<std::vector<char>> parts(
              len - i + 1, std::vector<char>(len + 1, 0));
          parts[0][i] = 1;
          for (std::size_t t = 0; t < len - i; ++t) {
            for (std::size_t p = i; p < len; ++p) {
              if (!parts[t][p]) {
                continue;
              }
              for (std::size_t q = p + 1; q <= len; ++q) {
                if (prev[p][q].has(e)) {
                  parts[t + 1][q] = 1;
                }
              }
            }
          }
          for (std::size_t j = i + 1; j <= len; ++j) {
            for (std::size_t t = 1; t <= j - i; ++t) {
              if (!parts[t][j]) {
                continue;
              }
              if (t >= 2 && t <= n) {
                next[i][j].add(e);
              }
              if (t > n && sg.has_sharp(e)) {
                next[i][j].add(sg.sharp(e));
              }
            }
          }
        }
      }
      prev = std::move(next);
    }
    std::vector<Elem> out = prev[0][len].list;
    std::sort(out.begin(), out.end());
    return out;
  }

  CostValue recognize(Recognizer const& rec, Word const& u) {
    if (u.empty()) {
      throw DomainError("recognition is defined on nonempty words");
    }
    std::vector<Elem> w;
    for (Letter a : u) {
      w.push_back(rec.image(a));
    }
    // with n >= |u| no stabilization fits, so larger n change nothing
    for (std::uint64_t n = 0; n <= u.size(); ++n) {
      auto values = achievable_values(rec, w, n);
      if (std::none_of(values.begin(), values.end(),
                       [&rec](Elem x) { return rec.ideal[x]; })) {
        return CostValue(n);
      }
    }
    return CostValue::infinity();
  }

  ////////////////////////////////////////////////////////////////////////
  // Expressions
  ////////////////////////////////////////////////////////////////////////

  namespace {
    ExprPtr make(Expr::Op op, ExprPtr l = nullptr, ExprPtr r = nullptr,
                 Letter a = 0) {
      return std::make_shared<Expr const>(Expr{op, a, std::move(l), std::move(r)});
    }

    class ExprParser {
     public:
      ExprParser(std::string_view text, Alphabet const& alphabet)
          : _text(text), _alphabet(alphabet) {}

      ExprPtr parse_all() {
        ExprPtr e = parse_seq();
        skip();
        if (_pos != _text.size()) {
          throw SyntaxError("unexpected character", _pos);
        }
        return e;
      }

     private:
      void skip() {
        while (_pos < _text.size() && _text[_pos] == ' ') {
          ++_pos;
        }
      }

      bool at_primary() {
        skip();
        if (_pos >= _text.size()) {
          return false;
        }
        char c = _text[_pos];
        return c == '(' || (c != ')' && c != '^');
      }

      ExprPtr parse_seq() {
        if (!at_primary()) {
          throw SyntaxError("expected a letter or '('", _pos);
        }
        ExprPtr e = parse_postfix();
        while (at_primary()) {
          e = make(Expr::Op::concat, e, parse_postfix());
        }
        return e;
      }

      ExprPtr parse_postfix() {
        ExprPtr e = parse_primary();
        for (skip(); _pos < _text.size() && _text[_pos] == '^'; skip()) {
          auto rest = _text.substr(_pos + 1);
          if (rest.starts_with("w#")) {
            e = make(Expr::Op::omega_sharp, e);
            _pos += 3;
          } else if (rest.starts_with("w")) {
            e = make(Expr::Op::omega, e);
            _pos += 2;
          } else if (rest.starts_with("#")) {
            e = make(Expr::Op::sharp, e);
            _pos += 2;
          } else {
            throw SyntaxError("expected w, w# or # after '^'", _pos + 1);
          }
        }
        return e;
      }

      ExprPtr parse_primary() {
        skip();
        if (_text[_pos] == '(') {
          ++_pos;
          ExprPtr e = parse_seq();
          skip();
          if (_pos >= _text.size() || _text[_pos] != ')') {
            throw SyntaxError("expected ')'", _pos);
          }
          ++_pos;
          return e;
        }
        std::size_t start = _pos;
        std::size_t len   = 1;
        auto        b     = static_cast<unsigned char>(_text[_pos]);
        if (b >= 0x80) {
          len = (b >> 5) == 0x6 ? 2 : (b >> 4) == 0xE ? 3 : 4;
        }
        Word w = word_from_utf8(_text.substr(start, len));
        _pos += len;
        if (w.size() != 1 || !_alphabet.contains(w[0])) {
          throw SyntaxError("letter is not in alphabet '"
                                + _alphabet.to_string() + "'",
                            start);
        }
        return make(Expr::Op::letter, nullptr, nullptr, w[0]);
      }

      std::string_view _text;
      Alphabet const&  _alphabet;
      std::size_t      _pos = 0;
    };
  }  // namespace

  ExprPtr parse_expr(std::string_view text, Alphabet const& alphabet) {
    return ExprParser(text, alphabet).parse_all();
  }

  std::string render(Expr const& e) {
    auto operand = [](Expr const& x) {
      return x.op == Expr::Op::concat ? "(" + render(x) + ")" : render(x);
    };
    switch (e.op) {
      case Expr::Op::letter: return to_utf8(e.letter);
      case Expr::Op::concat: {
        std::string r = render(*e.right);
        if (e.right->op == Expr::Op::concat) {
          r = "(" + r + ")";
        }
        return render(*e.left) + r;
      }
      case Expr::Op::omega: return operand(*e.left) + "^w";
      case Expr::Op::omega_sharp: return operand(*e.left) + "^w#";
      default: return operand(*e.left) + "^#";
    }
  }

  namespace {
    bool has_op(Expr const& e, Expr::Op a, Expr::Op b) {
      if (e.op == a || e.op == b) {
        return true;
      }
      return (e.left && has_op(*e.left, a, b))
             || (e.right && has_op(*e.right, a, b));
    }
  }  // namespace

  bool is_sharp_expr(Expr const& e) {
    return !has_op(e, Expr::Op::omega, Expr::Op::omega_sharp);
  }

  bool is_omega_sharp_expr(Expr const& e) {
    return !has_op(e, Expr::Op::sharp, Expr::Op::sharp);
  }

  Elem eval_expr(StabSemigroup const& sg, std::span<Elem const> h,
                 Alphabet const& alphabet, Expr const& e) {
    auto sub = [&](ExprPtr const& x) { return eval_expr(sg, h, alphabet, *x); };
    switch (e.op) {
      case Expr::Op::letter: return h[alphabet.index_of(e.letter)];
      case Expr::Op::concat: return sg.product(sub(e.left), sub(e.right));
      case Expr::Op::omega: return idempotent_power(sg, sub(e.left));
      case Expr::Op::omega_sharp:
        return sg.sharp(idempotent_power(sg, sub(e.left)));
      default: {
        Elem x = sub(e.left);
        if (!sg.is_idempotent(x) || !sg.has_sharp(x)) {
          throw DomainError("not well-formed: sharp applied to '"
                            + render(*e.left) + "', which evaluates to "
                            + "the non-idempotent '" + sg.name(x) + "'");
        }
        return sg.sharp(x);
      }
    }
  }

  Elem eval_expr(Recognizer const& rec, Expr const& e) {
    return eval_expr(rec.sg, rec.h, rec.alphabet, e);
  }

  Word instantiate(Expr const& e, std::uint64_t k, std::uint64_t n) {
    if (k == 0 || n == 0) {
      throw DomainError("instantiate needs k, n >= 1");
    }
    auto repeat = [](Word const& w, std::uint64_t times) {
      Word out;
      out.reserve(w.size() * times);
      for (std::uint64_t t = 0; t < times; ++t) {
        out += w;
      }
      return out;
    };
    switch (e.op) {
      case Expr::Op::letter: return Word(1, e.letter);
      case Expr::Op::concat:
        return instantiate(*e.left, k, n) + instantiate(*e.right, k, n);
      case Expr::Op::omega: return repeat(instantiate(*e.left, k, n), k);
      case Expr::Op::omega_sharp:
        return repeat(instantiate(*e.left, k, n), k * n);
      default: return repeat(instantiate(*e.left, k, n), n);
    }
  }

  std::string to_string(ExprClass c) {
    return c == ExprClass::bounded ? "bounded" : "divergent";
  }

  ExprClass classify(Recognizer const& rec, Expr const& e) {
    return rec.ideal[eval_expr(rec, e)] ? ExprClass::divergent
                                        : ExprClass::bounded;
  }

}  // namespace costltl
