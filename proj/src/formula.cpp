#include "costltl/formula.hpp"

#include <algorithm>
#include <functional>

namespace costltl {

  namespace node {
    namespace {
      NodePtr make(Kind k, NodePtr l = nullptr, NodePtr r = nullptr) {
        return std::make_shared<Node const>(Node{k, 0, std::move(l), std::move(r)});
      }
    }  // namespace

    NodePtr atom(Letter a) {
      return std::make_shared<Node const>(Node{Kind::atom, a, nullptr, nullptr});
    }
    NodePtr end() {
      return make(Kind::end);
    }
    NodePtr conj(NodePtr l, NodePtr r) {
      return make(Kind::conj, std::move(l), std::move(r));
    }
    NodePtr disj(NodePtr l, NodePtr r) {
      return make(Kind::disj, std::move(l), std::move(r));
    }
    NodePtr next(NodePtr x) {
      return make(Kind::next, std::move(x));
    }
    NodePtr until(NodePtr l, NodePtr r) {
      return make(Kind::until, std::move(l), std::move(r));
    }
    NodePtr until_leq(NodePtr l, NodePtr r) {
      return make(Kind::until_leq, std::move(l), std::move(r));
    }
    NodePtr release_geq(NodePtr l, NodePtr r) {
      return make(Kind::release_geq, std::move(l), std::move(r));
    }
  }  // namespace node

  bool is_binary(Kind k) noexcept {
    return k != Kind::atom && k != Kind::end && k != Kind::next;
  }

  int compare(Node const& x, Node const& y) noexcept {
    if (&x == &y) {
      return 0;
    }
    if (x.kind != y.kind) {
      return x.kind < y.kind ? -1 : 1;
    }
    switch (x.kind) {
      case Kind::atom:
        return x.letter == y.letter ? 0 : (x.letter < y.letter ? -1 : 1);
      case Kind::end:
        return 0;
      case Kind::next:
        return compare(*x.left, *y.left);
      default: {
        int c = compare(*x.left, *y.left);
        return c != 0 ? c : compare(*x.right, *y.right);
      }
    }
  }

  bool equal(NodePtr const& x, NodePtr const& y) noexcept {
    return compare(*x, *y) == 0;
  }

  std::size_t size(Node const& x) noexcept {
    switch (x.kind) {
      case Kind::atom:
      case Kind::end:
        return 1;
      case Kind::next:
        return 1 + size(*x.left);
      default:
        return 1 + size(*x.left) + size(*x.right);
    }
  }

  std::size_t depth(Node const& x) noexcept {
    switch (x.kind) {
      case Kind::atom:
      case Kind::end:
        return 0;
      case Kind::next:
        return 1 + depth(*x.left);
      default:
        return 1 + std::max(depth(*x.left), depth(*x.right));
    }
  }

  namespace {
    bool contains_kind(Node const& x, Kind k) {
      if (x.kind == k) {
        return true;
      }
      return (x.left && contains_kind(*x.left, k))
             || (x.right && contains_kind(*x.right, k));
    }

    void check_atoms(Node const& x, Alphabet const& alphabet) {
      if (x.kind == Kind::atom && !alphabet.contains(x.letter)) {
        throw DomainError("atom '" + to_utf8(x.letter)
                          + "' is not in alphabet '" + alphabet.to_string()
                          + "'");
      }
      if (x.left) {
        check_atoms(*x.left, alphabet);
      }
      if (x.right) {
        check_atoms(*x.right, alphabet);
      }
    }
  }  // namespace

  Formula::Formula(Alphabet alphabet, NodePtr root)
      : _alphabet(std::move(alphabet)), _root(std::move(root)) {
    if (_alphabet.size() == 0) {
      throw DomainError("a formula needs a nonempty alphabet");
    }
    check_atoms(*_root, _alphabet);
    if (contains(Kind::until_leq) && contains(Kind::release_geq)) {
      throw DomainError("a formula cannot mix U# and R#");
    }
  }

  bool Formula::contains(Kind k) const noexcept {
    return contains_kind(*_root, k);
  }

  ////////////////////////////////////////////////////////////////////////
  // Sugar
  ////////////////////////////////////////////////////////////////////////

  NodePtr negate_letter(Alphabet const& alphabet, Letter a) {
    alphabet.index_of(a);
    NodePtr result;
    for (Letter b : alphabet.letters()) {
      if (b != a) {
        result = result ? node::disj(result, node::atom(b)) : node::atom(b);
      }
    }
    return result ? node::disj(result, node::end()) : node::end();
  }

  NodePtr some_letter(Alphabet const& alphabet) {
    NodePtr result;
    for (Letter b : alphabet.letters()) {
      result = result ? node::disj(result, node::atom(b)) : node::atom(b);
    }
    return result;
  }

  NodePtr top(Alphabet const& alphabet) {
    Letter a = alphabet.letters().front();
    return node::disj(node::atom(a), negate_letter(alphabet, a));
  }

  NodePtr bottom(Alphabet const& alphabet) {
    Letter a = alphabet.letters().front();
    return node::conj(node::atom(a), negate_letter(alphabet, a));
  }

  ////////////////////////////////////////////////////////////////////////
  // Parser
  ////////////////////////////////////////////////////////////////////////

  namespace {
    enum class Tok {
      letter,
      end_kw,
      true_kw,
      false_kw,
      bang,
      next,
      eventually,
      globally,
      amp,
      bar,
      until,
      until_leq,
      release_geq,
      lparen,
      rparen,
      eof
    };

    struct Token {
      Tok         tok;
      std::size_t pos;
      Letter      letter = 0;
    };

    std::vector<Token> tokenize(std::string_view text) {
      std::vector<Token> out;
      std::size_t        i = 0;
      auto starts_with     = [&](std::string_view kw) {
        return text.substr(i, kw.size()) == kw;
      };
      while (i < text.size()) {
        char c = text[i];
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
          ++i;
        } else if (c >= 'a' && c <= 'z') {
          out.push_back({Tok::letter, i, static_cast<Letter>(c)});
          ++i;
        } else if (starts_with("END")) {
          out.push_back({Tok::end_kw, i});
          i += 3;
        } else if (starts_with("TRUE")) {
          out.push_back({Tok::true_kw, i});
          i += 4;
        } else if (starts_with("FALSE")) {
          out.push_back({Tok::false_kw, i});
          i += 5;
        } else if (starts_with("U#")) {
          out.push_back({Tok::until_leq, i});
          i += 2;
        } else if (starts_with("R#")) {
          out.push_back({Tok::release_geq, i});
          i += 2;
        } else {
          Tok t;
          switch (c) {
            case '!': t = Tok::bang; break;
            case 'X': t = Tok::next; break;
            case 'F': t = Tok::eventually; break;
            case 'G': t = Tok::globally; break;
            case '&': t = Tok::amp; break;
            case '|': t = Tok::bar; break;
            case 'U': t = Tok::until; break;
            case '(': t = Tok::lparen; break;
            case ')': t = Tok::rparen; break;
            default:
              throw SyntaxError(std::string("unexpected character '") + c + "'",
                                i);
          }
          out.push_back({t, i});
          ++i;
        }
      }
      out.push_back({Tok::eof, text.size()});
      return out;
    }

    class Parser {
     public:
      Parser(std::string_view text, Alphabet const& alphabet)
          : _tokens(tokenize(text)), _alphabet(alphabet) {}

      NodePtr parse_all() {
        NodePtr result = parse_or();
        if (peek().tok != Tok::eof) {
          throw SyntaxError("unexpected token", peek().pos);
        }
        return result;
      }

     private:
      Token const& peek() const {
        return _tokens[_next];
      }

      Token const& take() {
        return _tokens[_next++];
      }

      NodePtr parse_or() {
        NodePtr left = parse_and();
        while (peek().tok == Tok::bar) {
          take();
          left = node::disj(left, parse_and());
        }
        return left;
      }

      NodePtr parse_and() {
        NodePtr left = parse_until();
        while (peek().tok == Tok::amp) {
          take();
          left = node::conj(left, parse_until());
        }
        return left;
      }

      NodePtr parse_until() {
        NodePtr left = parse_unary();
        Token   op   = peek();
        if (op.tok == Tok::until || op.tok == Tok::until_leq
            || op.tok == Tok::release_geq) {
          take();
          if (op.tok == Tok::until_leq) {
            note_counted(Kind::until_leq, op.pos);
          } else if (op.tok == Tok::release_geq) {
            note_counted(Kind::release_geq, op.pos);
          }
          NodePtr right = parse_until();
          switch (op.tok) {
            case Tok::until: return node::until(left, right);
            case Tok::until_leq: return node::until_leq(left, right);
            default: return node::release_geq(left, right);
          }
        }
        return left;
      }

      void note_counted(Kind k, std::size_t pos) {
        Kind other = k == Kind::until_leq ? Kind::release_geq : Kind::until_leq;
        if (_seen_other[other == Kind::until_leq ? 0 : 1]) {
          throw SyntaxError("a formula cannot mix U# and R#", pos);
        }
        _seen_other[k == Kind::until_leq ? 0 : 1] = true;
      }

      NodePtr parse_unary() {
        Token t = peek();
        switch (t.tok) {
          case Tok::bang: {
            take();
            Token operand = take();
            switch (operand.tok) {
              case Tok::letter:
                return negate_letter(_alphabet, checked(operand));
              case Tok::end_kw: return some_letter(_alphabet);
              case Tok::true_kw: return bottom(_alphabet);
              case Tok::false_kw: return top(_alphabet);
              default:
                throw SyntaxError("'!' applies to atoms only", operand.pos);
            }
          }
          case Tok::next: take(); return node::next(parse_unary());
          case Tok::eventually:
            take();
            return node::until(top(_alphabet), parse_unary());
          case Tok::globally:
            take();
            return node::until(parse_unary(), node::end());
          default: return parse_primary();
        }
      }

      NodePtr parse_primary() {
        Token t = take();
        switch (t.tok) {
          case Tok::letter: return node::atom(checked(t));
          case Tok::end_kw: return node::end();
          case Tok::true_kw: return top(_alphabet);
          case Tok::false_kw: return bottom(_alphabet);
          case Tok::lparen: {
            NodePtr inner = parse_or();
            if (peek().tok != Tok::rparen) {
              throw SyntaxError("expected ')'", peek().pos);
            }
            take();
            return inner;
          }
          case Tok::eof: throw SyntaxError("unexpected end of formula", t.pos);
          default: throw SyntaxError("expected an operand", t.pos);
        }
      }

      Letter checked(Token const& t) {
        if (!_alphabet.contains(t.letter)) {
          throw SyntaxError("atom '" + to_utf8(t.letter)
                                + "' is not in alphabet '"
                                + _alphabet.to_string() + "'",
                            t.pos);
        }
        return t.letter;
      }

      std::vector<Token> _tokens;
      std::size_t        _next = 0;
      Alphabet const&    _alphabet;
      bool               _seen_other[2] = {false, false};
    };
  }  // namespace

  Formula parse(std::string_view text, Alphabet const& alphabet) {
    Parser p(text, alphabet);
    return Formula(alphabet, p.parse_all());
  }

  ////////////////////////////////////////////////////////////////////////
  // Printer
  ////////////////////////////////////////////////////////////////////////

  namespace {
    int level(Kind k) {
      switch (k) {
        case Kind::disj: return 1;
        case Kind::conj: return 2;
        case Kind::until:
        case Kind::until_leq:
        case Kind::release_geq: return 3;
        default: return 4;
      }
    }

    void render_to(Node const& x, std::string& out);

    void render_child(Node const& x, int min_level, std::string& out) {
      if (level(x.kind) < min_level) {
        out += '(';
        render_to(x, out);
        out += ')';
      } else {
        render_to(x, out);
      }
    }

    void render_to(Node const& x, std::string& out) {
      switch (x.kind) {
        case Kind::atom: out += to_utf8(x.letter); return;
        case Kind::end: out += "END"; return;
        case Kind::next:
          out += "X ";
          render_child(*x.left, 4, out);
          return;
        case Kind::conj:
        case Kind::disj:
          render_child(*x.left, level(x.kind), out);
          out += x.kind == Kind::conj ? " & " : " | ";
          render_child(*x.right, level(x.kind) + 1, out);
          return;
        default:
          render_child(*x.left, 4, out);
          out += x.kind == Kind::until       ? " U "
                 : x.kind == Kind::until_leq ? " U# "
                                             : " R# ";
          render_child(*x.right, 3, out);
          return;
      }
    }
  }  // namespace

  std::string render(Node const& x) {
    std::string out;
    render_to(x, out);
    return out;
  }

  std::string render(Formula const& f) {
    return render(*f.root());
  }

  ////////////////////////////////////////////////////////////////////////
  // Subformulae
  ////////////////////////////////////////////////////////////////////////

  namespace {
    void collect(NodePtr const& x, std::vector<NodePtr>& out,
                 std::function<bool(Node const&)> const& keep) {
      if (keep(*x)
          && std::none_of(out.begin(), out.end(),
                          [&x](NodePtr const& y) { return equal(x, y); })) {
        out.push_back(x);
      }
      if (x->left) {
        collect(x->left, out, keep);
      }
      if (x->right) {
        collect(x->right, out, keep);
      }
    }
  }  // namespace

  std::vector<NodePtr> subformulas(Formula const& f) {
    std::vector<NodePtr> out;
    collect(f.root(), out, [](Node const&) { return true; });
    return out;
  }

  std::vector<NodePtr> counted_subformulas(Formula const& f) {
    std::vector<NodePtr> out;
    collect(f.root(), out, [](Node const& x) {
      return x.kind == Kind::until_leq || x.kind == Kind::release_geq;
    });
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Dual
  ////////////////////////////////////////////////////////////////////////

  namespace {
    NodePtr negate(Node const& x, Alphabet const& alphabet) {
      auto neg = [&alphabet](NodePtr const& y) { return negate(*y, alphabet); };
      switch (x.kind) {
        case Kind::atom: return negate_letter(alphabet, x.letter);
        case Kind::end: return some_letter(alphabet);
        case Kind::conj: return node::disj(neg(x.left), neg(x.right));
        case Kind::disj: return node::conj(neg(x.left), neg(x.right));
        case Kind::next:
          // X is strong: its negation also holds at the end of the word.
          return node::disj(node::next(neg(x.left)), node::end());
        case Kind::until: {
          // !(p U q) = !q U (!q & (!p | END)); the END disjunct covers
          // words on which q never holds.
          NodePtr not_q = neg(x.right);
          return node::until(
              not_q, node::conj(not_q, node::disj(neg(x.left), node::end())));
        }
        case Kind::until_leq:
          return node::release_geq(neg(x.left), neg(x.right));
        default: throw DomainError("dualize expects a formula without R#");
      }
    }
  }  // namespace

  Formula dualize(Formula const& f) {
    if (!f.is_ltl()) {
      throw DomainError("dualize expects a formula without R#");
    }
    return Formula(f.alphabet(), negate(*f.root(), f.alphabet()));
  }

}  // namespace costltl
