#include "costltl/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace costltl {

  namespace {
    struct Line {
      std::size_t number;
      std::string key;
      std::string rest;
    };

    std::string trim(std::string const& s) {
      auto b = s.find_first_not_of(" \t\r");
      if (b == std::string::npos) {
        return "";
      }
      auto e = s.find_last_not_of(" \t\r");
      return s.substr(b, e - b + 1);
    }

    std::vector<std::string> split(std::string const& s) {
      std::istringstream       in(s);
      std::vector<std::string> out;
      std::string              tok;
      while (in >> tok) {
        out.push_back(tok);
      }
      return out;
    }

    // Reads the header and returns the remaining meaningful lines.
    std::vector<Line> read_lines(std::istream& in) {
      std::vector<Line> out;
      std::string       raw;
      std::size_t       number = 0;
      bool              header = false;
      while (std::getline(in, raw)) {
        ++number;
        std::string s = trim(raw);
        if (s.empty() || s[0] == '#') {
          continue;
        }
        if (!header) {
          if (s != kFormatHeader) {
            throw SyntaxError(std::string("expected '") + kFormatHeader + "'",
                              number);
          }
          header = true;
          continue;
        }
        auto sp = s.find(' ');
        out.push_back({number, s.substr(0, sp),
                       sp == std::string::npos ? "" : trim(s.substr(sp + 1))});
      }
      if (!header) {
        throw SyntaxError(std::string("missing '") + kFormatHeader + "'",
                          number);
      }
      return out;
    }

    Line const& unique(std::vector<Line> const& lines, std::string const& key,
                       std::size_t last) {
      Line const* found = nullptr;
      for (auto const& l : lines) {
        if (l.key == key) {
          if (found) {
            throw SyntaxError("duplicate '" + key + "' line", l.number);
          }
          found = &l;
        }
      }
      if (!found) {
        throw SyntaxError("missing '" + key + "' line", last);
      }
      return *found;
    }

    Line const* optional_line(std::vector<Line> const& lines,
                              std::string const&       key) {
      for (auto const& l : lines) {
        if (l.key == key) {
          return &l;
        }
      }
      return nullptr;
    }

    std::size_t parse_count(Line const& l) {
      try {
        std::size_t used = 0;
        auto        v    = std::stoull(l.rest, &used);
        if (used != l.rest.size()) {
          throw std::invalid_argument("trailing");
        }
        return static_cast<std::size_t>(v);
      } catch (std::exception const&) {
        throw SyntaxError("expected a number after '" + l.key + "'", l.number);
      }
    }

    template <typename F>
    auto at_line(std::size_t number, F&& f) -> decltype(f()) {
      try {
        return f();
      } catch (SyntaxError const&) {
        throw;
      } catch (Error const& e) {
        throw SyntaxError(e.what(), number);
      }
    }

    std::ifstream open(std::string const& path) {
      std::ifstream in(path);
      if (!in) {
        throw Error("cannot open '" + path + "'");
      }
      return in;
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Automata
  ////////////////////////////////////////////////////////////////////////

  CostAutomaton read_automaton(std::istream& in) {
    auto const        lines = read_lines(in);
    std::size_t const last  = lines.empty() ? 1 : lines.back().number;
    CostAutomaton     aut;
    Line const&       kind = unique(lines, "kind", last);
    if (kind.rest == "B") {
      aut.polarity = Polarity::B;
    } else if (kind.rest == "S") {
      aut.polarity = Polarity::S;
    } else {
      throw SyntaxError("kind must be B or S", kind.number);
    }
    Line const& alpha = unique(lines, "alphabet", last);
    aut.alphabet
        = at_line(alpha.number, [&] { return Alphabet::from_string(alpha.rest); });
    aut.counters = parse_count(unique(lines, "counters", last));
    for (auto const& name : split(unique(lines, "states", last).rest)) {
      aut.add_state(name);
    }
    Line const& init = unique(lines, "initial", last);
    for (auto const& name : split(init.rest)) {
      aut.initial.push_back(at_line(init.number, [&] {
        return aut.state_index(name);
      }));
    }
    Line const& fin = unique(lines, "final", last);
    for (auto const& name : split(fin.rest)) {
      aut.final.push_back(at_line(fin.number, [&] {
        return aut.state_index(name);
      }));
    }
    for (auto const& l : lines) {
      if (l.key == "note") {
        auto sp   = l.rest.find(' ');
        auto name = l.rest.substr(0, sp);
        auto q    = at_line(l.number, [&] { return aut.state_index(name); });
        aut.notes[q] = sp == std::string::npos ? "" : trim(l.rest.substr(sp + 1));
      } else if (l.key == "transition") {
        std::vector<std::string> groups;
        std::string              rest = l.rest;
        for (auto bar = rest.find('|'); bar != std::string::npos;
             bar      = rest.find('|')) {
          groups.push_back(trim(rest.substr(0, bar)));
          rest = rest.substr(bar + 1);
        }
        groups.push_back(trim(rest));
        auto head = split(groups.front());
        if (head.size() != 3) {
          throw SyntaxError("expected 'transition <from> <letter> <to>'",
                            l.number);
        }
        if (groups.size() != aut.counters + 1) {
          throw SyntaxError("expected one action group per counter",
                            l.number);
        }
        Transition tr = at_line(l.number, [&] {
          Word letter = word_from_utf8(head[1]);
          if (letter.size() != 1) {
            throw DomainError("a transition reads exactly one letter");
          }
          Transition t{aut.state_index(head[0]), letter[0],
                       aut.state_index(head[2]), {}};
          for (std::size_t g = 1; g < groups.size(); ++g) {
            t.actions.push_back(parse_op_seq(groups[g]));
          }
          return t;
        });
        aut.transitions.push_back(std::move(tr));
      } else if (l.key != "kind" && l.key != "alphabet" && l.key != "counters"
                 && l.key != "states" && l.key != "initial"
                 && l.key != "final") {
        throw SyntaxError("unknown key '" + l.key + "'", l.number);
      }
    }
    at_line(last, [&] {
      check(aut);
      return 0;
    });
    return aut;
  }

  CostAutomaton load_automaton(std::string const& path) {
    auto in = open(path);
    return read_automaton(in);
  }

  std::string write_automaton(CostAutomaton const& aut) {
    std::ostringstream out;
    auto               names = [&](std::vector<std::size_t> const& qs) {
      std::string s;
      for (auto q : qs) {
        s += " " + aut.states[q];
      }
      return s;
    };
    out << kFormatHeader << "\n";
    out << "kind " << (aut.polarity == Polarity::B ? "B" : "S") << "\n";
    out << "alphabet " << aut.alphabet.to_string() << "\n";
    out << "counters " << aut.counters << "\n";
    std::vector<std::size_t> all(aut.states.size());
    for (std::size_t q = 0; q < all.size(); ++q) {
      all[q] = q;
    }
    out << "states" << names(all) << "\n";
    out << "initial" << names(aut.initial) << "\n";
    out << "final" << names(aut.final) << "\n";
    for (std::size_t q = 0; q < aut.states.size(); ++q) {
      if (q < aut.notes.size() && !aut.notes[q].empty()) {
        out << "note " << aut.states[q] << " " << aut.notes[q] << "\n";
      }
    }
    for (auto const& tr : aut.transitions) {
      out << "transition " << aut.states[tr.from] << " " << to_utf8(tr.letter)
          << " " << aut.states[tr.to];
      for (auto const& seq : tr.actions) {
        out << " | " << to_string(seq);
      }
      out << "\n";
    }
    return out.str();
  }

  ////////////////////////////////////////////////////////////////////////
  // Semigroups
  ////////////////////////////////////////////////////////////////////////

  SemigroupFile read_semigroup(std::istream& in) {
    auto const        lines = read_lines(in);
    std::size_t const last  = lines.empty() ? 1 : lines.back().number;
    auto const names = split(unique(lines, "elements", last).rest);
    auto       index = [&](std::string const& name, std::size_t number) {
      for (std::size_t k = 0; k < names.size(); ++k) {
        if (names[k] == name) {
          return k;
        }
      }
      throw SyntaxError("unknown element '" + name + "'", number);
    };
    auto pair_of = [&](std::string const& tok, std::string const& sep,
                       std::size_t number) {
      auto at = tok.find(sep);
      if (at == std::string::npos) {
        throw SyntaxError("expected x" + sep + "y, got '" + tok + "'", number);
      }
      return std::make_pair(tok.substr(0, at), tok.substr(at + sep.size()));
    };

    // the product rows follow the "product" line
    std::vector<std::vector<Elem>> product;
    std::size_t                    row_start = lines.size();
    for (std::size_t k = 0; k < lines.size(); ++k) {
      if (lines[k].key == "product") {
        if (row_start != lines.size()) {
          throw SyntaxError("duplicate 'product' line", lines[k].number);
        }
        row_start = k + 1;
      }
    }
    if (row_start == lines.size() && !optional_line(lines, "product")) {
      throw SyntaxError("missing 'product' line", last);
    }
    for (std::size_t r = 0; r < names.size(); ++r) {
      if (row_start + r >= lines.size()) {
        throw SyntaxError("product table is too short", last);
      }
      Line const&       l = lines[row_start + r];
      std::vector<Elem> row;
      row.push_back(index(l.key, l.number));
      for (auto const& tok : split(l.rest)) {
        row.push_back(index(tok, l.number));
      }
      if (row.size() != names.size()) {
        throw SyntaxError("product row needs " + std::to_string(names.size())
                              + " entries",
                          l.number);
      }
      product.push_back(std::move(row));
    }
    std::size_t const rows_end = row_start + names.size();

    std::vector<std::pair<Elem, Elem>> order;
    std::vector<std::optional<Elem>>   sharp(names.size());
    std::optional<Elem>                neutral;
    Line const*                        alphabet = nullptr;
    Line const*                        h        = nullptr;
    Line const*                        ideal    = nullptr;
    Line const*                        height   = nullptr;
    for (std::size_t k = 0; k < lines.size(); ++k) {
      if (k >= row_start && k < rows_end) {
        continue;
      }
      Line const& l = lines[k];
      if (l.key == "order") {
        for (auto const& tok : split(l.rest)) {
          auto [x, y] = pair_of(tok, "<=", l.number);
          order.emplace_back(index(x, l.number), index(y, l.number));
        }
      } else if (l.key == "sharp") {
        for (auto const& tok : split(l.rest)) {
          auto [x, y]        = pair_of(tok, ":", l.number);
          sharp[index(x, l.number)] = index(y, l.number);
        }
      } else if (l.key == "neutral") {
        neutral = index(l.rest, l.number);
      } else if (l.key == "alphabet") {
        alphabet = &l;
      } else if (l.key == "h") {
        h = &l;
      } else if (l.key == "ideal") {
        ideal = &l;
      } else if (l.key == "height") {
        height = &l;
      } else if (l.key != "elements" && l.key != "product") {
        throw SyntaxError("unknown key '" + l.key + "'", l.number);
      }
    }
    SemigroupFile file{at_line(last,
                               [&] {
                                 return StabSemigroup(names, product, order,
                                                      sharp, neutral);
                               }),
                       std::nullopt};
    if (!alphabet && !h && !ideal && !height) {
      return file;
    }
    if (!alphabet || !h) {
      throw SyntaxError("a recognizer needs 'alphabet' and 'h' lines", last);
    }
    Recognizer rec{file.sg,
                   at_line(alphabet->number,
                           [&] { return Alphabet::from_string(alphabet->rest); }),
                   {},
                   std::vector<bool>(names.size(), false),
                   0};
    rec.h.assign(rec.alphabet.size(), 0);
    std::vector<bool> given(rec.alphabet.size(), false);
    for (auto const& tok : split(h->rest)) {
      auto [a, x] = pair_of(tok, ":", h->number);
      std::size_t k = at_line(h->number, [&] {
        Word w = word_from_utf8(a);
        if (w.size() != 1) {
          throw DomainError("'" + a + "' is not a letter");
        }
        return rec.alphabet.index_of(w[0]);
      });
      rec.h[k]   = index(x, h->number);
      given[k]   = true;
    }
    for (std::size_t k = 0; k < given.size(); ++k) {
      if (!given[k]) {
        throw SyntaxError("h has no image for '"
                              + to_utf8(rec.alphabet.letters()[k]) + "'",
                          h->number);
      }
    }
    if (ideal) {
      for (auto const& tok : split(ideal->rest)) {
        rec.ideal[index(tok, ideal->number)] = true;
      }
    }
    rec.height = height ? parse_count(*height) : default_height(rec.sg);
    auto diagnostics = validate(rec);
    if (!diagnostics.empty()) {
      throw SyntaxError(diagnostics.front(), last);
    }
    file.rec = std::move(rec);
    return file;
  }

  SemigroupFile load_semigroup(std::string const& path) {
    auto in = open(path);
    return read_semigroup(in);
  }

  std::string write_semigroup(StabSemigroup const& sg) {
    std::ostringstream out;
    out << kFormatHeader << "\n";
    out << "elements";
    for (auto const& n : sg.names()) {
      out << " " << n;
    }
    out << "\nproduct\n";
    for (Elem x = 0; x < sg.size(); ++x) {
      for (Elem y = 0; y < sg.size(); ++y) {
        out << (y == 0 ? "" : " ") << sg.name(sg.product(x, y));
      }
      out << "\n";
    }
    out << "order";
    for (auto [x, y] : sg.hasse()) {
      out << " " << sg.name(x) << "<=" << sg.name(y);
    }
    out << "\nsharp";
    for (Elem x = 0; x < sg.size(); ++x) {
      if (sg.has_sharp(x)) {
        out << " " << sg.name(x) << ":" << sg.name(sg.sharp(x));
      }
    }
    out << "\n";
    if (auto one = sg.neutral()) {
      out << "neutral " << sg.name(*one) << "\n";
    }
    return out.str();
  }

  std::string write_recognizer(Recognizer const& rec) {
    std::ostringstream out;
    out << write_semigroup(rec.sg);
    out << "alphabet " << rec.alphabet.to_string() << "\n";
    out << "h";
    for (std::size_t k = 0; k < rec.alphabet.size(); ++k) {
      out << " " << to_utf8(rec.alphabet.letters()[k]) << ":"
          << rec.sg.name(rec.h[k]);
    }
    out << "\nideal";
    for (Elem x = 0; x < rec.sg.size(); ++x) {
      if (rec.ideal[x]) {
        out << " " << rec.sg.name(x);
      }
    }
    out << "\nheight " << rec.height << "\n";
    return out.str();
  }

  ////////////////////////////////////////////////////////////////////////
  // Formulae
  ////////////////////////////////////////////////////////////////////////

  FormulaFile read_formulas(std::istream& in) {
    auto const        lines = read_lines(in);
    std::size_t const last  = lines.empty() ? 1 : lines.back().number;
    Line const&       alpha = unique(lines, "alphabet", last);
    FormulaFile       file{
        at_line(alpha.number, [&] { return Alphabet::from_string(alpha.rest); }),
        {}};
    for (auto const& l : lines) {
      if (l.key == "formula") {
        if (l.rest.empty()) {
          throw SyntaxError("empty formula", l.number);
        }
        file.formulas.push_back(l.rest);
      } else if (l.key != "alphabet") {
        throw SyntaxError("unknown key '" + l.key + "'", l.number);
      }
    }
    return file;
  }

  FormulaFile load_formulas(std::string const& path) {
    auto in = open(path);
    return read_formulas(in);
  }

  std::string write_formulas(FormulaFile const& file) {
    std::ostringstream out;
    out << kFormatHeader << "\n";
    out << "alphabet " << file.alphabet.to_string() << "\n";
    for (auto const& f : file.formulas) {
      out << "formula " << f << "\n";
    }
    return out.str();
  }

}  // namespace costltl
