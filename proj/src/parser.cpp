#include "autocore/parser.hpp"

#include <algorithm>
#include <set>

namespace autocore {

namespace {

bool ident_start(char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_'; }
bool ident_char(char c) { return ident_start(c) || (c >= '0' && c <= '9'); }
bool digit(char c) { return c >= '0' && c <= '9'; }

struct Cursor {
  std::string_view s;
  int line;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
  }
  bool done() const { return pos >= s.size(); }
  char peek() const { return s[pos]; }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line, int(pos) + 1); }
};

// One side of a reaction: '+'-separated terms, summing duplicates.
std::map<int, Rat> parse_side(Cursor& c, ReactionNetwork& rn, bool allow_empty) {
  std::map<int, Rat> side;
  c.skip_ws();
  if (c.done()) {
    if (!allow_empty) c.fail("empty reaction side (use --allow-open to accept)");
    return side;
  }
  while (true) {
    c.skip_ws();
    if (c.done()) c.fail("expected a term");
    Rat coeff = 1;
    if (digit(c.peek())) {
      size_t start = c.pos;
      while (!c.done() && digit(c.peek())) ++c.pos;
      if (!c.done() && c.peek() == '/') {
        ++c.pos;
        if (c.done() || !digit(c.peek())) c.fail("malformed rational coefficient");
        while (!c.done() && digit(c.peek())) ++c.pos;
      }
      auto r = parse_rat(c.s.substr(start, c.pos - start));
      if (!r) c.fail("malformed coefficient");
      coeff = *r;
      if (coeff <= 0) {
        c.pos = start;
        c.fail("coefficient must be positive");
      }
      c.skip_ws();
    }
    if (c.done() || !ident_start(c.peek())) c.fail("expected an entity identifier");
    size_t start = c.pos;
    while (!c.done() && ident_char(c.peek())) ++c.pos;
    std::string name(c.s.substr(start, c.pos - start));
    int idx = rn.entity_index(name);
    if (idx < 0) {
      idx = rn.n_entities();
      rn.entities.push_back(name);
    }
    side[idx] += coeff;

    c.skip_ws();
    if (c.done()) break;
    if (c.peek() == '+') {
      ++c.pos;
      continue;
    }
    c.fail("unexpected character '" + std::string(1, c.peek()) + "'");
  }
  return side;
}

}  // namespace

ReactionNetwork parse_reactions(std::string_view text, bool allow_open) {
  ReactionNetwork rn;
  std::set<std::string> labels;
  int line_no = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    pos = (eol == std::string_view::npos) ? text.size() + 1 : eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    Cursor c{line, line_no};
    c.skip_ws();
    if (c.done() || c.peek() == '#') continue;

    Reaction r;
    // Optional label up to ':'.
    size_t save = c.pos;
    if (ident_start(c.peek())) {
      size_t start = c.pos;
      while (!c.done() && ident_char(c.peek())) ++c.pos;
      size_t after = c.pos;
      c.skip_ws();
      if (!c.done() && c.peek() == ':') {
        r.name = std::string(line.substr(start, after - start));
        ++c.pos;
      } else {
        c.pos = save;
      }
    }
    if (r.name.empty()) r.name = "r" + std::to_string(rn.n_reactions() + 1);

    size_t arrow = line.find("->", c.pos);
    if (arrow == std::string_view::npos) c.fail("missing '->'");
    Cursor lhs{line.substr(0, arrow), line_no};
    lhs.pos = c.pos;
    r.reactants = parse_side(lhs, rn, allow_open);
    Cursor rhs{line, line_no};
    rhs.pos = arrow + 2;
    r.products = parse_side(rhs, rn, allow_open);

    if (!labels.insert(r.name).second) {
      c.pos = 0;
      c.fail("duplicate reaction label '" + r.name + "'");
    }
    rn.reactions.push_back(std::move(r));
  }
  rn.validate();
  return rn;
}

std::string serialize_reactions(const ReactionNetwork& rn) {
  std::string out;
  for (const Reaction& r : rn.reactions) {
    out += r.name;
    out += ": ";
    auto side = [&](const std::map<int, Rat>& m) {
      std::vector<std::string> terms;
      for (const auto& [x, c] : m) {
        std::string t;
        if (c != 1) t = rat_str(c) + " ";
        t += rn.entities[x];
        terms.push_back(t);
      }
      return join(terms, " + ");
    };
    out += side(r.reactants);
    out += " -> ";
    out += side(r.products);
    out += "\n";
  }
  return out;
}

}  // namespace autocore
