#include "segdist/dsl.hpp"

#include <cctype>
#include <sstream>
#include <utility>

#include "segdist/errors.hpp"
#include "segdist/segment.hpp"

namespace segdist {

namespace {

// Character cursor with 1-based line and column bookkeeping.
struct Cursor {
  const std::string& text;
  std::size_t pos = 0;
  int line = 1, col = 1;

  bool done() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }
  char take() {
    char c = text[pos++];
    if (c == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    return c;
  }
  void skip_blank() {
    while (!done()) {
      char c = peek();
      if (c == '#') {
        while (!done() && peek() != '\n') take();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        take();
      } else {
        break;
      }
    }
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(line, col, msg);
  }
};

bool ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

std::string lex_ident(Cursor& cur) {
  if (cur.done() || !ident_start(cur.peek()))
    cur.fail("expected an identifier");
  std::string s;
  while (!cur.done() && ident_char(cur.peek())) s += cur.take();
  return s;
}

long long lex_uint(Cursor& cur) {
  if (cur.done() || !std::isdigit(static_cast<unsigned char>(cur.peek())))
    cur.fail("expected an integer");
  long long v = 0;
  while (!cur.done() && std::isdigit(static_cast<unsigned char>(cur.peek()))) {
    if (v > 900'000'000'000'000'000LL) cur.fail("integer literal too large");
    v = v * 10 + (cur.take() - '0');
  }
  return v;
}

void expect(Cursor& cur, char c) {
  if (cur.done() || cur.peek() != c)
    cur.fail(std::string("expected '") + c + "'");
  cur.take();
}

void expect_arrow(Cursor& cur) {
  if (cur.done() || cur.peek() != '-') cur.fail("expected 'self' or '->'");
  cur.take();
  expect(cur, '>');
}

Rat lex_rational(Cursor& cur) {
  cur.skip_blank();
  bool neg = false;
  if (!cur.done() && cur.peek() == '-') {
    cur.take();
    neg = true;
  }
  long long num = lex_uint(cur);
  long long den = 1;
  if (!cur.done() && cur.peek() == '/') {
    cur.take();
    int ln = cur.line, co = cur.col;
    den = lex_uint(cur);
    if (den == 0) throw ParseError(ln, co, "zero denominator");
  }
  return Rat(neg ? -num : num, den);
}

// Reads one partner field value: either "self" or "-> IDENT".
PartnerRef lex_partner(Cursor& cur, bool allow_self) {
  cur.skip_blank();
  PartnerRef ref;
  if (!cur.done() && cur.peek() == '-') {
    expect_arrow(cur);
    cur.skip_blank();
    ref.kind = PartnerRef::Named;
    ref.name = lex_ident(cur);
    return ref;
  }
  int ln = cur.line, co = cur.col;
  std::string word = lex_ident(cur);
  if (word != "self" || !allow_self)
    throw ParseError(ln, co, allow_self ? "expected 'self' or '-> IDENT'"
                                        : "expected '-> IDENT'");
  ref.kind = PartnerRef::Self;
  return ref;
}

}  // namespace

Universe parse_universe(const std::string& text) {
  UniverseBuilder builder;
  Cursor cur{text};
  for (;;) {
    cur.skip_blank();
    if (cur.done()) break;
    int ln = cur.line, co = cur.col;
    std::string kw = lex_ident(cur);
    if (kw != "tower")
      throw ParseError(ln, co, "expected 'tower', got '" + kw + "'");
    cur.skip_blank();
    TowerDecl decl;
    decl.id = lex_ident(cur);
    cur.skip_blank();
    expect(cur, '{');
    for (;;) {
      cur.skip_blank();
      if (!cur.done() && cur.peek() == '}') {
        cur.take();
        break;
      }
      int fln = cur.line, fco = cur.col;
      std::string field = lex_ident(cur);
      auto dup = [&](bool taken) {
        if (taken)
          throw ParseError(fln, fco,
                           "duplicate '" + field + "' in tower '" + decl.id +
                               "'");
      };
      if (field == "degree") {
        dup(decl.degree.has_value());
        cur.skip_blank();
        decl.degree = static_cast<int>(lex_uint(cur));
      } else if (field == "tau") {
        dup(decl.tau.kind != PartnerRef::Unset);
        decl.tau = lex_partner(cur, true);
      } else if (field == "dual") {
        dup(decl.dual.kind != PartnerRef::Unset);
        decl.dual = lex_partner(cur, true);
      } else if (field == "chi") {
        dup(decl.chi.kind != PartnerRef::Unset);
        decl.chi = lex_partner(cur, false);
      } else if (field == "gamma") {
        dup(decl.gamma.has_value());
        cur.skip_blank();
        int gln = cur.line, gco = cur.col;
        long long g = lex_uint(cur);
        if (g != 0 && g != 1)
          throw ParseError(gln, gco, "gamma must be 0 or 1");
        decl.gamma = static_cast<int>(g);
      } else {
        throw ParseError(fln, fco, "unknown field '" + field + "'");
      }
      cur.skip_blank();
      expect(cur, ';');
    }
    builder.add(std::move(decl));
  }
  return builder.finalize();
}

std::string print_universe(const Universe& u) {
  std::ostringstream os;
  for (int t = 0; t < u.size(); ++t) {
    const Tower& tw = u.tower(t);
    if (tw.synthetic) continue;
    os << "tower " << tw.id << " {\n";
    os << "  degree " << tw.degree << ";\n";
    if (tw.tau == t)
      os << "  tau self;\n";
    else
      os << "  tau -> " << u.tower(tw.tau).id << ";\n";
    if (tw.dual == t)
      os << "  dual self;\n";
    else
      os << "  dual -> " << u.tower(tw.dual).id << ";\n";
    if (!u.tower(tw.chi).synthetic)
      os << "  chi -> " << u.tower(tw.chi).id << ";\n";
    if (tw.gamma) os << "  gamma " << *tw.gamma << ";\n";
    os << "}\n";
  }
  return os.str();
}

Multisegment parse_multisegment(const std::string& text, const Universe& u) {
  Cursor cur{text};
  cur.skip_blank();
  if (cur.done()) cur.fail("empty multisegment literal");
  if (cur.peek() == '0') {
    cur.take();
    cur.skip_blank();
    if (!cur.done()) cur.fail("unexpected text after '0'");
    return Multisegment(u, {});
  }
  Realization segs;
  for (;;) {
    cur.skip_blank();
    int ln = cur.line, co = cur.col;
    std::string kw = lex_ident(cur);
    if (kw != "Delta")
      throw ParseError(ln, co, "expected 'Delta', got '" + kw + "'");
    cur.skip_blank();
    expect(cur, '(');
    cur.skip_blank();
    int tln = cur.line, tco = cur.col;
    std::string id = lex_ident(cur);
    int t = u.find(id);
    if (t < 0) throw ParseError(tln, tco, "unknown tower '" + id + "'");
    cur.skip_blank();
    expect(cur, ',');
    Rat a = lex_rational(cur);
    cur.skip_blank();
    expect(cur, ',');
    Rat b = lex_rational(cur);
    cur.skip_blank();
    expect(cur, ')');
    try {
      segs.push_back(make_segment(u, t, a, b));
    } catch (const InvalidArgument& e) {
      throw ParseError(ln, co, e.what());
    }
    cur.skip_blank();
    if (cur.done()) break;
    expect(cur, '+');
  }
  return Multisegment(u, std::move(segs));
}

std::string print_segment(const Universe& u, const Segment& s) {
  return "Delta(" + u.tower(s.tower).id + "," + rat_str(s.a) + "," +
         rat_str(s.b) + ")";
}

std::string print_multisegment(const Universe& u, const Multisegment& m) {
  if (m.empty()) return "0";
  std::string out;
  for (const Segment& s : m.segments()) {
    if (!out.empty()) out += "+";
    out += print_segment(u, s);
  }
  return out;
}

}  // namespace segdist
