#include "textio.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "error.hpp"

namespace fanmat::io {
namespace {

struct Tok {
  std::string s;
  int line = 0;
  int col = 0;
};
using TokLine = std::vector<Tok>;

// whitespace-separated tokens per line, '#' to end of line stripped,
// blank lines dropped; line/col are 1-based
std::vector<TokLine> tokenize(const std::string& text) {
  std::vector<TokLine> out;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string line = text.substr(pos, eol == std::string::npos ? std::string::npos : eol - pos);
    ++line_no;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    TokLine toks;
    std::size_t i = 0;
    while (i < line.size()) {
      if (std::isspace(static_cast<unsigned char>(line[i]))) {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
      toks.push_back({line.substr(i, j - i), line_no, static_cast<int>(i + 1)});
      i = j;
    }
    if (!toks.empty()) out.push_back(std::move(toks));
    if (eol == std::string::npos) break;
    pos = eol + 1;
  }
  return out;
}

bool looks_like_int(const std::string& s) {
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

Int parse_int(const Tok& t) {
  if (!looks_like_int(t.s))
    fail(Errc::parse, "line " + std::to_string(t.line) + ", col " + std::to_string(t.col) +
                          ": expected an integer, got '" + t.s + "'");
  return Int(t.s);
}

// small nonnegative count (dimensions, indices)
long parse_count(const Tok& t, long max_value, const char* what) {
  Int v = parse_int(t);
  if (v < 0 || v > max_value)
    fail(Errc::parse, "line " + std::to_string(t.line) + ", col " + std::to_string(t.col) + ": " +
                          what + " out of range: " + t.s);
  return v.get_si();
}

constexpr long kMaxDim = 100000;

struct Cursor {
  const std::vector<TokLine>& lines;
  std::size_t at = 0;

  bool done() const { return at >= lines.size(); }
  const TokLine& peek() const { return lines[at]; }
  const TokLine& next() { return lines[at++]; }
  int next_line_no() const {
    return done() ? (lines.empty() ? 1 : lines.back()[0].line + 1) : lines[at][0].line;
  }
};

IntMatrix parse_matrix_block(Cursor& cur) {
  if (cur.done()) fail(Errc::parse, "line " + std::to_string(cur.next_line_no()) + ": expected a matrix header ROWS COLS");
  const TokLine& head = cur.next();
  if (head.size() != 2)
    fail(Errc::parse, "line " + std::to_string(head[0].line) + ": matrix header must be exactly ROWS COLS");
  long rows = parse_count(head[0], kMaxDim, "row count");
  long cols = parse_count(head[1], kMaxDim, "column count");
  IntMatrix m(rows, cols);
  for (long i = 0; i < rows; ++i) {
    if (cur.done())
      fail(Errc::dimension, "line " + std::to_string(cur.next_line_no()) + ": expected " +
                                std::to_string(rows) + " matrix rows, got " + std::to_string(i));
    const TokLine& row = cur.next();
    if (static_cast<long>(row.size()) != cols)
      fail(Errc::dimension, "line " + std::to_string(row[0].line) + ": expected " +
                                std::to_string(cols) + " entries, got " + std::to_string(row.size()));
    for (long j = 0; j < cols; ++j) m(i, j) = parse_int(row[j]);
  }
  return m;
}

void expect_eof(const Cursor& cur) {
  if (!cur.done())
    fail(Errc::parse, "line " + std::to_string(cur.peek()[0].line) + ": unexpected trailing content '" +
                          cur.peek()[0].s + "'");
}

bool is_keyword(const TokLine& l, const char* kw) { return l.size() == 1 && l[0].s == kw; }

void expect_keyword(Cursor& cur, const char* kw) {
  if (cur.done())
    fail(Errc::parse, "line " + std::to_string(cur.next_line_no()) + ": expected '" + std::string(kw) + "'");
  const TokLine& l = cur.next();
  if (!is_keyword(l, kw))
    fail(Errc::parse, "line " + std::to_string(l[0].line) + ": expected '" + std::string(kw) +
                          "', got '" + l[0].s + "'");
}

// 1-based distinct indices in 1..m, returned 0-based sorted
std::vector<int> parse_index_line(const TokLine& l, long m, const char* what) {
  std::vector<int> idx;
  std::set<int> seen;
  for (const Tok& t : l) {
    Int v = parse_int(t);
    if (v < 1 || v > m)
      fail(Errc::index_out_of_range, "line " + std::to_string(t.line) + ": " + what + " " + t.s +
                                         " outside 1.." + std::to_string(m));
    int i = static_cast<int>(v.get_si()) - 1;
    if (!seen.insert(i).second)
      fail(Errc::parse, "line " + std::to_string(t.line) + ": repeated " + what + " " + t.s);
    idx.push_back(i);
  }
  std::sort(idx.begin(), idx.end());
  return idx;
}

void append_rows(std::string& out, const IntMatrix& m, bool negate) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ' ';
      out += to_string(negate ? Int(-m(i, j)) : m(i, j));
    }
    out += '\n';
  }
}

}  // namespace

IntMatrix parse_matrix(const std::string& text) {
  auto lines = tokenize(text);
  Cursor cur{lines};
  IntMatrix m = parse_matrix_block(cur);
  expect_eof(cur);
  return m;
}

std::string matrix_to_text(const IntMatrix& m) {
  std::string out = std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
  append_rows(out, m, false);
  return out;
}

ParsedFan parse_fan(const std::string& text) {
  auto lines = tokenize(text);
  Cursor cur{lines};
  ParsedFan f;
  f.V = parse_matrix_block(cur);
  expect_keyword(cur, "CONES");
  while (!cur.done()) f.max_cones.push_back(parse_index_line(cur.next(), f.V.cols(), "ray index"));
  if (f.max_cones.empty())
    fail(Errc::parse, "fan has no maximal cones");
  return f;
}

std::string fan_to_text(const fans::Fan& f) {
  std::string out = matrix_to_text(f.V);
  out += "CONES\n";
  for (const auto& c : f.max_cones) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(c[i] + 1);
    }
    out += '\n';
  }
  return out;
}

fans::SquarefreeMonomialIdeal parse_ideal(const std::string& text) {
  auto lines = tokenize(text);
  Cursor cur{lines};
  if (cur.done()) fail(Errc::parse, "line 1: expected 'VARS m'");
  const TokLine& head = cur.next();
  if (head.size() != 2 || head[0].s != "VARS")
    fail(Errc::parse, "line " + std::to_string(head[0].line) + ": expected 'VARS m'");
  long m = parse_count(head[1], kMaxDim, "variable count");
  fans::SquarefreeMonomialIdeal ideal;
  ideal.num_vars = m;
  while (!cur.done()) {
    const TokLine& l = cur.next();
    if (l.size() == 1 && l[0].s == "0") {
      ideal.supports.push_back({});
      continue;
    }
    ideal.supports.push_back(parse_index_line(l, m, "variable index"));
  }
  return ideal;
}

std::string ideal_to_text(const fans::SquarefreeMonomialIdeal& ideal) {
  std::string out = "VARS " + std::to_string(ideal.num_vars) + "\n";
  for (const auto& s : ideal.supports) {
    if (s.empty()) {
      out += "0\n";
      continue;
    }
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(s[i] + 1);
    }
    out += '\n';
  }
  return out;
}

std::string cone_to_text(const cones::RationalCone& c) {
  std::string out = "GENERATORS\n";
  out += std::to_string(c.rays.rows() + 2 * c.lineality.rows()) + " " + std::to_string(c.ambient) + "\n";
  append_rows(out, c.rays, false);
  append_rows(out, c.lineality, false);
  append_rows(out, c.lineality, true);
  out += "FACETS\n";
  out += std::to_string(c.facets.rows() + 2 * c.equations.rows()) + " " + std::to_string(c.ambient) + "\n";
  append_rows(out, c.facets, false);
  append_rows(out, c.equations, false);
  append_rows(out, c.equations, true);
  return out;
}

grading::GradedPresentation parse_presentation(const std::string& text) {
  auto lines = tokenize(text);
  Cursor cur{lines};
  expect_keyword(cur, "Q");
  grading::GradedPresentation p;
  p.Q = parse_matrix_block(cur);
  std::size_t m = p.Q.cols();
  if (la::rank(p.Q) != p.Q.rows())
    fail(Errc::rank_deficient, "grading matrix Q must have full row rank");
  if (!cur.done() && is_keyword(cur.peek(), "TORSION")) {
    cur.next();
    if (cur.done())
      fail(Errc::parse, "line " + std::to_string(cur.next_line_no()) + ": expected a line of moduli");
    const TokLine& mods = cur.next();
    for (const Tok& t : mods) {
      Int d = parse_int(t);
      if (d < 2)
        fail(Errc::parse, "line " + std::to_string(t.line) + ": modulus must be at least 2, got " + t.s);
      p.torsion.moduli.push_back(d);
    }
    std::size_t k = p.torsion.moduli.size();
    p.torsion.rows = IntMatrix(k, m);
    for (std::size_t i = 0; i < k; ++i) {
      if (cur.done())
        fail(Errc::dimension, "line " + std::to_string(cur.next_line_no()) + ": expected " +
                                  std::to_string(k) + " torsion rows, got " + std::to_string(i));
      const TokLine& row = cur.next();
      if (row.size() != m)
        fail(Errc::dimension, "line " + std::to_string(row[0].line) + ": expected " + std::to_string(m) +
                                  " entries, got " + std::to_string(row.size()));
      for (std::size_t j = 0; j < m; ++j)
        p.torsion.rows(i, j) = mod_reduce(parse_int(row[j]), p.torsion.moduli[i]);
    }
  }
  expect_keyword(cur, "RELATIONS");
  while (!cur.done()) {
    const TokLine& l = cur.next();
    std::string src;
    for (const Tok& t : l) {
      if (!src.empty()) src += ' ';
      src += t.s;
    }
    try {
      p.relations.push_back(parse_polynomial(src, m));
    } catch (const Error& e) {
      fail(e.code(), "line " + std::to_string(l[0].line) + ": " + e.what());
    }
  }
  return p;
}

std::string presentation_to_text(const grading::GradedPresentation& p) {
  std::string out = "Q\n" + matrix_to_text(p.Q);
  if (!p.torsion.empty()) {
    out += "TORSION\n";
    for (std::size_t i = 0; i < p.torsion.moduli.size(); ++i) {
      if (i) out += ' ';
      out += to_string(p.torsion.moduli[i]);
    }
    out += '\n';
    append_rows(out, p.torsion.rows, false);
  }
  out += "RELATIONS\n";
  for (const auto& r : p.relations) out += polynomial_to_text(r) + "\n";
  return out;
}

namespace {

struct PTok {
  enum Kind { integer, var, caret, star, plus, minus, end } kind;
  std::string digits;
  std::size_t pos;  // 1-based offset in the source
};

std::vector<PTok> lex_poly(const std::string& s) {
  std::vector<PTok> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    std::size_t pos = i + 1;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({PTok::integer, s.substr(i, j - i), pos});
      i = j;
    } else if (c == 'x') {
      out.push_back({PTok::var, "", pos});
      ++i;
    } else if (c == '^') {
      out.push_back({PTok::caret, "", pos});
      ++i;
    } else if (c == '*') {
      out.push_back({PTok::star, "", pos});
      ++i;
    } else if (c == '+') {
      out.push_back({PTok::plus, "", pos});
      ++i;
    } else if (c == '-') {
      out.push_back({PTok::minus, "", pos});
      ++i;
    } else {
      fail(Errc::parse, "polynomial syntax error at position " + std::to_string(pos) +
                            ": unexpected character '" + std::string(1, c) + "'");
    }
  }
  out.push_back({PTok::end, "", s.size() + 1});
  return out;
}

struct PolyParser {
  const std::vector<PTok>& toks;
  std::size_t m;
  std::size_t at = 0;

  const PTok& peek() const { return toks[at]; }
  const PTok& next() { return toks[at++]; }

  [[noreturn]] void err(const std::string& msg) const {
    fail(Errc::parse, "polynomial syntax error at position " + std::to_string(peek().pos) + ": " + msg);
  }

  Int expect_integer(const char* what) {
    if (peek().kind != PTok::integer) err(std::string("expected ") + what);
    return Int(next().digits);
  }

  // factor := 'x' index ['^' exponent]
  void parse_factor(std::vector<Int>& exps) {
    if (peek().kind != PTok::var) err("expected a variable");
    next();
    if (peek().kind != PTok::integer) err("expected a variable index after 'x'");
    std::size_t pos = peek().pos;
    Int idx = expect_integer("a variable index");
    if (idx < 1 || idx > static_cast<long>(m))
      fail(Errc::index_out_of_range, "variable index x" + to_string(idx) + " at position " +
                                         std::to_string(pos) + " outside 1.." + std::to_string(m));
    Int e = 1;
    if (peek().kind == PTok::caret) {
      next();
      e = expect_integer("an exponent");
    }
    exps[idx.get_si() - 1] += e;
  }

  grading::Term parse_term(int sign) {
    grading::Term t;
    t.coeff = sign;
    t.exponents.assign(m, 0);
    if (peek().kind == PTok::plus || peek().kind == PTok::minus) {
      if (next().kind == PTok::minus) t.coeff = -t.coeff;
    }
    if (peek().kind == PTok::integer) {
      t.coeff *= Int(next().digits);
      if (peek().kind != PTok::star) err("expected '*' after a coefficient");
      next();
    }
    parse_factor(t.exponents);
    while (peek().kind == PTok::star) {
      next();
      parse_factor(t.exponents);
    }
    return t;
  }
};

}  // namespace

grading::Polynomial parse_polynomial(const std::string& text, std::size_t m) {
  auto toks = lex_poly(text);
  PolyParser pp{toks, m};
  grading::Polynomial p;
  p.num_vars = m;
  p.terms.push_back(pp.parse_term(+1));
  while (pp.peek().kind == PTok::plus || pp.peek().kind == PTok::minus) {
    int sign = pp.next().kind == PTok::minus ? -1 : +1;
    p.terms.push_back(pp.parse_term(sign));
  }
  if (pp.peek().kind != PTok::end) pp.err("expected '+', '-' or end of input");
  return grading::normalized(p);
}

std::string polynomial_to_text(const grading::Polynomial& p) {
  if (p.terms.empty()) return "0";
  std::string out;
  for (std::size_t t = 0; t < p.terms.size(); ++t) {
    const grading::Term& term = p.terms[t];
    bool neg = term.coeff < 0;
    if (t == 0) {
      if (neg) out += '-';
    } else {
      out += neg ? " - " : " + ";
    }
    Int c = abs(term.coeff);
    std::string factors;
    for (std::size_t j = 0; j < term.exponents.size(); ++j) {
      if (term.exponents[j] == 0) continue;
      if (!factors.empty()) factors += '*';
      factors += "x" + std::to_string(j + 1);
      if (term.exponents[j] > 1) factors += "^" + to_string(term.exponents[j]);
    }
    if (factors.empty())
      out += to_string(c);
    else if (c == 1)
      out += factors;
    else
      out += to_string(c) + "*" + factors;
  }
  return out;
}

std::string multidegree_to_text(const grading::MultiDegree& d) {
  std::string out = "((";
  for (std::size_t i = 0; i < d.free_part.size(); ++i) {
    if (i) out += ',';
    out += to_string(d.free_part[i]);
  }
  out += ")";
  if (!d.moduli.empty()) {
    out += "; ";
    for (std::size_t i = 0; i < d.moduli.size(); ++i) {
      if (i) out += ", ";
      out += to_string(d.residues[i]) + " mod " + to_string(d.moduli[i]);
    }
  }
  out += ")";
  return out;
}

std::string report_to_text(const gale::MatrixClassReport& r) {
  std::string out;
  auto yesno = [](bool b) { return b ? "yes" : "no"; };
  if (r.kind == gale::MatrixClassReport::Kind::fan) {
    out += std::string("F-matrix: ") + yesno(r.is_f) + "\n";
    out += std::string("CF-matrix: ") + yesno(r.is_cf) + "\n";
  } else {
    out += std::string("W-matrix: ") + yesno(r.is_w) + "\n";
  }
  out += std::string("reduced: ") + yesno(r.is_reduced) + "\n";
  if (!r.failed.empty()) {
    out += "failed conditions:\n";
    for (const auto& f : r.failed) out += f.label + ": " + f.evidence + "\n";
  }
  return out;
}

std::string covering_to_text(const cover::CoveringData& c) {
  std::string out = "VTILDE\n" + matrix_to_text(c.V_tilde);
  out += "BETA\n" + matrix_to_text(c.beta);
  out += "PI1\n" + c.pi1.descriptor() + "\n";
  out += "DEGREE\n" + to_string(c.degree) + "\n";
  return out;
}

namespace {

HomogeneityReport::Entry make_entry(const grading::GradedPresentation& p, std::string label,
                                    const grading::Polynomial& poly) {
  HomogeneityReport::Entry e;
  e.label = std::move(label);
  e.poly = grading::normalized(poly);
  e.dec = grading::is_homogeneous(p, e.poly);
  if (!e.dec.homogeneous)
    e.conflict_degree = grading::monomial_degree(p, e.poly.terms[e.dec.conflict_b].exponents);
  return e;
}

}  // namespace

HomogeneityReport check_poly(const grading::GradedPresentation& p, const grading::Polynomial& poly) {
  HomogeneityReport r;
  r.entries.push_back(make_entry(p, "polynomial", poly));
  r.all_homogeneous = r.entries[0].dec.homogeneous;
  return r;
}

HomogeneityReport check_relations(const grading::GradedPresentation& p) {
  HomogeneityReport r;
  for (std::size_t i = 0; i < p.relations.size(); ++i) {
    r.entries.push_back(make_entry(p, "relation " + std::to_string(i + 1), p.relations[i]));
    r.all_homogeneous = r.all_homogeneous && r.entries.back().dec.homogeneous;
  }
  return r;
}

std::string homogeneity_to_text(const HomogeneityReport& r) {
  if (r.entries.empty()) return "no relations\n";
  std::string out;
  for (const auto& e : r.entries) {
    if (e.dec.homogeneous) {
      out += e.label + ": homogeneous of degree " + multidegree_to_text(e.dec.degree) + "\n";
    } else {
      const auto& a = e.poly.terms[e.dec.conflict_a];
      const auto& b = e.poly.terms[e.dec.conflict_b];
      grading::Polynomial pa{e.poly.num_vars, {a}}, pb{e.poly.num_vars, {b}};
      out += e.label + ": not homogeneous: term " + std::to_string(e.dec.conflict_a + 1) + " (" +
             polynomial_to_text(pa) + ", degree " + multidegree_to_text(e.dec.degree) + ") vs term " +
             std::to_string(e.dec.conflict_b + 1) + " (" + polynomial_to_text(pb) + ", degree " +
             multidegree_to_text(e.conflict_degree) + ")\n";
    }
  }
  return out;
}

}  // namespace fanmat::io
