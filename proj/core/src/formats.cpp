#include "pwb/formats.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "pwb/errors.hpp"
#include "pwb/parser.hpp"

namespace pwb {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::string strip_comments(std::string_view text) {
  std::string out;
  bool quoted = false, comment = false;
  for (char c : text) {
    if (comment) {
      if (c == '\n') {
        comment = false;
        out += c;
      }
      continue;
    }
    if (c == '"') quoted = !quoted;
    if (c == '#' && !quoted) {
      comment = true;
      continue;
    }
    out += c;
  }
  return out;
}

std::string unquote(const std::string& s) {
  if (s.size() >= 2 && s.front() == '"' && s.back() == '"') return s.substr(1, s.size() - 2);
  if (s.find('"') != std::string::npos) throw FormatError("unbalanced quotes in " + s);
  return s;
}

// "<keyword> <name> [on <target>] { stmt; stmt; }"
struct Block {
  std::string keyword, name, target;
  std::vector<std::string> statements;
};

Block parse_block(std::string_view raw, const std::string& keyword) {
  std::string text = strip_comments(raw);
  auto open = text.find('{');
  auto close = text.rfind('}');
  if (open == std::string::npos || close == std::string::npos || close < open)
    throw FormatError("expected '" + keyword + " <name> { ... }'");
  if (!trim(std::string_view(text).substr(close + 1)).empty()) throw FormatError("text after closing brace");
  std::istringstream head(text.substr(0, open));
  Block b;
  std::string on;
  head >> b.keyword >> b.name;
  if (b.keyword != keyword) throw FormatError("expected keyword '" + keyword + "', found '" + b.keyword + "'");
  if (b.name.empty()) throw FormatError("missing " + keyword + " name");
  if (head >> on) {
    if (on != "on" || !(head >> b.target)) throw FormatError("expected 'on <algebra>' after the name");
    std::string extra;
    if (head >> extra) throw FormatError("unexpected '" + extra + "' before '{'");
  }
  std::string body = text.substr(open + 1, close - open - 1);
  std::string cur;
  bool quoted = false;
  for (char c : body) {
    if (c == '"') quoted = !quoted;
    if (c == ';' && !quoted) {
      if (!trim(cur).empty()) b.statements.push_back(trim(cur));
      cur.clear();
      continue;
    }
    cur += c;
  }
  if (quoted) throw FormatError("unterminated string");
  if (!trim(cur).empty()) throw FormatError("missing ';' after '" + trim(cur) + "'");
  return b;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, ',')) {
    std::string t = trim(cur);
    if (t.empty()) throw FormatError("empty entry in list '" + s + "'");
    out.push_back(t);
  }
  return out;
}

// "bracket{a,b} = rhs" -> (a, b, rhs).
struct BracketStmt {
  std::string left, right, rhs;
};
std::optional<BracketStmt> parse_bracket_stmt(const std::string& stmt) {
  if (stmt.rfind("bracket", 0) != 0) return std::nullopt;
  auto lb = stmt.find('{'), rb = stmt.find('}'), eq = stmt.find('=');
  if (lb == std::string::npos || rb == std::string::npos || eq == std::string::npos || !(lb < rb && rb < eq))
    throw FormatError("expected 'bracket{a,b} = expr', found '" + stmt + "'");
  auto parts = split_list(stmt.substr(lb + 1, rb - lb - 1));
  if (parts.size() != 2) throw FormatError("bracket needs exactly two entries: '" + stmt + "'");
  return BracketStmt{parts[0], parts[1], unquote(trim(stmt.substr(eq + 1)))};
}

// "key: value" -> value, when the statement starts with key.
std::optional<std::string> keyed(const std::string& stmt, const std::string& key) {
  auto colon = stmt.find(':');
  if (colon == std::string::npos || trim(stmt.substr(0, colon)) != key) return std::nullopt;
  return trim(stmt.substr(colon + 1));
}

long table_conductor(const PolyRing& ring, const std::vector<std::string>& exprs) {
  long cond = 1;
  for (const auto& e : exprs)
    for (const auto& t : parse_poly(ring, e).terms()) cond = lcm(cond, t.coeff.conductor());
  return cond;
}

std::string compact(std::string s) {
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
  return s;
}

}  // namespace

PoissonAlgebra parse_pois(std::string_view text, bool defer_jacobi) {
  Block b = parse_block(text, "algebra");
  if (!b.target.empty()) throw FormatError("an algebra block takes no 'on' clause");
  std::optional<std::vector<std::string>> vars;
  std::vector<BracketStmt> brackets;
  for (const auto& s : b.statements) {
    if (auto v = keyed(s, "vars")) {
      if (vars) throw FormatError("duplicate vars statement");
      vars = split_list(*v);
    } else if (auto br = parse_bracket_stmt(s)) {
      brackets.push_back(*br);
    } else {
      throw FormatError("unknown statement '" + s + "'");
    }
  }
  if (!vars) throw FormatError("missing vars statement");
  PolyRing probe(*vars);
  std::vector<std::string> exprs;
  for (const auto& br : brackets) exprs.push_back(br.rhs);
  PolyRing ring(*vars, table_conductor(probe, exprs));
  PoissonAlgebra::Table table;
  for (const auto& br : brackets) {
    auto i = ring.index_of(br.left), j = ring.index_of(br.right);
    if (!i) throw UnknownVariable("bracket variable '" + br.left + "'");
    if (!j) throw UnknownVariable("bracket variable '" + br.right + "'");
    if (*i == *j) throw FormatError("bracket{" + br.left + "," + br.right + "} must be zero");
    Poly p = parse_poly(ring, br.rhs);
    if (*i > *j) p = -p;
    auto key = std::make_pair(std::min(*i, *j), std::max(*i, *j));
    if (table.count(key)) throw FormatError("duplicate bracket{" + br.left + "," + br.right + "}");
    if (!p.is_zero()) table.emplace(key, p);
  }
  return PoissonAlgebra(ring, table, defer_jacobi, b.name);
}

std::string emit_pois(const PoissonAlgebra& a) {
  std::string out = "algebra " + a.name() + " {\n  vars: ";
  for (int i = 0; i < a.nvars(); ++i) out += (i ? ", " : "") + a.ring().var(i);
  out += ";\n";
  for (const auto& [k, p] : a.entries())
    out += "  bracket{" + a.ring().var(k.first) + "," + a.ring().var(k.second) + "} = \"" + p.str() + "\";\n";
  return out + "}\n";
}

GradedMap parse_map(std::string_view text, const PoissonAlgebra& a) {
  Block b = parse_block(text, "map");
  int n = a.nvars();
  PolyRing probe(a.ring().vars(), 1, a.ring().aliases());
  std::vector<std::pair<int, std::string>> rules;
  for (const auto& s : b.statements) {
    auto arrow = s.find("->");
    if (arrow == std::string::npos) throw FormatError("expected 'var -> expr', found '" + s + "'");
    std::string lhs = trim(s.substr(0, arrow));
    auto i = a.ring().index_of(lhs);
    if (!i) throw UnknownVariable("map variable '" + lhs + "'");
    rules.emplace_back(*i, unquote(trim(s.substr(arrow + 2))));
  }
  std::vector<std::string> exprs;
  for (const auto& r : rules) exprs.push_back(r.second);
  PolyRing ring(a.ring().vars(), lcm(a.ring().conductor(), table_conductor(probe, exprs)), a.ring().aliases());
  Matrix m = Matrix::identity(n);
  std::vector<bool> seen(n, false);
  for (const auto& [i, e] : rules) {
    if (seen[i]) throw FormatError("variable '" + a.ring().var(i) + "' mapped twice");
    seen[i] = true;
    Poly p = parse_poly(ring, e);
    if (!p.is_zero() && (!p.is_homogeneous() || p.total_degree() != 1))
      throw FormatError("image of '" + a.ring().var(i) + "' must be a linear form");
    Vec c = p.is_zero() ? Vec(n) : p.linear_coeffs();
    for (int j = 0; j < n; ++j) m(j, i) = c[j];
  }
  return GradedMap(m, b.name);
}

std::string emit_map(const GradedMap& g, const PoissonAlgebra& a) {
  std::string out = "map " + g.name() + " on " + a.name() + " {\n";
  for (int i = 0; i < a.nvars(); ++i)
    out += "  " + a.ring().var(i) + " -> " + linear_image(g.matrix(), a.ring(), i).str() + ";\n";
  return out + "}\n";
}

LieData parse_lie(std::string_view text) {
  Block b = parse_block(text, "lie");
  if (!b.target.empty()) throw FormatError("a lie block takes no 'on' clause");
  std::optional<int> dim;
  std::optional<std::vector<std::string>> names;
  std::vector<BracketStmt> brackets;
  for (const auto& s : b.statements) {
    if (auto v = keyed(s, "dim")) {
      try {
        std::size_t used = 0;
        dim = std::stoi(*v, &used);
        if (used != v->size() || *dim < 1) throw FormatError("");
      } catch (const std::exception&) {
        throw FormatError("dim must be a positive integer, found '" + *v + "'");
      }
    } else if (auto nm = keyed(s, "names")) {
      names = split_list(*nm);
    } else if (auto br = parse_bracket_stmt(s)) {
      brackets.push_back(*br);
    } else {
      throw FormatError("unknown statement '" + s + "'");
    }
  }
  if (!dim) throw FormatError("missing dim statement");
  LieData l = lie_abelian(*dim);
  if (names) {
    if (static_cast<int>(names->size()) != *dim) throw FormatError("names must list dim entries");
    l.names = *names;
  }
  PolyRing ring(l.names);
  auto index = [&](const std::string& s) {
    if (auto i = ring.index_of(s)) return *i;
    if (!s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); })) {
      int i = std::stoi(s);
      if (i >= 1 && i <= *dim) return i - 1;
    }
    throw UnknownVariable("Lie basis element '" + s + "'");
  };
  for (const auto& br : brackets) {
    int i = index(br.left), j = index(br.right);
    if (i == j) throw FormatError("bracket of a basis element with itself must be zero");
    Poly p = parse_poly(ring, br.rhs);
    if (!p.is_zero() && (!p.is_homogeneous() || p.total_degree() != 1))
      throw FormatError("Lie bracket values must be linear");
    Vec v = p.is_zero() ? Vec(*dim) : p.linear_coeffs();
    if (i > j) {
      std::swap(i, j);
      for (auto& c : v) c = -c;
    }
    if (l.brackets.count({i, j})) throw FormatError("duplicate bracket{" + br.left + "," + br.right + "}");
    if (!is_zero_vec(v)) l.brackets[{i, j}] = v;
  }
  lie_jacobi_check(l);
  return l;
}

std::string emit_lie(const LieData& l, const std::string& name) {
  std::string out = "lie " + name + " {\n  dim: " + std::to_string(l.dim) + ";\n";
  if (l.names != lie_abelian(l.dim).names) {
    out += "  names: ";
    for (int i = 0; i < l.dim; ++i) out += (i ? ", " : "") + l.names[i];
    out += ";\n";
  }
  PolyRing ring(l.names);
  for (const auto& [k, v] : l.brackets)
    out += "  bracket{" + l.names[k.first] + "," + l.names[k.second] + "} = " + Poly::linear(ring, v).str() + ";\n";
  return out + "}\n";
}

Matrix parse_mat(std::string_view text) {
  std::vector<Vec> rows;
  std::istringstream in(strip_comments(text));
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tok;
    Vec row;
    while (ls >> tok) row.push_back(parse_scalar(tok));
    if (row.empty()) continue;
    if (!rows.empty() && row.size() != rows[0].size())
      throw FormatError("row " + std::to_string(rows.size() + 1) + " has " + std::to_string(row.size()) +
                        " entries, expected " + std::to_string(rows[0].size()));
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw FormatError("empty matrix");
  return Matrix::from_rows(rows);
}

std::string emit_mat(const Matrix& m) {
  std::string out;
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) out += (j ? " " : "") + compact(m(i, j).str());
    out += "\n";
  }
  return out;
}

bool same_algebra(const PoissonAlgebra& a, const PoissonAlgebra& b) {
  if (a.ring().vars() != b.ring().vars()) return false;
  auto ea = a.entries(), eb = b.entries();
  if (ea.size() != eb.size()) return false;
  for (const auto& [k, p] : ea) {
    auto it = eb.find(k);
    if (it == eb.end() || it->second != p) return false;
  }
  return true;
}

}  // namespace pwb
