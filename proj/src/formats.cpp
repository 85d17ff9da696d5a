#include "stonedual/formats.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace stonedual {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Splits at commas outside parentheses and brackets.
std::vector<std::string_view> split_top(std::string_view s, char sep = ',') {
  std::vector<std::string_view> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (c == '(' || c == '[' || c == '{') ++depth;
    if (c == ')' || c == ']' || c == '}') --depth;
    if (c == sep && depth == 0) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  out.push_back(trim(s.substr(start)));
  if (out.size() == 1 && out[0].empty()) out.clear();
  return out;
}

std::string_view strip_braces(std::string_view s) {
  s = trim(s);
  if (s.size() >= 2 && s.front() == '{' && s.back() == '}') s = trim(s.substr(1, s.size() - 2));
  return s;
}

unsigned parse_uint(std::string_view s, const char* what) {
  s = trim(s);
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw ParseError(std::string("expected a number for ") + what + ", got '" + std::string(s) + "'");
  return static_cast<unsigned>(std::stoul(std::string(s)));
}

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> out;
  std::string t;
  while (is >> t) out.push_back(t);
  return out;
}

// Lines with comments removed, blank lines skipped, with 1-based line numbers.
std::vector<std::pair<std::size_t, std::string>> content_lines(std::string_view text) {
  std::vector<std::pair<std::size_t, std::string>> out;
  std::istringstream is{std::string(text)};
  std::string line;
  for (std::size_t no = 1; std::getline(is, line); ++no) {
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    if (!trim(line).empty()) out.emplace_back(no, line);
  }
  return out;
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Word parse_word(std::string_view s, Alphabet a) {
  s = trim(s);
  std::vector<Letter> letters;
  if (s == "1" || s.empty()) return Word(a);
  for (std::size_t i = 0; i < s.size();) {
    char c = s[i];
    if (c == 'a' && i + 1 < s.size() && std::isdigit(static_cast<unsigned char>(s[i + 1]))) {
      std::size_t j = i + 1;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      letters.push_back(parse_uint(s.substr(i + 1, j - i - 1), "letter index"));
      i = j;
    } else if (c >= 'a' && c <= 'z' && a.size() <= 26) {
      letters.push_back(static_cast<Letter>(c - 'a'));
      ++i;
    } else {
      throw ParseError("bad character '" + std::string(1, c) + "' in word '" + std::string(s) + "'");
    }
  }
  for (Letter l : letters)
    if (!a.contains(l))
      throw ParseError("letter outside the alphabet of size " + std::to_string(a.size()) + " in '" + std::string(s) + "'");
  return Word(a, std::move(letters));
}

std::string format_word(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (Letter l : w.letters()) {
    if (w.alphabet().size() <= 26) out += static_cast<char>('a' + l);
    else out += "a" + std::to_string(l);
  }
  return out;
}

std::vector<Word> parse_word_list(std::string_view s, Alphabet a) {
  std::vector<Word> out;
  for (auto t : split_top(strip_braces(s))) out.push_back(parse_word(t, a));
  return out;
}

PolyElement parse_poly(std::string_view s, PolyParams p) {
  s = trim(s);
  const Alphabet a(p.n);
  if (s == "0") return PolyElement::zero(p);
  if (!s.empty() && s.front() == '(') {
    if (s.back() != ')') throw ParseError("unterminated extended literal '" + std::string(s) + "'");
    auto body = s.substr(1, s.size() - 2);
    auto bar1 = body.find('|'), bar2 = body.rfind('|');
    auto comma = body.find(',');
    if (bar1 == std::string_view::npos || bar1 == bar2 || comma == std::string_view::npos || comma < bar1 || comma > bar2)
      throw ParseError("extended literal must look like (i|y,x|j): '" + std::string(s) + "'");
    unsigned i = parse_uint(body.substr(0, bar1), "root"), j = parse_uint(body.substr(bar2 + 1), "root");
    if (i < 1 || j < 1 || i > p.r || j > p.r) throw ParseError("root out of range 1.." + std::to_string(p.r));
    return PolyElement::make(p, i - 1, parse_word(body.substr(bar1 + 1, comma - bar1 - 1), a),
                             parse_word(body.substr(comma + 1, bar2 - comma - 1), a), j - 1);
  }
  if (p.r != 1) throw ParseError("with r > 1 use the extended literal (i|y,x|j)");
  Word y(a), x(a);
  bool have_x = false;
  std::size_t start = 0;
  for (std::size_t k = 0; k <= s.size(); ++k) {
    if (k < s.size() && s[k] != '.') continue;
    auto tok = trim(s.substr(start, k - start));
    start = k + 1;
    if (tok.size() >= 3 && tok.substr(tok.size() - 3) == "^-1") {
      if (have_x) throw ParseError("only one inverse factor is allowed in '" + std::string(s) + "'");
      x = parse_word(tok.substr(0, tok.size() - 3), a);
      have_x = true;
    } else {
      if (have_x) throw ParseError("the inverse factor must come last in '" + std::string(s) + "'");
      if (tok.empty()) throw ParseError("empty factor in '" + std::string(s) + "'");
      y = y + parse_word(tok, a);
    }
  }
  return PolyElement::make(p, std::move(y), std::move(x));
}

std::string format_poly(const PolyElement& x) {
  if (x.is_zero()) return "0";
  if (x.params().r != 1)
    return "(" + std::to_string(x.i() + 1) + "|" + format_word(x.y()) + "," + format_word(x.x()) + "|" +
           std::to_string(x.j() + 1) + ")";
  if (x.y().empty() && x.x().empty()) return "1";
  if (x.x().empty()) return format_word(x.y());
  if (x.y().empty()) return format_word(x.x()) + "^-1";
  return format_word(x.y()) + "." + format_word(x.x()) + "^-1";
}

std::vector<PolyElement> parse_poly_list(std::string_view s, PolyParams p) {
  std::vector<PolyElement> out;
  for (auto t : split_top(strip_braces(s))) out.push_back(parse_poly(t, p));
  return out;
}

CuntzElement parse_cuntz(std::string_view s, PolyParams p) { return CuntzElement(p, parse_poly_list(s, p)); }

std::string format_cuntz(const CuntzElement& x) {
  std::string out = "{";
  for (const auto& a : x.parts()) out += (out.size() > 1 ? "," : "") + format_poly(a);
  return out + "}";
}

RootedWord parse_rooted(std::string_view s, PolyParams p) {
  s = trim(s);
  const Alphabet a(p.n);
  if (!s.empty() && s.front() == 'r') {
    auto colon = s.find(':');
    if (colon != std::string_view::npos) {
      unsigned root = parse_uint(s.substr(1, colon - 1), "root");
      if (root < 1 || root > p.r) throw ParseError("root out of range 1.." + std::to_string(p.r));
      return {root - 1, parse_word(s.substr(colon + 1), a)};
    }
  }
  if (p.r != 1) throw ParseError("with r > 1 prefix words with their root, e.g. r1:ab");
  return {0, parse_word(s, a)};
}

std::string format_rooted(const RootedWord& w, unsigned r) {
  if (r == 1) return format_word(w.word);
  return "r" + std::to_string(w.root + 1) + ":" + format_word(w.word);
}

TreePair parse_tree_pair(std::string_view s, PolyParams p) {
  s = trim(s);
  auto arrow = s.find("->");
  if (arrow == std::string_view::npos) throw ParseError("tree pair must look like {..}->{..}:perm=[..]");
  auto left = s.substr(0, arrow), rest = s.substr(arrow + 2);
  std::string_view right = rest, perm_text;
  if (auto c = rest.find(":perm="); c != std::string_view::npos) {
    right = rest.substr(0, c);
    perm_text = trim(rest.substr(c + 6));
  }
  std::vector<RootedWord> dom, ran;
  for (auto t : split_top(strip_braces(left))) dom.push_back(parse_rooted(t, p));
  for (auto t : split_top(strip_braces(right))) ran.push_back(parse_rooted(t, p));
  if (dom.size() != ran.size()) throw ParseError("domain and range codes have different sizes");
  std::vector<std::size_t> perm(dom.size());
  for (std::size_t k = 0; k < perm.size(); ++k) perm[k] = k;
  if (!perm_text.empty()) {
    if (perm_text.front() != '[' || perm_text.back() != ']') throw ParseError("perm must look like [0,1,...]");
    auto items = split_top(perm_text.substr(1, perm_text.size() - 2));
    if (items.size() != dom.size()) throw ParseError("perm has the wrong length");
    for (std::size_t k = 0; k < items.size(); ++k) {
      perm[k] = parse_uint(items[k], "perm entry");
      if (perm[k] >= ran.size()) throw ParseError("perm entry out of range");
    }
  }
  std::vector<std::pair<RootedWord, RootedWord>> leaves;
  for (std::size_t k = 0; k < dom.size(); ++k) leaves.push_back({dom[k], ran[perm[k]]});
  return make_tree_pair(p, std::move(leaves));
}

std::string format_tree_pair(const TreePair& g) {
  auto code = [&](const std::vector<RootedWord>& c) {
    std::string out = "{";
    for (const auto& w : c) out += (out.size() > 1 ? "," : "") + format_rooted(w, g.params.r);
    return out + "}";
  };
  std::string out = code(g.domain) + "->" + code(g.range) + ":perm=[";
  for (std::size_t k = 0; k < g.perm.size(); ++k) out += (k ? "," : "") + std::to_string(g.perm[k]);
  return out + "]";
}

// ---------------------------------------------------------------------------

std::shared_ptr<DirectedGraph> parse_graph(std::string_view text) {
  auto g = std::make_shared<DirectedGraph>();
  for (const auto& [no, line] : content_lines(text)) {
    auto t = tokens(line);
    auto where = " on line " + std::to_string(no);
    try {
      if (t[0] == "vertex" && t.size() == 2) {
        g->add_vertex(t[1]);
      } else if (t[0] == "edge" && t.size() == 4) {
        auto s = g->find_vertex(t[2]), d = g->find_vertex(t[3]);
        if (!s || !d) throw ParseError("undeclared vertex" + where);
        g->add_edge(t[1], *s, *d);
      } else {
        throw ParseError("expected 'vertex <name>' or 'edge <name> <src> <dst>'" + where);
      }
    } catch (const DomainError& e) {
      throw ParseError(e.what() + where);
    }
  }
  if (g->vertex_count() == 0) throw ParseError("graph has no vertices");
  return g;
}

std::string format_graph(const DirectedGraph& g) {
  std::string out;
  for (VertexId v = 0; v < g.vertex_count(); ++v) out += "vertex " + g.vertex_name(v) + "\n";
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    out += "edge " + g.edge(e).name + " " + g.vertex_name(g.edge(e).source) + " " + g.vertex_name(g.edge(e).target) + "\n";
  return out;
}

Path parse_path(std::string_view s, const GraphPtr& g) {
  s = trim(s);
  if (s.empty()) throw ParseError("empty path");
  if (s.front() == '@') {
    auto v = g->find_vertex(trim(s.substr(1)));
    if (!v) throw ParseError("unknown vertex '" + std::string(s.substr(1)) + "'");
    return Path(g, *v);
  }
  std::vector<EdgeId> edges;
  for (auto t : split_top(s, '.')) {
    auto e = g->find_edge(t);
    if (!e) throw ParseError("unknown edge '" + std::string(t) + "'");
    edges.push_back(*e);
  }
  try {
    return Path(g, std::move(edges));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

std::string format_path(const Path& p) {
  if (p.is_identity()) return "@" + p.graph()->vertex_name(p.domain());
  std::string out;
  for (EdgeId e : p.edges()) out += (out.empty() ? "" : ".") + p.graph()->edge(e).name;
  return out;
}

GraphElement parse_graph_element(std::string_view s, const GraphPtr& g) {
  s = trim(s);
  if (s == "0") return GraphElement::zero(g);
  auto slash = s.find('/');
  if (slash == std::string_view::npos) throw ParseError("graph element must look like 'u / v' or '0'");
  Path u = parse_path(s.substr(0, slash), g), v = parse_path(s.substr(slash + 1), g);
  if (u.domain() != v.domain()) throw ParseError("u / v needs paths with the same domain");
  return GraphElement::make(std::move(u), std::move(v));
}

std::string format_graph_element(const GraphElement& x) {
  if (x.is_zero()) return "0";
  return format_path(x.u()) + " / " + format_path(x.v());
}

std::vector<GraphElement> parse_graph_element_list(std::string_view s, const GraphPtr& g) {
  std::vector<GraphElement> out;
  for (auto t : split_top(strip_braces(s))) out.push_back(parse_graph_element(t, g));
  return out;
}

// ---------------------------------------------------------------------------

MulTable parse_table(std::string_view text) {
  auto lines = content_lines(text);
  if (lines.empty()) throw ParseError("empty table file");
  auto head = tokens(lines[0].second);
  if (head.size() < 4 || head[0] != "elements" || head[2] != "zero" || (head.size() != 4 && head.size() != 6) ||
      (head.size() == 6 && head[4] != "identity"))
    throw ParseError("first line must be 'elements m zero z [identity e]'");
  const std::size_t m = parse_uint(head[1], "element count");
  if (m == 0) throw ParseError("table needs at least one element");
  if (m > max_elements()) throw LimitError("table has " + std::to_string(m) + " elements, cap is " + std::to_string(max_elements()));
  const Elem zero = parse_uint(head[3], "zero");
  std::optional<Elem> id;
  if (head.size() == 6) id = parse_uint(head[5], "identity");
  if (lines.size() < m + 1) throw ParseError("expected " + std::to_string(m) + " table rows");
  std::vector<Elem> prod;
  prod.reserve(m * m);
  for (std::size_t r = 0; r < m; ++r) {
    auto t = tokens(lines[r + 1].second);
    if (t.size() != m)
      throw ParseError("row on line " + std::to_string(lines[r + 1].first) + " has " + std::to_string(t.size()) +
                       " entries, expected " + std::to_string(m));
    for (const auto& x : t) {
      Elem v = parse_uint(x, "table entry");
      if (v >= m) throw ParseError("entry " + x + " out of range on line " + std::to_string(lines[r + 1].first));
      prod.push_back(v);
    }
  }
  std::vector<std::string> names;
  for (std::size_t i = 0; i < m; ++i) names.push_back(std::to_string(i));
  for (std::size_t k = m + 1; k < lines.size(); ++k) {
    auto t = tokens(lines[k].second);
    if (t.size() != 3 || t[0] != "name") throw ParseError("expected 'name i label' on line " + std::to_string(lines[k].first));
    Elem i = parse_uint(t[1], "element index");
    if (i >= m) throw ParseError("name index out of range on line " + std::to_string(lines[k].first));
    names[i] = t[2];
  }
  if (zero >= m || (id && *id >= m)) throw ParseError("zero or identity index out of range");
  return MulTable(m, zero, std::move(prod), id, std::move(names));
}

std::string format_table(const MulTable& s) {
  std::ostringstream os;
  os << "elements " << s.size() << " zero " << s.zero();
  if (s.identity()) os << " identity " << *s.identity();
  os << '\n';
  for (Elem a = 0; a < s.size(); ++a) {
    for (Elem b = 0; b < s.size(); ++b) os << (b ? " " : "") << s.mul(a, b);
    os << '\n';
  }
  for (Elem a = 0; a < s.size(); ++a)
    if (s.name(a) != std::to_string(a)) os << "name " << a << ' ' << s.name(a) << '\n';
  return os.str();
}

std::string format_groupoid(const FiniteGroupoid& g) {
  std::ostringstream os;
  for (auto o : g.objects()) os << "object " << g.names[o] << '\n';
  for (std::uint32_t a = 0; a < g.size(); ++a)
    if (!g.is_object(a)) os << "arrow " << g.names[a] << ' ' << g.names[g.dom[a]] << ' ' << g.names[g.cod[a]] << '\n';
  for (std::uint32_t a = 0; a < g.size(); ++a)
    for (std::uint32_t b = 0; b < g.size(); ++b)
      if (auto c = g.compose(a, b); c != FiniteGroupoid::none)
        os << "compose " << g.names[a] << ' ' << g.names[b] << ' ' << g.names[c] << '\n';
  return os.str();
}

FiniteGroupoid parse_groupoid(std::string_view text) {
  FiniteGroupoid g;
  std::map<std::string, std::uint32_t> id;
  std::vector<std::array<std::string, 3>> compose;
  std::vector<std::array<std::string, 3>> arrows;
  for (const auto& [no, line] : content_lines(text)) {
    auto t = tokens(line);
    auto where = " on line " + std::to_string(no);
    if (t[0] == "object" && t.size() == 2) {
      if (!id.emplace(t[1], static_cast<std::uint32_t>(g.names.size())).second) throw ParseError("duplicate id" + where);
      g.names.push_back(t[1]);
      g.dom.push_back(id[t[1]]);
      g.cod.push_back(id[t[1]]);
    } else if (t[0] == "arrow" && t.size() == 4) {
      if (!id.emplace(t[1], static_cast<std::uint32_t>(g.names.size())).second) throw ParseError("duplicate id" + where);
      g.names.push_back(t[1]);
      g.dom.push_back(0);
      g.cod.push_back(0);
      arrows.push_back({t[1], t[2], t[3]});
    } else if (t[0] == "compose" && t.size() == 4) {
      compose.push_back({t[1], t[2], t[3]});
    } else {
      throw ParseError("expected object, arrow or compose" + where);
    }
  }
  auto look = [&](const std::string& n) {
    auto it = id.find(n);
    if (it == id.end()) throw ParseError("unknown id " + n);
    return it->second;
  };
  for (const auto& [a, d, r] : arrows) {
    g.dom[look(a)] = look(d);
    g.cod[look(a)] = look(r);
  }
  const std::size_t n = g.names.size();
  g.comp.assign(n * n, FiniteGroupoid::none);
  for (const auto& [a, b, c] : compose) g.comp[look(a) * n + look(b)] = look(c);
  g.inv.assign(n, FiniteGroupoid::none);
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b)
      if (g.compose(a, b) == g.cod[a] && g.compose(b, a) == g.dom[a]) g.inv[a] = b;
  for (std::uint32_t a = 0; a < n; ++a)
    if (g.inv[a] == FiniteGroupoid::none) throw ParseError("arrow " + g.names[a] + " has no inverse");
  if (auto err = check_groupoid(g); !err.empty()) throw ParseError("not a groupoid: " + err);
  return g;
}

}  // namespace stonedual
