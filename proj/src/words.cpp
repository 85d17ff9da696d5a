#include "stonedual/words.hpp"

#include <algorithm>

namespace stonedual {

Alphabet::Alphabet(unsigned n) : n_(n) {
  if (n == 0) throw DomainError("alphabet must have at least one letter");
}

Word::Word(Alphabet alphabet, std::vector<Letter> letters)
    : alphabet_(alphabet), letters_(std::move(letters)) {
  for (Letter l : letters_)
    if (!alphabet_.contains(l))
      throw DomainError("letter index " + std::to_string(l) + " outside alphabet of size " +
                        std::to_string(alphabet_.size()));
}

Word Word::prefix(std::size_t k) const {
  Word w(alphabet_);
  w.letters_.assign(letters_.begin(), letters_.begin() + std::min(k, letters_.size()));
  return w;
}

Word Word::drop(std::size_t k) const {
  Word w(alphabet_);
  w.letters_.assign(letters_.begin() + std::min(k, letters_.size()), letters_.end());
  return w;
}

Word Word::appended(Letter l) const {
  if (!alphabet_.contains(l)) throw DomainError("letter outside alphabet");
  Word w = *this;
  w.letters_.push_back(l);
  return w;
}

static void require_same(const Word& x, const Word& y) {
  if (!(x.alphabet() == y.alphabet())) throw DomainError("alphabet mismatch");
}

Word operator+(const Word& x, const Word& y) {
  require_same(x, y);
  Word w = x;
  w.letters_.insert(w.letters_.end(), y.letters_.begin(), y.letters_.end());
  return w;
}

std::strong_ordering operator<=>(const Word& x, const Word& y) {
  return std::lexicographical_compare_three_way(x.letters_.begin(), x.letters_.end(),
                                                y.letters_.begin(), y.letters_.end());
}

PrefixComparison prefix_compare(const Word& x, const Word& y) {
  require_same(x, y);
  const std::size_t k = std::min(x.size(), y.size());
  for (std::size_t i = 0; i < k; ++i)
    if (x[i] != y[i]) return {PrefixComparison::Kind::Incomparable, std::nullopt};
  if (x.size() == y.size()) return {PrefixComparison::Kind::Equal, Word(x.alphabet())};
  if (x.size() < y.size()) return {PrefixComparison::Kind::XPrefixOfY, y.drop(k)};
  return {PrefixComparison::Kind::YPrefixOfX, x.drop(k)};
}

bool is_prefix(const Word& x, const Word& y) {
  require_same(x, y);
  return x.size() <= y.size() && std::equal(x.letters().begin(), x.letters().end(), y.letters().begin());
}

bool prefix_comparable(const Word& x, const Word& y) {
  return x.size() <= y.size() ? is_prefix(x, y) : is_prefix(y, x);
}

std::optional<Word> word_meet(const Word& x, const Word& y) {
  if (!prefix_comparable(x, y)) return std::nullopt;
  return x.size() >= y.size() ? x : y;
}

std::vector<Word> words_of_length(Alphabet alphabet, std::size_t length) {
  std::vector<Word> out{Word(alphabet)};
  for (std::size_t i = 0; i < length; ++i) {
    std::vector<Word> next;
    next.reserve(out.size() * alphabet.size());
    for (const Word& w : out)
      for (Letter l = 0; l < alphabet.size(); ++l) next.push_back(w.appended(l));
    out = std::move(next);
  }
  return out;
}

bool is_prefix_code(std::span<const Word> code) {
  for (std::size_t i = 0; i < code.size(); ++i)
    for (std::size_t j = i + 1; j < code.size(); ++j)
      if (prefix_comparable(code[i], code[j])) return false;
  return true;
}

// Walks the tree of words breadth first, stopping below code words, so the
// cost is bounded by the size of the code's tree rather than n^depth.
bool is_complete_set(std::span<const Word> code, Alphabet alphabet) {
  if (code.empty()) return false;
  std::size_t depth = 0;
  for (const Word& w : code) depth = std::max(depth, w.size());
  std::vector<Word> frontier{Word(alphabet)};
  for (std::size_t level = 0;; ++level) {
    std::vector<Word> open;
    for (const Word& p : frontier) {
      bool hit = std::any_of(code.begin(), code.end(), [&](const Word& c) { return c == p; });
      if (!hit) open.push_back(p);
    }
    if (open.empty()) return true;
    if (level == depth) return false;
    frontier.clear();
    for (const Word& p : open)
      for (Letter l = 0; l < alphabet.size(); ++l) frontier.push_back(p.appended(l));
  }
}

bool is_maximal_prefix_code(std::span<const Word> code, Alphabet alphabet) {
  if (code.empty()) throw DomainError("empty code");
  for (const Word& w : code)
    if (!(w.alphabet() == alphabet)) throw DomainError("alphabet mismatch");
  return is_prefix_code(code) && is_complete_set(code, alphabet);
}

Rational kraft_sum(std::span<const Word> code, Alphabet alphabet) {
  for (const Word& w : code)
    if (!(w.alphabet() == alphabet)) throw DomainError("alphabet mismatch");
  if (!is_prefix_code(code)) throw DomainError("not a prefix code");
  Rational sum = 0;
  for (const Word& w : code) {
    boost::multiprecision::cpp_int denom = 1;
    for (std::size_t i = 0; i < w.size(); ++i) denom *= alphabet.size();
    sum += Rational(1, denom);
  }
  return sum;
}

bool is_maximal_rooted_code(std::span<const RootedWord> code, unsigned roots, Alphabet alphabet) {
  if (roots == 0) throw DomainError("need at least one root");
  std::vector<std::vector<Word>> per_root(roots);
  for (const RootedWord& rw : code) {
    if (rw.root >= roots) throw DomainError("root index out of range");
    per_root[rw.root].push_back(rw.word);
  }
  for (const auto& c : per_root)
    if (c.empty() || !is_maximal_prefix_code(c, alphabet)) return false;
  return true;
}

// ---------------------------------------------------------------------------

VertexId DirectedGraph::add_vertex(std::string name) {
  if (find_vertex(name)) throw DomainError("duplicate vertex " + name);
  vertices_.push_back(std::move(name));
  in_edges_.emplace_back();
  return static_cast<VertexId>(vertices_.size() - 1);
}

EdgeId DirectedGraph::add_edge(std::string name, VertexId source, VertexId target) {
  if (source >= vertices_.size() || target >= vertices_.size())
    throw DomainError("edge " + name + " has an undeclared endpoint");
  if (find_edge(name)) throw DomainError("duplicate edge " + name);
  edges_.push_back({std::move(name), source, target});
  auto id = static_cast<EdgeId>(edges_.size() - 1);
  in_edges_[target].push_back(id);
  return id;
}

std::optional<VertexId> DirectedGraph::find_vertex(std::string_view name) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (vertices_[i] == name) return static_cast<VertexId>(i);
  return std::nullopt;
}

std::optional<EdgeId> DirectedGraph::find_edge(std::string_view name) const {
  for (std::size_t i = 0; i < edges_.size(); ++i)
    if (edges_[i].name == name) return static_cast<EdgeId>(i);
  return std::nullopt;
}

Path::Path(GraphPtr graph, VertexId v) : graph_(std::move(graph)), domain_(v), codomain_(v) {
  if (!graph_ || v >= graph_->vertex_count()) throw DomainError("vertex out of range");
}

Path::Path(GraphPtr graph, std::vector<EdgeId> edges) : graph_(std::move(graph)), edges_(std::move(edges)) {
  if (!graph_) throw DomainError("null graph");
  if (edges_.empty()) throw DomainError("empty edge list needs an anchor vertex");
  for (EdgeId e : edges_)
    if (e >= graph_->edge_count()) throw DomainError("edge out of range");
  for (std::size_t i = 0; i + 1 < edges_.size(); ++i)
    if (graph_->edge(edges_[i]).source != graph_->edge(edges_[i + 1]).target)
      throw DomainError("edges " + graph_->edge(edges_[i]).name + " and " +
                        graph_->edge(edges_[i + 1]).name + " do not compose");
  codomain_ = graph_->edge(edges_.front()).target;
  domain_ = graph_->edge(edges_.back()).source;
}

Path Path::prefix(std::size_t k) const {
  if (k >= edges_.size()) return *this;
  if (k == 0) return Path(graph_, codomain_);
  return Path(graph_, std::vector<EdgeId>(edges_.begin(), edges_.begin() + k));
}

Path Path::drop(std::size_t k) const {
  if (k == 0) return *this;
  if (k >= edges_.size()) return Path(graph_, domain_);
  return Path(graph_, std::vector<EdgeId>(edges_.begin() + k, edges_.end()));
}

Path Path::extended(EdgeId e) const {
  if (e >= graph_->edge_count() || graph_->edge(e).target != domain_)
    throw DomainError("edge does not extend path");
  Path p = *this;
  p.edges_.push_back(e);
  p.domain_ = graph_->edge(e).source;
  return p;
}

std::optional<Path> path_compose(const Path& p, const Path& q) {
  if (p.graph() != q.graph()) throw DomainError("graph mismatch");
  if (p.domain() != q.codomain()) return std::nullopt;
  if (q.is_identity()) return p;
  if (p.is_identity()) return q;
  std::vector<EdgeId> e(p.edges().begin(), p.edges().end());
  e.insert(e.end(), q.edges().begin(), q.edges().end());
  return Path(p.graph(), std::move(e));
}

std::optional<Path> path_strip_prefix(const Path& p, const Path& q) {
  if (p.graph() != q.graph()) throw DomainError("graph mismatch");
  if (p.codomain() != q.codomain() || p.size() > q.size()) return std::nullopt;
  if (!std::equal(p.edges().begin(), p.edges().end(), q.edges().begin())) return std::nullopt;
  return q.drop(p.size());
}

}  // namespace stonedual
