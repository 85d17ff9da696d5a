#ifndef STONEDUAL_WORDS_HPP
#define STONEDUAL_WORDS_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "stonedual/error.hpp"

namespace stonedual {

using Letter = std::uint32_t;
using Rational = boost::multiprecision::cpp_rational;

/// A finite alphabet {0, ..., n-1}.
class Alphabet {
 public:
  explicit Alphabet(unsigned n);

  unsigned size() const noexcept { return n_; }
  bool contains(Letter l) const noexcept { return l < n_; }

  friend bool operator==(Alphabet, Alphabet) = default;

 private:
  unsigned n_;
};

/// An element of the free monoid A*. Carries its alphabet so that mixing
/// words over different alphabets is detected.
class Word {
 public:
  explicit Word(Alphabet alphabet) : alphabet_(alphabet) {}
  Word(Alphabet alphabet, std::vector<Letter> letters);

  Alphabet alphabet() const noexcept { return alphabet_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  std::span<const Letter> letters() const noexcept { return letters_; }

  Word prefix(std::size_t k) const;
  Word drop(std::size_t k) const;
  Word appended(Letter l) const;

  /// Concatenation xy.
  friend Word operator+(const Word& x, const Word& y);

  friend bool operator==(const Word& x, const Word& y) {
    return x.alphabet_ == y.alphabet_ && x.letters_ == y.letters_;
  }
  /// Lexicographic order (a proper prefix sorts first).
  friend std::strong_ordering operator<=>(const Word& x, const Word& y);

 private:
  Alphabet alphabet_;
  std::vector<Letter> letters_;
};

struct PrefixComparison {
  enum class Kind { Equal, XPrefixOfY, YPrefixOfX, Incomparable };
  Kind kind;
  /// z with y = xz (XPrefixOfY), x = yz (YPrefixOfX); empty otherwise.
  std::optional<Word> remainder;
};

PrefixComparison prefix_compare(const Word& x, const Word& y);
bool is_prefix(const Word& x, const Word& y);
bool prefix_comparable(const Word& x, const Word& y);

/// The longer word when x and y are prefix-comparable, nothing otherwise.
std::optional<Word> word_meet(const Word& x, const Word& y);

/// All words of exactly the given length, in lexicographic order.
std::vector<Word> words_of_length(Alphabet alphabet, std::size_t length);

/// True iff the words are pairwise prefix-incomparable.
bool is_prefix_code(std::span<const Word> code);

/// Every word of length max|w| has a prefix in `words`. The set need not be a
/// prefix code. False for an empty set.
bool is_complete_set(std::span<const Word> words, Alphabet alphabet);

/// Decides maximality by the depth criterion: C is a prefix code and every
/// word of length max|w| has a prefix in C. Throws DomainError on an empty code
/// or words over a different alphabet.
bool is_maximal_prefix_code(std::span<const Word> code, Alphabet alphabet);

/// Sum of n^{-|w|} over the code. Throws DomainError if not a prefix code.
Rational kraft_sum(std::span<const Word> code, Alphabet alphabet);

/// Element of X x A* with X = {0, ..., r-1}.
struct RootedWord {
  unsigned root;
  Word word;

  friend bool operator==(const RootedWord&, const RootedWord&) = default;
  friend std::strong_ordering operator<=>(const RootedWord& a, const RootedWord& b) {
    if (auto c = a.root <=> b.root; c != 0) return c;
    return a.word <=> b.word;
  }
};

/// Maximal prefix code in the forest of r trees: for every root the words
/// hanging from it form a maximal prefix code.
bool is_maximal_rooted_code(std::span<const RootedWord> code, unsigned roots,
                            Alphabet alphabet);

// ---------------------------------------------------------------------------
// Directed graphs and paths in their free category.

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

class DirectedGraph {
 public:
  struct Edge {
    std::string name;
    VertexId source;
    VertexId target;
  };

  VertexId add_vertex(std::string name);
  EdgeId add_edge(std::string name, VertexId source, VertexId target);

  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::string& vertex_name(VertexId v) const { return vertices_.at(v); }
  const Edge& edge(EdgeId e) const { return edges_.at(e); }
  std::optional<VertexId> find_vertex(std::string_view name) const;
  std::optional<EdgeId> find_edge(std::string_view name) const;

  /// Edges whose target is v, in insertion order.
  const std::vector<EdgeId>& in_edges(VertexId v) const { return in_edges_.at(v); }

 private:
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> in_edges_;
};

using GraphPtr = std::shared_ptr<const DirectedGraph>;

/// A morphism of the free category G*. The edge list e1 e2 ... ek denotes the
/// composite e1 o e2 o ... o ek, so d(p) = source(ek) and r(p) = target(e1).
/// The empty list is the identity at `domain`.
class Path {
 public:
  /// Identity at v.
  Path(GraphPtr graph, VertexId v);
  /// Composite of the edges; throws DomainError if they do not compose.
  Path(GraphPtr graph, std::vector<EdgeId> edges);

  const GraphPtr& graph() const noexcept { return graph_; }
  VertexId domain() const noexcept { return domain_; }
  VertexId codomain() const noexcept { return codomain_; }
  std::span<const EdgeId> edges() const noexcept { return edges_; }
  std::size_t size() const noexcept { return edges_.size(); }
  bool is_identity() const noexcept { return edges_.empty(); }

  Path prefix(std::size_t k) const;
  Path drop(std::size_t k) const;
  /// p e, extending at the domain end (requires target(e) = d(p)).
  Path extended(EdgeId e) const;

  friend bool operator==(const Path& p, const Path& q) {
    return p.graph_ == q.graph_ && p.domain_ == q.domain_ &&
           p.codomain_ == q.codomain_ && p.edges_ == q.edges_;
  }

 private:
  Path() = default;
  GraphPtr graph_;
  VertexId domain_ = 0;
  VertexId codomain_ = 0;
  std::vector<EdgeId> edges_;
};

/// pq when d(p) = r(q); nothing otherwise. Throws DomainError across graphs.
std::optional<Path> path_compose(const Path& p, const Path& q);

/// q = p z for some z (p is a prefix of q); returns z.
std::optional<Path> path_strip_prefix(const Path& p, const Path& q);

}  // namespace stonedual

#endif
