#ifndef STONEDUAL_FORMATS_HPP
#define STONEDUAL_FORMATS_HPP

#include <string>
#include <string_view>
#include <vector>

#include "stonedual/duality.hpp"
#include "stonedual/graphisg.hpp"
#include "stonedual/multable.hpp"
#include "stonedual/polycyclic.hpp"
#include "stonedual/thompson.hpp"
#include "stonedual/words.hpp"

namespace stonedual {

std::string read_file(const std::string& path);

// Words: letters a, b, c, ... for n <= 26, tokens a0, a1, ... otherwise (both
// spellings are accepted on input). The empty word is "1" or "".
Word parse_word(std::string_view s, Alphabet a);
std::string format_word(const Word& w);
std::vector<Word> parse_word_list(std::string_view s, Alphabet a);

// Polycyclic elements: "0", "1", "ab.a^-1", "a", "a^-1"; extended "(i|y,x|j)"
// with 1-based roots.
PolyElement parse_poly(std::string_view s, PolyParams p);
std::string format_poly(const PolyElement& x);
/// Comma separated list, optionally in braces; commas inside parentheses
/// belong to extended literals.
std::vector<PolyElement> parse_poly_list(std::string_view s, PolyParams p);

CuntzElement parse_cuntz(std::string_view s, PolyParams p);
std::string format_cuntz(const CuntzElement& x);

// Rooted words: plain words for r = 1, "r2:ab" otherwise (1-based roots).
RootedWord parse_rooted(std::string_view s, PolyParams p);
std::string format_rooted(const RootedWord& w, unsigned r);

// Tree pairs: "{a,ba,bb}->{aa,ab,b}:perm=[0,1,2]".
TreePair parse_tree_pair(std::string_view s, PolyParams p);
std::string format_tree_pair(const TreePair& g);

// Graph files: "vertex <name>" and "edge <name> <src> <dst>" lines.
std::shared_ptr<DirectedGraph> parse_graph(std::string_view text);
std::string format_graph(const DirectedGraph& g);
/// "x.y" for the composite x o y, "@p" for the identity at p.
Path parse_path(std::string_view s, const GraphPtr& g);
std::string format_path(const Path& p);
/// "0" or "u / v".
GraphElement parse_graph_element(std::string_view s, const GraphPtr& g);
std::string format_graph_element(const GraphElement& x);
std::vector<GraphElement> parse_graph_element_list(std::string_view s, const GraphPtr& g);

// Table files: "elements m zero z [identity e]", m rows of m indices, then
// optional "name i label" lines.
MulTable parse_table(std::string_view text);
std::string format_table(const MulTable& s);

// Groupoid dump: "object <id>", "arrow <id> <d> <r>", "compose <a> <b> <c>".
std::string format_groupoid(const FiniteGroupoid& g);
FiniteGroupoid parse_groupoid(std::string_view text);

}  // namespace stonedual

#endif
