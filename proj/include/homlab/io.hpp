#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "homlab/arc_weights.hpp"
#include "homlab/digraph.hpp"
#include "homlab/vertex_map.hpp"

namespace homlab {

/// `digraph <n>` followed by one `u v` line per arc in ascending order.
void write_digraph(std::ostream& os, const Digraph& g);
std::string format_digraph(const Digraph& g);

/// Reads consecutive digraph records. `#` lines and blank lines are skipped.
std::vector<Digraph> read_digraphs(std::istream& is);
/// Exactly one record.
Digraph read_digraph(std::istream& is);
Digraph parse_digraph(const std::string& text);
Digraph load_digraph(const std::string& path);

/// `weight` followed by `u v k` for every arc with k > 0.
void write_weight(std::ostream& os, const ArcWeight& w);
ArcWeight read_weight(std::istream& is, const Digraph& host);
ArcWeight load_weight(const std::string& path, const Digraph& host);

/// Parses `map v0->w0 v1->w1 ...`; entries must list 0..n-1 in order.
VertexMap parse_map(const std::string& line, std::size_t codomain);

}  // namespace homlab
