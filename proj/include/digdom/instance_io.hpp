#ifndef DIGDOM_INSTANCE_IO_HPP
#define DIGDOM_INSTANCE_IO_HPP

#include "digdom/digraph.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace digdom {

/// Instance text format:
///
///     # comment
///     n m
///     u v      (m lines, one arc u -> v, 0-indexed)
///
/// Blank lines and lines starting with '#' are ignored anywhere. Errors are
/// Error(parse) with a message of the form "line 4: index 7 >= n=5".
Digraph parse_instance(std::string_view text);

/// Header plus arcs sorted by (tail, head); parse_instance inverts it.
std::string serialize_instance(const Digraph& d);

/// File wrappers; unreadable or unwritable files throw Error(io).
Digraph load_instance(const std::string& path);
void save_instance(const Digraph& d, const std::string& path);

/// Graphviz digraph with one "u -> v;" line per arc.
std::string to_dot(const Digraph& d, std::string_view graph_name = "D");

/// "0,2,5" (spaces allowed, empty text is the empty list). Throws
/// Error(parse) on anything else.
std::vector<Vertex> parse_vertex_list(std::string_view text);

} // namespace digdom

#endif // DIGDOM_INSTANCE_IO_HPP
