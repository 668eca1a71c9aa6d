#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "sgc/circular.hpp"
#include "sgc/signed_graph.hpp"

namespace sgc {

// SGF text format:
//   sg <n> <m>
//   e <u> <v> <+|->      (m lines, 0-based ids)
//   # ...                (comment line)
// Structural labels are carried in comments of the form
//   # v <id> grid <layer> <index> | # v <id> apex | # v <id> rung <index>
// which readers without label support ignore.
std::string write_sgf(const SignedGraph& g);
SignedGraph read_sgf(std::string_view text);
SignedGraph read_sgf_file(const std::string& path);

// Graphviz: negative edges solid, positive edges dashed, each with a `sign`
// attribute.
std::string write_dot(const SignedGraph& g, std::string_view name = "G");

// {"p":..,"q":..,"assign":[..]}
std::string coloring_to_json(const Coloring& c);
Coloring coloring_from_json(std::string_view text);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);

}  // namespace sgc
