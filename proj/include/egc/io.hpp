#pragma once

#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "egc/amalgam.hpp"
#include "egc/colouring.hpp"
#include "egc/graph.hpp"

namespace egc {

// "EGC v1":
//   egc 1
//   n <n>
//   colours <k>
//   <n(n-1)/2 colour ids in lexicographic edge order>
// Colours are written one row of K_n per line.
void write_colouring(std::ostream& out, const Colouring& c);

// Reads an EGC body. A trailing `meta` section, if present, is ignored.
Colouring read_colouring(std::istream& in);

// EGC body followed by
//   meta <k> <n> <m>
//   <id> <comp1|*> <comp2|*> <+|-|0|inf> <u1,u2|*>     (one line per colour)
void write_amalgam(std::ostream& out, const AmalgamColouring& a);
AmalgamColouring read_amalgam(std::istream& in);

// Colour map:
//   cmap 1
//   size <k>
//   <k images, one per colour id 0..k-1>
void write_colour_map(std::ostream& out, const std::vector<ColourId>& map);
std::vector<ColourId> read_colour_map(std::istream& in);

// Edge list:
//   v <count>
//   <i j>  (one edge per line)
void write_graph(std::ostream& out, const GraphSpec& h);
GraphSpec read_graph(std::istream& in);

Colouring load_colouring(const std::string& path);
void save_colouring(const std::string& path, const Colouring& c);
GraphSpec load_graph(const std::string& path);

}  // namespace egc
