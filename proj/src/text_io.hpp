#pragma once

#include <string>

#include "distribution.hpp"
#include "graph.hpp"

namespace pebblelab {

// Graph file format (UTF-8 text) — two accepted forms, `#` starts a comment:
//
//   graph <n>
//   label <i> <string>     (optional, string runs to end of line)
//   edge <u> <v>           (one line per edge)
//
//   family <name> <params...>
//     complete <m> | path <n> | cycle <n> | hamming <m> <k>
//     product <basic family> <basic family> [...]   (left-associative)
//
// Rejects non-simple or disconnected graphs with named errors.
Graph load_graph(const std::string& text, int vertex_budget = kDefaultVertexBudget);

// Canonical explicit form; load(save(g)) has identical adjacency and labels.
std::string save_graph(const Graph& g);

// Distribution text format:
//   dist <n>
//   pebbles <vertex> <count>
// A JSON document {"n": n, "counts": [...]} is accepted as well (the loader
// sniffs a leading '{').
Distribution load_distribution(const std::string& text, const Graph& g);

std::string save_distribution(const Distribution& d);

// Content hash of the canonical graph text (FNV-1a 64, hex); stable id for
// reports and caches.
std::string graph_digest(const Graph& g);

} // namespace pebblelab
