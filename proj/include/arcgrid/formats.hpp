#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "arcgrid/circle.hpp"
#include "arcgrid/graph.hpp"
#include "arcgrid/grid.hpp"

namespace arcgrid {

struct Diagnostic {
    int line = 0; // 1-based; 0 when no single line is at fault
    std::string message;
};

// "line 3: duplicate endpoint 5" style, one per line.
std::string format_diagnostics(const std::vector<Diagnostic>& diags);

class ParseError : public std::runtime_error {
public:
    explicit ParseError(std::vector<Diagnostic> diags);
    const std::vector<Diagnostic>& diagnostics() const { return diags_; }

private:
    std::vector<Diagnostic> diags_;
};

// Text formats are line-based:
//   .arcs   "arcs <n>" then n lines "arc <id> <tail> <head>"
//   .paths  "paths <n> [rect <r1> <r2> <c1> <c2>]" then "path <id> (r,c) ..."
//   .graph  "graph <n> <m>" then "vertex <id>" x n and "edge <u> <v>" x m
// Parsers throw ParseError carrying line-numbered diagnostics; emitters
// produce the canonical form (single spaces, trailing newline, .paths and
// .graph sorted by id), which parse/emit round-trip byte-identically.

CircularArcModel parse_arcs(const std::string& text);
std::string emit_arcs(const CircularArcModel& m);

GridModel parse_paths(const std::string& text);
std::string emit_paths(const GridModel& m);

Graph parse_graph(const std::string& text);
std::string emit_graph(const Graph& g);

// 64-bit FNV-1a over the raw bytes, formatted "fnv1a:<16 hex digits>".
std::string input_digest(const std::string& text);

// Whole-file helpers; throw std::runtime_error naming the path on failure.
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

} // namespace arcgrid
