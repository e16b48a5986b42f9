#pragma once

#include <string>

#include "koszul/layered_graph.hpp"
#include "koszul/regular_cw.hpp"

namespace koszul::io {

// Schema: { "name": string, "cells": [ { "id": string, "dim": int >= 0,
// "boundary": { faceId: 1 | -1 } } ] }. Schema and structure violations
// throw InputError naming the offending location (e.g. cells[3].boundary.B1).
RegularCWComplex parse_complex(const std::string& text);
// Schema: { "name": string, "vertices": [ { "id": string, "rank": int >= 1 } ],
// "covers": [ [upperId, lowerId] ] }; the minimum is implicit.
LayeredGraph parse_graph(const std::string& text);

// Pretty-printed with two-space indent; keys and cells in id order.
std::string complex_to_json(const RegularCWComplex& x);
std::string graph_to_json(const LayeredGraph& g);

// Whole file contents; InputError if it cannot be read.
std::string read_file(const std::string& path);
// "catalog:<name>" or a file path.
RegularCWComplex load_complex(const std::string& source);
LayeredGraph load_graph(const std::string& source);

}  // namespace koszul::io
