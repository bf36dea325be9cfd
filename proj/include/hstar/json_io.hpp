#pragma once

#include <string>

#include <json.hpp>

#include "hstar/polytope.hpp"
#include "hstar/triangulation.hpp"
#include "hstar/unimodular_map.hpp"

namespace hstar {

using json = nlohmann::json;

// Numbers are emitted as JSON integers while they fit 64 bits and as
// decimal strings beyond; both forms are accepted on input.
json int_to_json(const Int& x);
Int int_from_json(const json& j, const std::string& field);
json rat_to_json(const Rat& x);
Rat rat_from_json(const json& j, const std::string& field);

json vector_to_json(const IntVector& v);
IntVector vector_from_json(const json& j, const std::string& field);
json matrix_to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const json& j, const std::string& field);

/// {"dim": d, "vertices": [[...],...], "inequalities": [{"a": [...], "b": n},...]}
/// `inequalities` is optional on input and always emitted on output.
json polytope_to_json(const LatticePolytope& p);
LatticePolytope polytope_from_json(const json& j);

/// {"U": [[...],...], "v": [...]}
json map_to_json(const AffineUnimodularMap& m);
AffineUnimodularMap map_from_json(const json& j);

/// {"points": [[...],...], "cells": [[i,...],...], "heights": [...]}
/// `heights` is optional both ways.
json triangulation_to_json(const Triangulation& t);
Triangulation triangulation_from_json(const json& j);

/// Parses file contents as JSON; errors mention the path. InputError on
/// missing file or malformed JSON.
json load_json_file(const std::string& path);

}  // namespace hstar
