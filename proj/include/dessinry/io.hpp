#pragma once

#include <string>

#include <json.hpp>

#include "dessinry/braid.hpp"
#include "dessinry/enumeration.hpp"
#include "dessinry/origami.hpp"

namespace dessinry {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "dessinry/1";

// {"n": 3, "d": 2, "perms": [[1,0],[1,0],[0,1]]}
Json to_json(const MonodromyTuple& t);
// Structural errors raise Error(InvalidTuple); product and transitivity are not checked.
MonodromyTuple tuple_from_json(const Json& j);

// {"m": 1, "R": [0], "L": [0], "U": [0], "D": [0]}
Json to_json(const BipartiteOrigami& o);
BipartiteOrigami origami_from_json(const Json& j);

Json to_json(const RamificationProfile& p);
Json to_json(const DessinClass& c);
Json to_json(const EnumerationResult& r);

// {"n": 4, "name": "A01", "images": ["x1^-1 x0 x1", ...], "inverse_images": [...]}
Json to_json(const EndomorphismTable& e);
EndomorphismTable table_from_json(const Json& j);

Json to_json(const OrbitResult& r);
Json to_json(const OrigamiOrbitResult& r);

// Vertex-colored graph: one node per cycle of g_nu (color nu) and one edge per
// sheet i and color nu, joining the cycles of g_nu and g_{nu+1} through i.
std::string dessin_to_dot(const MonodromyTuple& t);
// Labeled digraph of the orbit members.
std::string orbit_to_dot(const OrbitResult& r);

}  // namespace dessinry
