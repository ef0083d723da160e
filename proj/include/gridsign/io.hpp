#pragma once

#include <map>
#include <string>

#include "json.hpp"

#include "gridsign/grid.hpp"
#include "gridsign/homology.hpp"
#include "gridsign/signs.hpp"

namespace gridsign {

using Json = nlohmann::ordered_json;

// Grid file: {"n": <int>, "O": [...], "X": [...]}, columns 1-indexed,
// bottom row first. No other keys.
GridDiagram parse_grid(const std::string& text);
Json grid_to_json(const GridDiagram& d);

// Sign file: {"n", "convention", "rects"} with one entry per empty
// rectangle, sorted by canonical key. Missing or duplicate keys are
// rejected.
Json sign_to_json(const RectUniverse& u, const SignAssignment& s);
SignAssignment sign_from_json(const std::string& text, const RectUniverse& u);

Json rect_key_json(const EmptyRect& r);
Json state_json(const GridState& x);  // one-line, 1-indexed
Json verify_report_json(const RectUniverse& u, const VerifyReport& rep, SignConvention convention);
Json table_entries_json(const HomologyTable& t);
Json euler_to_json(const std::map<int, long long>& chi);
Json complex_dump_json(const BigradedComplex& c);

std::string a2_fraction(int alexander2);  // A = 2A/2 as "k" or "k/2"

// Canonical bytes: two-space indentation, LF endings, trailing newline.
std::string emit_report(const Json& doc);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& bytes);

}  // namespace gridsign
