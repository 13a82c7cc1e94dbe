#ifndef INPOLY_IO_HPP_
#define INPOLY_IO_HPP_

// JSON, CSV and SVG surfaces used by the command-line tool.

#include "inpoly/curve.hpp"
#include "inpoly/degree.hpp"
#include "inpoly/oracle.hpp"
#include "inpoly/penner.hpp"
#include "inpoly/solver.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace inpoly::io {

using nlohmann::json;

/// Parses a curve object; unknown or missing fields raise InvalidSpec.
CurveSpec curve_spec_from_json(const json& j);
json to_json(const CurveSpec& spec);

/// "1,2,3" or a JSON array of numbers. Raw values, not yet validated.
std::vector<double> parse_lengths(const std::string& text);

json solutions_json(const CurveSpec& spec, const EdgeLengths& a, const SolveResult& result);
/// Structural check of a solutions document; throws InvalidSpec naming the
/// first problem (missing key, wrong arity, sigma not increasing).
void validate_solutions_json(const json& doc);
std::string solutions_csv(const SolveResult& result);

json penner_json(const EdgeLengths& a, const CyclicPolygon& poly);
json degree_json(const CurveSpec& spec, const DegreeReport& report);
json oracle_json(const CurveSpec& spec, const EdgeLengths& a, const std::vector<GridSolution>& candidates);

/// Curve as a 1024-point path plus one closed path per polygon, vertices
/// labelled A'_0..A'_{n-1}, basepoint marked. Throws MissingSolutions when
/// `polygons` is empty. Output depends only on the inputs.
std::string render_svg(const Curve& curve, const std::vector<PointList>& polygons);

/// Reads the on-curve vertex lists back out of a solutions document.
std::vector<PointList> polygons_from_json(const json& doc);

}  // namespace inpoly::io

#endif  // INPOLY_IO_HPP_
