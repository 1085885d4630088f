#pragma once

// JSON encoding of every library value. Rationals travel as "p/q" strings.
// Decoders throw ParseError on malformed input.

#include "json.hpp"

#include "sobczyk/pipeline.hpp"

namespace sobczyk::io {

using Json = nlohmann::json;

Json rational_to_json(const Rational& value);
Rational rational_from_json(const Json& j);

Json to_json(const LineDescriptor& line);
LineDescriptor line_from_json(const Json& j);

Json to_json(const PointId& p);
/// Validates the point against the line.
PointId point_from_json(const Json& j, const LineDescriptor& line);

Json to_json(const ClopenInterval& interval);
ClopenInterval interval_from_json(const Json& j, const LineDescriptor& line);

/// {"line": ..., "atoms": [{"point": ..., "weight": "p/q"}]}.
Json to_json(const SignedMeasure& mu);
SignedMeasure measure_from_json(const Json& j);
/// Atom list only, for measures whose line is known from context.
Json atoms_to_json(const SignedMeasure& mu);
SignedMeasure atoms_from_json(const Json& j, const LineDescriptor& line);

Json to_json(const TestFunction& f);
TestFunction function_from_json(const Json& j, const LineDescriptor& line);

Json to_json(const CoefficientPattern& p);
CoefficientPattern pattern_from_json(const Json& j);

Json to_json(const OperatorR& r);
OperatorR operator_from_json(const Json& j);

Json to_json(const DualVector& v);
DualVector dual_from_json(const Json& j);

Json to_json(const ClosedSet& s);
Json to_json(const Hierarchy& h);

Json to_json(const MeasureSequence& seq);
MeasureSequence sequence_from_json(const Json& j);

Json to_json(const Check& c);
Json to_json(const DecompositionResult& result);
Json to_json(const Verdict& v);
Json to_json(const PipelineReport& report);

/// Parses text, mapping library exceptions to ParseError.
Json parse(const std::string& text);

}  // namespace sobczyk::io
