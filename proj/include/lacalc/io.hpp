#pragma once

#include <optional>
#include <string>

#include "json.hpp"
#include "lacalc/algebroid.hpp"
#include "lacalc/metric.hpp"
#include "lacalc/poisson.hpp"

namespace lacalc {

/// Contents of an algebroid definition file.
struct AlgebroidFile {
    LieAlgebroid algebroid;
    std::optional<FiberMetric> metric;
};

/// Parses an algebroid definition:
///
///   {"coordinates": [...], "frame": [...], "coframe": [...],
///    "anchor": [[...], ...], "brackets": {"1,2": "e2"}, "metric": [[...], ...]}
///
/// `coframe` and `metric` are optional, as is `anchor` when there are no
/// coordinates. Bracket keys are 1-based frame indices or frame names, and
/// each unordered pair may appear once. Throws SchemaError with a field path.
AlgebroidFile parseAlgebroid(const std::string& text);
AlgebroidFile loadAlgebroid(const std::string& path);

/// Parses `{"coordinates": [...], "bivector": {"12": "x", ...}}`; keys are
/// 1-based index pairs "ab" (or "a,b") with a < b.
PoissonBivector parseBivector(const std::string& text);
PoissonBivector loadBivector(const std::string& path);

/// True when the text looks like a bivector file rather than an algebroid file.
bool isBivectorText(const std::string& text);

/// Canonical serialization: fixed key order, canonical expressions, brackets
/// only for nonzero pairs, two-space indentation and a trailing newline.
std::string serializeAlgebroid(const AlgebroidFile& file);
std::string serializeBivector(const PoissonBivector& p);

std::string readFile(const std::string& path);

}  // namespace lacalc
