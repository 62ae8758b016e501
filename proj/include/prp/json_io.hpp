#pragma once

#include <string>

#include "json.hpp"
#include "prp/exchangeable.hpp"
#include "prp/markov.hpp"
#include "prp/measures.hpp"
#include "prp/moebius.hpp"

namespace prp {

using nlohmann::json;

// Measures: {"n": int, "atoms": [{"set": [1-based, increasing], "mass": float}]}
json to_json(const SubsetMeasure& nu);
json to_json(const SignedSubsetMeasure& nu);
SubsetMeasure subset_measure_from_json(const json& j);
SignedSubsetMeasure signed_measure_from_json(const json& j);

// Distributions: {"n": int, "probs": [2^n floats]}, config index sum 2^{i-1} x_i.
json to_json(const BinaryDistribution& d);
BinaryDistribution distribution_from_json(const json& j);

// Symmetric patterns: {"n": int, "z": [n+1 floats]}
json to_json(const SymmetricZeroPattern& z);
SymmetricZeroPattern symmetric_pattern_from_json(const json& j);

// Gap laws: {"b": [floats]}
GapDistribution gaps_from_json(const json& j);

// Exchangeable measures:
// {"c": f, "fullset": f, "atoms": [{"x": f, "mass": f}],
//  "density": {"kind": "lebesgue"|"ex49"|"beta", "params": {"a": f, "b": f}}}
json to_json(const ExchangeableNu& en);
ExchangeableNu exchangeable_from_json(const json& j);

// Levy triples:
// {"gamma": f, "mass_at_infinity": f, "atoms": [{"s": f, "mass": f}],
//  "density": {"kind": "exp-decay"|"exp-over-s"|"beta-levy", "params": {...}}}
json to_json(const LevyTriple& lt);
LevyTriple levy_from_json(const json& j);

json load_json_file(const std::string& path);

}  // namespace prp
