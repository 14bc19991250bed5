#pragma once

#include <string>

#include "pdda/presentation.hpp"

namespace pdda {

// Presentation document: {"field": {"type":"Q"} | {"type":"Fp","p":5},
// "n": 4, "names": [...], "lambda": [["0","-1",...], ...],
// "delta": [{"i": 4, "images": {"X3": "X1+X2"}}],
// "eta": [{"i": 4, "value": "1"}],
// "higher": [{"i": 4, "bound": 2, "entries": [{"k": 1, "images": {...}}]}],
// "nilpotence_cap": 64}. Indices in the document are 1-based.
PoissonPresentation parse_presentation(const std::string& text);

// Canonical form: parse(serialize(p)) == p, stable key order, deterministic
// polynomial strings.
std::string serialize_presentation(const PoissonPresentation& pres);

}  // namespace pdda
