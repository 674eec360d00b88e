#pragma once

// JSON forms used by the CLI.
//   Multivector: {"": "3/2", "1": "2", "13": "-1/3"}
//   BiPoly:      {"terms": [{"a": 2, "b": 0, "coef": {"": "160"}}, ...]}
//   KernelReport {"m", "k", "trials", "failures": [poly text...], "elapsed_ms", ...}

#include "slicecliff/slice.hpp"
#include "slicecliff/theorem.hpp"

#include <nlohmann/json.hpp>

namespace slicecliff {

nlohmann::json to_json(const Multivector& x);
/// Throws ParseError on malformed blade keys or rationals.
Multivector multivector_from_json(const nlohmann::json& j);

nlohmann::json to_json(const BiPoly& f);
/// Parity is recomputed from the terms.
BiPoly bipoly_from_json(const nlohmann::json& j);

nlohmann::json to_json(const KernelReport& r);

}  // namespace slicecliff
