// JSON encodings of every value the command line reads or writes.
//
//   FinSet       ["a", "b", ...]
//   FinMap       {"dom": [...], "cod": [...], "table": {"x": "y", ...}}
//   fsgrp        {"total": [...], "base": [...], "proj": FinMap,
//                 "mul": {"pairs": [["a", "b", "ab"], ...]}}
//   bimodule     {"left": fsgrp, "right": fsgrp, "carrier": [...],
//                 "src": FinMap, "tgt": FinMap,
//                 "lact": {"pairs": [["e", "w", "ew"], ...]},
//                 "ract": {"pairs": [["w", "e", "we"], ...]}}
//   object       {"components": [...], "orientation": {"c": "+" or "-"}}
//   cobordism    {"source": object, "target": object, "regions": [...],
//                 "in_src": {"c": "r"}, "in_tgt": {"c": "r"}}
//   theory       {"theory": "constant", "S": [...]} or
//                {"theory": "free_boundary", "S": [...], "fill": "s"}
//
// Product tables list exactly the composable pairs, each once. Readers
// throw InputError naming the JSON pointer of the offending value.

#ifndef CYLTQFT_JSON_IO_HPP_
#define CYLTQFT_JSON_IO_HPP_

#include <string>

#include <nlohmann/json.hpp>

#include "cyltqft/bimod.hpp"
#include "cyltqft/ccob.hpp"
#include "cyltqft/finset.hpp"
#include "cyltqft/fsgrp.hpp"
#include "cyltqft/report.hpp"
#include "cyltqft/theory.hpp"

namespace cyltqft {

using Json = nlohmann::json;

/// Parses text, throwing InputError with the byte offset on syntax errors.
Json parse_json(const std::string& text);

Json to_json(const FinSet& s);
Json to_json(const FinMap& f);
Json to_json(const FiberedSemiGroup& f);
Json to_json(const FiberedBimodule& b);
Json to_json(const CobObject& s);
Json to_json(const Cobordism& m);
/// {"title", "ok", "notes", "checks": [{"name", "audit", "passed", "failed",
/// "records": [{"instance", "pass", "witness", "detail"}]}]}, records
/// sorted by instance.
Json to_json(const Report& r);

FinSet finset_from_json(const Json& j, const std::string& where = "");
FinMap finmap_from_json(const Json& j, const std::string& where = "");
/// Shapes only; the diagrams are left to validate_fsgrp.
FiberedSemiGroup fsgrp_from_json(const Json& j, const std::string& where = "");
/// Shapes only; the diagrams are left to validate_bimodule.
FiberedBimodule bimodule_from_json(const Json& j, const std::string& where = "");
CobObject object_from_json(const Json& j, const std::string& where = "");
Cobordism cobordism_from_json(const Json& j, const std::string& where = "");
TheoryPtr theory_from_json(const Json& j, const std::string& where = "");

}  // namespace cyltqft

#endif  // CYLTQFT_JSON_IO_HPP_
