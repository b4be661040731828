#pragma once

// JSON forms of the library objects used by the command-line front end.
// Every number is an exact string; objects serialize with sorted keys.

#include "ck/linalg.hpp"
#include "ck/matrix.hpp"
#include "ck/relcat.hpp"
#include "ck/rootsys.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace ck::cli {

using json = nlohmann::json;

// bad input documents and option values; reported with exit code 2
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json to_json(const PMatrix& m);
// {"rows", "cols", "arity", "entries": [[pimenov strings]]}; arity may be omitted
PMatrix pmatrix_from_json(const json& j);

json to_json(const SMatrix& m);

// {"source_dim", "target_dim", "basis": [[scalar strings]]} or the literal null
json to_json(const LinearRelation& p);
// dims are used only for a literal null
LinearRelation relation_from_json(const json& j, int null_source = 0, int null_target = 0);

json read_json_file(const std::string& path);

}  // namespace ck::cli
