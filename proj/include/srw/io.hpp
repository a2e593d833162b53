#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "srw/codes.hpp"
#include "srw/constructions.hpp"

namespace srw {

using json = nlohmann::ordered_json;

/// Malformed input file or flag value (CLI exit 2).
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Code file: {"field":{"p","e","modulus"}, "shape":[[m,n],...],
/// "generators":[[block grids, row-major]], "provenance":{...}?}.
json code_to_json(const Code& C, const json& provenance = json());
Code code_from_json(const json& j);

/// Chain file: same field/shape keys; "codes" holds the generator lists in
/// order of increasing minimum distance.
json chain_to_json(const CodeChain& chain);
/// Rebuilds the chain; the head's minimum distance is recomputed, members are
/// not otherwise verified here (see verify_chain).
CodeChain chain_from_json(const json& j);

json provenance_json(const std::string& family,
                     const std::vector<std::pair<std::string, std::string>>& params,
                     const Field& F);

Code read_code(const std::string& path);
CodeChain read_chain(const std::string& path);
json read_json(const std::string& path);
void write_json_file(const std::string& path, const json& j);

/// Canonical serialization used everywhere: 2-space indent, "\n"-terminated.
std::string dump_json(const json& j);

}  // namespace srw
