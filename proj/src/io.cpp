#include "srw/io.hpp"

#include <fstream>

namespace srw {

namespace {

json field_to_json(const Field& F) {
    json f;
    f["p"] = F.p();
    f["e"] = F.e();
    f["modulus"] = F.modulus();
    return f;
}

FieldPtr field_from_json(const json& j) {
    if (!j.is_object() || !j.contains("p") || !j.contains("e"))
        throw ParseError("field object must contain \"p\" and \"e\"");
    if (!j["p"].is_number_unsigned() || !j["e"].is_number_unsigned())
        throw ParseError("field parameters must be non-negative integers");
    std::optional<std::vector<unsigned>> modulus;
    if (j.contains("modulus")) {
        if (!j["modulus"].is_array()) throw ParseError("modulus must be an array");
        modulus = j["modulus"].get<std::vector<unsigned>>();
    }
    return Field::make(j["p"].get<unsigned>(), j["e"].get<unsigned>(), modulus);
}

json shape_to_json(const Shape& shape) {
    json s = json::array();
    for (const Block& b : shape.blocks) s.push_back(json::array({b.m, b.n}));
    return s;
}

Shape shape_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw ParseError("shape must be a non-empty array");
    std::vector<Block> blocks;
    for (const json& b : j) {
        if (!b.is_array() || b.size() != 2 || !b[0].is_number_integer() ||
            !b[1].is_number_integer())
            throw ParseError("each shape block must be a pair [m, n]");
        blocks.push_back(Block{b[0].get<int>(), b[1].get<int>()});
    }
    return Shape(blocks);  // semantic validation lives in Shape
}

json generators_to_json(const Shape& shape, const Mat& gen) {
    json gens = json::array();
    for (int r = 0; r < gen.rows; ++r) {
        json word = json::array();
        for (int i = 0; i < shape.t(); ++i) {
            json grid = json::array();
            const int off = shape.block_offset(i);
            const int sz = shape.blocks[i].m * shape.blocks[i].n;
            for (int c = 0; c < sz; ++c) grid.push_back(gen.at(r, off + c));
            word.push_back(std::move(grid));
        }
        gens.push_back(std::move(word));
    }
    return gens;
}

Mat generators_from_json(const Shape& shape, const json& j) {
    if (!j.is_array()) throw ParseError("generators must be an array");
    Mat raw(static_cast<int>(j.size()), shape.ambient_dim());
    for (size_t r = 0; r < j.size(); ++r) {
        const json& word = j[r];
        if (!word.is_array() || static_cast<int>(word.size()) != shape.t())
            throw ParseError("each generator must list one grid per block");
        for (int i = 0; i < shape.t(); ++i) {
            const json& grid = word[i];
            const int sz = shape.blocks[i].m * shape.blocks[i].n;
            if (!grid.is_array() || static_cast<int>(grid.size()) != sz)
                throw ParseError("block grid has the wrong number of entries");
            for (int c = 0; c < sz; ++c) {
                if (!grid[c].is_number_unsigned())
                    throw ParseError("generator entries must be non-negative integers");
                raw.at(static_cast<int>(r), shape.block_offset(i) + c) =
                    grid[c].get<Elem>();
            }
        }
    }
    return raw;
}

}  // namespace

json code_to_json(const Code& C, const json& provenance) {
    json j;
    j["field"] = field_to_json(*C.F);
    j["shape"] = shape_to_json(C.shape);
    j["generators"] = generators_to_json(C.shape, C.gen);
    if (!provenance.is_null()) j["provenance"] = provenance;
    return j;
}

Code code_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("code file must be a JSON object");
    for (const char* key : {"field", "shape", "generators"})
        if (!j.contains(key))
            throw ParseError(std::string("code file is missing \"") + key + "\"");
    FieldPtr F = field_from_json(j["field"]);
    Shape shape = shape_from_json(j["shape"]);
    Mat raw = generators_from_json(shape, j["generators"]);
    return Code::make(std::move(F), std::move(shape), raw);  // range checks inside
}

json chain_to_json(const CodeChain& chain) {
    json j;
    j["field"] = field_to_json(*chain.F);
    j["shape"] = shape_to_json(chain.shape);
    json codes = json::array();
    for (const Code& C : chain.members)
        codes.push_back(generators_to_json(chain.shape, C.gen));
    j["codes"] = std::move(codes);
    j["provenance"] = provenance_json(chain.family, chain.params, *chain.F);
    return j;
}

CodeChain chain_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("chain file must be a JSON object");
    for (const char* key : {"field", "shape", "codes"})
        if (!j.contains(key))
            throw ParseError(std::string("chain file is missing \"") + key + "\"");
    CodeChain chain;
    chain.F = field_from_json(j["field"]);
    chain.shape = shape_from_json(j["shape"]);
    if (!j["codes"].is_array() || j["codes"].empty())
        throw ParseError("chain file must list at least one code");
    for (const json& gens : j["codes"])
        chain.members.push_back(
            Code::make(chain.F, chain.shape, generators_from_json(chain.shape, gens)));
    if (j.contains("provenance") && j["provenance"].is_object()) {
        const json& p = j["provenance"];
        if (p.contains("family") && p["family"].is_string())
            chain.family = p["family"].get<std::string>();
    }
    chain.d_head = min_distance(chain.members.front());
    return chain;
}

json provenance_json(const std::string& family,
                     const std::vector<std::pair<std::string, std::string>>& params,
                     const Field& F) {
    json p;
    p["family"] = family;
    for (const auto& [key, value] : params) p[key] = value;
    p["modulus"] = F.modulus();
    return p;
}

json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    json j = json::parse(in, nullptr, false);
    if (j.is_discarded()) throw ParseError("invalid JSON in " + path);
    return j;
}

Code read_code(const std::string& path) { return code_from_json(read_json(path)); }

CodeChain read_chain(const std::string& path) { return chain_from_json(read_json(path)); }

void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write " + path);
    out << dump_json(j);
}

std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

}  // namespace srw
