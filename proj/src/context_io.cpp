#include "qlr/context_io.hpp"

#include "qlr/errors.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace qlr {

using nlohmann::json;

namespace {

double read_number(const json &j, const std::string &field) {
    if (!j.is_number()) {
        throw SchemaError(field, "expected a number, got " + std::string(j.type_name()));
    }
    return j.get<double>();
}

Probabilities3 read_triple(const json &j, const std::string &field) {
    if (!j.is_array() || j.size() != 3) {
        throw SchemaError(field, "expected an array of 3 numbers");
    }
    Probabilities3 out{};
    for (std::size_t k = 0; k < 3; ++k) {
        out[k] = read_number(j[k], field + "[" + std::to_string(k) + "]");
    }
    return out;
}

const json &require(const json &obj, const char *key) {
    const auto it = obj.find(key);
    if (it == obj.end()) {
        throw SchemaError(key, "missing required field");
    }
    return *it;
}

int parse_pair_key(const std::string &key) {
    if (key.size() == 2 && key[0] >= '1' && key[0] <= '3' && key[1] >= '1' && key[1] <= '3' && key[0] != key[1]) {
        return pair_index(key[0] - '1', key[1] - '1');
    }
    throw SchemaError("pairs." + key, "pair key must be two distinct digits from 1..3");
}

std::pair<std::size_t, std::size_t> line_and_column(const std::string &text, std::size_t byte) {
    std::size_t line = 1;
    std::size_t col = 1;
    const std::size_t end = std::min(byte, text.size());
    for (std::size_t k = 0; k + 1 < end; ++k) {
        if (text[k] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

} // namespace

ContextData parse_context(const std::string &text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error &e) {
        const auto [line, col] = line_and_column(text, e.byte);
        std::ostringstream os;
        os << "line " << line << ", column " << col << ": " << e.what();
        throw ParseError(os.str(), line, col);
    }
    if (!root.is_object()) {
        throw SchemaError("<root>", "expected a JSON object");
    }

    ContextData d;
    d.priors = read_triple(require(root, "priors"), "priors");

    const json &singles = require(root, "singles");
    if (!singles.is_array() || singles.size() != 3) {
        throw SchemaError("singles", "expected a 3x3 array");
    }
    for (std::size_t l = 0; l < 3; ++l) {
        const auto row = read_triple(singles[l], "singles[" + std::to_string(l) + "]");
        d.singles[l] = row;
    }

    const json &pairs = require(root, "pairs");
    if (!pairs.is_object()) {
        throw SchemaError("pairs", "expected an object keyed by pair");
    }
    std::array<bool, 3> seen{};
    for (const auto &[key, value] : pairs.items()) {
        const int p = parse_pair_key(key);
        if (seen[p]) {
            throw SchemaError("pairs." + key, "pair {" + pair_label(p) + "} given twice");
        }
        seen[p] = true;
        const auto col = read_triple(value, "pairs." + key);
        for (int l = 0; l < 3; ++l) {
            d.pairs[l][p] = col[l];
        }
    }
    for (int p = 0; p < 3; ++p) {
        if (!seen[p]) {
            throw SchemaError("pairs." + pair_label(p), "missing required pair");
        }
    }

    if (const auto it = root.find("b_priors"); it != root.end() && !it->is_null()) {
        d.b_priors = read_triple(*it, "b_priors");
    }
    return d;
}

std::string serialize_context(const ContextData &d) {
    json root;
    root["priors"] = d.priors;
    root["singles"] = d.singles;
    json pairs = json::object();
    for (int p = 0; p < 3; ++p) {
        pairs[pair_label(p)] = {d.pairs[0][p], d.pairs[1][p], d.pairs[2][p]};
    }
    root["pairs"] = pairs;
    if (d.b_priors) {
        root["b_priors"] = *d.b_priors;
    }
    return root.dump(2) + "\n";
}

ContextData load_context(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open " + path.string(), 0, 0);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_context(buf.str());
}

void save_context(const ContextData &data, const std::filesystem::path &path) {
    std::ofstream out(path);
    if (!out) {
        throw Error("cannot write " + path.string());
    }
    out << serialize_context(data);
    if (!out) {
        throw Error("write failed for " + path.string());
    }
}

} // namespace qlr
