#pragma once

#include "qlr/context_data.hpp"

#include <filesystem>
#include <string>

namespace qlr {

/// Context-data files are JSON objects:
///
///   { "priors":   [p1, p2, p3],
///     "singles":  [[..], [..], [..]],          rows l, columns i
///     "pairs":    { "12": [..], "13": [..], "23": [..] },   indexed by l
///     "b_priors": [q1, q2, q3] }               optional
///
/// Pair keys may be written in either order ("21" == "12").

/// Throws ParseError (with 1-based line and column) on malformed text and
/// SchemaError on missing or ill-typed fields.
ContextData parse_context(const std::string &text);
std::string serialize_context(const ContextData &data);

ContextData load_context(const std::filesystem::path &path);
/// Writes with round-trip precision, so load(save(d)) == d bit-exactly.
void save_context(const ContextData &data, const std::filesystem::path &path);

} // namespace qlr
