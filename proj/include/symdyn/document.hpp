#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"

#include "symdyn/code.hpp"
#include "symdyn/resolving.hpp"

namespace symdyn {

using Json = nlohmann::ordered_json;

/// Parses JSON text; syntax errors become DocumentError with "source:line:column".
Json parse_json(const std::string& text, const std::string& source);
Json read_json_file(const std::filesystem::path& path);

/// ShiftDocument:
///   {"alphabet": [..], "kind": "forbidden", "forbidden": [["1","1"], ...]}
///   {"alphabet": [..], "kind": "graph", "states": [..], "edges": [["s","a","t"], ...]}
/// Forbidden words may also be given as strings of single-character symbols.
/// Presentations tagged with an SFT description are written in forbidden form.
Json shift_to_json(const Presentation& shift);
Presentation shift_from_json(const Json& doc, const std::filesystem::path& base_dir = {});

/// CodeDocument:
///   {"domain": <ShiftDocument or file name>, "memory": m, "anticipation": a,
///    "rule": {"x,y,z": "b", ...}, "codomainAlphabet": [..]}
/// A file name is resolved against base_dir.
Json code_to_json(const SlidingBlockCode& code);
SlidingBlockCode code_from_json(const Json& doc, const std::filesystem::path& base_dir = {});

Json lasso_to_json(const LassoPoint& point, const Alphabet& alphabet);
LassoPoint lasso_from_json(const Json& doc, const Alphabet& alphabet);

/// Lasso pair with x over the domain alphabet and y over the codomain alphabet.
Json pair_to_json(const CodedPair& pair, const Alphabet& x_alphabet, const Alphabet& y_alphabet);

Json verdict_to_json(const std::string& property, const RetractVerdict& verdict, const SlidingBlockCode& code);
Json kbound_to_json(const KBoundReport& report);

/// 64-bit FNV-1a of the bytes, as 16 hex digits.
std::string digest(const std::string& bytes);

}  // namespace symdyn
