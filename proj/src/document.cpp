#include "symdyn/document.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>

#include "symdyn/error.hpp"
#include "symdyn/shift.hpp"

namespace symdyn {

namespace {

[[noreturn]] void fail(const std::string& message) { throw DocumentError(message); }

const Json& field(const Json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) fail(std::string("missing field '") + key + "'");
  return doc.at(key);
}

std::vector<std::string> string_list(const Json& value, const char* what) {
  if (!value.is_array()) fail(std::string(what) + " must be an array of strings");
  std::vector<std::string> out;
  for (const Json& item : value) {
    if (!item.is_string()) fail(std::string(what) + " must be an array of strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

Word word_from_json(const Json& value, const Alphabet& alphabet) {
  if (value.is_string()) {
    Word w;
    for (char c : value.get<std::string>()) w.push_back(alphabet.symbol(std::string(1, c)));
    return w;
  }
  return alphabet.parse_word(string_list(value, "word"));
}

Json word_to_json(std::span<const Symbol> word, const Alphabet& alphabet) {
  Json out = Json::array();
  for (Symbol a : word) out.push_back(alphabet.name(a));
  return out;
}

std::vector<std::string> split_commas(const std::string& key) {
  std::vector<std::string> parts;
  std::string part;
  std::istringstream in(key);
  while (std::getline(in, part, ',')) parts.push_back(part);
  if (!key.empty() && key.back() == ',') parts.emplace_back();
  return parts;
}

std::string join_commas(const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) out += (i ? "," : "") + names[i];
  return out;
}

int integer_field(const Json& doc, const char* key) {
  const Json& v = field(doc, key);
  if (!v.is_number_integer() || v.get<long>() < 0) fail(std::string("'") + key + "' must be a nonnegative integer");
  return v.get<int>();
}

}  // namespace

Json parse_json(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    fail(source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + e.what());
  }
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("cannot read " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_json(buffer.str(), path.string());
}

Json shift_to_json(const Presentation& shift) {
  Json doc;
  doc["alphabet"] = shift.alphabet().names();
  if (const auto& spec = shift.sft_spec()) {
    doc["kind"] = "forbidden";
    Json words = Json::array();
    for (const Word& w : spec->forbidden) words.push_back(word_to_json(w, spec->alphabet));
    doc["forbidden"] = std::move(words);
    return doc;
  }
  doc["kind"] = "graph";
  doc["states"] = shift.state_names();
  Json edges = Json::array();
  for (const Edge& e : shift.edges()) {
    edges.push_back({shift.state_names()[static_cast<std::size_t>(e.source)], shift.alphabet().name(e.label),
                     shift.state_names()[static_cast<std::size_t>(e.target)]});
  }
  doc["edges"] = std::move(edges);
  return doc;
}

Presentation shift_from_json(const Json& doc, const std::filesystem::path& base_dir) {
  if (doc.is_string()) {
    const std::filesystem::path path = base_dir / doc.get<std::string>();
    return shift_from_json(read_json_file(path), path.parent_path());
  }
  try {
    Alphabet alphabet(string_list(field(doc, "alphabet"), "alphabet"));
    const Json& kind = field(doc, "kind");
    if (kind == "forbidden") {
      SftSpec spec{alphabet, {}};
      const Json& words = field(doc, "forbidden");
      if (!words.is_array()) fail("'forbidden' must be an array");
      for (const Json& w : words) spec.forbidden.push_back(word_from_json(w, alphabet));
      return from_forbidden(spec);
    }
    if (kind == "graph") {
      std::vector<std::string> states = string_list(field(doc, "states"), "states");
      std::map<std::string, State> index;
      for (std::size_t i = 0; i < states.size(); ++i)
        if (!index.emplace(states[i], static_cast<State>(i)).second) fail("duplicate state '" + states[i] + "'");
      std::vector<Edge> edges;
      const Json& list = field(doc, "edges");
      if (!list.is_array()) fail("'edges' must be an array");
      for (const Json& e : list) {
        const auto parts = string_list(e, "edge");
        if (parts.size() != 3) fail("edges are [source, symbol, target] triples");
        if (!index.count(parts[0]) || !index.count(parts[2])) fail("edge mentions an unknown state");
        edges.push_back({index.at(parts[0]), alphabet.symbol(parts[1]), index.at(parts[2])});
      }
      return Presentation(alphabet, std::move(states), std::move(edges));
    }
    fail("'kind' must be \"forbidden\" or \"graph\"");
  } catch (const DocumentError&) {
    throw;
  } catch (const EmptyShiftError&) {
    throw;
  } catch (const Error& e) {
    fail(std::string("invalid shift document: ") + e.what());
  } catch (const Json::exception& e) {
    fail(std::string("invalid shift document: ") + e.what());
  }
}

Json code_to_json(const SlidingBlockCode& code) {
  Json doc;
  doc["domain"] = shift_to_json(code.domain());
  doc["memory"] = code.memory();
  doc["anticipation"] = code.anticipation();
  Json rule = Json::object();
  for (const auto& [block, image] : code.rule())
    rule[join_commas(code.domain().alphabet().names_of(block))] = code.codomain_alphabet().name(image);
  doc["rule"] = std::move(rule);
  doc["codomainAlphabet"] = code.codomain_alphabet().names();
  return doc;
}

SlidingBlockCode code_from_json(const Json& doc, const std::filesystem::path& base_dir) {
  Presentation domain = shift_from_json(field(doc, "domain"), base_dir);
  try {
    const int memory = integer_field(doc, "memory");
    const int anticipation = integer_field(doc, "anticipation");
    Alphabet codomain(string_list(field(doc, "codomainAlphabet"), "codomainAlphabet"));
    const Json& rules = field(doc, "rule");
    if (!rules.is_object()) fail("'rule' must be an object");
    std::map<Word, Symbol> rule;
    for (const auto& [key, value] : rules.items()) {
      if (!value.is_string()) fail("rule images must be symbol strings");
      rule[domain.alphabet().parse_word(split_commas(key))] = codomain.symbol(value.get<std::string>());
    }
    return SlidingBlockCode(std::move(domain), memory, anticipation, std::move(rule), std::move(codomain));
  } catch (const DocumentError&) {
    throw;
  } catch (const Error& e) {
    fail(std::string("invalid code document: ") + e.what());
  } catch (const Json::exception& e) {
    fail(std::string("invalid code document: ") + e.what());
  }
}

Json lasso_to_json(const LassoPoint& point, const Alphabet& alphabet) {
  Json doc;
  doc["left"] = word_to_json(point.left_loop(), alphabet);
  doc["center"] = word_to_json(point.center(), alphabet);
  doc["right"] = word_to_json(point.right_loop(), alphabet);
  doc["origin"] = point.origin();
  doc["text"] = point.to_string(alphabet);
  return doc;
}

LassoPoint lasso_from_json(const Json& doc, const Alphabet& alphabet) {
  try {
    return LassoPoint(word_from_json(field(doc, "left"), alphabet), word_from_json(field(doc, "center"), alphabet),
                      word_from_json(field(doc, "right"), alphabet), field(doc, "origin").get<long>());
  } catch (const DocumentError&) {
    throw;
  } catch (const Error& e) {
    fail(std::string("invalid point: ") + e.what());
  } catch (const Json::exception& e) {
    fail(std::string("invalid point: ") + e.what());
  }
}

Json pair_to_json(const CodedPair& pair, const Alphabet& x_alphabet, const Alphabet& y_alphabet) {
  return Json{{"x", lasso_to_json(pair.x, x_alphabet)}, {"y", lasso_to_json(pair.y, y_alphabet)}};
}

Json verdict_to_json(const std::string& property, const RetractVerdict& verdict, const SlidingBlockCode& code) {
  Json doc{{"property", property}, {"holds", verdict.holds}, {"n", verdict.n}};
  if (verdict.witness)
    doc["witness"] = pair_to_json(*verdict.witness, code.domain().alphabet(), code.codomain_alphabet());
  return doc;
}

Json kbound_to_json(const KBoundReport& report) {
  Json doc{{"R", report.R}, {"d", report.d}, {"K", report.K}};
  doc["actualStep"] = report.actual_step ? Json(*report.actual_step) : Json(nullptr);
  doc["isSftConfirmed"] = report.is_sft_confirmed;
  doc["recoded"] = report.recoded;
  return doc;
}

std::string digest(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char out[17];
  std::snprintf(out, sizeof out, "%016llx", static_cast<unsigned long long>(h));
  return out;
}

}  // namespace symdyn
