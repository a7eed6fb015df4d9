#include "symdyn/alphabet.hpp"

#include <algorithm>

#include "symdyn/error.hpp"

namespace symdyn {

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw Error("alphabet must not be empty");
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i].empty()) throw Error("symbol names must be nonempty");
    if (!index_.emplace(names_[i], static_cast<Symbol>(i)).second)
      throw Error("duplicate symbol '" + names_[i] + "'");
  }
}

std::optional<Symbol> Alphabet::find(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Symbol Alphabet::symbol(const std::string& name) const {
  auto s = find(name);
  if (!s) throw AlphabetMismatch("unknown symbol '" + name + "'");
  return *s;
}

Word Alphabet::parse_word(const std::vector<std::string>& names) const {
  Word w;
  w.reserve(names.size());
  for (const auto& n : names) w.push_back(symbol(n));
  return w;
}

std::vector<std::string> Alphabet::names_of(std::span<const Symbol> word) const {
  std::vector<std::string> out;
  out.reserve(word.size());
  for (Symbol s : word) out.push_back(name(s));
  return out;
}

bool Alphabet::single_character_names() const {
  return std::all_of(names_.begin(), names_.end(), [](const std::string& n) { return n.size() == 1; });
}

std::string Alphabet::format(std::span<const Symbol> word) const {
  std::string out;
  const bool compact = single_character_names();
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (!compact && i > 0) out += ' ';
    out += name(word[i]);
  }
  return out;
}

bool Alphabet::same_symbols(const Alphabet& other) const {
  if (size() != other.size()) return false;
  return std::all_of(names_.begin(), names_.end(), [&](const std::string& n) { return other.find(n).has_value(); });
}

std::string block_name(const Alphabet& alphabet, std::span<const Symbol> block) {
  if (block.size() == 1) return alphabet.name(block[0]);
  std::string out;
  const bool compact = alphabet.single_character_names();
  for (std::size_t i = 0; i < block.size(); ++i) {
    if (!compact && i > 0) out += '.';
    out += alphabet.name(block[i]);
  }
  return out;
}

std::string pair_name(const std::string& left, const std::string& right) {
  return "(" + left + "|" + right + ")";
}

std::size_t primitive_period(std::span<const Symbol> word) {
  const std::size_t n = word.size();
  for (std::size_t p = 1; p < n; ++p) {
    if (n % p != 0) continue;
    bool ok = true;
    for (std::size_t i = p; i < n && ok; ++i) ok = word[i] == word[i - p];
    if (ok) return p;
  }
  return n;
}

}  // namespace symdyn
