#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace symdyn {

/// Symbols are indices into an Alphabet.
using Symbol = int;
using Word = std::vector<Symbol>;

/// Ordered finite set of distinct symbol names. The order fixed at
/// construction is the canonical order used for iteration and output.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(Symbol s) const { return names_.at(static_cast<std::size_t>(s)); }
  const std::vector<std::string>& names() const { return names_; }

  std::optional<Symbol> find(const std::string& name) const;
  /// Throws AlphabetMismatch for unknown names.
  Symbol symbol(const std::string& name) const;

  Word parse_word(const std::vector<std::string>& names) const;
  std::vector<std::string> names_of(std::span<const Symbol> word) const;

  /// Human-readable rendering; single-character alphabets are concatenated,
  /// others are space separated.
  std::string format(std::span<const Symbol> word) const;

  bool single_character_names() const;

  /// Same names, irrespective of order.
  bool same_symbols(const Alphabet& other) const;

  friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.names_ == b.names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, Symbol> index_;
};

/// Name of the higher-block symbol standing for `block`.
std::string block_name(const Alphabet& alphabet, std::span<const Symbol> block);

/// Name of a product symbol (left, right).
std::string pair_name(const std::string& left, const std::string& right);

/// Smallest period p such that word is a power of its length-p prefix.
std::size_t primitive_period(std::span<const Symbol> word);

}  // namespace symdyn
