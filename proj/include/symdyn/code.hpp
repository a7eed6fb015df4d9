#pragma once

#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "symdyn/lasso.hpp"
#include "symdyn/presentation.hpp"

namespace symdyn {

/// Sliding block code on a concrete domain presentation.
///
/// (phi x)_i = rule(x_{[i - memory, i + anticipation]}); the rule is an
/// explicit table over B_{memory + anticipation + 1}(domain).
class SlidingBlockCode {
 public:
  SlidingBlockCode(Presentation domain, int memory, int anticipation, std::map<Word, Symbol> rule,
                   Alphabet codomain);

  /// images[a] is the image of domain symbol a (ignored for unused symbols).
  static SlidingBlockCode one_block(Presentation domain, const std::vector<Symbol>& images, Alphabet codomain);
  static SlidingBlockCode identity(Presentation domain);

  const Presentation& domain() const { return domain_; }
  int memory() const { return memory_; }
  int anticipation() const { return anticipation_; }
  int window() const { return memory_ + anticipation_ + 1; }
  const std::map<Word, Symbol>& rule() const { return rule_; }
  const Alphabet& codomain_alphabet() const { return codomain_; }
  bool is_one_block() const { return memory_ == 0 && anticipation_ == 0; }

  /// Throws DomainError for blocks outside B_window(domain).
  Symbol map_block(std::span<const Symbol> block) const;
  /// 1-block codes only.
  Symbol map_symbol(Symbol a) const;
  /// Image of a word: one output symbol per full window.
  Word map_word(std::span<const Symbol> word) const;

 private:
  Presentation domain_;
  int memory_;
  int anticipation_;
  std::map<Word, Symbol> rule_;
  Alphabet codomain_;
  std::vector<Symbol> symbol_images_;
};

struct CodedPair {
  LassoPoint x;
  LassoPoint y;
};

/// Throws DomainError when the point is not in the domain.
LassoPoint apply(const SlidingBlockCode& code, const LassoPoint& point);

/// Higher block recoding with window [-memory, anticipation].
struct HigherBlock {
  Presentation presentation;
  SlidingBlockCode conjugacy;
  /// blocks[s] is the word behind block symbol s.
  std::vector<Word> blocks;
};

HigherBlock higher_block(const Presentation& presentation, int width);
HigherBlock higher_block(const Presentation& presentation, int memory, int anticipation);

struct OneBlockRecoding {
  SlidingBlockCode conjugacy;
  SlidingBlockCode one_block;
  std::vector<Word> blocks;
};

/// phi = one_block o conjugacy, with conjugacy a higher block map.
OneBlockRecoding recode_to_one_block(const SlidingBlockCode& code);

/// Presentation of phi(X) over the codomain alphabet. For 1-block codes the
/// states are those of the domain, in the same order.
Presentation image(const SlidingBlockCode& code);

/// outer o inner. Throws DomainError unless image(inner) lies in the domain of outer.
SlidingBlockCode compose(const SlidingBlockCode& outer, const SlidingBlockCode& inner);

/// The same code viewed on time-reversed points.
SlidingBlockCode reversed(const SlidingBlockCode& code);

struct InjectivityResult {
  bool injective = true;
  /// Two distinct domain points with the same image.
  std::optional<std::pair<LassoPoint, LassoPoint>> witness;
};

InjectivityResult is_injective(const SlidingBlockCode& code);

}  // namespace symdyn
