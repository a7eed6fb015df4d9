#include "symdyn/corpus.hpp"

#include "symdyn/constructions.hpp"
#include "symdyn/error.hpp"
#include "symdyn/shift.hpp"

namespace symdyn::corpus {

namespace {

const Alphabet& binary() {
  static const Alphabet alphabet({"0", "1"});
  return alphabet;
}

}  // namespace

Presentation golden_mean() { return from_forbidden({binary(), {{1, 1}}}); }

Presentation even_shift() {
  return Presentation(binary(), std::vector<std::string>{"E", "O"}, {{0, 1, 0}, {0, 0, 1}, {1, 0, 0}});
}

Presentation even_shift_nondeterministic() {
  return Presentation(binary(), std::vector<std::string>{"E", "O", "O'"},
                      {{0, 1, 0}, {0, 0, 1}, {1, 0, 0}, {0, 0, 2}, {2, 0, 0}});
}

Presentation full_shift(int symbols) {
  std::vector<std::string> names;
  for (int i = 0; i < symbols; ++i) names.push_back(std::to_string(i));
  return symdyn::full_shift(Alphabet(std::move(names)));
}

SlidingBlockCode min_code() {
  const Presentation x = full_shift(2);
  std::map<Word, Symbol> rule;
  for (const Word& w : language(x, 2)) rule[w] = std::min(w[0], w[1]);
  return SlidingBlockCode(x, 1, 0, std::move(rule), binary());
}

SlidingBlockCode xor_code() {
  const Presentation x = full_shift(2);
  std::map<Word, Symbol> rule;
  for (const Word& w : language(x, 2)) rule[w] = w[0] ^ w[1];
  return SlidingBlockCode(x, 0, 1, std::move(rule), binary());
}

SlidingBlockCode non_continuing_code() {
  const Alphabet alphabet({"a", "b", "c", "d"});
  std::vector<std::vector<bool>> allowed(4, std::vector<bool>(4, false));
  allowed[0][0] = allowed[0][1] = allowed[1][1] = true;
  allowed[2][2] = allowed[2][3] = allowed[3][3] = true;
  return SlidingBlockCode::one_block(vertex_shift(alphabet, allowed), {0, 1, 1, 0}, binary());
}

SlidingBlockCode eresolving_counterexample() {
  const Alphabet alphabet({"0", "1", "1'"});
  std::vector<std::vector<bool>> allowed{{true, true, true}, {true, false, false}, {true, true, true}};
  return SlidingBlockCode::one_block(vertex_shift(alphabet, allowed), {0, 1, 1}, binary());
}

SlidingBlockCode identity_golden_mean() { return SlidingBlockCode::identity(golden_mean()); }

const std::vector<Named>& names() {
  static const std::vector<Named> table{
      {"golden-mean", "binary shift forbidding 11"},
      {"even-shift", "binary shift with even runs of 0s between 1s"},
      {"even-shift-nd", "even shift on a nondeterministic three-state graph"},
      {"full-2", "full shift on {0,1}"},
      {"identity-golden-mean", "identity code on the golden mean shift"},
      {"identity-full-2", "identity code on the full 2-shift"},
      {"min-code", "y_i = min(x_{i-1}, x_i) on the full 2-shift"},
      {"xor-code", "y_i = x_i + x_{i+1} mod 2 on the full 2-shift"},
      {"non-continuing", "1-block code on a 4-symbol vertex shift that is not right continuing"},
      {"sqrt-non-continuing", "spacer interleaving of non-continuing"},
      {"eresolving-counterexample", "onto code from a vertex shift that is not right eresolving"},
      {"no-retract-example", "right continuing factor map from a strictly sofic shift without a retract"},
      {"no-retract-example-X", "domain of no-retract-example"},
      {"sqrt-no-retract-example", "spacer interleaving of no-retract-example"},
  };
  return table;
}

Entry get(const std::string& name) {
  if (name == "golden-mean") return golden_mean();
  if (name == "even-shift") return even_shift();
  if (name == "even-shift-nd") return even_shift_nondeterministic();
  if (name == "full-2") return full_shift(2);
  if (name == "identity-golden-mean") return identity_golden_mean();
  if (name == "identity-full-2") return SlidingBlockCode::identity(full_shift(2));
  if (name == "min-code") return min_code();
  if (name == "xor-code") return xor_code();
  if (name == "non-continuing") return non_continuing_code();
  if (name == "sqrt-non-continuing") return sqrt_construction(non_continuing_code()).sqrt_phi;
  if (name == "eresolving-counterexample") return eresolving_counterexample();
  if (name == "no-retract-example") return no_retract_example().phi;
  if (name == "no-retract-example-X") return no_retract_example().X;
  if (name == "sqrt-no-retract-example") return sqrt_construction(no_retract_example().phi).sqrt_phi;
  throw Error("unknown bundled example '" + name + "'");
}

}  // namespace symdyn::corpus
