#include "cli.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "symdyn/constructions.hpp"
#include "symdyn/corpus.hpp"
#include "symdyn/document.hpp"
#include "symdyn/error.hpp"
#include "symdyn/random.hpp"
#include "symdyn/resolving.hpp"
#include "symdyn/shift.hpp"

namespace symdyn::cli {

namespace {

namespace fs = std::filesystem;

struct Common {
  bool json = false;
  std::string out;
  std::uint64_t seed = 1;
  int max_states = 64;
  int max_alphabet = 16;
  bool timing = false;
};

struct Sources {
  std::string shift;
  std::string code;
  std::string bundled;
};

struct Loaded {
  corpus::Entry entry;
  Json input;
};

/// Collects the machine-readable report and the human-readable lines.
class Report {
 public:
  Report(std::string command, const Common& common) : common_(common), start_(std::chrono::steady_clock::now()) {
    doc_["command"] = std::move(command);
    doc_["inputs"] = Json::array();
    doc_["verdicts"] = Json::array();
  }

  void input(Json in) { doc_["inputs"].push_back(std::move(in)); }
  void seed(std::uint64_t s) { doc_["seed"] = s; }
  void verdict(Json v) { doc_["verdicts"].push_back(std::move(v)); }
  void set(const std::string& key, Json value) { doc_[key] = std::move(value); }
  void line(const std::string& text) { lines_.push_back(text); }

  void emit(std::ostream& out) {
    if (common_.timing) {
      const auto elapsed = std::chrono::steady_clock::now() - start_;
      doc_["elapsedMs"] = std::chrono::duration<double, std::milli>(elapsed).count();
    }
    if (common_.json) {
      out << doc_.dump(2) << "\n";
    } else {
      for (const auto& l : lines_) out << l << "\n";
    }
  }

  void write(const fs::path& path) const {
    std::ofstream file(path, std::ios::binary);
    if (!file) throw Error("cannot write " + path.string());
    file << doc_.dump(2) << "\n";
  }

 private:
  const Common& common_;
  std::chrono::steady_clock::time_point start_;
  Json doc_;
  std::vector<std::string> lines_;
};

std::string read_text(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DocumentError("cannot read " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void check_caps(const Presentation& p, const Common& common, const std::string& what) {
  if (static_cast<int>(p.num_states()) > common.max_states)
    throw CapExceeded(what + " has " + std::to_string(p.num_states()) + " states; cap is " +
                      std::to_string(common.max_states) + " (--max-states)");
  if (static_cast<int>(p.alphabet().size()) > common.max_alphabet)
    throw CapExceeded(what + " has " + std::to_string(p.alphabet().size()) + " symbols; cap is " +
                      std::to_string(common.max_alphabet) + " (--max-alphabet)");
}

Loaded load(const Sources& src, const Common& common) {
  const int given = !src.shift.empty() + !src.code.empty() + !src.bundled.empty();
  if (given != 1) throw PreconditionError("give exactly one of --shift, --code, --bundled");
  Loaded loaded{Presentation(Alphabet({"0"}), 1, {{0, 0, 0}}), {}};
  if (!src.bundled.empty()) {
    loaded.entry = corpus::get(src.bundled);
    const Json doc = std::holds_alternative<Presentation>(loaded.entry)
                         ? shift_to_json(std::get<Presentation>(loaded.entry))
                         : code_to_json(std::get<SlidingBlockCode>(loaded.entry));
    loaded.input = {{"source", "bundled:" + src.bundled}, {"digest", digest(doc.dump())}};
  } else {
    const fs::path path = src.shift.empty() ? src.code : src.shift;
    const std::string text = read_text(path);
    const Json doc = parse_json(text, path.string());
    if (!src.shift.empty())
      loaded.entry = shift_from_json(doc, path.parent_path());
    else
      loaded.entry = code_from_json(doc, path.parent_path());
    loaded.input = {{"source", path.string()}, {"digest", digest(text)}};
  }
  if (const auto* p = std::get_if<Presentation>(&loaded.entry)) check_caps(*p, common, "shift");
  if (const auto* c = std::get_if<SlidingBlockCode>(&loaded.entry)) check_caps(c->domain(), common, "code domain");
  return loaded;
}

const SlidingBlockCode& need_code(const Loaded& loaded) {
  const auto* code = std::get_if<SlidingBlockCode>(&loaded.entry);
  if (!code) throw PreconditionError("this property needs a code, not a shift");
  return *code;
}

/// The shift of an input: itself, or the image of a code.
Presentation subject_shift(const Loaded& loaded, Json& verdict) {
  if (const auto* p = std::get_if<Presentation>(&loaded.entry)) return *p;
  verdict["subject"] = "image";
  return image(std::get<SlidingBlockCode>(loaded.entry));
}

SlidingBlockCode one_block_of(const SlidingBlockCode& code, Json& verdict) {
  if (code.is_one_block()) return code;
  verdict["recodedToOneBlock"] = true;
  return recode_to_one_block(code).one_block;
}

std::string yes_no(bool b) { return b ? "holds" : "fails"; }

void add_witness_lines(Report& report, const CodedPair& pair, const Alphabet& xa, const Alphabet& ya) {
  report.line("  x = " + pair.x.to_string(xa));
  report.line("  y = " + pair.y.to_string(ya));
}

struct CheckArgs {
  std::string property;
  int n = 0;
  int bound = 4;
  std::string against;
  std::string against_bundled;
};

const std::vector<std::string> kProperties{
    "eresolving", "left-eresolving", "retract",       "minimal-retract", "left-retract",
    "right-continuing", "refute-continuing", "oracle-retract", "sft", "step",
    "injective", "equal", "sft-bound"};

int cmd_check(const CheckArgs& args, const Sources& src, const Common& common, std::ostream& out) {
  Report report("check", common);
  const Loaded loaded = load(src, common);
  report.input(loaded.input);
  Json v{{"property", args.property}};
  bool holds = false;
  const std::string& p = args.property;

  if (p == "eresolving" || p == "left-eresolving") {
    const SlidingBlockCode code = one_block_of(need_code(loaded), v);
    const bool left = p == "left-eresolving";
    const EresolvingResult r = left ? is_left_eresolving(code) : is_right_eresolving(code);
    holds = r.holds;
    report.line(p + ": " + yes_no(holds));
    if (r.failure) {
      const Alphabet& ya = code.codomain_alphabet();
      v["failure"] = {{"symbol", code.domain().alphabet().name(r.failure->first)},
                      {"extension", ya.names_of(r.failure->second)}};
      report.line("  a = " + code.domain().alphabet().name(r.failure->first) + ", b = " + ya.format(r.failure->second));
    }
  } else if (p == "retract" || p == "oracle-retract") {
    const SlidingBlockCode code = one_block_of(need_code(loaded), v);
    const RetractVerdict r = p == "retract" ? check_retract(code, args.n) : oracle_retract(code, args.n, args.bound);
    Json full = verdict_to_json(p, r, code);
    for (auto& [k, value] : v.items()) full[k] = value;
    if (p == "oracle-retract") full["bound"] = args.bound;
    v = std::move(full);
    holds = r.holds;
    report.line(p + " n=" + std::to_string(args.n) + ": " + yes_no(holds));
    if (r.witness) add_witness_lines(report, *r.witness, code.domain().alphabet(), code.codomain_alphabet());
  } else if (p == "minimal-retract" || p == "left-retract") {
    const SlidingBlockCode code = one_block_of(need_code(loaded), v);
    const auto r = p == "minimal-retract" ? minimal_retract(code) : minimal_left_retract(code);
    holds = r.has_value();
    v["holds"] = holds;
    v["retract"] = r ? Json(*r) : Json(nullptr);
    report.line(p + ": " + (r ? std::to_string(*r) : std::string("none")));
  } else if (p == "right-continuing") {
    holds = is_right_continuing_sft(need_code(loaded));
    report.line(p + ": " + yes_no(holds));
  } else if (p == "refute-continuing") {
    const SlidingBlockCode code = one_block_of(need_code(loaded), v);
    const auto r = refute_right_continuing_bounded(code, args.bound);
    holds = !r;
    v["bound"] = args.bound;
    v["semiDecision"] = true;
    if (r) v["witness"] = pair_to_json(*r, code.domain().alphabet(), code.codomain_alphabet());
    report.line(std::string("refute-continuing bound=") + std::to_string(args.bound) + ": " +
                (r ? "refuted" : "no refutation found (not a proof)"));
    if (r) add_witness_lines(report, *r, code.domain().alphabet(), code.codomain_alphabet());
  } else if (p == "sft" || p == "step") {
    const Presentation shift = subject_shift(loaded, v);
    const auto step = step_of(shift);
    holds = step.has_value();
    v["step"] = step ? Json(*step) : Json(nullptr);
    report.line(p + ": " + (step ? "SFT, step " + std::to_string(*step) : std::string("not an SFT")));
  } else if (p == "injective") {
    const SlidingBlockCode& code = need_code(loaded);
    const InjectivityResult r = is_injective(code);
    holds = r.injective;
    report.line(p + ": " + yes_no(holds));
    if (r.witness) {
      v["witness"] = pair_to_json({r.witness->first, r.witness->second}, code.domain().alphabet(),
                                  code.domain().alphabet());
      add_witness_lines(report, {r.witness->first, r.witness->second}, code.domain().alphabet(),
                        code.domain().alphabet());
    }
  } else if (p == "equal") {
    const Presentation shift = subject_shift(loaded, v);
    const Loaded other = load({args.against, "", args.against_bundled}, common);
    report.input(other.input);
    Json unused;
    holds = language_equal(shift, subject_shift(other, unused));
    report.line(p + ": " + yes_no(holds));
  } else if (p == "sft-bound") {
    const KBoundReport k = verify_sft_factor_bound(need_code(loaded));
    holds = k.is_sft_confirmed && *k.actual_step <= k.K;
    v["kReport"] = kbound_to_json(k);
    report.line("sft-bound: R=" + std::to_string(k.R) + " d=" + std::to_string(k.d) + " K=" + std::to_string(k.K) +
                " step=" + (k.actual_step ? std::to_string(*k.actual_step) : std::string("none")) + ": " +
                yes_no(holds));
  } else {
    throw PreconditionError("unknown property '" + p + "'");
  }
  v["holds"] = holds;
  report.verdict(std::move(v));
  if (!common.out.empty()) report.write(common.out);
  report.emit(out);
  return holds ? 0 : 1;
}

void write_documents(const std::vector<std::pair<std::string, Json>>& docs, const std::string& dir, Report& report) {
  Json listing = Json::array();
  for (const auto& [name, doc] : docs) {
    const std::string text = doc.dump(2) + "\n";
    listing.push_back({{"file", name + ".json"}, {"digest", digest(text)}});
    if (!dir.empty()) {
      fs::create_directories(dir);
      std::ofstream file(fs::path(dir) / (name + ".json"), std::ios::binary);
      if (!file) throw Error("cannot write into " + dir);
      file << text;
    }
  }
  report.set("documents", std::move(listing));
}

int cmd_construct(const std::string& kind, const Sources& src, const Common& common, std::ostream& out) {
  Report report("construct", common);
  report.set("kind", kind);
  std::vector<std::pair<std::string, Json>> docs;
  bool ok = true;
  auto verdict = [&](const std::string& property, bool holds, Json extra = Json::object()) {
    extra["property"] = property;
    extra["holds"] = holds;
    report.verdict(std::move(extra));
    report.line(property + ": " + yes_no(holds));
    ok = ok && holds;
  };

  if (kind == "no-retract-example") {
    const NoRetractExample ex = no_retract_example();
    Json phi = code_to_json(ex.phi);
    phi["domain"] = "X.json";
    docs = {{"X", shift_to_json(ex.X)}, {"Y", shift_to_json(ex.Y)}, {"phi", phi}};
    verdict("onto", language_equal(image(ex.phi), ex.Y));
    verdict("strictly-sofic", !is_sft(ex.X));
    verdict("no-retract", !minimal_retract(ex.phi).has_value());
    for (int n = 0; n <= 3; ++n)
      verdict("witness-blocks-retract", validate_retract_witness(ex.phi, n, no_retract_witness(ex, n)), {{"n", n}});
  } else {
    const Loaded loaded = load(src, common);
    report.input(loaded.input);
    Json note;
    const SlidingBlockCode code = one_block_of(need_code(loaded), note);
    if (note.contains("recodedToOneBlock")) {
      report.set("recodedToOneBlock", true);
      report.line("input recoded to a 1-block code");
    }
    if (kind == "sqrt") {
      const SqrtPair sq = sqrt_construction(code);
      docs = {{"sqrt_x", shift_to_json(sq.sqrt_x)}, {"sqrt_y", shift_to_json(sq.sqrt_y)},
              {"sqrt_phi", code_to_json(sq.sqrt_phi)}};
      report.set("spacer", sq.spacer_name);
      report.set("spacerRenamed", sq.spacer_renamed);
      if (sq.spacer_renamed) report.line("spacer renamed to " + sq.spacer_name);
      verdict("right-eresolving", is_right_eresolving(sq.sqrt_phi).holds);
      verdict("image-is-sqrt-y", language_equal(image(sq.sqrt_phi), sq.sqrt_y));
    } else if (kind == "retract-zero" || kind == "bicontinuing") {
      const RecodedCode rc = kind == "retract-zero" ? retract_zero_recode(code) : bicontinuing_recode(code);
      report.seed(common.seed);
      report.set("R", rc.R);
      docs = {{"psi", code_to_json(rc.psi)}, {"domain", shift_to_json(rc.domain)}, {"bar_phi", code_to_json(rc.bar_phi)}};
      if (rc.theta) {
        docs.emplace_back("theta", code_to_json(*rc.theta));
        docs.emplace_back("codomain", shift_to_json(*rc.codomain));
      }
      Rng rng(common.seed);
      const RecodingCheck check = verify_recoding(code, rc, rng);
      verdict("psi-injective", check.psi_injective);
      if (rc.theta) verdict("theta-injective", check.theta_injective);
      verdict("bar-phi-one-block", check.bar_phi_one_block);
      verdict("right-retract-zero", check.right_retract_zero);
      if (rc.theta) verdict("left-retract-zero", check.left_retract_zero);
      verdict("commutes", check.commutes, {{"samples", check.samples}});
    } else {
      throw PreconditionError("unknown construction kind '" + kind + "'");
    }
  }
  write_documents(docs, common.out, report);
  report.emit(out);
  return ok ? 0 : 1;
}

int cmd_experiment(int count, int max_symbols, const Common& common, std::ostream& out) {
  if (count < 1 || max_symbols < 1) throw PreconditionError("count and max-symbols must be positive");
  Report report("experiment-kbound", common);
  report.seed(common.seed);
  Rng rng(common.seed);
  Json rows = Json::array();
  int found = 0, skipped = 0, violations = 0;
  int min_gap = -1, max_gap = -1;
  const long max_attempts = 1000L * count;
  for (long attempt = 0; found < count && attempt < max_attempts; ++attempt) {
    const int symbols = std::uniform_int_distribution<int>(1, max_symbols)(rng);
    const Presentation x = random_vertex_shift(rng, symbols);
    const int codomain = std::uniform_int_distribution<int>(1, symbols)(rng);
    const SlidingBlockCode code = random_one_block_code(rng, x, codomain);
    if (!minimal_retract(code)) {
      ++skipped;
      continue;
    }
    const KBoundReport k = verify_sft_factor_bound(code);
    const bool bad = !k.is_sft_confirmed || *k.actual_step > k.K;
    violations += bad;
    ++found;
    Json row = kbound_to_json(k);
    row["symbols"] = symbols;
    row["codomainSymbols"] = codomain;
    if (k.actual_step) {
      const int gap = k.K - *k.actual_step;
      row["gap"] = gap;
      min_gap = min_gap < 0 ? gap : std::min(min_gap, gap);
      max_gap = std::max(max_gap, gap);
    }
    rows.push_back(std::move(row));
  }
  report.set("instances", found);
  report.set("skippedWithoutRetract", skipped);
  report.set("violations", violations);
  report.set("minGap", min_gap);
  report.set("maxGap", max_gap);
  report.set("rows", std::move(rows));
  report.line("instances " + std::to_string(found) + ", skipped without retract " + std::to_string(skipped) +
              ", violations of step <= K: " + std::to_string(violations));
  report.line("gap K - step: min " + std::to_string(min_gap) + ", max " + std::to_string(max_gap));
  if (found < count) report.line("warning: only " + std::to_string(found) + " instances with a retract were drawn");
  if (!common.out.empty()) report.write(common.out);
  report.emit(out);
  return violations == 0 && found == count ? 0 : 1;
}

int cmd_gen(const std::string& kind, int symbols, int states, double density, const Sources& src,
            const Common& common, std::ostream& out) {
  if (symbols < 1 || symbols > common.max_alphabet) throw CapExceeded("--symbols outside [1, --max-alphabet]");
  if (states < 1 || states > common.max_states) throw CapExceeded("--states outside [1, --max-states]");
  Rng rng(common.seed);
  Json doc;
  if (kind == "sft") {
    doc = shift_to_json(from_forbidden(random_sft_spec(rng, symbols, density)));
  } else if (kind == "graph") {
    doc = shift_to_json(random_presentation(rng, states, symbols, density));
  } else if (kind == "code") {
    const Loaded loaded = load(src, common);
    const auto* shift = std::get_if<Presentation>(&loaded.entry);
    if (!shift) throw PreconditionError("gen code needs a shift as domain");
    doc = code_to_json(random_one_block_code(rng, *shift, symbols));
  } else {
    throw PreconditionError("unknown generator kind '" + kind + "'");
  }
  const std::string text = doc.dump(2) + "\n";
  if (common.out.empty()) {
    out << text;
    return 0;
  }
  std::ofstream file(common.out, std::ios::binary);
  if (!file) throw Error("cannot write " + common.out);
  file << text;
  Report report("gen", common);
  report.seed(common.seed);
  report.set("kind", kind);
  report.set("documents", Json::array({{{"file", common.out}, {"digest", digest(text)}}}));
  report.line("wrote " + common.out);
  report.emit(out);
  return 0;
}

int cmd_examples(const Common& common, std::ostream& out) {
  Report report("examples", common);
  std::vector<std::pair<std::string, Json>> docs;
  Json listing = Json::array();
  for (const auto& [name, description] : corpus::names()) {
    const corpus::Entry entry = corpus::get(name);
    const bool is_shift = std::holds_alternative<Presentation>(entry);
    docs.emplace_back(name, is_shift ? shift_to_json(std::get<Presentation>(entry))
                                     : code_to_json(std::get<SlidingBlockCode>(entry)));
    listing.push_back({{"name", name}, {"type", is_shift ? "shift" : "code"}, {"description", description}});
    report.line(name + (is_shift ? "  [shift]  " : "  [code]   ") + description);
  }
  report.set("examples", std::move(listing));
  write_documents(docs, common.out, report);
  report.emit(out);
  return 0;
}

void add_common(CLI::App* app, Common& common) {
  app->add_flag("--json", common.json, "Print the machine-readable JSON report");
  app->add_option("--seed", common.seed, "Seed for randomized steps");
  app->add_option("--max-states", common.max_states, "Cap on presentation states")->capture_default_str();
  app->add_option("--max-alphabet", common.max_alphabet, "Cap on alphabet size")->capture_default_str();
  app->add_flag("--timing", common.timing, "Include elapsed time in the JSON report");
}

void add_sources(CLI::App* app, Sources& src) {
  app->add_option("--shift", src.shift, "Shift document (JSON)");
  app->add_option("--code", src.code, "Code document (JSON)");
  app->add_option("--bundled", src.bundled, "Name of a bundled example (see `examples`)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Shift spaces and sliding block codes: deciders, constructions, experiments"};
  app.name("symdyn");
  app.require_subcommand(1);
  Common common;
  Sources src;

  CheckArgs check;
  auto* c = app.add_subcommand("check", "Decide a property of a shift or a code");
  c->add_option("--property", check.property, "Property to decide")
      ->required()
      ->check(CLI::IsMember(kProperties));
  c->add_option("--n", check.n, "Retract distance")->check(CLI::NonNegativeNumber);
  c->add_option("--bound", check.bound, "Search bound for bounded searches")->check(CLI::PositiveNumber);
  c->add_option("--against", check.against, "Second shift document for `equal`");
  c->add_option("--against-bundled", check.against_bundled, "Bundled second shift for `equal`");
  c->add_option("--out", common.out, "Also write the JSON report to this file");
  add_sources(c, src);
  add_common(c, common);

  std::string kind;
  auto* k = app.add_subcommand("construct", "Build a construction and verify its postconditions");
  k->add_option("--kind", kind, "Construction")
      ->required()
      ->check(CLI::IsMember({"sqrt", "retract-zero", "bicontinuing", "no-retract-example"}));
  k->add_option("--out", common.out, "Directory for the output documents");
  add_sources(k, src);
  add_common(k, common);

  int count = 100, max_symbols = 5;
  auto* e = app.add_subcommand("experiment-kbound", "Random check of step(image) <= K for codes with a retract");
  e->add_option("--count", count, "Instances with a retract to test")->capture_default_str();
  e->add_option("--max-symbols", max_symbols, "Largest domain alphabet")->capture_default_str();
  e->add_option("--out", common.out, "Also write the JSON report to this file");
  add_common(e, common);

  std::string gen_kind;
  int symbols = 3, states = 3;
  double density = 0.5;
  auto* g = app.add_subcommand("gen", "Generate a random document");
  g->add_option("--kind", gen_kind, "What to generate")->required()->check(CLI::IsMember({"sft", "graph", "code"}));
  g->add_option("--symbols", symbols, "Alphabet size (codomain size for codes)")->capture_default_str();
  g->add_option("--states", states, "States for graphs")->capture_default_str();
  g->add_option("--density", density, "Edge probability")->check(CLI::Range(0.0, 1.0))->capture_default_str();
  g->add_option("--out", common.out, "Output file (default: standard output)");
  add_sources(g, src);
  add_common(g, common);

  auto* x = app.add_subcommand("examples", "List the bundled examples, or write them as documents");
  x->add_option("--out", common.out, "Directory for the documents");
  add_common(x, common);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& h) {
    app.exit(h, out, err);
    return 0;
  } catch (const CLI::CallForAllHelp& h) {
    app.exit(h, out, err);
    return 0;
  } catch (const CLI::ParseError& pe) {
    app.exit(pe, out, err);
    return 2;
  }

  try {
    if (c->parsed()) return cmd_check(check, src, common, out);
    if (k->parsed()) return cmd_construct(kind, src, common, out);
    if (e->parsed()) return cmd_experiment(count, max_symbols, common, out);
    if (g->parsed()) return cmd_gen(gen_kind, symbols, states, density, src, common, out);
    if (x->parsed()) return cmd_examples(common, out);
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace symdyn::cli
