#include "jsr/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "jsr/bounds.hpp"
#include "jsr/census.hpp"
#include "jsr/errors.hpp"
#include "jsr/finiteness.hpp"
#include "jsr/io.hpp"
#include "jsr/reductions.hpp"

namespace jsr {

namespace {

constexpr int kExitInput = 1;
constexpr int kExitBudget = 2;
constexpr int kExitVerification = 3;

struct Common {
  int jobs = 0;
  std::optional<std::uint64_t> budget;
  std::string input;
  std::string output;

  EnumerationOptions options() const {
    EnumerationOptions o;
    o.jobs = jobs;
    if (budget) o.product_budget = *budget;
    return o;
  }
};

void add_common(CLI::App* sub, Common& c, bool with_input) {
  sub->add_option("--jobs", c.jobs, "Worker threads (0 = runtime default)")->check(CLI::NonNegativeNumber);
  sub->add_option("--budget", c.budget, "Maximum number of products to evaluate")->check(CLI::PositiveNumber);
  sub->add_option("-o,--output", c.output, "Output file (default: standard output)");
  if (with_input) sub->add_option("-i,--input", c.input, "Matrix-set JSON document ('-' for stdin)")->required();
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw InputError(path + ": cannot open for writing");
  f << text;
}

void emit_json(const nlohmann::json& j, const std::string& path, std::ostream& out) {
  emit(j.dump(2) + "\n", path, out);
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app("Joint spectral radius bounds, certificates, reductions and the 2x2 binary census");
  app.require_subcommand(1);

  Common common;

  std::size_t depth = 8;
  std::string norm = "row-sum";
  bool no_prune = false;
  auto* bounds = app.add_subcommand("bounds", "Bracket the joint spectral radius up to a product length");
  add_common(bounds, common, true);
  bounds->add_option("-d,--depth", depth, "Maximum product length")->check(CLI::PositiveNumber);
  bounds->add_option("--norm", norm, "Norm for the upper bound")->check(CLI::IsMember({"row-sum", "col-sum", "row", "col"}));
  bounds->add_flag("--no-prune", no_prune, "Evaluate every word (no merging or domination pruning)");

  auto* reduce = app.add_subcommand("reduce", "Reduce a matrix set to a simpler class with related spectral radius");
  reduce->require_subcommand(1);
  auto* to_integer = reduce->add_subcommand("to-integer", "Scale by the lcm of all denominators");
  auto* to_binary = reduce->add_subcommand("to-binary", "Expand an integer set into a binary set of larger dimension");
  auto* to_pair = reduce->add_subcommand("to-pair", "Lift m matrices to a pair of (2m-1)n-dimensional matrices");
  bool allow_signed = false;
  to_binary->add_flag("--signed", allow_signed, "Allow negative entries (entries in {-1, 0, 1})");
  for (auto* s : {to_integer, to_binary, to_pair}) add_common(s, common, true);

  std::string word_text;
  std::optional<std::size_t> certify_depth;
  std::string expect;
  auto* certify = app.add_subcommand("certify", "Evaluate rho(A_w)^(1/|w|) for a word and check it");
  add_common(certify, common, true);
  certify->add_option("-w,--word", word_text, "Comma-separated member indices, leftmost factor first")->required();
  certify->add_option("-d,--depth", certify_depth, "Also check the word is a maximizer up to this length")
      ->check(CLI::PositiveNumber);
  certify->add_option("--expect", expect, "Exact value the word must reproduce, e.g. sqrt(2)");

  std::size_t census_dim = 2;
  std::size_t census_depth = 20;
  auto* census = app.add_subcommand("census", "Classify every pair of binary matrices of a dimension");
  add_common(census, common, false);
  census->add_option("--dim", census_dim, "Matrix dimension")->check(CLI::Range(1, 3));
  census->add_option("-d,--depth", census_depth, "Bracketing depth per pair")->check(CLI::Range(1, 1000));

  std::size_t max_depth = 20;
  auto* stability = app.add_subcommand("stability", "Semi-decide rho < 1");
  add_common(stability, common, true);
  stability->add_option("-d,--max-depth", max_depth, "Give up after this product length")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitInput;
  }

  try {
    const EnumerationOptions opts = common.options();

    if (bounds->parsed()) {
      const MatrixSetDocument doc = load_document(common.input);
      EnumerationOptions o = opts;
      o.norm = parse_norm(norm);
      o.prune = !no_prune;
      emit_json(to_json(bounds_report(doc.set, depth, o)), common.output, out);
      return 0;
    }

    if (to_integer->parsed()) {
      const MatrixSetDocument doc = load_document(common.input);
      ScaleResult r = scale_to_integer(doc.set);
      MatrixSetDocument res{r.scaled, doc.name, doc.provenance};
      res.metadata = {{"reduction", "to-integer"}, {"alpha", r.alpha.get_str()}};
      emit_json(to_json(res), common.output, out);
      return 0;
    }
    if (to_binary->parsed()) {
      const MatrixSetDocument doc = load_document(common.input);
      BinaryExpansion b = integer_to_binary(doc.set, allow_signed);
      MatrixSetDocument res{b.expanded, doc.name, doc.provenance};
      res.metadata = {{"reduction", "to-binary"}, {"m_max", b.m_max}, {"source_dimension", b.source_dim},
                      {"signed", b.signed_entries}};
      emit_json(to_json(res), common.output, out);
      return 0;
    }
    if (to_pair->parsed()) {
      const MatrixSetDocument doc = load_document(common.input);
      PairLift lift = set_to_pair(doc.set);
      MatrixSetDocument res{lift.as_set(), doc.name, doc.provenance};
      res.metadata = {{"reduction", "to-pair"}, {"m_count", lift.m_count}, {"block_dimension", lift.block_dim},
                      {"blocks", lift.blocks()}};
      emit_json(to_json(res), common.output, out);
      return 0;
    }

    if (certify->parsed()) {
      const MatrixSetDocument doc = load_document(common.input);
      const ProductWord w = ProductWord::parse(word_text);
      doc.set.validate(w);
      const AlgebraicValue v = spectral_value(evaluate_word(doc.set, w), w.size());
      nlohmann::json j{{"word", to_json(w)}, {"value", to_json(v)}};
      bool ok = true;
      if (!expect.empty()) {
        const bool match = v.exact_string() == expect;
        j["matches_expected"] = match;
        ok = ok && match;
      }
      if (certify_depth) {
        const BoundsReport r = bounds_report(doc.set, *certify_depth, opts);
        const bool maximal = compare_values(v, r.best_lower) == Ordering::Equal;
        j["best_lower"] = to_json(r.best_lower);
        j["maximal"] = maximal;
        j["bounds_meet"] = r.certified();
        ok = ok && maximal;
      }
      j["valid"] = ok;
      emit_json(j, common.output, out);
      return ok ? 0 : kExitVerification;
    }

    if (census->parsed()) {
      const CensusResult r = run_census(census_depth, opts, census_dim);
      emit(census_csv(r), common.output, out);
      const CensusSummary& s = r.summary;
      err << "census: " << s.total << " pairs, " << s.certified << " certified, " << s.candidate_only
          << " candidate-only, " << s.inconsistent << " inconsistent";
      if (s.classes) err << ", " << s.classes << " classes";
      err << "\n";
      return 0;
    }

    if (stability->parsed()) {
      const MatrixSetDocument doc = load_document(common.input);
      emit_json(to_json(semi_decide_stability(doc.set, max_depth, opts)), common.output, out);
      return 0;
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const ResourceError& e) {
    err << "aborted: " << e.what() << "\n";
    return kExitBudget;
  } catch (const VerificationError& e) {
    err << "verification failed: " << e.what() << "\n";
    return kExitVerification;
  }
  return kExitInput;
}

}  // namespace jsr
