#include <cstdint>
#include <cstdio>
#include <string>

#include "CLI11.hpp"
#include "segdist.h"

namespace {

int map_status(segdist_status st) {
  switch (st) {
    case SEGDIST_OK:
      return 0;
    case SEGDIST_FAIL:
      return 1;
    case SEGDIST_PARSE_ERROR:
      return 2;
    case SEGDIST_SEMANTIC_ERROR:
      return 3;
    case SEGDIST_INVALID_ARGUMENT:
      return 2;
    case SEGDIST_INTERNAL_ERROR:
      return 1;
  }
  return 1;
}

struct UniverseHandle {
  segdist_universe* ptr = nullptr;
  ~UniverseHandle() { segdist_universe_free(ptr); }
};

struct MsHandle {
  segdist_multisegment* ptr = nullptr;
  ~MsHandle() { segdist_multisegment_free(ptr); }
};

struct StringHandle {
  char* ptr = nullptr;
  ~StringHandle() { segdist_string_free(ptr); }
};

int report_error(segdist_status st, const char* msg) {
  std::fprintf(stderr, "error: %s\n", msg ? msg : "unspecified failure");
  return map_status(st);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"segment-combinatorics toolkit for distinction of "
               "Galois-conjugate-self-dual representations"};
  app.set_version_flag("--version", segdist_version());
  app.require_subcommand(1);

  std::string universe_path;
  std::string pi_literal;
  std::string mode = "auto";
  std::string format = "text";
  std::uint64_t seed = 0;
  int count = 100;
  int max_segments = 3;
  int max_span = 2;

  auto add_common = [&](CLI::App* sub, bool needs_pi) {
    sub->add_option("--universe", universe_path,
                    "universe declaration file")
        ->required();
    if (needs_pi)
      sub->add_option("--pi", pi_literal, "multisegment literal")->required();
    sub->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
  };
  auto add_bounds = [&](CLI::App* sub) {
    sub->add_option("--max-segments", max_segments,
                    "largest number of segments")
        ->capture_default_str();
    sub->add_option("--max-span", max_span, "largest b-a per segment")
        ->capture_default_str();
  };

  CLI::App* classify =
      app.add_subcommand("classify", "decide distinction of a multisegment");
  add_common(classify, true);
  classify
      ->add_option("--mode", mode,
                   "classifier: auto, ladder, standard or segment")
      ->check(CLI::IsMember({"auto", "ladder", "standard", "segment"}))
      ->capture_default_str();

  CLI::App* decompose = app.add_subcommand(
      "decompose", "pure components and proper ladder blocks");
  add_common(decompose, true);

  CLI::App* derivatives = app.add_subcommand(
      "derivatives", "derivative multisegments of a ladder");
  add_common(derivatives, true);

  CLI::App* strata = app.add_subcommand(
      "strata", "stratum table and multiplicity bound");
  add_common(strata, true);

  CLI::App* dual =
      app.add_subcommand("dual", "duality images and closure verdict");
  add_common(dual, true);

  CLI::App* check =
      app.add_subcommand("check", "exhaustive and randomized property checks");
  check->require_subcommand(1);

  CLI::App* key_lemma = check->add_subcommand(
      "key-lemma", "no closed stratum carries a functional");
  add_common(key_lemma, false);
  add_bounds(key_lemma);

  CLI::App* deriv = check->add_subcommand(
      "deriv", "derivative consistency over random ladders");
  add_common(deriv, false);
  deriv->add_option("--corpus", count, "number of random ladders")
      ->capture_default_str();
  deriv->add_option("--seed", seed, "corpus seed")->capture_default_str();
  add_bounds(deriv);

  CLI::App* corpus = app.add_subcommand(
      "corpus", "seeded random multisegments for regression");
  add_common(corpus, false);
  corpus->add_option("--count", count, "number of multisegments")
      ->capture_default_str();
  corpus->add_option("--seed", seed, "corpus seed")->capture_default_str();
  add_bounds(corpus);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  segdist_format fmt =
      format == "json" ? SEGDIST_FORMAT_JSON : SEGDIST_FORMAT_TEXT;

  UniverseHandle u;
  {
    StringHandle err;
    segdist_status st =
        segdist_universe_from_file(universe_path.c_str(), &u.ptr, &err.ptr);
    if (st != SEGDIST_OK) return report_error(st, err.ptr);
  }

  MsHandle pi;
  if (classify->parsed() || decompose->parsed() || derivatives->parsed() ||
      strata->parsed() || dual->parsed()) {
    StringHandle err;
    segdist_status st =
        segdist_multisegment_parse(u.ptr, pi_literal.c_str(), &pi.ptr,
                                   &err.ptr);
    if (st != SEGDIST_OK) return report_error(st, err.ptr);
  }

  StringHandle report;
  StringHandle err;
  segdist_status st = SEGDIST_OK;
  if (classify->parsed()) {
    st = segdist_classify(u.ptr, pi.ptr, mode.c_str(), fmt, &report.ptr,
                          &err.ptr);
  } else if (decompose->parsed()) {
    st = segdist_decompose(u.ptr, pi.ptr, fmt, &report.ptr, &err.ptr);
  } else if (derivatives->parsed()) {
    st = segdist_derivatives(u.ptr, pi.ptr, fmt, &report.ptr, &err.ptr);
  } else if (strata->parsed()) {
    st = segdist_strata(u.ptr, pi.ptr, fmt, &report.ptr, &err.ptr);
  } else if (dual->parsed()) {
    st = segdist_dual(u.ptr, pi.ptr, fmt, &report.ptr, &err.ptr);
  } else if (key_lemma->parsed()) {
    st = segdist_check_key_lemma(u.ptr, max_segments, max_span, fmt,
                                 &report.ptr, &err.ptr);
  } else if (deriv->parsed()) {
    st = segdist_check_deriv(u.ptr, seed, count, max_segments, max_span, fmt,
                             &report.ptr, &err.ptr);
  } else if (corpus->parsed()) {
    st = segdist_corpus(u.ptr, seed, count, max_segments, max_span, fmt,
                        &report.ptr, &err.ptr);
  }

  if (report.ptr) std::fputs(report.ptr, stdout);
  if (st == SEGDIST_OK || st == SEGDIST_FAIL) return map_status(st);
  return report_error(st, err.ptr);
}
