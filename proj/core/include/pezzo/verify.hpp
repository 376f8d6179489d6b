#pragma once

#include <cstdint>
#include <iosfwd>

#include "pezzo/loci.hpp"
#include "pezzo/transcript.hpp"

namespace pezzo {

struct ChartTask {
  VarietySpec spec;
  LambdaChart lchart;
  FChart fchart;
  PlaneType ptype;

  ChartTask(VarietySpec s, LambdaChart l, FChart f, PlaneType p)
      : spec(std::move(s)), lchart(l), fchart(f), ptype(p) {}
};

struct IdealReport {
  std::vector<std::string> generators;
  std::vector<std::string> reduced_gb;
  bool unit = false;
};

enum class Verdict { Clean, EmptyClean, HoldsModuloRadicality, Mismatch };
std::string verdict_key(Verdict v);

enum class PaperMatch { Match, TypoSuspect, NotListed };
std::string paper_match_key(PaperMatch m);

/// One recomputed-vs-transcribed divergence, at generator granularity.
struct Divergence {
  std::string ideal;   // "sy" | "tg" | "ty" | "empty-claim"
  std::string detail;  // which generator differs, and on which side
};

struct ChartReport {
  std::string variety;
  int lambda = 0;
  std::string fchart;
  std::string ptype;
  IdealReport sy, tg, ty, sum;
  Verdict verdict = Verdict::Mismatch;
  bool graph_form = true;
  bool shape_chart = false;
  PaperMatch paper_match = PaperMatch::NotListed;
  std::vector<Divergence> divergences;
  std::string source;  // transcript section tag when listed
  double ms = 0.0;
};

/// Computes the three chart ideals and their sum, reduced bases under
/// grevlex, the verdict, and the transcription cross-check.
ChartReport verify_chart(const ChartTask& task);

/// Runs a task list, optionally across jobs worker threads; the output
/// order always matches the input order.
std::vector<ChartReport> verify_tasks(const std::vector<ChartTask>& tasks,
                                      int jobs = 1);

/// All 5 x 20 x 2 chart tasks for the variety, in deterministic order.
std::vector<ChartReport> sweep(const VarietySpec& spec, int jobs = 1);

struct SweepSummary {
  int clean = 0;
  int empty_clean = 0;
  int holds_modulo_radicality = 0;
  int mismatch = 0;
  int total = 0;
  bool pass = false;  // no mismatch verdict
};

SweepSummary summarize(const std::vector<ChartReport>& reports);

struct CrossCheckEntry {
  std::string variety;
  int lambda = 0;
  std::string fchart;
  std::string ptype;
  std::string ideal;
  std::string detail;
  std::string source;
  bool typo_suspect = false;  // identity still holds with recomputed ideals
};

/// Every divergence between recomputed ideals and the embedded
/// transcription, classified typo-suspect when the chart identity holds.
std::vector<CrossCheckEntry> cross_check(const std::vector<ChartReport>& reports);

struct SuiteResult {
  std::string name;
  int passed = 0;
  int total = 0;
  std::vector<std::string> failures;

  bool ok() const { return passed == total; }
};

struct PropsSummary {
  uint64_t seed = 0;
  int trials = 0;
  std::vector<SuiteResult> suites;

  bool all_pass() const;
};

/// Sampling-based suites: restricted-form dichotomies, the 4-fold fiber
/// structure, Cauchy-Binet trials, Pluecker relations, plane witnesses,
/// kernel local-freeness, low-dimension rank checks, and on-locus
/// parameterization soundness.  Deterministic in the seed.
PropsSummary props(uint64_t seed, int trials);

/// JSON / markdown emission.  Timing fields carry real durations; the
/// canonical_json form zeroes them so byte comparison is meaningful.
std::string sweep_json(const std::string& variety,
                       const std::vector<ChartReport>& reports,
                       bool zero_timings = false);
std::string sweep_markdown(const std::string& variety,
                           const std::vector<ChartReport>& reports);
std::string props_json(const PropsSummary& summary);
std::string props_markdown(const PropsSummary& summary);
std::string cross_check_json(const std::vector<CrossCheckEntry>& entries);

/// `show` helper: chart matrices, pullbacks, spans and ideals as text.
std::string show_chart(const ChartTask& task);

}  // namespace pezzo
