#include "pezzo/verify.hpp"

#include <atomic>
#include <chrono>
#include <sstream>
#include <thread>

#include "json.hpp"

namespace pezzo {

using ojson = nlohmann::ordered_json;

std::string verdict_key(Verdict v) {
  switch (v) {
    case Verdict::Clean:
      return "clean";
    case Verdict::EmptyClean:
      return "empty-clean";
    case Verdict::HoldsModuloRadicality:
      return "holds-modulo-radicality";
    case Verdict::Mismatch:
      return "mismatch";
  }
  return "mismatch";
}

std::string paper_match_key(PaperMatch m) {
  switch (m) {
    case PaperMatch::Match:
      return "match";
    case PaperMatch::TypoSuspect:
      return "typo-suspect";
    case PaperMatch::NotListed:
      return "not-listed";
  }
  return "not-listed";
}

namespace {

IdealReport make_ideal_report(const Ideal& ideal, const GroebnerBasis& gb) {
  IdealReport rep;
  for (const auto& g : ideal.generators) rep.generators.push_back(g.to_string());
  for (const auto& g : gb.elements) rep.reduced_gb.push_back(g.to_string());
  rep.unit = gb.is_unit();
  return rep;
}

void transcript_check(ChartReport& rep, const Ring& ring, const Ideal& sy,
                      const GroebnerBasis& gb_sy, const Ideal& tg,
                      const GroebnerBasis& gb_tg, const Ideal& ty,
                      const GroebnerBasis& gb_ty) {
  const TranscriptEntry* entry =
      find_transcript(rep.variety, rep.lambda, rep.fchart, rep.ptype);
  if (!entry) {
    rep.paper_match = PaperMatch::NotListed;
    return;
  }
  rep.source = entry->source;

  if (entry->claims_empty && !rep.ty.unit)
    rep.divergences.push_back(
        {"empty-claim",
         "text argues the chart is empty; the recomputed intersection ideal "
         "is proper"});
  if (!entry->claims_empty && !entry->ty.empty() && rep.ty.unit)
    rep.divergences.push_back(
        {"empty-claim",
         "text displays ideals for this chart; the recomputed intersection "
         "is empty"});

  auto check = [&](const char* kind, const std::vector<std::string>& printed,
                   const Ideal& recomputed, const GroebnerBasis& gb) {
    if (printed.empty()) return;
    std::vector<Polynomial> tgens;
    for (const auto& s : printed) tgens.push_back(Polynomial::parse(s, ring));
    Ideal transcribed(ring, tgens);
    GroebnerBasis tgb = buchberger(transcribed, MonomialOrder::grevlex());
    if (tgb == gb) return;
    for (std::size_t i = 0; i < tgens.size(); ++i)
      if (!ideal_member(tgens[i], gb))
        rep.divergences.push_back(
            {kind, "transcribed generator '" + printed[i] +
                       "' is not in the recomputed ideal"});
    for (const auto& g : recomputed.generators)
      if (!ideal_member(g, tgb))
        rep.divergences.push_back(
            {kind, "recomputed generator '" + g.to_string() +
                       "' is not in the transcribed ideal"});
  };
  check("sy", entry->sy, sy, gb_sy);
  check("tg", entry->tg, tg, gb_tg);
  check("ty", entry->ty, ty, gb_ty);

  rep.paper_match =
      rep.divergences.empty() ? PaperMatch::Match : PaperMatch::TypoSuspect;
}

}  // namespace

ChartReport verify_chart(const ChartTask& task) {
  auto t0 = std::chrono::steady_clock::now();
  Ring ring = chart_ring();

  ChartReport rep;
  rep.variety = task.spec.name();
  rep.lambda = task.lchart.non_pivot;
  rep.fchart = task.fchart.key();
  rep.ptype = plane_type_key(task.ptype);

  Ideal sy = ideal_SY(task.lchart, task.fchart, task.spec, ring);
  Ideal tg = ideal_TG(task.lchart, task.fchart, task.ptype, ring);
  TYResult ty = ideal_TY(task.lchart, task.fchart, task.ptype, task.spec, ring);
  Ideal sum = ideal_sum(tg, sy);

  MonomialOrder grev = MonomialOrder::grevlex();
  GroebnerBasis gb_sy = buchberger(sy, grev);
  GroebnerBasis gb_tg = buchberger(tg, grev);
  GroebnerBasis gb_ty = buchberger(ty.ideal, grev);
  GroebnerBasis gb_sum = buchberger(sum, grev);

  rep.sy = make_ideal_report(sy, gb_sy);
  rep.tg = make_ideal_report(tg, gb_tg);
  rep.ty = make_ideal_report(ty.ideal, gb_ty);
  rep.sum = make_ideal_report(sum, gb_sum);
  rep.graph_form = ty.graph_form;
  rep.shape_chart = ty.shape_chart;

  bool equal = gb_ty == gb_sum;
  if (!equal)
    rep.verdict = Verdict::Mismatch;
  else if (gb_ty.is_unit())
    rep.verdict = Verdict::EmptyClean;
  else
    rep.verdict = ty.graph_form ? Verdict::Clean
                                : Verdict::HoldsModuloRadicality;

  transcript_check(rep, ring, sy, gb_sy, tg, gb_tg, ty.ideal, gb_ty);

  rep.ms = std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - t0)
               .count();
  return rep;
}

std::vector<ChartReport> verify_tasks(const std::vector<ChartTask>& tasks,
                                      int jobs) {
  std::vector<ChartReport> reports(tasks.size());
  if (jobs <= 1) {
    for (std::size_t i = 0; i < tasks.size(); ++i)
      reports[i] = verify_chart(tasks[i]);
    return reports;
  }

  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) break;
      reports[i] = verify_chart(tasks[i]);
    }
  };
  std::vector<std::thread> pool;
  for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  return reports;
}

std::vector<ChartReport> sweep(const VarietySpec& spec, int jobs) {
  std::vector<ChartTask> tasks;
  for (const auto& l : all_lambda_charts())
    for (const auto& f : all_fcharts())
      for (PlaneType t : {PlaneType::Sigma31, PlaneType::Sigma22})
        tasks.emplace_back(spec, l, f, t);
  return verify_tasks(tasks, jobs);
}

SweepSummary summarize(const std::vector<ChartReport>& reports) {
  SweepSummary s;
  for (const auto& r : reports) {
    switch (r.verdict) {
      case Verdict::Clean:
        ++s.clean;
        break;
      case Verdict::EmptyClean:
        ++s.empty_clean;
        break;
      case Verdict::HoldsModuloRadicality:
        ++s.holds_modulo_radicality;
        break;
      case Verdict::Mismatch:
        ++s.mismatch;
        break;
    }
    ++s.total;
  }
  s.pass = s.mismatch == 0;
  return s;
}

std::vector<CrossCheckEntry> cross_check(
    const std::vector<ChartReport>& reports) {
  std::vector<CrossCheckEntry> out;
  for (const auto& r : reports) {
    for (const auto& d : r.divergences) {
      CrossCheckEntry e;
      e.variety = r.variety;
      e.lambda = r.lambda;
      e.fchart = r.fchart;
      e.ptype = r.ptype;
      e.ideal = d.ideal;
      e.detail = d.detail;
      e.source = r.source;
      e.typo_suspect = r.verdict != Verdict::Mismatch;
      out.push_back(std::move(e));
    }
  }
  return out;
}

bool PropsSummary::all_pass() const {
  for (const auto& s : suites)
    if (!s.ok()) return false;
  return true;
}

namespace {

ojson report_json(const ChartReport& r, bool zero_timings) {
  ojson task{{"variety", r.variety},
             {"lambda", r.lambda},
             {"fpivots", r.fchart},
             {"type", r.ptype}};
  ojson ideals{{"sy", r.sy.generators},
               {"tg", r.tg.generators},
               {"ty", r.ty.generators},
               {"sum", r.sum.generators}};
  ojson gbs{{"sy", r.sy.reduced_gb},
            {"tg", r.tg.reduced_gb},
            {"ty", r.ty.reduced_gb},
            {"sum", r.sum.reduced_gb}};
  ojson divergences = ojson::array();
  for (const auto& d : r.divergences)
    divergences.push_back(ojson{{"ideal", d.ideal}, {"detail", d.detail}});
  ojson match{{"status", paper_match_key(r.paper_match)},
              {"source", r.source},
              {"divergences", divergences}};
  return ojson{{"task", task},
               {"ideals", ideals},
               {"reduced_gbs", gbs},
               {"verdict", verdict_key(r.verdict)},
               {"paper_match", match},
               {"graph_form", r.graph_form},
               {"shape_chart", r.shape_chart},
               {"ms", zero_timings ? 0.0 : r.ms}};
}

}  // namespace

std::string sweep_json(const std::string& variety,
                       const std::vector<ChartReport>& reports,
                       bool zero_timings) {
  SweepSummary s = summarize(reports);
  ojson arr = ojson::array();
  for (const auto& r : reports) arr.push_back(report_json(r, zero_timings));
  ojson j{{"variety", variety},
          {"reports", arr},
          {"summary",
           ojson{{"clean", s.clean},
                 {"empty_clean", s.empty_clean},
                 {"holds_modulo_radicality", s.holds_modulo_radicality},
                 {"mismatch", s.mismatch},
                 {"total", s.total},
                 {"pass", s.pass}}}};
  return j.dump(2) + "\n";
}

std::string sweep_markdown(const std::string& variety,
                           const std::vector<ChartReport>& reports) {
  SweepSummary s = summarize(reports);
  std::ostringstream os;
  os << "# Chart certification: " << variety << "\n\n";
  os << "| lambda | fpivots | type | verdict | paper match | graph form | ms |\n";
  os << "|---|---|---|---|---|---|---|\n";
  for (const auto& r : reports) {
    os << "| " << r.lambda << " | " << r.fchart << " | " << r.ptype << " | "
       << verdict_key(r.verdict) << " | " << paper_match_key(r.paper_match)
       << " | " << (r.graph_form ? "yes" : "no") << " | " << r.ms << " |\n";
  }
  os << "\nSummary: clean=" << s.clean << " empty-clean=" << s.empty_clean
     << " holds-modulo-radicality=" << s.holds_modulo_radicality
     << " mismatch=" << s.mismatch << " total=" << s.total
     << " pass=" << (s.pass ? "yes" : "no") << "\n";
  for (const auto& r : reports)
    for (const auto& d : r.divergences)
      os << "\n* divergence [" << r.lambda << " | " << r.fchart << " | "
         << r.ptype << " | " << d.ideal << "] (" << r.source << "): "
         << d.detail;
  os << "\n";
  return os.str();
}

std::string props_json(const PropsSummary& summary) {
  ojson suites = ojson::array();
  for (const auto& s : summary.suites)
    suites.push_back(ojson{{"name", s.name},
                           {"passed", s.passed},
                           {"total", s.total},
                           {"failures", s.failures}});
  ojson j{{"seed", summary.seed},
          {"trials", summary.trials},
          {"suites", suites},
          {"pass", summary.all_pass()}};
  return j.dump(2) + "\n";
}

std::string props_markdown(const PropsSummary& summary) {
  std::ostringstream os;
  os << "# Property suites (seed " << summary.seed << ", trials "
     << summary.trials << ")\n\n";
  os << "| suite | passed | total |\n|---|---|---|\n";
  for (const auto& s : summary.suites)
    os << "| " << s.name << " | " << s.passed << " | " << s.total << " |\n";
  os << "\nOverall: " << (summary.all_pass() ? "pass" : "FAIL") << "\n";
  for (const auto& s : summary.suites)
    for (const auto& f : s.failures) os << "\n* " << s.name << ": " << f;
  return os.str();
}

std::string cross_check_json(const std::vector<CrossCheckEntry>& entries) {
  ojson arr = ojson::array();
  bool all_typo = true;
  for (const auto& e : entries) {
    arr.push_back(ojson{{"variety", e.variety},
                        {"lambda", e.lambda},
                        {"fpivots", e.fchart},
                        {"type", e.ptype},
                        {"ideal", e.ideal},
                        {"detail", e.detail},
                        {"source", e.source},
                        {"classification",
                         e.typo_suspect ? "typo-suspect" : "breaks-verdict"}});
    all_typo = all_typo && e.typo_suspect;
  }
  ojson j{{"discrepancies", arr}, {"all_typo_suspect", all_typo}};
  return j.dump(2) + "\n";
}

namespace {

std::string poly_mat_text(const PolyMat& m) {
  std::ostringstream os;
  for (const auto& row : m) {
    os << "  [";
    for (std::size_t c = 0; c < row.size(); ++c)
      os << (c ? ", " : " ") << row[c].to_string();
    os << " ]\n";
  }
  return os.str();
}

}  // namespace

std::string show_chart(const ChartTask& task) {
  Ring ring = chart_ring();
  std::ostringstream os;
  os << "variety " << task.spec.name() << ", lambda chart "
     << task.lchart.non_pivot << ", f chart {" << task.fchart.key()
     << "}, type " << plane_type_key(task.ptype) << "\n\n";

  os << "Lambda matrix:\n" << poly_mat_text(lambda_matrix(task.lchart, ring));
  os << "\nF matrix:\n" << poly_mat_text(f_matrix(task.fchart, ring));

  for (const auto& h : task.spec.hyperplanes()) {
    QLinearForm q = pullback(h, task.lchart, ring);
    os << "\npullback of " << h.to_string() << ":";
    for (int i = 0; i < 6; ++i) {
      auto [a, b] = fiber_pairs()[i];
      os << (i ? " + (" : " (") << q.coef[i].to_string() << ")*q" << a << b;
    }
    os << "\n";
  }

  auto shape = shape_for_fchart(task.ptype, task.fchart);
  if (shape) {
    os << "\nplane family span (shape " << *shape << "):\n"
       << poly_mat_text(plane_span(task.ptype, *shape, ring));
  } else {
    os << "\nno canonical plane presentation matches this fiber chart\n";
  }

  ChartReport rep = verify_chart(task);
  auto dump = [&os](const char* name, const IdealReport& ir) {
    os << "\n" << name << " generators:";
    if (ir.generators.empty()) os << " (zero ideal)";
    for (const auto& g : ir.generators) os << " [" << g << "]";
    os << "\n" << name << " reduced GB:";
    if (ir.reduced_gb.empty()) os << " (zero ideal)";
    for (const auto& g : ir.reduced_gb) os << " [" << g << "]";
    os << "\n";
  };
  dump("I_SY", rep.sy);
  dump("I_TG", rep.tg);
  dump("I_TY", rep.ty);
  dump("I_TG + I_SY", rep.sum);
  os << "\nverdict: " << verdict_key(rep.verdict)
     << ", paper match: " << paper_match_key(rep.paper_match)
     << ", graph form: " << (rep.graph_form ? "yes" : "no") << "\n";
  for (const auto& d : rep.divergences)
    os << "  divergence (" << d.ideal << "): " << d.detail << "\n";
  return os.str();
}

}  // namespace pezzo
