// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure.  Registered with ctest as the integration suite.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "pezzo/rng.hpp"
#include "pezzo/verify.hpp"

using namespace pezzo;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Gate {
  int failures = 0;

  void run(int number, const std::string& title,
           const std::function<bool(std::string&)>& body) {
    std::string note;
    bool ok = false;
    try {
      ok = body(note);
    } catch (const std::exception& e) {
      note = std::string("exception: ") + e.what();
    }
    std::printf("%s criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", number,
                title.c_str(), note.empty() ? "" : " -- ", note.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
  }
};

Polynomial P(const std::string& s) {
  return Polynomial::parse(s, chart_ring());
}

Ideal ideal_of(const std::vector<std::string>& gens) {
  std::vector<Polynomial> ps;
  for (const auto& g : gens) ps.push_back(P(g));
  return Ideal(chart_ring(), std::move(ps));
}

bool quoted_matches_gb(const std::vector<std::string>& quoted,
                       const std::vector<std::string>& recomputed_gb) {
  GroebnerBasis gb = buchberger(ideal_of(quoted), MonomialOrder::grevlex());
  std::vector<std::string> qs;
  for (const auto& e : gb.elements) qs.push_back(e.to_string());
  return qs == recomputed_gb;
}

ChartReport chart(const VarietySpec& spec, int lambda, const char* fkey,
                  PlaneType t) {
  return verify_chart(
      ChartTask(spec, LambdaChart(lambda), FChart::from_key(fkey), t));
}

}  // namespace

int main() {
  auto wall0 = Clock::now();
  Gate gate;
  VarietySpec y5 = VarietySpec::y5();
  VarietySpec y4 = VarietySpec::y4();

  std::vector<ChartReport> sweep_y5, sweep_y4;
  double sweep_seconds = 0;

  gate.run(1, "5-fold chart certification on the displayed charts",
           [&](std::string& note) {
    auto t0 = Clock::now();
    bool ok = true;

    ChartReport empty = chart(y5, 2, "01,02,12", PlaneType::Sigma22);
    ok = ok && empty.verdict == Verdict::EmptyClean;

    ChartReport main22 = chart(y5, 2, "01,03,13", PlaneType::Sigma22);
    ok = ok && main22.verdict == Verdict::Clean &&
         main22.paper_match == PaperMatch::Match;
    ok = ok && quoted_matches_gb({"g", "i", "k", "f+j", "e-m", "h-l"},
                                 main22.tg.reduced_gb);
    ok = ok && quoted_matches_gb({"-a-e+c*f", "-h+c*i", "-k+c*l+d"},
                                 main22.sy.reduced_gb);
    ok = ok && quoted_matches_gb(
                   {"g", "i", "k", "f+j", "e-m", "h", "l", "d", "-f*c+e+a"},
                   main22.ty.reduced_gb);

    ChartReport third = chart(y5, 2, "02,03,23", PlaneType::Sigma22);
    ok = ok && third.verdict == Verdict::Clean;
    ChartReport fourth = chart(y5, 2, "12,13,23", PlaneType::Sigma22);
    ok = ok && fourth.verdict == Verdict::Clean &&
         fourth.paper_match == PaperMatch::Match;

    ChartReport s31a = chart(y5, 2, "01,12,13", PlaneType::Sigma31);
    ok = ok && s31a.verdict == Verdict::Clean &&
         s31a.paper_match == PaperMatch::Match;
    ok = ok && quoted_matches_gb(
                   {"f+j", "e-m", "e+a", "h-l", "c-h", "g", "i", "k", "d"},
                   s31a.ty.reduced_gb);

    ChartReport s31b = chart(y5, 2, "03,13,23", PlaneType::Sigma31);
    ok = ok && s31b.verdict == Verdict::Clean;

    double el = seconds_since(t0);
    note = "6 charts in " + std::to_string(el) + " s";
    return ok && el < 5.0;
  });

  gate.run(2, "4-fold chart certification on the displayed charts",
           [&](std::string& note) {
    auto t0 = Clock::now();
    bool ok = true;

    ChartReport s31a = chart(y4, 2, "03,13,23", PlaneType::Sigma31);
    ok = ok && s31a.verdict == Verdict::Clean &&
         s31a.paper_match == PaperMatch::Match;
    ok = ok && quoted_matches_gb({"a", "b", "d", "g", "i", "k", "f", "j",
                                  "e+m", "h-l", "h-c^2", "e+c"},
                                 s31a.ty.reduced_gb);

    ChartReport s31b = chart(y4, 3, "01,02,03", PlaneType::Sigma31);
    ok = ok && s31b.verdict == Verdict::Clean &&
         s31b.paper_match == PaperMatch::Match;
    ok = ok && quoted_matches_gb({"a", "b", "d", "g", "i", "k", "e", "m",
                                  "h-l", "f-j", "h-c", "f-c^2"},
                                 s31b.ty.reduced_gb);

    // The sigma22 charts the text demonstrates empty via the a=b=d=0
    // obstruction certify empty-clean.
    for (const char* key : {"01,02,12", "02,03,23", "12,13,23"}) {
      ChartReport r = chart(y4, 2, key, PlaneType::Sigma22);
      ok = ok && r.verdict == Verdict::EmptyClean;
    }
    // The remaining sigma22 chart carries the one-point component of the
    // plane locus: recomputation shows a proper chart ideal there, the
    // identity still certifies clean, and the divergence from the text's
    // no-solution claim is reported for the audit.
    ChartReport splane = chart(y4, 2, "01,03,13", PlaneType::Sigma22);
    ok = ok && splane.verdict == Verdict::Clean && !splane.ty.unit &&
         splane.paper_match == PaperMatch::TypoSuspect;

    double el = seconds_since(t0);
    note = "sigma22 chart {01,03,13} certifies clean with a proper ideal "
           "(divergence reported); " +
           std::to_string(el) + " s";
    return ok && el < 5.0;
  });

  gate.run(3, "exhaustive sweeps have zero mismatches",
           [&](std::string& note) {
    auto t0 = Clock::now();
    sweep_y5 = sweep(y5);
    sweep_y4 = sweep(y4);
    sweep_seconds = seconds_since(t0);
    SweepSummary s5 = summarize(sweep_y5);
    SweepSummary s4 = summarize(sweep_y4);
    note = "y5: " + std::to_string(s5.clean) + " clean / " +
           std::to_string(s5.empty_clean) + " empty-clean; y4: " +
           std::to_string(s4.clean) + " clean / " +
           std::to_string(s4.empty_clean) + " empty-clean; " +
           std::to_string(sweep_seconds) + " s";
    return s5.total == 200 && s4.total == 200 && s5.mismatch == 0 &&
           s4.mismatch == 0 && sweep_seconds < 120.0;
  });

  gate.run(4, "emptiness and structure facts across the sweeps",
           [&](std::string& note) {
    if (sweep_y5.empty()) sweep_y5 = sweep(y5);
    if (sweep_y4.empty()) sweep_y4 = sweep(y4);

    bool y4_s31 = false, y4_s22 = false;
    for (const auto& r : sweep_y4) {
      if (r.ty.unit) continue;
      if (r.ptype == "s31") y4_s31 = true;
      if (r.ptype == "s22") y4_s22 = true;
    }

    bool lambda4_all_empty = true;
    bool lambda_0_to_3_nonempty[4] = {false, false, false, false};
    for (const auto& r : sweep_y5) {
      if (r.lambda == 4) {
        lambda4_all_empty =
            lambda4_all_empty && r.verdict == Verdict::EmptyClean;
      } else if (!r.ty.unit) {
        lambda_0_to_3_nonempty[r.lambda] = true;
      }
    }
    bool others = lambda_0_to_3_nonempty[0] && lambda_0_to_3_nonempty[1] &&
                  lambda_0_to_3_nonempty[2] && lambda_0_to_3_nonempty[3];
    note = "4-fold locates both plane families; 5-fold loci appear only in "
           "base charts that can contain e4";
    return y4_s31 && y4_s22 && lambda4_all_empty && others;
  });

  gate.run(5, "kernel bundle local freeness on every base chart",
           [&](std::string& note) {
    auto t0 = Clock::now();
    Ring ring = chart_ring();
    bool ok = true;
    for (const auto& spec : {y5, y4}) {
      int expected = static_cast<int>(spec.hyperplanes().size());
      for (const auto& l : all_lambda_charts()) {
        KernelFreeness kf = kernel_freeness(spec, l, ring);
        ok = ok && kf.minors_unit && kf.generic_rank == expected;
      }
    }
    double el = seconds_since(t0);
    note = std::to_string(el) + " s";
    return ok && el < 1.0;
  });

  gate.run(6, "Cauchy-Binet identity on 200 random integer pairs",
           [&](std::string& note) {
    SampleRng rng(0);
    int pass = 0;
    for (int t = 0; t < 200; ++t) {
      RatMatrix a = rng.mat(2, 3);
      RatMatrix b = rng.mat(3, 2);
      if (cauchy_binet_det(a, b) == det(a.mul(b))) ++pass;
    }
    note = std::to_string(pass) + "/200 exact";
    return pass == 200;
  });

  PropsSummary props_run;
  gate.run(7, "set-theoretic fiber propositions with seed 0, 100 trials",
           [&](std::string& note) {
    props_run = props(0, 100);
    bool ok = true;
    std::string counts;
    for (const auto& s : props_run.suites) {
      if (s.name == "restricted-form-dichotomy" ||
          s.name == "fourfold-fiber-structure" ||
          s.name == "plane-witnesses") {
        ok = ok && s.ok();
        counts += s.name + " " + std::to_string(s.passed) + "/" +
                  std::to_string(s.total) + "; ";
      }
    }
    note = counts;
    return ok;
  });

  gate.run(8, "discrepancy audit flags only typo-suspect divergences",
           [&](std::string& note) {
    if (sweep_y5.empty()) sweep_y5 = sweep(y5);
    if (sweep_y4.empty()) sweep_y4 = sweep(y4);
    std::vector<ChartReport> all = sweep_y5;
    all.insert(all.end(), sweep_y4.begin(), sweep_y4.end());
    auto entries = cross_check(all);

    bool all_typo = !entries.empty();
    for (const auto& e : entries) all_typo = all_typo && e.typo_suspect;

    auto has = [&](const char* variety, const char* fchart, const char* ptype,
                   const char* ideal) {
      for (const auto& e : entries)
        if (e.variety == variety && e.fchart == fchart && e.ptype == ptype &&
            e.ideal == ideal)
          return true;
      return false;
    };
    bool expected = has("y5", "02,03,23", "s22", "sy") &&
                    has("y5", "03,13,23", "s31", "sy") &&
                    has("y4", "01,03,13", "s22", "empty-claim");
    note = std::to_string(entries.size()) +
           " divergences, all typo-suspect, including the displayed "
           "section-ideal misprint";
    return all_typo && expected && entries.size() == 5;
  });

  gate.run(9, "property suites pass with seed 0 within the time budget",
           [&](std::string& note) {
    if (props_run.suites.empty()) props_run = props(0, 100);
    bool ok = props_run.all_pass();

    // basis canonicity, elimination soundness/completeness, relation and
    // ring-axiom samples (compact reruns; the unit suites cover them too)
    SampleRng rng(0);
    Ring ring = chart_ring();
    MonomialOrder grev = MonomialOrder::grevlex();
    for (int t = 0; t < 10 && ok; ++t) {
      std::vector<Polynomial> gens;
      for (int i = 0; i < 3; ++i) {
        std::vector<Polynomial::Term> terms;
        for (int k = 0; k < 2; ++k) {
          Monomial m = Monomial::one(ring->size());
          m.e[static_cast<std::size_t>(rng.int_in(0, 12))] +=
              static_cast<uint32_t>(rng.int_in(0, 2));
          terms.emplace_back(m, rng.small_int(4));
        }
        gens.push_back(Polynomial::from_terms(ring, terms));
      }
      GroebnerBasis base = buchberger(Ideal(ring, gens), grev);
      std::vector<Polynomial> shuffled(gens.rbegin(), gens.rend());
      ok = ok && buchberger(Ideal(ring, shuffled), grev) == base;

      Polynomial p = gens[0], q = gens[1], r = gens[2];
      ok = ok && (p * q) * r == p * (q * r) && p * (q + r) == p * q + p * r;

      RatMatrix m2 = rng.mat(2, 5);
      ExteriorVector w = wedge2(ring, m2.row(0), m2.row(1));
      for (const auto& rel : gr25_relations(w)) ok = ok && rel.is_zero();
    }

    // elimination pair on a parameterized graph
    auto sys = ty_system(LambdaChart(2), FChart::from_key("01,03,13"),
                         PlaneType::Sigma22, y5, ring);
    ok = ok && sys.has_value();
    if (ok) {
      std::vector<Polynomial> gens = sys->graph;
      gens.insert(gens.end(), sys->containment.begin(),
                  sys->containment.end());
      Ideal big(ring, gens);
      auto elim = eliminate_with_gb(big, plane_parameter_vars(ring));
      GroebnerBasis full = buchberger(big, grev);
      for (const auto& g : elim.ideal.generators)
        ok = ok && normal_form(g, full).is_zero();
      ok = ok && elim.solved_form;
    }

    double total = seconds_since(wall0);
    note = "acceptance wall time " + std::to_string(total) + " s";
    return ok && total < 300.0;
  });

  std::printf("%s: %d of 9 criteria failed (wall %.1f s)\n",
              gate.failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL",
              gate.failures, seconds_since(wall0));
  return gate.failures == 0 ? 0 : 1;
}
