#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "pezzo/verify.hpp"

namespace {

using namespace pezzo;

VarietySpec load_variety(const std::string& name,
                         const std::string& hyperplane_file) {
  if (name == "y5") return VarietySpec::y5();
  if (name == "y4") return VarietySpec::y4();
  if (name == "g") return VarietySpec::g();
  if (name != "custom")
    throw std::invalid_argument("variety must be y5, y4, g or custom");
  if (hyperplane_file.empty())
    throw std::invalid_argument("custom variety needs --hyperplanes FILE");
  std::ifstream in(hyperplane_file);
  if (!in)
    throw std::invalid_argument("cannot open " + hyperplane_file);
  std::vector<Hyperplane> hs;
  std::string line;
  while (std::getline(in, line)) {
    std::string trimmed;
    for (char c : line)
      if (!isspace(static_cast<unsigned char>(c)) || !trimmed.empty())
        trimmed += c;
    while (!trimmed.empty() &&
           isspace(static_cast<unsigned char>(trimmed.back())))
      trimmed.pop_back();
    if (trimmed.empty() || trimmed[0] == '#') continue;
    hs.push_back(Hyperplane::parse(trimmed));
  }
  if (hs.empty())
    throw std::invalid_argument("hyperplane file is empty");
  return VarietySpec::custom(std::move(hs));
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::invalid_argument("cannot write " + out_path);
  out << text;
}

std::vector<ChartTask> select_tasks(const VarietySpec& spec, int lambda,
                                    const std::string& fpivots,
                                    const std::string& type) {
  std::vector<LambdaChart> lcharts;
  if (lambda >= 0)
    lcharts.push_back(LambdaChart(lambda));
  else
    lcharts = all_lambda_charts();

  std::vector<FChart> fcharts;
  if (!fpivots.empty())
    fcharts.push_back(FChart::from_key(fpivots));
  else
    fcharts = all_fcharts();

  std::vector<PlaneType> types;
  if (type == "s31")
    types = {PlaneType::Sigma31};
  else if (type == "s22")
    types = {PlaneType::Sigma22};
  else if (type == "both" || type.empty())
    types = {PlaneType::Sigma31, PlaneType::Sigma22};
  else
    throw std::invalid_argument("type must be s31, s22 or both");

  std::vector<ChartTask> tasks;
  for (const auto& l : lcharts)
    for (const auto& f : fcharts)
      for (PlaneType t : types) tasks.emplace_back(spec, l, f, t);
  return tasks;
}

int run_reports(const std::vector<ChartReport>& reports,
                const std::string& variety, const std::string& format,
                const std::string& out_path) {
  if (format == "md")
    emit(sweep_markdown(variety, reports), out_path);
  else
    emit(sweep_json(variety, reports), out_path);
  return summarize(reports).pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact chart certification of conic loci in quintic del Pezzo "
               "sections of Gr(2,5)"};
  app.require_subcommand(1);

  std::string variety = "y5", hyperplanes, fpivots, type = "both";
  std::string show_type = "s31";
  std::string format = "json", out_path;
  int lambda = -1, jobs = 1;
  uint64_t seed = 0;
  int trials = 100;

  auto add_variety = [&](CLI::App* cmd) {
    cmd->add_option("--variety", variety, "y5, y4, g or custom")
        ->default_val("y5");
    cmd->add_option("--hyperplanes", hyperplanes,
                    "file with one p_ij hyperplane form per line");
  };
  auto add_output = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "json or md")->default_val("json");
    cmd->add_option("--out", out_path, "output path (default stdout)");
  };

  CLI::App* verify = app.add_subcommand(
      "verify", "certify selected charts (all charts when unrestricted)");
  add_variety(verify);
  verify->add_option("--lambda", lambda, "Lambda chart 0..4");
  verify->add_option("--fpivots", fpivots, "F chart pivots, e.g. 01,03,13");
  verify->add_option("--type", type, "s31, s22 or both")->default_val("both");
  verify->add_option("--jobs", jobs, "worker threads")->default_val(1);
  add_output(verify);

  CLI::App* sweep_cmd =
      app.add_subcommand("sweep", "certify all 200 charts of a variety");
  add_variety(sweep_cmd);
  sweep_cmd->add_option("--jobs", jobs, "worker threads")->default_val(1);
  add_output(sweep_cmd);

  CLI::App* props_cmd =
      app.add_subcommand("props", "run the sampling property suites");
  props_cmd->add_option("--seed", seed, "sample seed")->default_val(0);
  props_cmd->add_option("--trials", trials, "samples per suite")
      ->default_val(100)
      ->check(CLI::PositiveNumber);
  add_output(props_cmd);

  CLI::App* show = app.add_subcommand(
      "show", "print matrices, pullbacks and ideals of one chart");
  add_variety(show);
  show->add_option("--lambda", lambda, "Lambda chart 0..4")->required();
  show->add_option("--fpivots", fpivots, "F chart pivots")->required();
  show->add_option("--type", show_type, "s31 or s22");
  show->add_option("--out", out_path, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (verify->parsed()) {
      VarietySpec spec = load_variety(variety, hyperplanes);
      auto tasks = select_tasks(spec, lambda, fpivots, type);
      auto reports = verify_tasks(tasks, jobs);
      return run_reports(reports, spec.name(), format, out_path);
    }
    if (sweep_cmd->parsed()) {
      VarietySpec spec = load_variety(variety, hyperplanes);
      auto reports = sweep(spec, jobs);
      return run_reports(reports, spec.name(), format, out_path);
    }
    if (props_cmd->parsed()) {
      PropsSummary summary = props(seed, trials);
      emit(format == "md" ? props_markdown(summary) : props_json(summary),
           out_path);
      return summary.all_pass() ? 0 : 1;
    }
    if (show->parsed()) {
      VarietySpec spec = load_variety(variety, hyperplanes);
      ChartTask task(spec, LambdaChart(lambda), FChart::from_key(fpivots),
                     plane_type_from_key(show_type));
      emit(show_chart(task), out_path);
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
