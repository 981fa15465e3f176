// hstrace: exact Hattori-Stallings traces over integral group rings,
// coinvariant structure of the signed inversion involution, and the
// decision procedure for Poincare embeddings of the diagonal.

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <thread>

#include <CLI11.hpp>

#include <hstrace/io.hpp>

namespace fs = std::filesystem;
using namespace hstrace;

namespace {

struct OutputOpts {
  std::string out;
  std::string format = "json";
};

void add_output_opts(CLI::App* cmd, OutputOpts& o) {
  cmd->add_option("--out", o.out, "write the report to FILE instead of stdout");
  cmd->add_option("--format", o.format, "report format: json or text")
      ->check(CLI::IsMember({"json", "text"}));
}

void emit(const std::string& report, const OutputOpts& o) {
  if (o.out.empty()) {
    std::cout << report;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw ValidationError("cannot open output file: " + o.out);
  f << report;
}

int run_survey(const std::string& catalog, std::vector<long long> dims, bool reduced,
               unsigned jobs, const OutputOpts& out) {
  fs::path dir(catalog);
  if (!fs::is_directory(dir))
    throw ValidationError("catalog is not a directory: " + catalog);
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".json")
      files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  std::sort(dims.begin(), dims.end());

  std::vector<GroupPtr> groups;
  groups.reserve(files.size());
  for (const auto& f : files) {
    try {
      groups.push_back(load_group(f));
    } catch (const ValidationError& e) {
      throw ValidationError(f.filename().string() + ": " + e.what());
    }
  }

  struct Task {
    std::size_t file;
    long long d;
  };
  std::vector<Task> tasks;
  for (std::size_t i = 0; i < files.size(); ++i)
    for (long long d : dims) tasks.push_back({i, d});

  std::vector<SurveyRow> rows(tasks.size());
  if (!tasks.empty()) {
    const unsigned workers =
        std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(tasks.size())));
    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto work = [&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= tasks.size()) return;
        try {
          rows[i] = survey_row(files[tasks[i].file].filename().string(),
                               groups[tasks[i].file], tasks[i].d, reduced);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!first_error) first_error = std::current_exception();
          return;
        }
      }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < workers; ++t) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
  }

  emit(survey_report(rows, dims, reduced, parse_format(out.format)), out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact trace invariants of integral group rings and the decision procedure\n"
      "for Poincare embeddings of the diagonal"};
  app.require_subcommand(1);

  // classes
  auto* cmd_classes = app.add_subcommand("classes", "conjugacy class table of a group");
  std::string classes_group;
  OutputOpts classes_out;
  cmd_classes->add_option("--group", classes_group, "group descriptor file")->required();
  add_output_opts(cmd_classes, classes_out);

  // qgroup
  auto* cmd_qgroup =
      app.add_subcommand("qgroup", "coinvariants of the signed inversion involution");
  std::string qgroup_group;
  long long qgroup_d = 0;
  bool qgroup_reduced = false;
  OutputOpts qgroup_out;
  cmd_qgroup->add_option("--group", qgroup_group, "group descriptor file")->required();
  cmd_qgroup->add_option("--dim", qgroup_d, "dimension d (only its parity matters here)")
      ->required();
  cmd_qgroup->add_flag("--reduced", qgroup_reduced, "drop the identity-class orbit");
  add_output_opts(cmd_qgroup, qgroup_out);

  // trace
  auto* cmd_trace =
      app.add_subcommand("trace", "Hattori-Stallings trace of a matrix over Z[pi]");
  std::string trace_group, trace_matrix;
  OutputOpts trace_out;
  cmd_trace->add_option("--group", trace_group,
                        "group descriptor file (optional if the matrix embeds one)");
  cmd_trace->add_option("--matrix", trace_matrix, "matrix file")->required();
  add_output_opts(cmd_trace, trace_out);

  // verdict
  auto* cmd_verdict =
      app.add_subcommand("verdict", "diagonal Poincare embedding decision procedure");
  std::string verdict_group, verdict_complex, verdict_rtilde;
  long long verdict_d = 0;
  bool verdict_hf = false;
  std::optional<bool> verdict_bass;
  OutputOpts verdict_out;
  cmd_verdict->add_option("--group", verdict_group, "group descriptor file")->required();
  cmd_verdict->add_option("--dim", verdict_d, "formal dimension d >= 0")->required();
  cmd_verdict->add_flag("--homotopy-finite", verdict_hf,
                        "assert that the space is homotopy finite");
  cmd_verdict->add_flag_callback(
      "--assume-bass", [&] { verdict_bass = true; },
      "assert the Bass trace conjecture for the fundamental group");
  cmd_verdict->add_flag_callback(
      "--no-assume-bass", [&] { verdict_bass = false; },
      "do not assume the Bass trace conjecture, even for finite groups");
  cmd_verdict->add_option("--complex", verdict_complex,
                          "idempotent complex file (computes the characteristic)");
  cmd_verdict->add_option("--rtilde", verdict_rtilde,
                          "class vector file with the reduced characteristic");
  add_output_opts(cmd_verdict, verdict_out);

  // survey
  auto* cmd_survey =
      app.add_subcommand("survey", "coinvariant structure across a catalog of groups");
  std::string survey_catalog;
  std::vector<long long> survey_dims;
  bool survey_reduced = false;
  unsigned survey_jobs = std::max(1u, std::thread::hardware_concurrency());
  OutputOpts survey_out;
  cmd_survey->add_option("--catalog", survey_catalog, "directory of group descriptor files")
      ->required();
  cmd_survey->add_option("--dims", survey_dims, "dimensions to survey (comma separated)")
      ->required()
      ->delimiter(',');
  cmd_survey->add_flag("--reduced", survey_reduced, "drop the identity-class orbit");
  cmd_survey->add_option("--jobs", survey_jobs, "worker pool size");
  add_output_opts(cmd_survey, survey_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*cmd_classes) {
      emit(classes_report(load_group(classes_group), parse_format(classes_out.format)),
           classes_out);
    } else if (*cmd_qgroup) {
      emit(qgroup_report(load_group(qgroup_group), qgroup_d, qgroup_reduced,
                         parse_format(qgroup_out.format)),
           qgroup_out);
    } else if (*cmd_trace) {
      GroupPtr g;
      if (!trace_group.empty()) g = load_group(trace_group);
      GroupRingMatrix m = load_matrix(trace_matrix, g);
      emit(trace_report(m.group(), m, parse_format(trace_out.format)), trace_out);
    } else if (*cmd_verdict) {
      SpaceHypotheses h;
      h.group = load_group(verdict_group);
      h.dimension = verdict_d;
      h.homotopy_finite = verdict_hf;
      h.bass_override = verdict_bass;
      if (!verdict_complex.empty()) h.complex = load_complex(verdict_complex, h.group);
      if (!verdict_rtilde.empty())
        h.reduced_char = load_class_vector(verdict_rtilde, h.group);
      Verdict v = embedding_verdict(h);
      emit(verdict_report(h.group, verdict_d, v, parse_format(verdict_out.format)),
           verdict_out);
    } else if (*cmd_survey) {
      return run_survey(survey_catalog, survey_dims, survey_reduced, survey_jobs,
                        survey_out);
    }
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
