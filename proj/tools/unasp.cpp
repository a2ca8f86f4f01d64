#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "unasp/unasp.hpp"

namespace {

enum Exit { kOk = 0, kNoAnswer = 1, kUsage = 2, kIncomplete = 3 };

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw unasp::Error(unasp::Errc::BadModel, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw unasp::Error(unasp::Errc::BadModel, "cannot write " + path);
  out << text;
}

int exit_for(unasp::Errc c) {
  using unasp::Errc;
  switch (c) {
    case Errc::AnalysisOverflow:
    case Errc::NoValidAssumptionSet:
    case Errc::CyclicVpg:
    case Errc::NonConstantOperand:
    case Errc::StructuralMismatch: return kIncomplete;
    default: return kUsage;
  }
}

std::vector<double> parse_seeds(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');) {
    std::size_t used = 0;
    double x = 0;
    try {
      x = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw CLI::ValidationError("--seeds", "bad seed '" + item + "'");
    out.push_back(x);
  }
  if (out.empty()) throw CLI::ValidationError("--seeds", "empty seed list");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Interval-valued fuzzy answer set solver"};
  app.require_subcommand(1);

  double eps = 0.009;
  if (const char* env = std::getenv("UNASP_EPS")) {
    try {
      eps = std::stod(env);
    } catch (const std::exception&) {
      std::cerr << "error[usage]: UNASP_EPS is not a number\n";
      return kUsage;
    }
  }
  std::size_t nb = 5, max_iter = 10000, max_sets = 64, jobs = 1;
  std::string seeds, format = "text", trace, dot, file, model;
  bool dump = false;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("FILE", file, "program file")->required()->check(CLI::ExistingFile);
    cmd->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
  };
  auto add_solver = [&](CLI::App* cmd) {
    cmd->add_option("--eps", eps, "NMI termination threshold")->check(CLI::PositiveNumber);
    cmd->add_option("--nb", nb, "branch-and-bound sample count")->check(CLI::Range(2, 1000000));
    cmd->add_option("--seeds", seeds, "explicit branch-and-bound seeds x1,x2,...");
    cmd->add_option("--max-iter", max_iter, "outer NMI iteration bound")->check(CLI::PositiveNumber);
    cmd->add_option("--max-answer-sets", max_sets, "answer-set cap")->check(CLI::PositiveNumber);
    cmd->add_option("--jobs", jobs, "parallel branches")->check(CLI::PositiveNumber);
    cmd->add_option("--trace", trace, "trace channels mi,nmi,graph");
    cmd->add_flag("--dump-transformed", dump, "print the transformed program");
    cmd->add_option("--dot", dot, "write the dependency graph in DOT format");
  };
  auto* solve_cmd = app.add_subcommand("solve", "compute answer sets");
  add_common(solve_cmd);
  add_solver(solve_cmd);
  auto* analyze_cmd = app.add_subcommand("analyze", "report components, cycles and contraction classes");
  add_common(analyze_cmd);
  analyze_cmd->add_flag("--dump-transformed", dump, "print the transformed program");
  analyze_cmd->add_option("--dot", dot, "write the dependency graph in DOT format");
  auto* check_cmd = app.add_subcommand("check", "check a model against a program");
  add_common(check_cmd);
  check_cmd->add_option("--model", model, "model JSON file")->required()->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << "error[usage]: " << e.what() << "\n";
    return kUsage;
  }

  try {
    unasp::Program program = unasp::parse_program(slurp(file));
    if (dump) std::cout << unasp::to_string(unasp::transform_program(unasp::ground(program)));
    const bool json = format == "json";

    if (*check_cmd) {
      unasp::Interpretation i = unasp::parse_model(slurp(model));
      unasp::Verdict v = unasp::check_answer_set(i, unasp::ground(program));
      if (json)
        std::cout << unasp::json{{"valid", v.ok}, {"reason", v.reason}}.dump(2) << "\n";
      else
        std::cout << (v ? "VALID" : "INVALID: " + v.reason) << "\n";
      return v ? kOk : kNoAnswer;
    }

    if (*analyze_cmd) {
      unasp::AnalysisReport r = unasp::analyze(program);
      if (!dot.empty()) write_file(dot, r.dot);
      auto atoms = unasp::atom_table(unasp::ground(program));
      std::cout << (json ? unasp::to_json(r, *atoms).dump(2) + "\n" : unasp::format_text(r));
      return kOk;
    }

    unasp::SolverConfig cfg;
    cfg.nmi.eps = eps;
    cfg.nmi.n_b = nb;
    cfg.nmi.max_outer_iters = max_iter;
    cfg.max_answer_sets = max_sets;
    cfg.jobs = jobs;
    cfg.format = json ? unasp::OutputFormat::Json : unasp::OutputFormat::Text;
    if (!seeds.empty()) cfg.seeds = parse_seeds(seeds);
    std::stringstream ts(trace);
    for (std::string ch; std::getline(ts, ch, ',');) {
      if (ch == "mi") cfg.trace.insert(unasp::TraceKind::Mi);
      else if (ch == "nmi") cfg.trace.insert(unasp::TraceKind::Nmi);
      else if (ch == "graph") cfg.trace.insert(unasp::TraceKind::Graph);
      else throw CLI::ValidationError("--trace", "unknown channel '" + ch + "'");
    }
    cfg.trace_out = &std::cerr;
    if (!dot.empty()) {
      unasp::AnalysisReport r = unasp::analyze(program);
      write_file(dot, r.dot);
    }
    unasp::SolveReport r = unasp::solve(program, cfg);
    auto atoms = unasp::atom_table(unasp::ground(program));
    std::cout << (json ? unasp::to_json(r, *atoms).dump(2) + "\n" : unasp::format_text(r));
    switch (r.status) {
      case unasp::SolveStatus::Ok: return kOk;
      case unasp::SolveStatus::Incomplete: return kIncomplete;
      default: return kNoAnswer;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error[usage]: " << e.what() << "\n";
    return kUsage;
  } catch (const unasp::Error& e) {
    std::cerr << "error[" << unasp::errc_name(e.code()) << "]: " << file
              << (dynamic_cast<const unasp::ParseError*>(&e) ? ":" : ": ") << e.what() << "\n";
    return exit_for(e.code());
  }
}
