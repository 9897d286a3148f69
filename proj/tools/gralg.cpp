#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "gralg/taskrun.hpp"

int main(int argc, char** argv) {
  CLI::App app{"graded-algebra task runner"};
  app.require_subcommand(1);

  CLI::App* run = app.add_subcommand("run", "execute a task file");
  std::string path;
  std::string window_spec;
  std::string format = "human";
  gralg::RunOptions opts;
  run->add_option("file", path, "task file")->required();
  run->add_option("--window", window_spec, "weight window LO..HI (default 0..6)");
  run->add_option("--depth", opts.depth, "telescope / pro-isomorphism depth");
  run->add_option("--precision", opts.precision, "tower precision (number of stages)");
  run->add_flag("--strict-undetermined", opts.strict_undetermined,
                "treat undetermined verdicts as failures");
  run->add_option("--format", format, "human | machine")
      ->check(CLI::IsMember({"human", "machine"}));

  CLI::App* vocab = app.add_subcommand("ops", "list task keywords");

  CLI11_PARSE(app, argc, argv);

  if (vocab->parsed()) {
    for (const gralg::TaskOpInfo& op : gralg::task_vocabulary())
      std::cout << op.keyword << "\t" << op.module_name << "\t" << op.operation << "\n";
    return 0;
  }

  try {
    if (!window_spec.empty()) {
      size_t p = window_spec.find("..");
      if (p == std::string::npos) throw gralg::ParseError("window must be LO..HI");
      opts.window = {gralg::Rat(window_spec.substr(0, p)),
                     gralg::Rat(window_spec.substr(p + 2))};
      opts.window.lo.canonicalize();
      opts.window.hi.canonicalize();
      if (opts.window.hi < opts.window.lo) throw gralg::ParseError("empty window");
    }
    gralg::RunReport report = gralg::run_task_file(path, opts);
    if (format == "machine")
      gralg::render_machine(report, std::cout);
    else
      gralg::render_human(report, std::cout);
    return report.all_ok(opts.strict_undetermined) ? 0 : 1;
  } catch (const gralg::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    bool input_fault = e.kind == "ParseError" || e.kind == "ValidationError" ||
                       e.kind == "NotPointed";
    return input_fault ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
