// Batch task files: a ring block, module blocks, and a list of operations
// with windows, depths and precisions; deterministic human and machine
// rendering of the results.
#pragma once

#include <iosfwd>

#include "gralg/comodule.hpp"
#include "gralg/completion.hpp"
#include "gralg/retraction.hpp"

namespace gralg {

struct RunOptions {
  WeightWindow window{0, 6};
  int depth = 8;
  int precision = 4;
  bool strict_undetermined = false;
};

struct TaskOutcome {
  int index = 0;
  std::string op;
  bool ok = false;
  bool undetermined = false;
  std::vector<std::string> lines;  // human rendering, no trailing newlines
  std::string record;              // one machine-readable line
};

struct RunReport {
  std::vector<TaskOutcome> tasks;
  bool all_ok(bool strict_undetermined) const {
    for (const TaskOutcome& t : tasks)
      if (!t.ok || (strict_undetermined && t.undetermined)) return false;
    return true;
  }
};

RunReport run_task_file(const std::string& path, const RunOptions& opts);

void render_human(const RunReport& r, std::ostream& os);
void render_machine(const RunReport& r, std::ostream& os);

struct TaskOpInfo {
  const char* keyword;
  const char* module_name;  // library module the keyword exercises
  const char* operation;
};

// Task keyword -> library operation, one entry per public operation.
const std::vector<TaskOpInfo>& task_vocabulary();

}  // namespace gralg
