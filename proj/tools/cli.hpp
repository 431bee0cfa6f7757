#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace ramopuc::cli {

enum ExitCode : int { kSuccess = 0, kCheckFailed = 1, kUsage = 2 };

/// Runs the command line `args` (args[0] is the program name). Never throws.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// One self-contained unit of `verify` work.
struct VerifyTask {
  std::string family;
  std::string parameter;
  std::function<void()> body;  // throws on failure
};

struct VerifyResult {
  std::string family;
  std::string parameter;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

/// Families: all, cyclotomic, prime, 2p, anti2p, kronecker-enum.
/// Throws ramopuc::InvalidArgument on an unknown family.
std::vector<VerifyTask> make_verify_tasks(std::uint64_t max_m, const std::string& families);

/// Runs the tasks on `jobs` workers; results come back in task order.
std::vector<VerifyResult> run_verify_tasks(const std::vector<VerifyTask>& tasks, unsigned jobs);

}  // namespace ramopuc::cli
