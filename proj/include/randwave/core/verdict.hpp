#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace randwave {

/// One checked claim: what was measured against which threshold.
struct Verdict {
  std::string operation;
  std::string parameters;
  double measured = 0.0;
  double threshold = 0.0;
  bool pass = false;
};

bool all_pass(const std::vector<Verdict>& verdicts);

/// CSV with header operation,parameters,measured,threshold,pass.
void write_verdict_csv(std::ostream& out, const std::vector<Verdict>& verdicts);

/// "%.17g" rendering used by every CSV writer.
std::string format_double(double value);

}  // namespace randwave
