#include "randwave/core/verdict.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>

namespace randwave {

bool all_pass(const std::vector<Verdict>& verdicts) {
  return std::all_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.pass; });
}

std::string format_double(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

void write_verdict_csv(std::ostream& out, const std::vector<Verdict>& verdicts) {
  out << "operation,parameters,measured,threshold,pass\n";
  for (const auto& v : verdicts) {
    out << v.operation << ",\"" << v.parameters << "\"," << format_double(v.measured) << ','
        << format_double(v.threshold) << ',' << (v.pass ? "pass" : "fail") << '\n';
  }
}

}  // namespace randwave
