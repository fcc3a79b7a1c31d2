// Acceptance gate: runs the full verification battery at the pinned default
// configuration and prints one pass/fail line per criterion.  Exits nonzero
// if any criterion fails or a runtime limit is exceeded.
//
// Runtime limits (pinned here, wall clock):
//   - overlap suite  (criterion 1) < 1 s
//   - spectrum suite (criterion 3) < 30 s

#include <cstdio>
#include <string>

#include "guplab/verify.hpp"

namespace {

constexpr double kOverlapSecondsLimit = 1.0;
constexpr double kSpectrumSecondsLimit = 30.0;

void print_line(bool pass, const std::string& text) {
  std::printf("[%s] %s\n", pass ? "PASS" : "FAIL", text.c_str());
}

}  // namespace

int main() {
  using guplab::verify::Options;
  using guplab::verify::Report;

  const Options opts;  // pinned defaults: beta sweep, oracle_m = 1024, n_max = 10
  std::printf("acceptance battery: oracle_m=%zu n_max=%d\n", opts.oracle_m, opts.n_max);

  const Report report = guplab::verify::run(opts);
  const auto& titles = guplab::verify::criterion_titles();

  int failures = 0;
  for (int criterion = 1; criterion <= 10; ++criterion) {
    const bool pass = report.criterion_pass(criterion);
    if (!pass) ++failures;
    char buf[256];
    std::snprintf(buf, sizeof(buf), "criterion %2d: %s (worst defect/tolerance = %.3g)",
                  criterion, titles[static_cast<std::size_t>(criterion - 1)].c_str(),
                  report.worst_margin(criterion));
    print_line(pass, buf);
    if (!pass) {
      for (const auto& row : report.rows)
        if (row.criterion == criterion && !row.pass)
          std::printf("       failing check: %s (defect %.6g, tolerance %.6g)\n",
                      row.label.c_str(), row.defect, row.tolerance);
    }
  }

  const bool overlap_fast = report.seconds[0] < kOverlapSecondsLimit;
  const bool spectrum_fast = report.seconds[2] < kSpectrumSecondsLimit;
  if (!overlap_fast) ++failures;
  if (!spectrum_fast) ++failures;
  char buf[128];
  std::snprintf(buf, sizeof(buf), "runtime: overlap suite %.3f s (limit %.1f s)",
                report.seconds[0], kOverlapSecondsLimit);
  print_line(overlap_fast, buf);
  std::snprintf(buf, sizeof(buf), "runtime: spectrum suite %.3f s (limit %.1f s)",
                report.seconds[2], kSpectrumSecondsLimit);
  print_line(spectrum_fast, buf);

  if (failures == 0) {
    std::printf("result: all 10 criteria pass within runtime limits\n");
    return 0;
  }
  std::printf("result: %d gate(s) failed\n", failures);
  return 1;
}
