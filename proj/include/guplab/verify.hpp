#pragma once

#include <array>
#include <string>
#include <vector>

#include "guplab/table.hpp"

namespace guplab::verify {

// One verified quantity.  `defect` is the deviation in the convention named
// by the label (relative unless the label says abs); rows that only measure a
// defect leave value/reference as NaN.  `provenance` names the formula or
// independent method the reference comes from.
struct CheckRow {
  int criterion = 0;  // 1..10
  std::string label;
  double value = 0.0;
  double reference = 0.0;
  double defect = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::string provenance;
};

struct Options {
  std::vector<double> extra_betas;  // appended to the pinned sweeps where meaningful
  std::size_t oracle_m = 1024;      // coarse oracle grid for the spectrum suites
  int n_max = 10;                   // highest level in the spectrum sweep
  unsigned long long seed = 20260822ull;
};

struct Report {
  std::vector<CheckRow> rows;
  // Wall-clock seconds of the overlap and spectrum suites (indices 0 and 2).
  // Kept out of the serialized table so identical configs emit identical
  // bytes; the acceptance runner asserts the limits.
  std::array<double, 10> seconds{};

  bool all_pass() const;
  bool criterion_pass(int criterion) const;
  double worst_margin(int criterion) const;  // max defect/tolerance over the criterion
};

const std::array<std::string, 10>& criterion_titles();

Report run(const Options& opts);

Table to_table(const Report& report);

}  // namespace guplab::verify
