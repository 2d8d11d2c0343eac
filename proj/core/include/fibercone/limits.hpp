#pragma once

namespace fibercone {

// Resource budgets. Defaults are sized for desk-scale inputs; every knob is
// surfaced as a CLI flag.
struct Limits {
  // Staircase enumeration refuses bounding boxes with more cells than this.
  long long cell_budget = 100'000'000;
  // Highest ideal power the fiber ladder / reduction search will compute.
  int max_power = 25;
  // Trailing zeros required before a truncated series is declared rational.
  int guard_window = 4;
  // Hard cap on one axis of the Bhattacharya difference grid.
  int grid_cap = 20;
  // Re-verify this many extra powers after a reduction equality is found.
  int extra_reduction_checks = 0;
};

}  // namespace fibercone
