#pragma once

#include <cstdint>
#include <string>
#include <vector>

struct CheckRow {
  std::string suite;
  std::string label;
  double residual;
  double tolerance;
  bool pass() const { return residual <= tolerance; }
};

std::vector<std::string> quant_suite_names();
// throws std::invalid_argument for an unknown suite
std::vector<CheckRow> run_quant_suite(const std::string& name, std::uint64_t seed, int samples);
