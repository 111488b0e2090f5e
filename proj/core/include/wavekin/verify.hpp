#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace wavekin {

enum class Suite { equivalence, speeds, detectability, quantization, all };

std::string_view to_string(Suite s);
Suite suite_from_string(std::string_view tag);

struct Check {
  std::string name;
  double measured = 0.0;
  double tolerance = 0.0;
  // "<": measured must stay below tolerance; ">": must exceed it.
  std::string relation = "<";
  bool passed = false;
};

struct SuiteResult {
  std::string name;
  std::vector<Check> checks;

  bool passed() const;
};

struct VerifyReport {
  std::uint64_t seed = 0;
  std::vector<SuiteResult> suites;  // sorted by name

  bool passed() const;
  std::string to_json() const;
};

struct VerifyOptions {
  std::uint64_t seed = 20260917;
  double beta = 0.6;
  int random_points = 1000;
};

// Runs the requested suites concurrently and merges results by suite name.
VerifyReport verify(Suite suite, const VerifyOptions& options = {});

}  // namespace wavekin
