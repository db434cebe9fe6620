#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace kolmo {

struct SuiteReport {
  std::string name;
  std::uint64_t seed = 0;
  std::size_t instances = 0;
  std::size_t failures = 0;
  std::vector<std::string> notes;  // one line per failure or noteworthy instance

  bool passed() const { return failures == 0; }
};

// Randomized certification suites exposed by `certify --suite`:
//   roundtrip  canonical form -> field -> sphere decision (+ cubic recovery)
//   thm41      invariant hyperplanes from case (i)/(ii) data and their perturbations
//   thm13      Hamiltonian constraint space and random cubic fields in even dimension
//   cor44      hypothesis determinants and complete integrability of a rank-2 family
//   thm37      off-center slices never cone-invariant; radius-2 sphere never invariant
// Instance i draws from a generator seeded with seed + i, so runs are reproducible.
const std::vector<std::string>& suite_names();
SuiteReport run_suite(const std::string& name, std::uint64_t seed, std::size_t instances);
std::size_t default_instances(const std::string& name);

}  // namespace kolmo
