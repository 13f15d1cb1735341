#pragma once

#include <string>
#include <vector>

#include "emedge/meshgen.hpp"

namespace emedge {

enum class BenchDomain { Square, CurvedL, Disk, CrackedDisk };

BenchDomain domain_from_name(const std::string& name);
const char* domain_name(BenchDomain domain);

// Reference spectra for the four benchmark cavities. "Expanded" lists repeat
// each eigenvalue according to its multiplicity, ascending.
const std::vector<double>& square_reference(ElementFamily family);   // 16 modes
const std::vector<double>& square_analytical();                      // 16 modes
const std::vector<double>& curved_l_reference();                     // 5 modes
const std::vector<double>& disk_reference();                         // 7 modes (mults 2,2,1,2)
const std::vector<double>& cracked_disk_reference();                 // 2 modes

struct BenchModeRow {
  double computed = 0.0;
  double reference = 0.0;
  double rel_error = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct BenchReport {
  BenchDomain domain = BenchDomain::Square;
  ElementFamily family = ElementFamily::Q4;
  std::string preset;
  int n_elements = 0;
  int n_free = 0;
  int zero_count = 0;
  int zero_expected = -1;  // -1: no theoretical count asserted
  std::vector<BenchModeRow> modes;
  bool pass = false;
  double elapsed_seconds = 0.0;
};

// Runs the full pipeline (generate, convert, assemble, solve) for a domain
// benchmark and compares the spectrum against the embedded references.
// Presets: "full" (reference resolution) and "ci" (faster, looser bounds).
BenchReport run_bench(BenchDomain domain, ElementFamily family, const std::string& preset);

// Deterministic plain-text / CSV rendering (timing is excluded; callers
// report it separately).
std::string format_report(const BenchReport& report, bool csv);

}  // namespace emedge
