#include "emedge/bench.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>

#include "emedge/eigensolver.hpp"

namespace emedge {

BenchDomain domain_from_name(const std::string& name) {
  if (name == "square") return BenchDomain::Square;
  if (name == "curved-l") return BenchDomain::CurvedL;
  if (name == "disk") return BenchDomain::Disk;
  if (name == "cracked-disk") return BenchDomain::CrackedDisk;
  throw Error(ErrorCode::Usage, "unknown benchmark domain: " + name);
}

const char* domain_name(BenchDomain domain) {
  switch (domain) {
    case BenchDomain::Square: return "square";
    case BenchDomain::CurvedL: return "curved-l";
    case BenchDomain::Disk: return "disk";
    case BenchDomain::CrackedDisk: return "cracked-disk";
  }
  return "?";
}

namespace {

// Side-pi square: k0^2 = m^2 + n^2. Exact values for the first 16 modes.
const std::vector<double> kSquareAnalytical = {1,  1,  2,  4,  4,  5,  5,  8,
                                               9,  9,  10, 10, 13, 13, 16, 16};

// Published benchmark spectra for the structured square meshes (linear
// triangles 16x16x2, bilinear quads 32x32, biquadratic quads 16x16,
// quadratic triangles 8x8x2).
const std::vector<double> kSquareT3 = {
    0.998066, 0.999795, 2.002121, 3.982881,  3.982939,  4.982602,  5.015107,  8.032183,
    8.906076, 8.921107, 9.950139, 9.952486,  12.960172, 13.133842, 15.726881, 15.727173};
const std::vector<double> kSquareQ4 = {
    1.000803, 1.000803, 2.001607,  4.012868,  4.012868,  5.013671,  5.013671,  8.025735,
    9.065245, 9.065245, 10.066048, 10.066048, 13.078112, 13.078112, 16.206657, 16.206657};
const std::vector<double> kSquareQ12 = {
    1.000002, 1.000002, 2.000004,  4.000131,  4.000131,  5.000133,  5.000133,  8.000262,
    9.001478, 9.001478, 10.001480, 10.001480, 13.001609, 13.001609, 16.008194, 16.008194};
const std::vector<double> kSquareT8 = {
    0.999992, 1.000010, 2.000115,  4.000089,  4.000089,  5.000260,  5.002108,  8.006889,
    9.000147, 9.001707, 10.005688, 10.005711, 13.012005, 13.037121, 16.004350, 16.004383};

// Curved L (radii 1, 2, 3): benchmark values, first mode singular.
const std::vector<double> kCurvedL = {1.818571, 3.490576, 10.065602, 10.111886, 12.435537};

// Unit disk: squared zeros of Bessel-derivative/Bessel functions, expanded by
// multiplicity (2, 2, 1, 2).
const std::vector<double> kDisk = {3.391122,  3.391122,  9.329970, 9.329970,
                                   14.680392, 17.652602, 17.652602};

// Cracked unit disk: the crack splits the fundamental below the closed-disk
// value; the first two modes are checked.
const std::vector<double> kCrackedDisk = {1.358390, 3.391122};

struct Preset {
  int a = 0;  // square n / curved-L nr / disk core triangles
  int b = 0;  // curved-L ntheta / disk rings
};

Preset preset_for(BenchDomain domain, ElementFamily family, const std::string& preset) {
  const bool ci = preset == "ci";
  if (!ci && preset != "full")
    throw Error(ErrorCode::Usage, "unknown preset: " + preset + " (use full or ci)");
  switch (domain) {
    case BenchDomain::Square:
      // Reference digits are tied to specific meshes (Q4 32x32, T8 8x8x2,
      // T3 16x16x2, Q12 16x16), so presets pin those resolutions.
      if (family == ElementFamily::Q4) return {32, 0};
      if (family == ElementFamily::T8) return {8, 0};
      return {16, 0};
    case BenchDomain::CurvedL:
      switch (family) {
        case ElementFamily::T3: return ci ? Preset{12, 7} : Preset{20, 12};
        case ElementFamily::Q4: return ci ? Preset{12, 7} : Preset{20, 12};
        case ElementFamily::Q12: return ci ? Preset{4, 8} : Preset{8, 12};
        case ElementFamily::T8: return ci ? Preset{4, 8} : Preset{8, 16};
        default: break;
      }
      throw Error(ErrorCode::Usage, "curved-l benchmark requires t3, q4, t8 or q12");
    case BenchDomain::Disk:
    case BenchDomain::CrackedDisk:
      if (family == ElementFamily::Mixed1) return ci ? Preset{40, 9} : Preset{64, 15};
      if (family == ElementFamily::Mixed2) return ci ? Preset{10, 17} : Preset{20, 34};
      throw Error(ErrorCode::Usage, "disk benchmarks require mixed1 or mixed2");
  }
  throw Error(ErrorCode::Usage, "unknown benchmark domain");
}

double tolerance_for(BenchDomain domain, ElementFamily family, bool ci, size_t mode) {
  double tol = 0.0;
  switch (domain) {
    case BenchDomain::Square:
      switch (family) {
        case ElementFamily::T3:
        case ElementFamily::Q4:
        case ElementFamily::Q12:
        case ElementFamily::T8: tol = 1e-4; break;
        default: throw Error(ErrorCode::Usage, "square benchmark requires t3, q4, t8 or q12");
      }
      break;
    case BenchDomain::CurvedL:
      tol = family_is_second_order(family) ? 5e-3 : 1.5e-2;
      break;
    case BenchDomain::Disk:
      tol = family == ElementFamily::Mixed2 ? 5e-3 : 2e-2;
      break;
    case BenchDomain::CrackedDisk:
      tol = mode == 0 ? 5e-2 : 2e-2;
      break;
  }
  if (ci) tol *= 2.0;
  return tol;
}

const std::vector<double>& reference_for(BenchDomain domain, ElementFamily family) {
  switch (domain) {
    case BenchDomain::Square: return square_reference(family);
    case BenchDomain::CurvedL: return curved_l_reference();
    case BenchDomain::Disk: return disk_reference();
    case BenchDomain::CrackedDisk: return cracked_disk_reference();
  }
  return kSquareAnalytical;
}

NodalMesh generate(BenchDomain domain, ElementFamily family, Preset p) {
  switch (domain) {
    case BenchDomain::Square: return gen_square(p.a, family);
    case BenchDomain::CurvedL: return gen_curved_l(p.a, p.b, family);
    case BenchDomain::Disk: return gen_disk(p.a, p.b, family);
    case BenchDomain::CrackedDisk: return gen_cracked_disk(p.a, p.b, family);
  }
  throw Error(ErrorCode::Usage, "unknown benchmark domain");
}

}  // namespace

const std::vector<double>& square_reference(ElementFamily family) {
  switch (family) {
    case ElementFamily::T3: return kSquareT3;
    case ElementFamily::Q4: return kSquareQ4;
    case ElementFamily::Q12: return kSquareQ12;
    case ElementFamily::T8: return kSquareT8;
    default: return kSquareAnalytical;
  }
}

const std::vector<double>& square_analytical() { return kSquareAnalytical; }

const std::vector<double>& curved_l_reference() { return kCurvedL; }
const std::vector<double>& disk_reference() { return kDisk; }
const std::vector<double>& cracked_disk_reference() { return kCrackedDisk; }

BenchReport run_bench(BenchDomain domain, ElementFamily family, const std::string& preset) {
  auto t0 = std::chrono::steady_clock::now();

  BenchReport report;
  report.domain = domain;
  report.family = family;
  report.preset = preset;

  NodalMesh mesh = generate(domain, family, preset_for(domain, family, preset));
  report.n_elements = mesh.element_count();

  EdgeMesh em = node_to_edge(mesh);
  BoundaryInfo bi = detect_boundary(em);
  AssembledSystem sys = assemble(em, {}, bi);
  report.n_free = sys.n_free;

  Spectrum sp = solve_gevp(sys);
  report.zero_count = sp.zero_count;
  if (!family_is_second_order(family)) {
    int interior = 0;
    for (bool b : bi.boundary_node) interior += b ? 0 : 1;
    report.zero_expected = interior;
  }

  const std::vector<double>& ref = reference_for(domain, family);
  std::vector<double> computed = sp.nonzero(static_cast<int>(ref.size()));
  const bool ci = preset == "ci";
  report.pass = report.zero_expected < 0 || report.zero_count == report.zero_expected;
  for (size_t i = 0; i < ref.size(); ++i) {
    BenchModeRow row;
    row.computed = i < computed.size() ? computed[i] : 0.0;
    row.reference = ref[i];
    row.rel_error = std::abs(row.computed - row.reference) / row.reference;
    row.tolerance = tolerance_for(domain, family, ci, i);
    row.pass = i < computed.size() && row.rel_error <= row.tolerance;
    report.pass = report.pass && row.pass;
    report.modes.push_back(row);
  }
  if (domain == BenchDomain::CrackedDisk && !report.modes.empty()) {
    // singular-mode capture: the cracked fundamental must undercut the
    // closed-disk fundamental
    report.pass = report.pass && report.modes[0].computed < kDisk.front();
  }

  report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

std::string format_report(const BenchReport& report, bool csv) {
  std::string out;
  char line[160];
  if (csv) {
    out += "mode,computed,reference,rel_error,tolerance,status\n";
    for (size_t i = 0; i < report.modes.size(); ++i) {
      const BenchModeRow& m = report.modes[i];
      std::snprintf(line, sizeof line, "%zu,%.6f,%.6f,%.3e,%.1e,%s\n", i + 1, m.computed,
                    m.reference, m.rel_error, m.tolerance, m.pass ? "pass" : "FAIL");
      out += line;
    }
    return out;
  }
  std::snprintf(line, sizeof line, "benchmark %s %s preset=%s\n", domain_name(report.domain),
                family_name(report.family), report.preset.c_str());
  out += line;
  std::snprintf(line, sizeof line, "elements=%d free_dofs=%d zeros=%d", report.n_elements,
                report.n_free, report.zero_count);
  out += line;
  if (report.zero_expected >= 0) {
    std::snprintf(line, sizeof line, " expected_zeros=%d", report.zero_expected);
    out += line;
  }
  out += "\n";
  out += "mode   computed     reference    rel_error  tol      status\n";
  for (size_t i = 0; i < report.modes.size(); ++i) {
    const BenchModeRow& m = report.modes[i];
    std::snprintf(line, sizeof line, "%-6zu %-12.6f %-12.6f %-10.3e %-8.1e %s\n", i + 1,
                  m.computed, m.reference, m.rel_error, m.tolerance, m.pass ? "pass" : "FAIL");
    out += line;
  }
  out += report.pass ? "result: PASS\n" : "result: FAIL\n";
  return out;
}

}  // namespace emedge
