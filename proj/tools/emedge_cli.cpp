#include <algorithm>
#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "emedge/bench.hpp"
#include "emedge/eigensolver.hpp"
#include "emedge/mesh.hpp"

using namespace emedge;

namespace {

struct GenOptions {
  std::string domain;
  std::string element = "q4";
  std::string preset;
  int n = 16;
  int rings = 0;
  std::string output = "mesh.m2d";
};

struct ConvertOptions {
  std::string input;
  std::string outdir = ".";
};

struct EigenOptions {
  std::string input;
  int num = 16;
  double zero_tol = 1e-8;
  bool dump_matrices = false;
  bool csv = false;
  std::string outdir = ".";
};

struct BenchOptions {
  std::string domain;
  std::string element;
  std::string preset = "full";
  bool csv = false;
};

NodalMesh generate_mesh(const GenOptions& opt) {
  BenchDomain domain = domain_from_name(opt.domain);
  ElementFamily family = family_from_name(opt.element);
  switch (domain) {
    case BenchDomain::Square:
      return gen_square(opt.n, family);
    case BenchDomain::CurvedL:
      return gen_curved_l(opt.n, 2 * opt.n, family);
    case BenchDomain::Disk:
    case BenchDomain::CrackedDisk: {
      int core = opt.n;
      int rings = opt.rings > 0 ? opt.rings : std::max(1, opt.n / 2);
      if (opt.preset == "reference-disk") {
        core = family == ElementFamily::Mixed2 ? 20 : 30;
        rings = family == ElementFamily::Mixed2 ? 34 : 59;
      }
      return domain == BenchDomain::Disk ? gen_disk(core, rings, family)
                                         : gen_cracked_disk(core, rings, family);
    }
  }
  throw Error(ErrorCode::Usage, "unknown domain");
}

int run_gen(const GenOptions& opt) {
  save_mesh_file(generate_mesh(opt), opt.output);
  std::cout << "wrote " << opt.output << "\n";
  return 0;
}

int run_convert(const ConvertOptions& opt) {
  NodalMesh mesh = load_mesh_file(opt.input);
  EdgeMesh em = node_to_edge(mesh);
  const EdgeRegistry& reg = em.registry;

  auto open = [&](const std::string& name) {
    std::ofstream out(opt.outdir + "/" + name);
    if (!out) throw Error(ErrorCode::Usage, "cannot write " + opt.outdir + "/" + name);
    return out;
  };

  {
    std::ofstream out = open("edgecon.csv");
    out << "element,edges\n";
    for (size_t e = 0; e < em.edgecon.size(); ++e) {
      out << e + 1;
      for (int edge : em.edgecon[e]) out << "," << edge;
      out << "\n";
    }
  }
  {
    std::ofstream out = open("edgenode.csv");
    out << "edge,start_node,end_node\n";
    for (int e = 1; e <= em.edge_count(); ++e) {
      auto [a, b] = em.edge_nodes(e);
      out << e << "," << a << "," << b << "\n";
    }
  }
  {
    std::ofstream out = open("nodeedge.csv");
    out << "node,count,edge1,other1,edge2,other2,edge3,other3,edge4,other4\n";
    for (int n = 1; n <= mesh.node_count(); ++n) {
      int count = reg.incident_count(n);
      out << n << "," << count;
      for (int k = 0; k < EdgeRegistry::kPrimarySlots; ++k) {
        if (k < count) {
          EdgeSlot s = reg.slot(n, k);
          out << "," << s.signed_edge << "," << s.other_node;
        } else {
          out << ",0,0";
        }
      }
      out << "\n";
    }
  }
  {
    std::ofstream out = open("nodeedgeexn.csv");
    // Row width adapts to the highest-valence node, at least 8 extra slots.
    int extra = EdgeRegistry::kOverflowSlots;
    for (int node : reg.overflow_nodes())
      extra = std::max(extra, reg.incident_count(node) - EdgeRegistry::kPrimarySlots);
    out << "node";
    for (int k = 5; k <= 4 + extra; ++k) out << ",edge" << k << ",other" << k;
    out << "\n";
    for (int node : reg.overflow_nodes()) {
      out << node;
      int count = reg.incident_count(node);
      for (int k = EdgeRegistry::kPrimarySlots; k < EdgeRegistry::kPrimarySlots + extra; ++k) {
        if (k < count) {
          EdgeSlot s = reg.slot(node, k);
          out << "," << s.signed_edge << "," << s.other_node;
        } else {
          out << ",0,0";
        }
      }
      out << "\n";
    }
  }
  std::cout << "converted " << mesh.element_count() << " elements, " << em.edge_count()
            << " edges; tables written to " << opt.outdir << "\n";
  return 0;
}

void dump_sparse(const SparseMat& m, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::Usage, "cannot write " + path);
  out << "row,col,value\n";
  char line[96];
  for (int k = 0; k < m.outerSize(); ++k)
    for (SparseMat::InnerIterator it(m, k); it; ++it) {
      std::snprintf(line, sizeof line, "%ld,%ld,%.17g\n", static_cast<long>(it.row() + 1),
                    static_cast<long>(it.col() + 1), it.value());
      out << line;
    }
}

int run_eigen(const EigenOptions& opt) {
  NodalMesh mesh = load_mesh_file(opt.input);
  EdgeMesh em = node_to_edge(mesh);
  BoundaryInfo bi = detect_boundary(em);
  AssembledSystem sys = assemble(em, {}, bi);
  if (opt.dump_matrices) {
    dump_sparse(sys.K, opt.outdir + "/K.csv");
    dump_sparse(sys.M, opt.outdir + "/M.csv");
  }
  Spectrum sp = solve_gevp(sys, opt.zero_tol);
  char line[96];
  if (opt.csv) {
    std::cout << "index,k0_squared\n";
    std::vector<double> nz = sp.nonzero(opt.num);
    for (size_t i = 0; i < nz.size(); ++i) {
      std::snprintf(line, sizeof line, "%zu,%.6f\n", i + 1, nz[i]);
      std::cout << line;
    }
    return 0;
  }
  std::cout << "free_dofs=" << sys.n_free << " zeros=" << sp.zero_count << "\n";
  std::cout << "first " << opt.num << " nonzero k0^2:\n";
  std::vector<double> nz = sp.nonzero(opt.num);
  for (size_t i = 0; i < nz.size(); ++i) {
    std::snprintf(line, sizeof line, "%3zu  %.6f\n", i + 1, nz[i]);
    std::cout << line;
  }
  return 0;
}

int run_bench_cmd(const BenchOptions& opt) {
  BenchDomain domain = domain_from_name(opt.domain);
  ElementFamily family = family_from_name(opt.element);
  BenchReport report = run_bench(domain, family, opt.preset);
  std::cout << format_report(report, opt.csv);
  std::fprintf(stderr, "elapsed: %.2fs\n", report.elapsed_seconds);
  return report.pass ? 0 : static_cast<int>(ErrorCode::BenchFailed);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"2-D edge-element cavity eigenvalue toolkit"};
  app.require_subcommand(1);

  GenOptions gen_opt;
  CLI::App* gen = app.add_subcommand("gen", "generate a benchmark mesh");
  gen->add_option("domain", gen_opt.domain, "square | curved-l | disk | cracked-disk")
      ->required();
  gen->add_option("--n", gen_opt.n, "resolution (square subdivisions / radial divisions / core triangles)");
  gen->add_option("--rings", gen_opt.rings, "disk quad rings (default n/2)");
  gen->add_option("--element", gen_opt.element, "t3 | q4 | t8 | q12 | mixed1 | mixed2");
  gen->add_option("--preset", gen_opt.preset, "named mesh preset (reference-disk)");
  gen->add_option("-o,--output", gen_opt.output, "output mesh file");

  ConvertOptions conv_opt;
  CLI::App* conv = app.add_subcommand("convert", "convert a nodal mesh to edge tables");
  conv->add_option("mesh", conv_opt.input, "input mesh file")->required();
  conv->add_option("-o,--output", conv_opt.outdir, "output directory");

  EigenOptions eig_opt;
  CLI::App* eig = app.add_subcommand("eigen", "solve the cavity eigenproblem");
  eig->add_option("mesh", eig_opt.input, "input mesh file")->required();
  eig->add_option("--num", eig_opt.num, "number of nonzero modes to report");
  eig->add_option("--zero-tol", eig_opt.zero_tol, "relative zero threshold");
  eig->add_flag("--dump-matrices", eig_opt.dump_matrices, "write K.csv/M.csv triplets");
  eig->add_flag("--csv", eig_opt.csv, "CSV output");
  eig->add_option("-o,--output", eig_opt.outdir, "directory for matrix dumps");

  BenchOptions bench_opt;
  CLI::App* bench = app.add_subcommand("bench", "run a domain benchmark");
  bench->add_option("domain", bench_opt.domain, "square | curved-l | disk | cracked-disk")
      ->required();
  bench->add_option("--element", bench_opt.element, "element family")->required();
  bench->add_option("--preset", bench_opt.preset, "full | ci");
  bench->add_flag("--csv", bench_opt.csv, "CSV output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 64;
  }

  try {
    if (*gen) return run_gen(gen_opt);
    if (*conv) return run_convert(conv_opt);
    if (*eig) return run_eigen(eig_opt);
    if (*bench) return run_bench_cmd(bench_opt);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 70;
  }
  return 64;
}
