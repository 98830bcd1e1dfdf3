// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// tropsp: command-line front end.
//
// Exit codes: 0 success, 1 zoo differences, 2 parse or usage error,
// 3 matrix not tropically full rank.

#include <cstdio>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "tropsp/conormal.h"
#include "tropsp/io.h"
#include "tropsp/stiefel.h"
#include "tropsp/symplectic.h"
#include "tropsp/treespace.h"
#include "tropsp/valuated_matroid.h"
#include "tropsp/zoo.h"

namespace {

using nlohmann::ordered_json;
using namespace tropsp;

constexpr int kExitDiff = 1;
constexpr int kExitUsage = 2;
constexpr int kExitRank = 3;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// "path:line:col: message"
class InputError : public std::runtime_error {
 public:
  InputError(const std::string& path, const ParseError& e)
      : std::runtime_error(path + ":" + e.what()) {}
};

std::string pass(bool v) { return v ? "pass" : "fail"; }

std::string witness_line(const Witness& w, int n) {
  const PairedGround g{n};
  std::ostringstream out;
  out << w.relation;
  for (std::size_t i = 0; i < w.indices.size(); ++i) {
    out << (i ? " " : " at ")
        << (n > 0 ? g.label(w.indices[i]) : to_string(w.indices[i]));
  }
  out << "  terms [";
  for (std::size_t i = 0; i < w.terms.size(); ++i) {
    out << (i ? " " : "") << w.terms[i];
  }
  out << "]  min " << w.min << " x" << w.multiplicity;
  return out.str();
}

void print_report(std::ostream& out, const std::string& name,
                  const RelationReport& r, int n, const std::string& note = {}) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "  %-16s %s  relations %zu  failures %zu",
                name.c_str(), pass(r.verdict).c_str(), r.relations_checked,
                r.failures);
  out << buf << note << "\n";
  for (const Witness& w : r.witnesses) out << "    " << witness_line(w, n) << "\n";
  if (r.truncated) out << "    ...\n";
}

void print_flag(std::ostream& out, const std::string& name, bool v,
                const std::string& note = {}) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "  %-16s %s", name.c_str(), pass(v).c_str());
  out << buf << note << "\n";
}

MatroidFile load_matroid(const std::string& path) {
  const std::string text = read_file(path);
  try {
    return parse_matroid(text);
  } catch (const ParseError& e) {
    throw InputError(path, e);
  }
}

MatrixFile load_matrix(const std::string& path) {
  const std::string text = read_file(path);
  try {
    return parse_matrix(text);
  } catch (const ParseError& e) {
    throw InputError(path, e);
  }
}

// ---------------------------------------------------------------- check

struct CheckArgs {
  std::string path;
  bool paired = false;
  std::size_t witnesses = 1;
  std::string format = "table";
};

int cmd_check(const CheckArgs& a, unsigned jobs) {
  const MatroidFile f = load_matroid(a.path);
  const ValuatedMatroid& mu = f.mu;
  const bool paired = f.paired || a.paired;
  if (paired && mu.ground_size() % 2 != 0) {
    throw UsageError("--paired needs an even ground set");
  }
  const int n = paired ? mu.ground_size() / 2 : 0;
  const CheckOptions opt{a.witnesses, jobs};

  const RelationReport plucker = check_plucker(mu, opt);
  std::optional<RelationReport> symp, iso;
  std::optional<bool> oracle;
  std::string criterion;
  if (paired) {
    symp = check_symplectic_relations(mu, opt);
    if (mu.rank() <= n) {
      criterion = mu.rank() == n ? "lagrangian" : "plucker_isotropy";
      iso = isotropy(mu, opt);
      oracle = isotropy_oracle(mu);
    }
  }

  if (a.format == "json") {
    ordered_json out;
    out["name"] = mu.name();
    out["ground"] = mu.ground_size();
    out["rank"] = mu.rank();
    out["paired"] = paired;
    ordered_json checks;
    checks["plucker"] = report_json(plucker, n);
    if (symp) {
      checks["symplectic"] = report_json(*symp, n);
      checks["spdr"] = pass(plucker.verdict && symp->verdict);
    }
    if (iso) {
      checks["isotropic"] = report_json(*iso, n);
      checks["isotropic"]["criterion"] = criterion;
      checks["isotropy_oracle"] = pass(*oracle);
    }
    out["checks"] = std::move(checks);
    std::cout << out.dump(2) << "\n";
    return 0;
  }

  std::cout << (mu.name().empty() ? a.path : mu.name()) << ": rank "
            << mu.rank() << " on " << mu.ground_size() << " elements";
  if (paired) std::cout << " (paired, n = " << n << ")";
  std::cout << "\n";
  print_report(std::cout, "plucker", plucker, n);
  if (symp) {
    print_report(std::cout, "symplectic", *symp, n);
    print_flag(std::cout, "spdr", plucker.verdict && symp->verdict);
  }
  if (iso) {
    print_report(std::cout, "isotropic", *iso, n, "  (" + criterion + ")");
    print_flag(std::cout, "isotropy_oracle", *oracle);
  } else if (paired) {
    std::cout << "  isotropic        n/a (rank exceeds n)\n";
  }
  return 0;
}

// ---------------------------------------------------------------- stiefel

struct StiefelArgs {
  std::string path;
  std::string flag;
  bool check_presentation = false;
  std::string name;
};

int cmd_stiefel(const StiefelArgs& a, unsigned jobs) {
  const MatrixFile f = load_matrix(a.path);
  const TropMatrix& m = f.matrix;
  const CheckOptions opt{1, jobs};

  if (!a.flag.empty()) {
    const bool type_c = a.flag == "c";
    FlagVector flag;
    try {
      flag = type_c ? flag_stiefel_C(m) : flag_stiefel_A(m);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    ordered_json out;
    out["flag"] = a.flag;
    ordered_json comps = ordered_json::array();
    for (const ValuatedMatroid& c : flag) comps.push_back(matroid_json(c, type_c));
    out["components"] = std::move(comps);
    ordered_json inc = ordered_json::array();
    for (std::size_t i = 0; i + 1 < flag.size(); ++i) {
      inc.push_back(pass(incidence(flag[i], flag[i + 1], opt).verdict));
    }
    out["incidence"] = std::move(inc);
    if (type_c) {
      ordered_json symp = ordered_json::array();
      for (const ValuatedMatroid& c : flag) {
        symp.push_back(pass(check_symplectic_relations(c, opt).verdict));
      }
      out["symplectic"] = std::move(symp);
    }
    std::cout << out.dump(2) << "\n";
    return 0;
  }

  const bool paired = f.split || a.check_presentation;
  if (paired && m.cols() % 2 != 0) {
    throw UsageError("a presentation (A|B) needs an even column count");
  }
  const ValuatedMatroid mu = stiefel(m, a.name);
  if (!a.check_presentation) {
    std::cout << serialize_matroid(mu, paired);
    return 0;
  }
  const Presentation p(m);
  const RowOrthogonality ro = row_orthogonal(p);
  const Symmetry sym = symmetric_presentation(p);
  ordered_json out;
  out["matroid"] = matroid_json(mu, true);
  ordered_json checks;
  checks["row_orthogonal"] = pass(ro.verdict);
  if (ro.pair) {
    checks["row_orthogonal_witness"] = {ro.pair->first + 1, ro.pair->second + 1};
  }
  checks["symmetric"] = pass(sym.verdict);
  if (sym.entry) {
    const auto [i, j] = *sym.entry;
    checks["symmetric_witness"] = {
        {"entry", {i + 1, j + 1}},
        {"values", {sym.product(i, j).str(), sym.product(j, i).str()}}};
  }
  checks["spdr"] = pass(in_symplectic_dressian(mu, opt));
  if (mu.rank() <= p.n()) checks["isotropic"] = pass(isotropy(mu, opt).verdict);
  out["checks"] = std::move(checks);
  std::cout << out.dump(2) << "\n";
  return 0;
}

// ---------------------------------------------------------------- trees

struct TreesArgs {
  int m = 0;
  bool count_only = false;
  bool emit_plucker = false;
  bool normalize = false;
  bool random = false;
  std::uint64_t seed = 1;
  std::string newick;
};

int cmd_trees(const TreesArgs& a, unsigned jobs) {
  std::vector<PhyloTree> trees;
  if (!a.newick.empty()) {
    std::istringstream in(read_file(a.newick));
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      try {
        trees.push_back(parse_newick(line));
      } catch (const std::invalid_argument& e) {
        throw InputError(a.newick, ParseError(line_no, 1, e.what()));
      }
      if (a.m && trees.back().leaves() != a.m) {
        throw UsageError("tree on line " + std::to_string(line_no) + " has " +
                         std::to_string(trees.back().leaves()) + " leaves");
      }
    }
    if (trees.empty()) throw UsageError("no trees in " + a.newick);
  } else {
    if (a.m < 3) throw UsageError("trees: need m >= 3 leaves");
    if (a.m > 10) throw UsageError("trees: enumeration is limited to m <= 10");
  }
  const int m = trees.empty() ? a.m : trees.front().leaves();
  if (a.normalize && m % 2 != 0) {
    throw UsageError("--normalize needs an even number of leaves");
  }

  if (a.count_only) {
    std::set<Subset> splits;
    std::size_t topologies = 0;
    if (trees.empty()) {
      for_each_topology(m, [&](const PhyloTree& t) {
        ++topologies;
        for (Subset s : t.splits()) splits.insert(s);
      });
    } else {
      for (const PhyloTree& t : trees) {
        ++topologies;
        for (Subset s : t.splits()) splits.insert(s);
      }
    }
    std::cout << "leaves " << m << "\n";
    std::cout << "topologies " << topologies << "\n";
    std::cout << "topologies_formula " << topology_count(m).get_str() << "\n";
    std::cout << "splits " << splits.size() << "\n";
    std::cout << "splits_formula " << count_splits(m).get_str() << "\n";
    if (m % 2 == 0 && m >= 4) {
      const int n = m / 2;
      const RayFacetCounts c = tspgr2_counts(n);
      std::cout << "rays " << c.rays.get_str() << "\n";
      std::cout << "rays_reconstructed " << splits.size() + n << "\n";
      std::cout << "facets " << c.facets.get_str() << "\n";
      std::cout << "facets_reconstructed "
                << BigInt(BigInt(n * (n - 1) / 2) *
                          static_cast<unsigned long>(topologies))
                       .get_str()
                << "\n";
    }
    return 0;
  }

  std::mt19937_64 rng(a.seed);
  std::size_t count = 0;
  std::size_t spdr_pass = 0;
  auto emit = [&](const PhyloTree& topo) {
    const PhyloTree t = a.random ? random_lengths(topo, rng) : topo;
    ++count;
    if (!a.emit_plucker) {
      std::cout << to_newick(t) << "\n";
      return;
    }
    ValuatedMatroid mu = tree_to_plucker(t).renamed(to_newick(t));
    if (!a.normalize) {
      std::cout << matroid_json(mu, m % 2 == 0).dump() << "\n";
      return;
    }
    const auto norm = symplectic_rank2_normalize(mu);
    ordered_json line;
    line["newick"] = to_newick(t);
    const CheckOptions opt{1, jobs};
    if (norm) {
      const bool ok = in_symplectic_dressian(norm->mu, opt);
      spdr_pass += ok;
      line["matroid"] = matroid_json(norm->mu, true);
      line["spdr"] = pass(ok);
    } else {
      line["spdr"] = "not normalizable";
    }
    std::cout << line.dump() << "\n";
  };
  if (trees.empty()) {
    for_each_topology(m, emit);
  } else {
    for (const PhyloTree& t : trees) emit(t);
  }
  if (a.normalize) {
    ordered_json summary;
    summary["summary"] = {{"trees", count}, {"spdr_pass", spdr_pass}};
    std::cout << summary.dump() << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------- conormal

struct ConormalArgs {
  std::string path;
  std::string presentation;
  std::string dual_presentation;
  std::string format = "table";
};

int cmd_conormal(const ConormalArgs& a, unsigned jobs) {
  const MatroidFile f = load_matroid(a.path);
  std::optional<TropMatrix> pa, pb;
  if (a.presentation.empty() != a.dual_presentation.empty()) {
    throw UsageError("--presentation and --dual-presentation go together");
  }
  if (!a.presentation.empty()) {
    pa = load_matrix(a.presentation).matrix;
    pb = load_matrix(a.dual_presentation).matrix;
  }
  ConormalReport r;
  try {
    r = conormal_report(f.mu, pa, pb, CheckOptions{1, jobs});
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const int n = f.mu.ground_size();
  if (a.format == "json") {
    ordered_json out;
    out["name"] = f.mu.name();
    out["conormal"] = matroid_json(conormal(f.mu), true);
    out["plucker"] = pass(r.plucker);
    out["symplectic"] = report_json(r.symplectic, n);
    out["spdr"] = pass(r.spdr());
    out["lagrangian_isotropy"] = report_json(r.lagrangian, n);
    out["single_basis"] = r.single_basis;
    if (r.block_symmetric) out["block_symmetric"] = *r.block_symmetric;
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  std::cout << "conormal of " << (f.mu.name().empty() ? a.path : f.mu.name())
            << ": rank " << n << " on " << 2 * n << " elements\n";
  print_flag(std::cout, "plucker", r.plucker);
  print_report(std::cout, "symplectic", r.symplectic, n);
  print_flag(std::cout, "spdr", r.spdr());
  print_report(std::cout, "isotropic", r.lagrangian, n, "  (lagrangian)");
  std::cout << "  single_basis     " << (r.single_basis ? "yes" : "no") << "\n";
  if (r.block_symmetric) {
    std::cout << "  block_symmetric  " << (*r.block_symmetric ? "yes" : "no")
              << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------- zoo

int cmd_zoo(const std::string& format, unsigned jobs) {
  const ZooReport r = run_zoo(CheckOptions{1, jobs});
  if (format == "json") {
    ordered_json out;
    ordered_json rows = ordered_json::array();
    for (const ZooRow& row : r.rows) {
      ordered_json j;
      j["entry"] = row.entry;
      j["predicate"] = row.predicate;
      j["computed"] = row.computed;
      j["expected"] = row.expected ? ordered_json(*row.expected) : ordered_json();
      if (!row.witness.empty()) j["witness"] = row.witness;
      rows.push_back(std::move(j));
    }
    out["rows"] = std::move(rows);
    auto checks = [](const std::vector<ZooCheck>& cs) {
      ordered_json a = ordered_json::array();
      for (const ZooCheck& c : cs) {
        a.push_back({{"name", c.name}, {"holds", c.holds}, {"detail", c.detail}});
      }
      return a;
    };
    out["implications"] = checks(r.implications);
    out["stability"] = checks(r.stability);
    out["diffs"] = r.diffs;
    std::cout << out.dump(2) << "\n";
  } else {
    std::string entry;
    for (const ZooRow& row : r.rows) {
      if (row.entry != entry) {
        entry = row.entry;
        std::cout << entry << "\n";
      }
      char buf[200];
      std::snprintf(buf, sizeof buf, "  %-24s %-5s %s", row.predicate.c_str(),
                    pass(row.computed).c_str(),
                    row.diff() ? (row.expected ? "DIFF" : "UNEXPECTED") : "ok");
      std::cout << buf;
      if (!row.computed && !row.witness.empty()) {
        std::cout << "  " << row.witness;
      }
      std::cout << "\n";
    }
    std::cout << "implications\n";
    for (const ZooCheck& c : r.implications) {
      std::cout << "  " << (c.holds ? "ok   " : "FAIL ") << c.name << "\n";
    }
    std::cout << "extension stability\n";
    for (const ZooCheck& c : r.stability) {
      std::cout << "  " << (c.holds ? "ok   " : "FAIL ") << c.name << ": "
                << c.detail << "\n";
    }
    std::cout << "diffs " << r.diffs << "\n";
  }
  return r.diffs == 0 ? 0 : kExitDiff;
}

// ---------------------------------------------------------------- sympmat

int cmd_sympmat(const std::string& path, const std::string& format) {
  const std::string text = read_file(path);
  AdmissibleBasisSystem sys;
  try {
    sys = parse_basis_system(text);
  } catch (const ParseError& e) {
    throw InputError(path, e);
  }
  const SymplecticMatroidReport r = check_symplectic_matroid(sys);
  const PairedGround g{sys.n};
  if (format == "json") {
    ordered_json out;
    out["n"] = sys.n;
    out["rank"] = sys.k;
    out["bases"] = sys.bases.size();
    out["edges"] = r.edges.size();
    out["symplectic_matroid"] = pass(r.verdict);
    ordered_json bad = ordered_json::array();
    for (const auto& [p, q] : r.offending) bad.push_back({g.label(p), g.label(q)});
    out["offending_edges"] = std::move(bad);
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  std::cout << "admissible bases " << sys.bases.size() << " (n = " << sys.n
            << ", rank " << sys.k << ")\n";
  std::cout << "edges " << r.edges.size() << "\n";
  std::cout << "symplectic_matroid " << pass(r.verdict) << "\n";
  for (const auto& [p, q] : r.offending) {
    std::cout << "  offending edge " << g.label(p) << " -- " << g.label(q) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tropical symplectic Grassmannian toolkit"};
  app.require_subcommand(1);
  unsigned jobs = 1;
  app.add_option("--jobs", jobs, "Worker threads for relation checks")
      ->check(CLI::Range(1u, 256u));

  CheckArgs check;
  auto* c = app.add_subcommand("check", "Plücker, symplectic and isotropy checks");
  c->add_option("file", check.path, "Matroid JSON file")->required();
  c->add_flag("--paired", check.paired, "Treat the ground set as paired");
  c->add_option("--witnesses", check.witnesses, "Witnesses per failing family")
      ->check(CLI::Range(std::size_t{1}, std::size_t{1000000}));
  c->add_option("--format", check.format)->check(CLI::IsMember({"table", "json"}));

  StiefelArgs st;
  auto* s = app.add_subcommand("stiefel", "Tropical Stiefel map of a matrix");
  s->add_option("file", st.path, "Matrix text file")->required();
  s->add_option("--flag", st.flag, "Flag Stiefel map of type a or c")
      ->check(CLI::IsMember({"a", "c"}));
  s->add_flag("--check-presentation", st.check_presentation,
              "Report row-orthogonality and symmetry of (A|B)");
  s->add_option("--name", st.name, "Name stored in the output matroid");

  TreesArgs tr;
  auto* t = app.add_subcommand("trees", "Rank-2 tree space");
  t->add_option("m", tr.m, "Number of leaves")->check(CLI::Range(3, 20));
  t->add_flag("--count-only", tr.count_only);
  t->add_flag("--emit-plucker", tr.emit_plucker, "One matroid per tree (JSON lines)");
  t->add_flag("--normalize", tr.normalize, "Apply the rank-2 lineality shift");
  t->add_flag("--random-lengths", tr.random);
  t->add_option("--seed", tr.seed);
  t->add_option("--from-newick", tr.newick, "Read trees, one Newick per line");

  ConormalArgs co;
  auto* cn = app.add_subcommand("conormal", "Conormal bundle report");
  cn->add_option("file", co.path, "Matroid JSON file")->required();
  cn->add_option("--presentation", co.presentation, "Matrix presenting mu");
  cn->add_option("--dual-presentation", co.dual_presentation,
                 "Matrix presenting the dual");
  cn->add_option("--format", co.format)->check(CLI::IsMember({"table", "json"}));

  std::string zoo_format = "table";
  auto* z = app.add_subcommand("zoo", "Run the example corpus");
  z->add_option("--format", zoo_format)->check(CLI::IsMember({"table", "json"}));

  std::string symp_path;
  std::string symp_format = "table";
  auto* sm = app.add_subcommand("sympmat", "Symplectic matroid edge test");
  sm->add_option("file", symp_path, "Admissible basis list (JSON)")->required();
  sm->add_option("--format", symp_format)->check(CLI::IsMember({"table", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (*c) return cmd_check(check, jobs);
    if (*s) return cmd_stiefel(st, jobs);
    if (*t) {
      if (tr.m == 0 && tr.newick.empty()) {
        throw UsageError("trees: give m or --from-newick");
      }
      return cmd_trees(tr, jobs);
    }
    if (*cn) return cmd_conormal(co, jobs);
    if (*z) return cmd_zoo(zoo_format, jobs);
    if (*sm) return cmd_sympmat(symp_path, symp_format);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const NotFullRankError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRank;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return 0;
}
