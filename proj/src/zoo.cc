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

#include "tropsp/zoo.h"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "tropsp/stiefel.h"

namespace tropsp {

namespace {

// Paired labels: i > 0 is element i, i < 0 is the bar of element -i.
Subset lab(int n, std::initializer_list<int> labels) {
  Subset s;
  for (int l : labels) s = s.with(l > 0 ? l - 1 : n - l - 1);
  return s;
}

ValuatedMatroid without_sets(int m, int k, const std::vector<Subset>& non_bases,
                             std::string name) {
  return ValuatedMatroid::from_function(
      m, k,
      [&](Subset j) {
        return std::find(non_bases.begin(), non_bases.end(), j) ==
                       non_bases.end()
                   ? TropNum(0)
                   : TropNum::inf();
      },
      std::move(name));
}

// Rank 2: J is a basis iff its two elements lie in different classes.
ValuatedMatroid from_parallel_classes(int m, const std::vector<Subset>& classes,
                                      std::string name) {
  return ValuatedMatroid::from_function(
      m, 2,
      [&](Subset j) {
        for (Subset c : classes) {
          if ((j & c).size() == 2) return TropNum::inf();
        }
        for (int e : j.elements()) {
          bool covered = false;
          for (Subset c : classes) covered = covered || c.contains(e);
          if (!covered) return TropNum::inf();
        }
        return TropNum(0);
      },
      std::move(name));
}

std::string describe(const RelationReport& r, int n) {
  if (r.verdict || r.witnesses.empty()) return {};
  const Witness& w = r.witnesses.front();
  const PairedGround g{n};
  std::ostringstream out;
  out << w.relation;
  const char* names[] = {"S", "T"};
  if (w.relation == "isotropy") names[1] = "S2";
  if (w.relation == "lagrangian") names[0] = "J";
  if (w.relation == "linear_space") names[0] = "T";
  for (std::size_t i = 0; i < w.indices.size(); ++i) {
    out << " " << (i < 2 ? names[i] : "X") << "="
        << (n > 0 ? g.label(w.indices[i]) : to_string(w.indices[i]));
  }
  out << " terms [";
  for (std::size_t i = 0; i < w.terms.size(); ++i) {
    out << (i ? " " : "") << w.terms[i];
  }
  out << "] min " << w.min << " x" << w.multiplicity;
  return out.str();
}

Verdict from_report(const RelationReport& r, int n) {
  return {r.verdict, describe(r, n)};
}

TropPoint row_point(const TropMatrix& m, Eigen::Index r) {
  return m.row(r).transpose();
}

}  // namespace

std::vector<PluckerMonomial> mk4_quadric() {
  const int n = 3;
  return {
      {lab(n, {1, 2, 3}), lab(n, {-3, -2, -1})},
      {lab(n, {1, 2, -3}), lab(n, {3, -2, -1})},
      {lab(n, {1, 3, -2}), lab(n, {2, -3, -1})},
      {lab(n, {1, -3, -2}), lab(n, {2, 3, -1})},
      {lab(n, {1, 2, -2}), lab(n, {3, -3, -1})},
  };
}

ValuatedMatroid zoo_mk4() {
  // Edges of K4 on vertices a,b,c,d: 1=ab, ~1=cd, 2=ac, ~2=bd, 3=bc, ~3=ad.
  // Opposite edges are paired; the non-bases are the four triangles.
  const int n = 3;
  return without_sets(6, 3,
                      {lab(n, {1, 2, 3}), lab(n, {1, -2, -3}),
                       lab(n, {2, -1, -3}), lab(n, {3, -1, -2})},
                      "M_K4");
}

ValuatedMatroid zoo_four_points() {
  const int n = 3;
  return from_parallel_classes(6,
                               {lab(n, {1, -1}), lab(n, {2, -2}), lab(n, {3}),
                                lab(n, {-3})},
                               "4points");
}

ValuatedMatroid zoo_cube() {
  return bases_from_rational_matrix(
      // Printed columns read as 1 2 3 4 ~4 ~3 ~2 ~1; stored as 1..4, ~1..~4.
      make_rational_matrix({{1, 1, 1, 1, 1, 1, 1, 1},
                            {0, 1, 1, 0, 0, 1, 1, 0},
                            {0, 0, 2, 2, 2, 2, 0, 0},
                            {0, 0, 0, 0, 1, 1, 1, 1}}),
      "cube");
}

TropMatrix zoo_d_matrix() {
  return make_trop_matrix({{0, 0, 1, 1}, {0, 0, 0, 0}});
}

TropMatrix zoo_e_matrix() {
  return make_trop_matrix({{0, 1, 0, 1}, {0, 0, 0, 0}});
}

namespace {

const TropNum kInf = TropNum::inf();

}  // namespace

TropMatrix zoo_two_lines_presentation() {
  return make_trop_matrix({{0, kInf, kInf, 0, 0, kInf, kInf, 0},
                           {0, 0, 0, kInf, kInf, 0, 0, kInf},
                           {0, 0, 0, 0, 0, 0, 0, 0}});
}

ValuatedMatroid zoo_two_lines() {
  // Rank 3 on 8: {2,3,~2,~3} and {4,~1,~4} are the rank-2 flats.
  const int n = 4;
  const Subset plane = lab(n, {2, 3, -2, -3});
  const Subset line = lab(n, {4, -1, -4});
  return ValuatedMatroid::from_function(
      8, 3,
      [&](Subset j) {
        return j.is_subset_of(plane) || j.is_subset_of(line) ? TropNum::inf()
                                                             : TropNum(0);
      },
      "2lines");
}

TropMatrix zoo_g_presentation() {
  return make_trop_matrix({{0, kInf, kInf, 0, 0, kInf, kInf, 0},
                           {0, 0, 0, kInf, kInf, 0, 0, kInf},
                           {0, 0, 0, kInf, kInf, 0, 0, kInf},
                           {0, 0, 0, 0, 0, 0, 0, 0}});
}

ValuatedMatroid zoo_g() {
  // Rank 4 on 8: {2,3,~2,~3} is a circuit-plane, {4,~1,~4} a line.
  const int n = 4;
  const Subset plane = lab(n, {2, 3, -2, -3});
  const Subset line = lab(n, {4, -1, -4});
  return ValuatedMatroid::from_function(
      8, 4,
      [&](Subset j) {
        return j == plane || line.is_subset_of(j) ? TropNum::inf() : TropNum(0);
      },
      "G");
}

ValuatedMatroid zoo_non_pappus() {
  // A1..A3 = 0..2, B1..B3 = 3..5, C1..C3 = 6..8; the line C1 C2 C3 is absent.
  return without_sets(9, 3,
                      {Subset::of({0, 1, 2}), Subset::of({3, 4, 5}),
                       Subset::of({0, 4, 8}), Subset::of({1, 3, 8}),
                       Subset::of({0, 5, 7}), Subset::of({2, 3, 7}),
                       Subset::of({1, 5, 6}), Subset::of({2, 4, 6})},
                      "nonPappus");
}

AdmissibleBasisSystem zoo_sympmat_system() {
  const int n = 3;
  const PairedGround g{n};
  const std::vector<Subset> non_bases = {lab(n, {1, 2}), lab(n, {1, -2}),
                                         lab(n, {-1, 3}), lab(n, {-1, -3})};
  AdmissibleBasisSystem sys{n, 2, {}};
  for_each_subset(2 * n, 2, [&](Subset j) {
    if (g.admissible(j) &&
        std::find(non_bases.begin(), non_bases.end(), j) == non_bases.end()) {
      sys.bases.push_back(j);
    }
  });
  return sys;
}

ValuatedMatroid zoo_sympmat_completion() {
  const int n = 3;
  return from_parallel_classes(6, {lab(n, {1, 2, -2}), lab(n, {-1, 3, -3})},
                               "sympmat");
}

std::map<std::string, Verdict> standard_predicates(
    const ValuatedMatroid& mu, bool paired,
    const std::optional<TropMatrix>& presentation,
    const CheckOptions& options) {
  std::map<std::string, Verdict> out;
  const int n = paired ? mu.ground_size() / 2 : 0;
  const RelationReport plucker = check_plucker(mu, options);
  out["plucker"] = from_report(plucker, n);
  if (paired) {
    const RelationReport symp = check_symplectic_relations(mu, options);
    out["symplectic"] = from_report(symp, n);
    out["spdr"] = {plucker.verdict && symp.verdict,
                   plucker.verdict ? describe(symp, n) : describe(plucker, n)};
    if (mu.rank() <= n) out["isotropic"] = from_report(isotropy(mu, options), n);
  }
  if (presentation) {
    const Presentation p(*presentation);
    const RowOrthogonality ro = row_orthogonal(p);
    out["row_orthogonal"] = {
        ro.verdict, ro.pair ? "rows " + std::to_string(ro.pair->first + 1) +
                                  "," + std::to_string(ro.pair->second + 1)
                            : ""};
    const Symmetry sym = symmetric_presentation(p);
    std::string w;
    if (sym.entry) {
      const auto [i, j] = *sym.entry;
      w = "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
          ")=" + sym.product(i, j).str() + " vs (" + std::to_string(j + 1) +
          "," + std::to_string(i + 1) + ")=" + sym.product(j, i).str();
    }
    out["symmetric"] = {sym.verdict, w};
  }
  return out;
}

std::vector<ZooEntry> build_corpus() {
  std::vector<ZooEntry> c;

  {
    ZooEntry e{"M_K4", "spanning trees of K4, opposite edges paired",
               zoo_mk4(), true, std::nullopt,
               {{"plucker", true}, {"symplectic", true}, {"spdr", true},
                {"isotropic", true}, {"isotropy_oracle", true},
                {"quadric5", false}, {"quadric4", true},
                {"bar_relabel_is_dual", true}},
               nullptr};
    e.extra = [mu = e.mu] {
      std::map<std::string, Verdict> x;
      const auto q = mk4_quadric();
      const MinTwice q5 = trop_poly_min_twice(mu, q);
      x["quadric5"] = {q5.verdict, "min " + q5.min.str() + " x" +
                                       std::to_string(q5.multiplicity)};
      const MinTwice q4 = trop_poly_min_twice(
          mu, std::vector<PluckerMonomial>(q.begin(), q.end() - 1));
      x["quadric4"] = {q4.verdict, "min " + q4.min.str() + " x" +
                                       std::to_string(q4.multiplicity)};
      x["isotropy_oracle"] = {isotropy_oracle(mu), ""};
      x["bar_relabel_is_dual"] = {bar_relabel(mu) == dual(mu), ""};
      return x;
    };
    c.push_back(std::move(e));
  }
  {
    ZooEntry e{"4points", "rank 2, parallel classes {1,~1} {2,~2} {3} {~3}",
               zoo_four_points(), true, std::nullopt,
               {{"plucker", true}, {"symplectic", false}, {"spdr", false},
                {"isotropic", true}, {"isotropy_oracle", true},
                {"rank2_normalizable", false}},
               nullptr};
    e.extra = [mu = e.mu] {
      return std::map<std::string, Verdict>{
          {"isotropy_oracle", {isotropy_oracle(mu), ""}},
          {"rank2_normalizable",
           {symplectic_rank2_normalize(mu).has_value(), ""}}};
    };
    c.push_back(std::move(e));
  }
  {
    ZooEntry e{"cube", "column matroid of a 4x8 rational matrix", zoo_cube(),
               true, std::nullopt,
               {{"plucker", true}, {"symplectic", false}, {"spdr", false},
                {"isotropic", true}, {"isotropy_oracle", true}},
               nullptr};
    e.extra = [mu = e.mu] {
      return std::map<std::string, Verdict>{
          {"isotropy_oracle", {isotropy_oracle(mu), ""}}};
    };
    c.push_back(std::move(e));
  }
  {
    ZooEntry e{"D", "presentation (0 0 1 1; 0 0 0 0)",
               stiefel(zoo_d_matrix(), "D"), true, zoo_d_matrix(),
               {{"plucker", true}, {"symplectic", true}, {"spdr", true},
                {"isotropic", true}, {"isotropy_oracle", true},
                {"row_orthogonal", true}, {"symmetric", false}},
               nullptr};
    e.extra = [mu = e.mu] {
      return std::map<std::string, Verdict>{
          {"isotropy_oracle", {isotropy_oracle(mu), ""}}};
    };
    c.push_back(std::move(e));
  }
  {
    ZooEntry e{"E", "presentation (0 1 0 1; 0 0 0 0)",
               stiefel(zoo_e_matrix(), "E"), true, zoo_e_matrix(),
               {{"plucker", true}, {"symplectic", false}, {"spdr", false},
                {"isotropic", false}, {"isotropy_oracle", false},
                {"row_orthogonal", true}, {"symmetric", true}},
               nullptr};
    e.extra = [mu = e.mu] {
      return std::map<std::string, Verdict>{
          {"isotropy_oracle", {isotropy_oracle(mu), ""}}};
    };
    c.push_back(std::move(e));
  }
  for (const bool g : {false, true}) {
    const TropMatrix pres =
        g ? zoo_g_presentation() : zoo_two_lines_presentation();
    ZooEntry e{g ? "G" : "2lines",
               g ? "rank 4: {2,3,~2,~3} dependent, {4,~1,~4} rank 2"
                 : "rank 3: flats {2,3,~2,~3} and {4,~1,~4} of rank 2",
               g ? zoo_g() : zoo_two_lines(), true, pres,
               {{"plucker", true}, {"symplectic", true}, {"spdr", true},
                {"isotropic", false}, {"isotropy_oracle", false},
                {"row_orthogonal", false}, {"symmetric", false},
                {"orthogonal(R1,R2)", false}, {"presents_matroid", true}},
               nullptr};
    e.extra = [mu = e.mu, pres] {
      return std::map<std::string, Verdict>{
          {"isotropy_oracle", {isotropy_oracle(mu), ""}},
          {"orthogonal(R1,R2)",
           {orthogonal(row_point(pres, 0), row_point(pres, 1)).verdict, ""}},
          {"presents_matroid", {stiefel(pres).equivalent(mu), ""}}};
    };
    c.push_back(std::move(e));
  }
  {
    ZooEntry e{"nonPappus",
               "rank 3 on 9 with 8 three-point lines; x = C3",
               zoo_non_pappus(), false, std::nullopt,
               {{"plucker", true}, {"deletion_rank3_on_8", true},
                {"contraction_rank2_on_8", true}, {"deletion_plucker", true},
                {"contraction_plucker", true},
                {"incidence(P/x,P\\x)", true}},
               nullptr};
    e.extra = [mu = e.mu] {
      const Subset x = Subset::of({kNonPappusX});
      const ValuatedMatroid del = minor(mu, x, Subset());
      const ValuatedMatroid con = minor(mu, Subset(), x);
      const RelationReport inc = incidence(con, del);
      return std::map<std::string, Verdict>{
          {"deletion_rank3_on_8",
           {del.rank() == 3 && del.ground_size() == 8, ""}},
          {"contraction_rank2_on_8",
           {con.rank() == 2 && con.ground_size() == 8, ""}},
          {"deletion_plucker", {check_plucker(del).verdict, ""}},
          {"contraction_plucker", {check_plucker(con).verdict, ""}},
          {"incidence(P/x,P\\x)", from_report(inc, 0)}};
    };
    c.push_back(std::move(e));
  }
  {
    ZooEntry e{"sympmat",
               "admissible 2-sets of [6] minus {1,2} {1,~2} {~1,3} {~1,~3}; "
               "completion has classes {1,2,~2} {~1,3,~3}",
               zoo_sympmat_completion(), true, std::nullopt,
               {{"plucker", true}, {"symplectic", false}, {"spdr", false},
                {"isotropic", false}, {"isotropy_oracle", false},
                {"symplectic_matroid", true}, {"completion_matches", true}},
               nullptr};
    e.extra = [mu = e.mu] {
      const AdmissibleBasisSystem sys = zoo_sympmat_system();
      const SymplecticMatroidReport r = check_symplectic_matroid(sys);
      std::string w;
      if (!r.offending.empty()) {
        const PairedGround g{sys.n};
        w = "edge " + g.label(r.offending[0].first) + " -- " +
            g.label(r.offending[0].second);
      }
      return std::map<std::string, Verdict>{
          {"isotropy_oracle", {isotropy_oracle(mu), ""}},
          {"symplectic_matroid", {r.verdict, w}},
          {"completion_matches", {admissible_bases(mu).bases == sys.bases, ""}}};
    };
    c.push_back(std::move(e));
  }
  return c;
}

std::vector<ZooCheck> extension_stability(const ZooEntry& e,
                                          const CheckOptions& options) {
  std::vector<ZooCheck> out;
  const auto base = standard_predicates(e.mu, e.paired, e.presentation, options);
  for (const PairKind kind : {PairKind::kU02, PairKind::kU12}) {
    const bool u12 = kind == PairKind::kU12;
    ValuatedMatroid ext =
        e.paired ? extend_with_pair(e.mu, kind)
                 : direct_sum(e.mu, ValuatedMatroid::uniform(u12 ? 1 : 0, 2));
    std::optional<TropMatrix> pres;
    if (e.presentation) pres = extend_presentation(*e.presentation, kind);
    const auto after = standard_predicates(ext, e.paired, pres, options);
    ZooCheck check{e.name + (u12 ? " + U12" : " + U02"), true, ""};
    for (const auto& [name, v] : base) {
      auto it = after.find(name);
      if (it == after.end()) {
        check.holds = false;
        check.detail += name + " missing; ";
      } else if (it->second.value != v.value) {
        check.holds = false;
        check.detail += name + " changed; ";
      }
    }
    if (check.detail.empty()) {
      check.detail = std::to_string(base.size()) + " predicates unchanged";
    }
    out.push_back(std::move(check));
  }
  return out;
}

ZooReport run_zoo(const CheckOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  ZooReport report;
  std::map<std::string, std::map<std::string, bool>> table;
  const std::vector<ZooEntry> corpus = build_corpus();
  for (const ZooEntry& e : corpus) {
    auto verdicts = standard_predicates(e.mu, e.paired, e.presentation, options);
    if (e.extra) {
      for (auto& [k, v] : e.extra()) verdicts[k] = std::move(v);
    }
    for (const auto& [pred, v] : verdicts) {
      ZooRow row{e.name, pred, v.value, std::nullopt, v.witness};
      if (auto it = e.expected.find(pred); it != e.expected.end()) {
        row.expected = it->second;
      }
      table[e.name][pred] = v.value;
      report.rows.push_back(std::move(row));
    }
    for (const auto& [pred, want] : e.expected) {
      if (!verdicts.count(pred)) {
        report.rows.push_back(ZooRow{e.name, pred, !want, want, "not computed"});
      }
    }
  }

  auto get = [&](const std::string& e, const std::string& p) {
    return table[e][p];
  };
  report.implications.push_back(
      {"isotropic does not imply spdr (4points)",
       get("4points", "isotropic") && !get("4points", "spdr"), ""});
  for (const char* name : {"2lines", "G"}) {
    report.implications.push_back(
        {std::string("spdr does not imply isotropic (") + name + ")",
         get(name, "spdr") && !get(name, "isotropic"), ""});
  }
  for (const char* name : {"D", "E"}) {
    report.implications.push_back(
        {std::string("symmetric implies row_orthogonal (") + name + ")",
         !get(name, "symmetric") || get(name, "row_orthogonal"), ""});
  }
  for (const ZooEntry& e : corpus) {
    for (ZooCheck& s : extension_stability(e, options)) {
      report.stability.push_back(std::move(s));
    }
  }

  for (const ZooRow& r : report.rows) report.diffs += r.diff();
  for (const ZooCheck& c : report.implications) report.diffs += !c.holds;
  for (const ZooCheck& c : report.stability) report.diffs += !c.holds;
  report.seconds = std::chrono::duration<double>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return report;
}

}  // namespace tropsp
