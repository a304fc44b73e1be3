// Copyright 2026 The Schubitope Authors.
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

#include "schubitope/verify.h"

#include <algorithm>
#include <atomic>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "schubitope/certify.h"
#include "schubitope/errors.h"
#include "schubitope/matroid.h"
#include "schubitope/polyoracle.h"

namespace schubitope {
namespace {

using CheckFn = std::function<void(const VerifyOptions&, CheckResult&)>;

struct Check {
  const char* name;
  CheckFn run;
};

// Largest composition part exercised at grid size n.
int PartCap(int n) {
  if (n <= 4) return std::min(3, n);
  return n == 5 ? 2 : 1;
}

std::vector<Composition> AllCompositions(int n, int max_part) {
  std::vector<Composition> out;
  std::vector<int> parts(n, 0);
  while (true) {
    out.emplace_back(parts);
    int k = n - 1;
    while (k >= 0 && parts[k] == max_part) parts[k--] = 0;
    if (k < 0) break;
    ++parts[k];
  }
  return out;
}

std::vector<IndexSet> AllSubsets(int n) {
  std::vector<IndexSet> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    out.push_back(IndexSet::FromMask(n, m));
  }
  return out;
}

Diagram RandomDiagram(int n, std::mt19937_64& rng) {
  std::vector<Box> boxes;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (rng() & 1u) boxes.push_back({i, j});
    }
  }
  return Diagram(n, std::move(boxes));
}

std::string Encode(const Diagram& d) { return DiagramToJson(d).dump(); }

std::string Encode(const LatticePoint& p) { return PointToString(p); }

// Random diagrams plus every Rothe and skyline diagram at size n.
std::vector<Diagram> DiagramCorpus(const VerifyOptions& o, int random_count) {
  std::mt19937_64 rng(o.seed);
  std::vector<Diagram> corpus;
  for (int k = 0; k < random_count; ++k) corpus.push_back(RandomDiagram(o.n, rng));
  for (const Permutation& w : AllPermutations(o.n)) corpus.push_back(Rothe(w));
  for (const Composition& a : AllCompositions(o.n, PartCap(o.n))) {
    corpus.push_back(Skyline(a));
  }
  return corpus;
}

Diagram ColumnDiagram(const Column& c) {
  std::vector<Box> boxes;
  for (int i : c.elements()) boxes.push_back({i, 1});
  return Diagram(c.n(), std::move(boxes));
}

void WOfShortest(const VerifyOptions& o, CheckResult& r) {
  const std::vector<Permutation> perms = AllPermutations(o.n);
  for (const Composition& alpha : AllCompositions(o.n, PartCap(o.n))) {
    ++r.instances;
    const Composition lambda = LambdaOf(alpha);
    const Permutation w = WOf(alpha);
    if (Act(lambda, w) != alpha) {
      r.counterexample = "alpha=" + alpha.ToString() + ": lambda.w(alpha) != alpha";
      return;
    }
    for (const Permutation& sigma : perms) {
      if (Act(lambda, sigma) == alpha && sigma.length() < w.length()) {
        r.counterexample = "alpha=" + alpha.ToString() + ": " +
                           sigma.ToString() + " is shorter than w(alpha)=" +
                           w.ToString();
        return;
      }
    }
  }
}

void BruhatSubword(const VerifyOptions& o, CheckResult& r) {
  const std::vector<Permutation> perms = AllPermutations(o.n);
  for (const Permutation& u : perms) {
    for (const Permutation& w : perms) {
      ++r.instances;
      if (BruhatLeq(u, w) != BruhatLeqBySubword(u, w)) {
        r.counterexample = "u=" + u.ToString() + " w=" + w.ToString();
        return;
      }
    }
  }
}

void CompositionSwaps(const VerifyOptions& o, CheckResult& r) {
  const std::vector<Composition> all = AllCompositions(o.n, PartCap(o.n));
  for (const Composition& alpha : all) {
    for (const Composition& beta : all) {
      ++r.instances;
      if (CompositionLeq(beta, alpha) != CompositionLeqBySwaps(beta, alpha)) {
        r.counterexample =
            "beta=" + beta.ToString() + " alpha=" + alpha.ToString();
        return;
      }
    }
  }
}

void VertexCompositionRecursion(const VerifyOptions& o, CheckResult& r) {
  for (const Composition& alpha : AllCompositions(o.n, PartCap(o.n))) {
    const std::vector<Composition> v = VertexCompositions(alpha);
    // Direct definition {beta : beta <= alpha} over the rearrangements.
    std::set<Composition> direct;
    std::vector<int> parts(alpha.parts().begin(), alpha.parts().end());
    std::sort(parts.begin(), parts.end());
    do {
      Composition beta(parts);
      if (CompositionLeq(beta, alpha)) direct.insert(beta);
    } while (std::next_permutation(parts.begin(), parts.end()));
    ++r.instances;
    if (std::vector<Composition>(direct.begin(), direct.end()) != v) {
      r.counterexample = "alpha=" + alpha.ToString() +
                         ": V(alpha) differs from {beta : beta <= alpha}";
      return;
    }
    for (int s = 1; s < o.n; ++s) {
      if (alpha.part(s) >= alpha.part(s + 1)) continue;
      ++r.instances;
      const Permutation sr = Permutation::Identity(o.n).TimesAdjacent(s);
      const Composition prev = Act(alpha, sr);
      std::set<Composition> joined;
      for (const Composition& b : VertexCompositions(prev)) {
        joined.insert(b);
        joined.insert(Act(b, sr));
      }
      if (std::vector<Composition>(joined.begin(), joined.end()) != v) {
        r.counterexample = "alpha=" + alpha.ToString() +
                           " r=" + std::to_string(s) +
                           ": V(alpha) != V(alpha s_r) u V(alpha s_r) s_r";
        return;
      }
    }
  }
}

void RotheSize(const VerifyOptions& o, CheckResult& r) {
  for (const Permutation& w : AllPermutations(o.n)) {
    ++r.instances;
    if (Rothe(w).size() != w.length()) {
      r.counterexample = "w=" + w.ToString();
      return;
    }
  }
}

void RankOrderIndependence(const VerifyOptions& o, CheckResult& r) {
  for (const IndexSet& c : AllSubsets(o.n)) {
    for (const IndexSet& s : AllSubsets(o.n)) {
      std::vector<int> order = s.elements();
      const int expected = FillColumn(c, order).size();
      do {
        ++r.instances;
        const ColumnFilling f = FillColumn(c, order);
        if (f.size() != expected || !f.IsFlagged() || !f.IsColumnStrict()) {
          r.counterexample = "C=" + c.ToString() + " S=" + s.ToString();
          return;
        }
      } while (std::next_permutation(order.begin(), order.end()));
    }
  }
}

void RankTriple(const VerifyOptions& o, CheckResult& r) {
  for (const IndexSet& c : AllSubsets(o.n)) {
    for (const IndexSet& s : AllSubsets(o.n)) {
      ++r.instances;
      const int a = RankFilling(c, s);
      const int b = RankBrute(c, s);
      const int m = RankMaxFilling(c, s);
      if (a != b || b != m) {
        r.counterexample = "C=" + c.ToString() + " S=" + s.ToString() +
                           ": filling=" + std::to_string(a) +
                           " brute=" + std::to_string(b) +
                           " max_filling=" + std::to_string(m);
        return;
      }
      for (int e : s.elements()) {
        IndexSet smaller = s;
        smaller.erase(e);
        const int step = a - RankFilling(c, smaller);
        if (step != 0 && step != 1) {
          r.counterexample = "C=" + c.ToString() + " S=" + s.ToString() +
                             ": rank step " + std::to_string(step);
          return;
        }
      }
    }
  }
}

// Every column-strict flagged filling of c with entries in [n].
void ForEachFlaggedFilling(const Column& c,
                           const std::function<bool(const ColumnFilling&)>& fn) {
  const std::vector<int> rows = c.elements();
  ColumnFilling f(c);
  std::vector<bool> used(c.n() + 1, false);
  std::function<bool(std::size_t)> rec = [&](std::size_t k) -> bool {
    if (k == rows.size()) return fn(f);
    if (!rec(k + 1)) return false;
    for (int v = 1; v <= rows[k]; ++v) {
      if (used[v]) continue;
      used[v] = true;
      f.assign(rows[k], v);
      const bool keep_going = rec(k + 1);
      f.clear(rows[k]);
      used[v] = false;
      if (!keep_going) return false;
    }
    return true;
  };
  rec(0);
}

std::vector<int> SortedValues(const ColumnFilling& f) {
  std::vector<int> v;
  for (const auto& [row, value] : f.entries()) v.push_back(value);
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<int> OccupiedRows(const ColumnFilling& f) {
  std::vector<int> rows;
  for (const auto& [row, value] : f.entries()) rows.push_back(row);
  return rows;
}

void SortStandardize(const VerifyOptions& o, CheckResult& r) {
  const int n = std::min(o.n, 5);
  for (const IndexSet& c : AllSubsets(n)) {
    ForEachFlaggedFilling(c, [&](const ColumnFilling& f) {
      ++r.instances;
      const ColumnFilling sorted = SortFilling(f);
      const ColumnFilling standard = Standardize(sorted);
      const bool ok =
          sorted.IsFlagged() && sorted.IsIncreasing() &&
          SortedValues(sorted) == SortedValues(f) &&
          OccupiedRows(sorted) == OccupiedRows(f) && standard.IsFlagged() &&
          standard.IsIncreasing() && standard.IsColumnStrict() &&
          SortedValues(standard) == SortedValues(f) &&
          Standardize(standard) == standard;
      if (!ok) {
        std::string entries;
        for (const auto& [row, v] : f.entries()) {
          entries += std::to_string(row) + "->" + std::to_string(v) + " ";
        }
        r.counterexample = "C=" + c.ToString() + " F=" + entries;
        return false;
      }
      return true;
    });
    if (r.counterexample) return;
  }
}

void Submodularity(const VerifyOptions& o, CheckResult& r) {
  std::mt19937_64 rng(o.seed ^ 0x5bd1e995u);
  const int samples = std::max(1, o.random_diagrams / 4);
  for (int k = 0; k < samples; ++k) {
    const Diagram d = RandomDiagram(o.n, rng);
    ++r.instances;
    auto rank = [&d](const IndexSet& s) { return RankDiagram(d, s); };
    auto theta = [&d](const IndexSet& s) { return Theta(d, s); };
    if (auto bad = FindSubmodularityViolation(o.n, rank)) {
      r.counterexample = "r_D not submodular: D=" + Encode(d) +
                         " S=" + bad->first.ToString() +
                         " T=" + bad->second.ToString();
      return;
    }
    if (auto bad = FindSubmodularityViolation(o.n, theta)) {
      r.counterexample = "theta_D not submodular: D=" + Encode(d) +
                         " S=" + bad->first.ToString() +
                         " T=" + bad->second.ToString();
      return;
    }
  }
}

void ThetaRankIdentity(const VerifyOptions& o, CheckResult& r) {
  for (const Diagram& d : DiagramCorpus(o, o.random_diagrams)) {
    for (const IndexSet& s : AllSubsets(o.n)) {
      ++r.instances;
      const int theta = Theta(d, s);
      const int rank = RankDiagram(d, s);
      if (theta != rank) {
        r.counterexample = "D=" + Encode(d) + " S=" + s.ToString() +
                           ": theta=" + std::to_string(theta) +
                           " rank=" + std::to_string(rank);
        return;
      }
    }
  }
}

void GreedyFillingAgreement(const VerifyOptions& o, CheckResult& r) {
  const std::vector<Permutation> perms = AllPermutations(o.n);
  // The full corpus times S_n is large at n >= 5; sample it down.
  const int random_count = o.n <= 4 ? o.random_diagrams : 20;
  for (const Diagram& d : DiagramCorpus(o, random_count)) {
    auto rank = [&d](const IndexSet& s) { return RankDiagram(d, s); };
    for (const Permutation& w : perms) {
      ++r.instances;
      const LatticePoint x = VertexVector(d, w);
      if (x != EdmondsVertex(rank, w)) {
        r.counterexample = "D=" + Encode(d) + " w=" + w.ToString() +
                           ": x(w)=" + Encode(x) + " differs from greedy";
        return;
      }
      IndexSet prefix(o.n);
      int sum = 0;
      for (int k = 1; k <= o.n; ++k) {
        prefix.insert(w(k));
        sum += x[w(k) - 1];
        if (sum != RankDiagram(d, prefix) || sum != Theta(d, prefix)) {
          r.counterexample = "D=" + Encode(d) + " w=" + w.ToString() +
                             ": prefix " + prefix.ToString() + " not tight";
          return;
        }
      }
    }
  }
}

void MinkowskiDecomposition(const VerifyOptions& o, CheckResult& r) {
  if (o.n > 4) {
    r.skipped = "the Minkowski sum enumeration is run for n <= 4";
    return;
  }
  for (const Diagram& d : DiagramCorpus(o, 20)) {
    ++r.instances;
    const HRep h = Hrep(d);
    std::set<LatticePoint> sums{LatticePoint(o.n, 0)};
    for (const Column& c : d.columns()) {
      std::set<LatticePoint> next;
      const std::vector<IndexSet> bases = SchubertMatroidBases(c);
      for (const LatticePoint& p : sums) {
        for (const IndexSet& b : bases) {
          LatticePoint q = p;
          for (int i : b.elements()) ++q[i - 1];
          next.insert(std::move(q));
        }
      }
      sums = std::move(next);
    }
    for (const LatticePoint& p : sums) {
      if (!Member(h, p)) {
        r.counterexample = "D=" + Encode(d) + ": column-vertex sum " +
                           Encode(p) + " outside hrep(D)";
        return;
      }
    }
    for (const LatticePoint& v : Vertices(d)) {
      if (!sums.count(v)) {
        r.counterexample = "D=" + Encode(d) + ": vertex " + Encode(v) +
                           " is not a sum of column vertices";
        return;
      }
    }
  }
}

void MatroidPolytope(const VerifyOptions& o, CheckResult& r) {
  const int n = std::min(o.n, 5);
  for (const IndexSet& c : AllSubsets(n)) {
    ++r.instances;
    std::vector<LatticePoint> points;
    for (const IndexSet& b : SchubertMatroidBases(c)) {
      LatticePoint e(n, 0);
      for (int i : b.elements()) e[i - 1] = 1;
      points.push_back(std::move(e));
    }
    const CertificationReport report =
        CertifyVertices(Hrep(ColumnDiagram(c)), points);
    if (!report.passed()) {
      r.counterexample = "C=" + c.ToString() + ": " + report.witnesses.front();
      return;
    }
  }
}

void SkylineVertices(const VerifyOptions& o, CheckResult& r) {
  for (const Composition& alpha : AllCompositions(o.n, PartCap(o.n))) {
    ++r.instances;
    std::vector<LatticePoint> expected;
    for (const Composition& b : VertexCompositions(alpha)) {
      expected.emplace_back(b.parts().begin(), b.parts().end());
    }
    if (Vertices(Skyline(alpha)) != expected) {
      r.counterexample = "alpha=" + alpha.ToString();
      return;
    }
  }
}

void VertexSymmetries(const VerifyOptions& o, CheckResult& r) {
  const std::vector<Permutation> perms = AllPermutations(o.n);
  for (const Composition& alpha : AllCompositions(o.n, PartCap(o.n))) {
    const Diagram d = Skyline(alpha);
    for (int s = 1; s < o.n; ++s) {
      if (alpha.part(s) >= alpha.part(s + 1)) continue;
      const Permutation sr = Permutation::Identity(o.n).TimesAdjacent(s);
      const Diagram d_swapped = Skyline(Act(alpha, sr));
      for (const Permutation& w : perms) {
        const Permutation inv = w.inverse();
        if (inv(s) > inv(s + 1)) continue;
        ++r.instances;
        const LatticePoint x = VertexVector(d, w);
        if (x != Act(VertexVector(d, w.AdjacentTimes(s)), sr)) {
          r.counterexample = "alpha=" + alpha.ToString() + " r=" +
                             std::to_string(s) + " w=" + w.ToString() +
                             ": x(w) != x(s_r w).s_r";
          return;
        }
        if (x != VertexVector(d_swapped, w)) {
          r.counterexample = "alpha=" + alpha.ToString() + " r=" +
                             std::to_string(s) + " w=" + w.ToString() +
                             ": x(w) != x'(w)";
          return;
        }
      }
    }
  }
}

Polynomial RandomPolynomial(int n, int max_degree, std::mt19937_64& rng) {
  Polynomial f(n);
  std::uniform_int_distribution<int> coefficient(-3, 3);
  std::uniform_int_distribution<int> terms(1, 6);
  const int count = terms(rng);
  for (int t = 0; t < count; ++t) {
    Exponent e(n, 0);
    int degree = static_cast<int>(rng() % (max_degree + 1));
    while (degree-- > 0) ++e[rng() % n];
    f.AddTerm(e, coefficient(rng));
  }
  return f;
}

void OperatorRelations(const VerifyOptions& o, CheckResult& r) {
  if (o.n < 2) {
    r.skipped = "needs n >= 2";
    return;
  }
  const int n = std::min(o.n, 4);
  std::mt19937_64 rng(o.seed ^ 0x9e3779b97f4a7c15ull);
  for (int k = 0; k < 200; ++k) {
    const Polynomial f = RandomPolynomial(n, 4, rng);
    for (int i = 1; i < n; ++i) {
      ++r.instances;
      const Polynomial di = DividedDifference(f, i);
      const Polynomial pi = Demazure(f, i);
      bool ok = DividedDifference(di, i).IsZero() && Demazure(pi, i) == pi;
      if (i + 1 < n) {
        ok = ok && DividedDifference(DividedDifference(di, i + 1), i) ==
                       DividedDifference(
                           DividedDifference(DividedDifference(f, i + 1), i),
                           i + 1);
        ok = ok && Demazure(Demazure(pi, i + 1), i) ==
                       Demazure(Demazure(Demazure(f, i + 1), i), i + 1);
      }
      if (!ok) {
        r.counterexample = "f=" + f.ToString() + " i=" + std::to_string(i);
        return;
      }
    }
  }
}

bool AllPositive(const Polynomial& f) {
  return std::all_of(f.terms().begin(), f.terms().end(),
                     [](const auto& t) { return t.second > 0; });
}

void ChainIndependence(const VerifyOptions& o, CheckResult& r) {
  if (o.n > 5) {
    r.skipped = "polynomial checks run for n <= 5";
    return;
  }
  PolynomialOracle oracle;
  for (const Permutation& w : AllPermutations(o.n)) {
    ++r.instances;
    const Polynomial f = oracle.Schubert(w, Chain::kFirstAscent);
    if (f != oracle.Schubert(w, Chain::kLastAscent) || !AllPositive(f)) {
      r.counterexample = "schubert w=" + w.ToString();
      return;
    }
  }
  for (const Composition& alpha : AllCompositions(o.n, PartCap(o.n))) {
    ++r.instances;
    const Polynomial f = oracle.Key(alpha, Chain::kFirstAscent);
    if (f != oracle.Key(alpha, Chain::kLastAscent) || !AllPositive(f)) {
      r.counterexample = "key alpha=" + alpha.ToString();
      return;
    }
  }
}

void SchubertNewton(const VerifyOptions& o, CheckResult& r) {
  if (o.n > 5) {
    r.skipped = "polynomial checks run for n <= 5";
    return;
  }
  PolynomialOracle oracle;
  for (const Permutation& w : AllPermutations(o.n)) {
    ++r.instances;
    const Diagram d = Rothe(w);
    const HRep h = Hrep(d);
    const std::vector<LatticePoint> exponents =
        NewtonExponents(oracle.Schubert(w));
    for (const LatticePoint& e : exponents) {
      if (!Member(h, e)) {
        r.counterexample = "w=" + w.ToString() + ": exponent " + Encode(e) +
                           " outside hrep(D(w))";
        return;
      }
    }
    const std::vector<LatticePoint> vertices = Vertices(d);
    const std::set<LatticePoint> support(exponents.begin(), exponents.end());
    for (const LatticePoint& v : vertices) {
      if (!support.count(v)) {
        r.counterexample = "w=" + w.ToString() + ": vertex " + Encode(v) +
                           " is not an exponent";
        return;
      }
    }
    const CertificationReport report = CertifyVertices(h, vertices);
    if (!report.passed()) {
      r.counterexample = "w=" + w.ToString() + ": " + report.witnesses.front();
      return;
    }
    if (ExtremePoints(exponents) != vertices) {
      r.counterexample = "w=" + w.ToString() +
                         ": Newton polytope vertices differ from x(S_n)";
      return;
    }
  }
}

void KeyNewton(const VerifyOptions& o, CheckResult& r) {
  if (o.n > 4) {
    r.skipped = "key Newton polytopes are certified for n <= 4";
    return;
  }
  PolynomialOracle oracle;
  for (const Composition& alpha : AllCompositions(o.n, PartCap(o.n))) {
    ++r.instances;
    const std::vector<LatticePoint> extreme =
        ExtremePoints(NewtonExponents(oracle.Key(alpha)));
    std::vector<LatticePoint> expected;
    for (const Composition& b : VertexCompositions(alpha)) {
      expected.emplace_back(b.parts().begin(), b.parts().end());
    }
    if (extreme != expected) {
      r.counterexample = "alpha=" + alpha.ToString() +
                         ": Newton vertices differ from {beta <= alpha}";
      return;
    }
    const CertificationReport report =
        CertifyVertices(Hrep(Skyline(alpha)), extreme);
    if (!report.passed()) {
      r.counterexample =
          "alpha=" + alpha.ToString() + ": " + report.witnesses.front();
      return;
    }
    if (std::is_sorted(alpha.parts().begin(), alpha.parts().end())) {
      // Schur case: the permutohedron of lambda(alpha).
      std::vector<int> parts(alpha.parts().begin(), alpha.parts().end());
      std::vector<LatticePoint> rearrangements;
      do {
        rearrangements.push_back(parts);
      } while (std::next_permutation(parts.begin(), parts.end()));
      if (extreme != rearrangements) {
        r.counterexample = "alpha=" + alpha.ToString() +
                           ": Schur Newton polytope is not the permutohedron";
        return;
      }
    }
  }
}

void BruhatIntervalPolytope(const VerifyOptions& o, CheckResult& r) {
  if (o.n > 4) {
    r.skipped = "key polynomials of permutations are expanded for n <= 4";
    return;
  }
  PolynomialOracle oracle;
  const std::vector<Permutation> perms = AllPermutations(o.n);
  for (const Permutation& w : perms) {
    ++r.instances;
    const Composition alpha(std::vector<int>(w.entries().begin(), w.entries().end()));
    const std::vector<LatticePoint> extreme =
        ExtremePoints(NewtonExponents(oracle.Key(alpha)));
    std::vector<LatticePoint> interval;
    for (const Permutation& v : perms) {
      if (BruhatLeq(w, v)) interval.emplace_back(v.entries().begin(), v.entries().end());
    }
    if (extreme != interval) {
      r.counterexample = "w=" + w.ToString() +
                         ": Newton(kappa_w) vertices differ from [w, w0]";
      return;
    }
  }
}

void JsonRoundTrip(const VerifyOptions& o, CheckResult& r) {
  auto same = [](const Json& j, auto parse, auto write) {
    const std::string text = j.dump();
    return write(parse(ParseJson(text))).dump() == text;
  };
  for (const Diagram& d : DiagramCorpus(o, 10)) {
    r.instances += 3;
    const HRep h = Hrep(d);
    const bool ok =
        same(DiagramToJson(d), DiagramFromJson, DiagramToJson) &&
        same(HRepToJson(h), HRepFromJson, HRepToJson) &&
        HRepToHForm(HRepFromHForm(HRepToHForm(h))) == HRepToHForm(h) &&
        same(VerticesToJson(Vertices(d)), VerticesFromJson,
             [](std::vector<LatticePoint> v) { return VerticesToJson(std::move(v)); });
    if (!ok) {
      r.counterexample = "D=" + Encode(d);
      return;
    }
  }
  if (o.n <= 5) {
    for (const Permutation& w : AllPermutations(o.n)) {
      ++r.instances;
      if (!same(PolynomialToJson(SchubertPolynomial(w)), PolynomialFromJson,
                PolynomialToJson)) {
        r.counterexample = "schubert w=" + w.ToString();
        return;
      }
    }
  }
}

const std::vector<Check>& Checks() {
  static const std::vector<Check> checks = {
      {"w_of_shortest", WOfShortest},
      {"bruhat_vs_subword", BruhatSubword},
      {"composition_order_vs_swaps", CompositionSwaps},
      {"vertex_compositions_recursion", VertexCompositionRecursion},
      {"rothe_size_is_length", RotheSize},
      {"rank_order_independence", RankOrderIndependence},
      {"rank_three_ways", RankTriple},
      {"sort_and_standardize", SortStandardize},
      {"submodularity", Submodularity},
      {"theta_equals_rank", ThetaRankIdentity},
      {"greedy_equals_filling", GreedyFillingAgreement},
      {"minkowski_decomposition", MinkowskiDecomposition},
      {"schubert_matroid_polytope", MatroidPolytope},
      {"skyline_vertices", SkylineVertices},
      {"skyline_vertex_symmetries", VertexSymmetries},
      {"operator_relations", OperatorRelations},
      {"recursion_chain_independence", ChainIndependence},
      {"schubert_newton_polytope", SchubertNewton},
      {"key_newton_polytope", KeyNewton},
      {"bruhat_interval_polytope", BruhatIntervalPolytope},
      {"json_round_trip", JsonRoundTrip},
  };
  return checks;
}

}  // namespace

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.passed(); });
}

std::vector<std::string> VerificationCheckNames() {
  std::vector<std::string> names;
  for (const Check& c : Checks()) names.emplace_back(c.name);
  return names;
}

VerifyReport RunVerification(const VerifyOptions& options) {
  if (options.n < 1 || options.n > 6) {
    throw DomainError("verify: n must lie in [1, 6]");
  }
  std::vector<const Check*> selected;
  for (const Check& c : Checks()) {
    if (options.filter.empty() ||
        std::string(c.name).find(options.filter) != std::string::npos) {
      selected.push_back(&c);
    }
  }
  VerifyReport report;
  report.checks.resize(selected.size());
  for (std::size_t k = 0; k < selected.size(); ++k) {
    report.checks[k].name = selected[k]->name;
  }
  int jobs = options.jobs > 0 ? options.jobs
                              : static_cast<int>(std::thread::hardware_concurrency());
  jobs = std::clamp(jobs, 1, std::max<int>(1, static_cast<int>(selected.size())));
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t k = next++; k < selected.size(); k = next++) {
      CheckResult& result = report.checks[k];
      try {
        selected[k]->run(options, result);
      } catch (const std::exception& e) {
        result.counterexample = std::string("exception: ") + e.what();
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();
  return report;
}

Json ReportToJson(const VerifyReport& report) {
  Json checks = Json::array();
  for (const CheckResult& c : report.checks) {
    Json j;
    j["name"] = c.name;
    j["status"] = c.skipped ? "skipped" : (c.passed() ? "pass" : "fail");
    j["instances"] = c.instances;
    if (c.counterexample) j["counterexample"] = *c.counterexample;
    if (c.skipped) j["reason"] = *c.skipped;
    checks.push_back(std::move(j));
  }
  Json out;
  out["status"] = report.passed() ? "pass" : "fail";
  out["checks"] = std::move(checks);
  return out;
}

std::string ReportToText(const VerifyReport& report) {
  std::ostringstream out;
  for (const CheckResult& c : report.checks) {
    const char* status = c.skipped ? "SKIP" : (c.passed() ? "PASS" : "FAIL");
    out << status << "  " << c.name << "  (" << c.instances << " instances)";
    if (c.counterexample) out << "  counterexample: " << *c.counterexample;
    if (c.skipped) out << "  " << *c.skipped;
    out << '\n';
  }
  out << (report.passed() ? "PASS" : "FAIL") << '\n';
  return out.str();
}

}  // namespace schubitope
