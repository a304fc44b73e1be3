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

#include "schubitope/cli.h"

#include <fstream>
#include <sstream>
#include <string_view>
#include <vector>

#include "CLI11.hpp"
#include "schubitope/certify.h"
#include "schubitope/errors.h"
#include "schubitope/io.h"
#include "schubitope/numeric.h"
#include "schubitope/polyoracle.h"
#include "schubitope/verify.h"

namespace schubitope {
namespace {

struct Source {
  std::string diagram;
  std::string rothe;
  std::string skyline;
};

struct Args {
  Source source;
  std::string perm;
  std::string set;
  std::string alpha;
  std::string point;
  std::string u;
  std::string w;
  std::string format;
  std::string filter;
  int n = 4;
  std::uint64_t seed = 1;
  int jobs = 0;
};

void AddSource(CLI::App* cmd, Source& s) {
  cmd->add_option("--diagram", s.diagram, "diagram JSON file");
  cmd->add_option("--rothe", s.rothe, "Rothe diagram of a permutation");
  cmd->add_option("--skyline", s.skyline, "skyline diagram of a composition");
}

void AddFormat(CLI::App* cmd, std::string& format,
               std::vector<std::string> allowed) {
  cmd->add_option("--format", format, "output format")
      ->check(CLI::IsMember(std::move(allowed)));
}

Diagram LoadDiagram(const Source& s) {
  const int given = !s.diagram.empty() + !s.rothe.empty() + !s.skyline.empty();
  if (given != 1) {
    throw ParseError(
        "diagram source: give exactly one of --diagram, --rothe, --skyline");
  }
  if (!s.rothe.empty()) return Rothe(Permutation::Parse(s.rothe));
  if (!s.skyline.empty()) return Skyline(Composition::Parse(s.skyline));
  std::ifstream in(s.diagram);
  if (!in) throw ParseError("--diagram: cannot open " + s.diagram);
  std::stringstream text;
  text << in.rdbuf();
  return DiagramFromJson(ParseJson(text.str()));
}

IndexSet RequireSet(const Args& a, int n) {
  if (a.set.empty()) throw ParseError("--set: required");
  return IndexSet::Parse(n, a.set);
}

std::string PointText(const LatticePoint& p) { return PointToString(p); }

int RotheVerb(const Args& a, std::ostream& out) {
  const Diagram d = schubitope::Rothe(Permutation::Parse(a.perm));
  if (a.format == "text") {
    out << d.ToText();
  } else {
    out << DiagramToJson(d).dump() << '\n';
  }
  return kExitOk;
}

int SkylineVerb(const Args& a, std::ostream& out) {
  const Diagram d = Skyline(Composition::Parse(a.alpha));
  if (a.format == "text") {
    out << d.ToText();
  } else {
    out << DiagramToJson(d).dump() << '\n';
  }
  return kExitOk;
}

int Fill(const Args& a, std::ostream& out) {
  const Diagram d = LoadDiagram(a.source);
  const DiagramFilling f = FillDiagram(d, Permutation::Parse(a.perm));
  const LatticePoint x = f.Content();
  if (a.format == "json") {
    Json cells = Json::array();
    for (const Box& b : d.boxes()) {
      cells.push_back({b.row, b.col, f.value(b.row, b.col)});
    }
    Json j;
    j["n"] = d.n();
    j["filling"] = std::move(cells);
    j["x"] = x;
    out << j.dump() << '\n';
  } else {
    out << f.ToText() << "x = " << PointText(x) << '\n';
  }
  return kExitOk;
}

int VerticesVerb(const Args& a, std::ostream& out) {
  const std::vector<LatticePoint> v = Vertices(LoadDiagram(a.source));
  if (a.format == "text") {
    for (const LatticePoint& p : v) out << PointText(p) << '\n';
  } else {
    out << VerticesToJson(v).dump() << '\n';
  }
  return kExitOk;
}

int HRepVerb(const Args& a, std::ostream& out) {
  const HRep h = Hrep(LoadDiagram(a.source));
  if (a.format == "hform") {
    out << HRepToHForm(h);
  } else if (a.format == "text") {
    out << "sum = " << h.total() << '\n';
    for (std::uint64_t m = 1; m + 1 < (std::uint64_t{1} << h.n()); ++m) {
      const IndexSet s = IndexSet::FromMask(h.n(), m);
      out << s.ToString() << " <= " << h.bound(s) << '\n';
    }
  } else {
    out << HRepToJson(h).dump() << '\n';
  }
  return kExitOk;
}

int ThetaVerb(const Args& a, std::ostream& out) {
  const Diagram d = LoadDiagram(a.source);
  const IndexSet s = RequireSet(a, d.n());
  const std::vector<int> per_column = ThetaByColumn(d, s);
  int total = 0;
  for (int v : per_column) total += v;
  if (a.format == "json") {
    Json columns = Json::array();
    for (int j = 1; j <= d.n(); ++j) {
      columns.push_back({{"column", j},
                         {"word", ColumnWord(d, j, s).ToString()},
                         {"value", per_column[j - 1]}});
    }
    Json out_json;
    out_json["S"] = s.elements();
    out_json["theta"] = total;
    out_json["columns"] = std::move(columns);
    out << out_json.dump() << '\n';
  } else {
    out << total << '\n';
    for (int j = 1; j <= d.n(); ++j) {
      out << "column " << j << ": " << ColumnWord(d, j, s).ToString() << "  "
          << per_column[j - 1] << '\n';
    }
  }
  return kExitOk;
}

int RankVerb(const Args& a, std::ostream& out) {
  const Diagram d = LoadDiagram(a.source);
  const IndexSet s = RequireSet(a, d.n());
  std::vector<int> per_column;
  int total = 0;
  for (const Column& c : d.columns()) {
    per_column.push_back(RankFilling(c, s));
    total += per_column.back();
  }
  if (a.format == "json") {
    Json j;
    j["S"] = s.elements();
    j["rank"] = total;
    j["columns"] = per_column;
    out << j.dump() << '\n';
  } else {
    out << total << '\n';
    for (std::size_t j = 0; j < per_column.size(); ++j) {
      out << "column " << j + 1 << ": " << per_column[j] << '\n';
    }
  }
  return kExitOk;
}

int MemberVerb(const Args& a, std::ostream& out) {
  const HRep h = Hrep(LoadDiagram(a.source));
  if (a.point.empty()) throw ParseError("--point: required");
  std::vector<Rational> point;
  std::stringstream in(a.point);
  for (std::string item; std::getline(in, item, ',');) {
    point.push_back(ParseRational(item));
  }
  if (static_cast<int>(point.size()) != h.n()) {
    throw DimensionError("--point: expected " + std::to_string(h.n()) +
                         " coordinates, got " + std::to_string(point.size()));
  }
  const std::optional<IndexSet> bad = FirstViolation(h, point);
  if (a.format == "json") {
    Json j;
    j["member"] = !bad.has_value();
    if (bad) {
      if (bad->empty()) {
        j["violated"] = "sum";
      } else {
        j["violated"] = bad->elements();
      }
    }
    out << j.dump() << '\n';
  } else if (!bad) {
    out << "true\n";
  } else if (bad->empty()) {
    out << "false: coordinates do not sum to " << h.total() << '\n';
  } else {
    out << "false: violates " << bad->ToString() << " <= " << h.bound(*bad)
        << '\n';
  }
  return kExitOk;
}

void WritePolynomial(const Polynomial& f, const std::string& format,
                     std::ostream& out) {
  if (format == "text") {
    out << f.ToString() << '\n';
  } else {
    out << PolynomialToJson(f).dump() << '\n';
  }
}

int KeyVerb(const Args& a, std::ostream& out) {
  WritePolynomial(KeyPolynomial(Composition::Parse(a.alpha)), a.format, out);
  return kExitOk;
}

int SchubertVerb(const Args& a, std::ostream& out) {
  WritePolynomial(SchubertPolynomial(Permutation::Parse(a.perm)), a.format,
                  out);
  return kExitOk;
}

int BruhatVerb(const Args& a, std::ostream& out) {
  const Permutation u = Permutation::Parse(a.u);
  const Permutation w = Permutation::Parse(a.w);
  if (u.degree() != w.degree()) {
    throw DimensionError("--u/--w: permutations of different degrees");
  }
  const bool leq = BruhatLeq(u, w);
  if (a.format == "json") {
    out << Json{{"leq", leq}}.dump() << '\n';
  } else {
    out << (leq ? "true" : "false") << '\n';
  }
  return kExitOk;
}

int VerifyVerb(const Args& a, std::ostream& out) {
  VerifyOptions options;
  options.n = a.n;
  options.seed = a.seed;
  options.jobs = a.jobs;
  options.filter = a.filter;
  const VerifyReport report = RunVerification(options);
  if (a.format == "json") {
    out << ReportToJson(report).dump(2) << '\n';
  } else {
    out << ReportToText(report);
  }
  return report.passed() ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int RunCli(std::span<const std::string> args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Schubitope vertices, halfspaces and polynomial oracles",
               "schubitope"};
  app.require_subcommand(1);
  Args a;
  std::vector<std::pair<CLI::App*, int (*)(const Args&, std::ostream&)>> verbs;

  auto* rothe = app.add_subcommand("rothe", "Rothe diagram of --perm");
  rothe->add_option("--perm", a.perm)->required();
  AddFormat(rothe, a.format, {"json", "text"});
  verbs.emplace_back(rothe, &RotheVerb);

  auto* skyline = app.add_subcommand("skyline", "skyline diagram of --alpha");
  skyline->add_option("--alpha", a.alpha)->required();
  AddFormat(skyline, a.format, {"json", "text"});
  verbs.emplace_back(skyline, &SkylineVerb);

  auto* fill = app.add_subcommand("fill", "greedy filling F_w(D)");
  AddSource(fill, a.source);
  fill->add_option("--perm", a.perm)->required();
  AddFormat(fill, a.format, {"json", "text"});
  verbs.emplace_back(fill, &Fill);

  auto* vertices = app.add_subcommand("vertices", "vertices of the Schubitope");
  AddSource(vertices, a.source);
  AddFormat(vertices, a.format, {"json", "text"});
  verbs.emplace_back(vertices, &VerticesVerb);

  auto* hrep = app.add_subcommand("hrep", "halfspace description");
  AddSource(hrep, a.source);
  AddFormat(hrep, a.format, {"json", "text", "hform"});
  verbs.emplace_back(hrep, &HRepVerb);

  auto* theta = app.add_subcommand("theta", "theta_D(S) with column words");
  AddSource(theta, a.source);
  theta->add_option("--set", a.set)->required();
  AddFormat(theta, a.format, {"json", "text"});
  verbs.emplace_back(theta, &ThetaVerb);

  auto* rank = app.add_subcommand("rank", "rank of S summed over columns");
  AddSource(rank, a.source);
  rank->add_option("--set", a.set)->required();
  AddFormat(rank, a.format, {"json", "text"});
  verbs.emplace_back(rank, &RankVerb);

  auto* member = app.add_subcommand("member", "membership of a point");
  AddSource(member, a.source);
  member->add_option("--point", a.point, "coordinates, integers or p/q")
      ->required();
  AddFormat(member, a.format, {"json", "text"});
  verbs.emplace_back(member, &MemberVerb);

  auto* key = app.add_subcommand("key", "key polynomial of --alpha");
  key->add_option("--alpha", a.alpha)->required();
  AddFormat(key, a.format, {"json", "text"});
  verbs.emplace_back(key, &KeyVerb);

  auto* schubert = app.add_subcommand("schubert", "Schubert polynomial");
  schubert->add_option("--perm", a.perm)->required();
  AddFormat(schubert, a.format, {"json", "text"});
  verbs.emplace_back(schubert, &SchubertVerb);

  auto* bruhat = app.add_subcommand("bruhat", "is u <= w in Bruhat order");
  bruhat->add_option("--u", a.u)->required();
  bruhat->add_option("--w", a.w)->required();
  AddFormat(bruhat, a.format, {"json", "text"});
  verbs.emplace_back(bruhat, &BruhatVerb);

  auto* verify = app.add_subcommand("verify", "cross-module invariant suite");
  verify->add_option("--n", a.n)->check(CLI::Range(1, 6));
  verify->add_option("--seed", a.seed);
  verify->add_option("--jobs", a.jobs)->check(CLI::NonNegativeNumber);
  verify->add_option("--filter", a.filter, "run checks whose name contains");
  AddFormat(verify, a.format, {"json", "text"});
  verbs.emplace_back(verify, &VerifyVerb);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    std::string message = e.what();
    if (message.empty()) message = e.get_name();
    err << "error: " << message << '\n';
    return kExitUsage;
  }

  for (const auto& [cmd, run] : verbs) {
    if (!cmd->parsed()) continue;
    if (a.format.empty()) {
      const std::string_view name = cmd->get_name();
      a.format = (name == "fill" || name == "theta" || name == "rank" ||
                  name == "member" || name == "bruhat" || name == "verify")
                     ? "text"
                     : "json";
    }
    try {
      return run(a, out);
    } catch (const std::exception& e) {
      err << "error: " << e.what() << '\n';
      return kExitUsage;
    }
  }
  return kExitUsage;
}

}  // namespace schubitope
