/*
Copyright 2026 The perfcol Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#pragma once

// Command-line front end. run() is separate from main() so tests can drive it.
//
// Exit codes:
//   0   verified / feasible / witness found
//   1   not perfect / infeasible / rejected
//   2   inconclusive
//   64  usage error
//   65  malformed input (JSON, matrix, coloring)
//   66  input file cannot be read
//   75  search budget exceeded

#include <perfcol/perfcol.hpp>

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace perfcol::cli {

enum ExitCode : int {
  kOk = 0,
  kNegative = 1,
  kInconclusive = 2,
  kUsage = 64,
  kDataError = 65,
  kNoInput = 66,
  kBudget = 75,
};

struct MissingInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) out.push_back(item);
  return out;
}

inline std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t");
  const auto e = s.find_last_not_of(" \t");
  return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MissingInput("cannot read " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw JsonFormatError(path + ": " + e.what());
  }
}

/// "cycle:N", "complete:N", "path:N", "petersen", or a graph JSON file.
inline Graph load_graph(const std::string& arg) {
  const auto colon = arg.find(':');
  const std::string name = arg.substr(0, colon);
  auto size = [&]() -> std::size_t {
    if (colon == std::string::npos) throw JsonFormatError(name + " needs a size, e.g. " + name + ":6");
    try {
      return std::stoul(arg.substr(colon + 1));
    } catch (const std::exception&) {
      throw JsonFormatError("bad graph size in '" + arg + "'");
    }
  };
  if (name == "cycle") return Graph::cycle(size());
  if (name == "complete") return Graph::complete(size());
  if (name == "path") return Graph::path(size());
  if (arg == "petersen") return Graph::petersen();
  return graph_from_json(read_json_file(arg));
}

/// Inline "a,b;c,d" (rows separated by ';') or a matrix JSON file.
inline RationalMatrix load_matrix(const std::string& arg) {
  if (arg.find(',') != std::string::npos || arg.find(';') != std::string::npos ||
      arg.find_first_not_of("-0123456789/") == std::string::npos) {
    std::vector<std::vector<Rational>> rows;
    for (const auto& line : split(arg, ';')) {
      std::vector<Rational> row;
      for (const auto& cell : split(line, ',')) row.push_back(parse_rational(trim(cell)));
      rows.push_back(std::move(row));
    }
    return RationalMatrix::from_rows(rows);
  }
  return matrix_from_json(read_json_file(arg));
}

inline Coloring load_coloring(const std::string& arg) { return coloring_from_json(read_json_file(arg)); }

inline std::vector<std::int64_t> parse_ints(const std::string& text) {
  std::vector<std::int64_t> out;
  for (const auto& cell : split(text, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(trim(cell), &used));
      if (used != trim(cell).size()) throw std::invalid_argument(cell);
    } catch (const std::exception&) {
      throw JsonFormatError("expected comma-separated integers, got '" + text + "'");
    }
  }
  return out;
}

inline Vec2 parse_vec2(const std::string& text) {
  const auto v = parse_ints(text);
  if (v.size() != 2) throw JsonFormatError("expected a pair 'x,y', got '" + text + "'");
  return {v[0], v[1]};
}

/// "square", "triangular", or explicit offsets "1,0;0,1;..." (negatives added).
inline GridSpec load_grid(const std::string& grid, const std::string& offsets) {
  if (!offsets.empty()) {
    std::vector<Vec2> list;
    for (const auto& item : split(offsets, ';')) {
      const Vec2 v = parse_vec2(item);
      for (Vec2 w : {v, -v})
        if (std::find(list.begin(), list.end(), w) == list.end()) list.push_back(w);
    }
    return GridSpec(std::move(list));
  }
  if (grid == "square") return GridSpec::square();
  if (grid == "triangular") return GridSpec::triangular();
  throw JsonFormatError("unknown grid '" + grid + "' (square|triangular, or --offsets)");
}

inline int status_code(Status s) {
  switch (s) {
    case Status::Feasible: return kOk;
    case Status::Infeasible: return kNegative;
    case Status::Inconclusive: return kInconclusive;
  }
  return kInconclusive;
}

inline int outcome_code(Outcome o) {
  switch (o) {
    case Outcome::Witness: return kOk;
    case Outcome::Rejected: return kNegative;
    case Outcome::Inconclusive: return kInconclusive;
  }
  return kInconclusive;
}

inline std::string verdict_text(const FilterVerdict& v) {
  return std::string(to_string(v.status)) + ": " + v.checked.relation + " with lhs = " + to_string(v.checked.lhs) +
         ", rhs = " + to_string(v.checked.rhs);
}

inline std::string colors_text(const Coloring& f) {
  std::string s;
  for (auto c : f.colors()) s += std::to_string(c + 1);
  return s;
}

struct Options {
  std::string format = "text";
  std::uint64_t budget = 0;  // 0 = per-command default
  unsigned threads = 1;
};

/// Parses and executes one command line. Text or JSON goes to `out`,
/// diagnostics to `err`.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"perfcol: perfect colorings, L1 rejection filters and periodic searches"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);
  Options opt;
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--budget", opt.budget, "Search budget (nodes, or candidates for circulant enumeration)");
  app.add_option("--threads", opt.threads, "Worker threads for pair scans")->check(CLI::PositiveNumber);

  int code = kOk;
  std::function<void()> action;
  auto emit = [&](const json& j, const std::string& text) {
    if (opt.format == "json")
      out << j.dump(2) << "\n";
    else
      out << text;
  };
  auto budget_or = [&](std::uint64_t fallback) { return opt.budget ? opt.budget : fallback; };

  // verify
  auto* verify = app.add_subcommand("verify", "Check MP = PS, or induce S from a coloring");
  std::string graph_arg, coloring_arg, s_arg, poly_arg;
  verify->add_option("--graph", graph_arg, "Graph JSON file or cycle:N, complete:N, path:N, petersen")->required();
  verify->add_option("--coloring", coloring_arg, "Coloring JSON file")->required();
  verify->add_option("--s", s_arg, "Parameter matrix (JSON file or inline 'a,b;c,d')");
  verify->add_option("--poly", poly_arg, "Also verify the lift (p(M), P, p(S)); coefficients 'c0,c1,...'");
  verify->callback([&] {
    action = [&] {
      const Graph g = load_graph(graph_arg);
      const Coloring f = load_coloring(coloring_arg);
      if (f.size() != g.order()) throw JsonFormatError("coloring length differs from graph order");
      std::optional<RationalMatrix> s;
      if (!s_arg.empty()) {
        s = load_matrix(s_arg);
      } else {
        s = induced_parameters(g, f);
      }
      json j{{"coloring", coloring_to_json(f)}};
      std::ostringstream text;
      if (!s) {
        // No consistent S: report the first vertex disagreeing with its class.
        const RationalMatrix profile = color_profile(g.adjacency(), f);
        std::vector<std::optional<std::size_t>> rep(f.k());
        for (std::size_t u = 0; u < g.order() && !j.contains("witness"); ++u) {
          const std::size_t i = f[u];
          if (!rep[i]) {
            rep[i] = u;
            continue;
          }
          for (std::size_t c = 0; c < f.k(); ++c)
            if (profile(u, c) != profile(*rep[i], c)) {
              j["witness"] = {{"vertex", u}, {"color", c + 1}, {"mp", rational_to_json(profile(u, c))},
                              {"class_value", rational_to_json(profile(*rep[i], c))}, {"reference_vertex", *rep[i]}};
              text << "not perfect: vertex " << u << " has weight " << to_string(profile(u, c)) << " into color "
                   << c + 1 << ", vertex " << *rep[i] << " of the same class has " << to_string(profile(*rep[i], c))
                   << "\n";
              break;
            }
        }
        j["perfect"] = false;
        code = kNegative;
        emit(j, text.str());
        return;
      }
      PerfectColoringTriple triple = make_triple(g.adjacency(), f, *s);
      auto result = verify_perfect(triple);
      j["perfect"] = result.perfect;
      j["parameters"] = matrix_to_json(*s);
      if (!result) {
        const auto& w = *result.witness;
        j["witness"] = {{"vertex", w.vertex}, {"color", w.color + 1}, {"mp", rational_to_json(w.mp)},
                        {"ps", rational_to_json(w.ps)}};
        text << "not perfect: witness at vertex " << w.vertex << ", color " << w.color + 1 << " (MP = "
             << to_string(w.mp) << ", PS = " << to_string(w.ps) << ")\n";
        code = kNegative;
      } else {
        text << "perfect coloring, S = " << s->to_string() << "\n";
        if (!poly_arg.empty()) {
          std::vector<Rational> coeffs;
          for (const auto& c : split(poly_arg, ',')) coeffs.push_back(parse_rational(trim(c)));
          const Polynomial p(coeffs);
          const auto lifted = poly_lift(triple, p);
          j["lift"] = {{"polynomial", polynomial_to_json(p)}, {"s", matrix_to_json(lifted.s)}, {"perfect", true}};
          text << "lift by p(x) = " << p.to_string() << " is perfect, p(S) = " << lifted.s.to_string() << "\n";
        }
      }
      emit(j, text.str());
    };
  });

  // graph info
  auto* graph = app.add_subcommand("graph", "Graph invariants");
  auto* graph_info = graph->add_subcommand("info", "Regularity, diameter, intersection array, distance polynomials");
  graph->require_subcommand(1);
  graph_info->add_option("--graph", graph_arg, "Graph JSON file or named graph")->required();
  graph_info->callback([&] {
    action = [&] {
      const Graph g = load_graph(graph_arg);
      json j{{"n", g.order()}, {"simple", g.simple()}};
      std::ostringstream text;
      text << "n = " << g.order() << (g.simple() ? ", simple" : ", weighted") << "\n";
      const auto r = regularity(g);
      j["regularity"] = r ? rational_to_json(*r) : json(nullptr);
      text << "regular: " << (r ? to_string(*r) : "no") << "\n";
      if (g.simple() && r) {
        if (const auto ia = intersection_array(g)) {
          json b = json::array(), c = json::array();
          for (const auto& x : ia->b) b.push_back(rational_to_json(x));
          for (const auto& x : ia->c) c.push_back(rational_to_json(x));
          const auto polys = distance_polynomials(*ia);
          json spheres = json::array(), balls = json::array();
          for (const auto& p : polys.sphere) spheres.push_back(polynomial_to_json(p));
          for (const auto& p : polys.ball) balls.push_back(polynomial_to_json(p));
          j["intersection_array"] = {{"b", b}, {"c", c}};
          j["sphere_polynomials"] = spheres;
          j["ball_polynomials"] = balls;
          text << "distance-regular, diameter " << ia->diameter() << ", b = " << b.dump() << ", c = " << c.dump()
               << "\n";
          for (std::size_t i = 0; i < polys.sphere.size(); ++i)
            text << "  p_" << i << "^W = " << polys.sphere[i].to_string() << ",  p_" << i
                 << "^B = " << polys.ball[i].to_string() << "\n";
        } else {
          j["intersection_array"] = nullptr;
          text << "not distance-regular\n";
        }
      }
      emit(j, text.str());
    };
  });

  // filter
  auto* filter = app.add_subcommand("filter", "L1 rejection filters (necessary conditions only)");
  filter->require_subcommand(1);
  std::size_t u = 0, v = 0, ci = 1, cj = 1, h = 0;
  unsigned power = 1, radius = 1;
  std::string r_arg, b_arg, c_arg;
  bool adjacent = false;

  auto* f_pair = filter->add_subcommand("pair", "d(M_u,M_v) >= d(S_i,S_j)");
  auto* f_power = filter->add_subcommand("power", "The same on M^l and S^l");
  for (auto* sub : {f_pair, f_power}) {
    sub->add_option("--graph", graph_arg, "Graph JSON file or named graph")->required();
    sub->add_option("--s", s_arg, "Parameter matrix")->required();
    sub->add_option("--u", u)->required();
    sub->add_option("--v", v)->required();
    sub->add_option("--i", ci, "Color of u (1-based)")->required();
    sub->add_option("--j", cj, "Color of v (1-based)")->required();
  }
  f_power->add_option("--l", power, "Distance power l >= 1")->required();
  auto one_pair = [&](bool with_power) {
    action = [&, with_power] {
      if (ci == 0 || cj == 0) throw JsonFormatError("colors are 1-based");
      const Graph g = load_graph(graph_arg);
      const RationalMatrix s = load_matrix(s_arg);
      const FilterVerdict verdict = with_power ? distance_power_check(g.adjacency(), s, power, u, v, ci - 1, cj - 1)
                                               : pair_color_feasible(g.adjacency(), s, u, v, ci - 1, cj - 1);
      emit(json::array({verdict_row_to_json(u, v, ci - 1, cj - 1, verdict)}), verdict_text(verdict) + "\n");
      code = status_code(verdict.status);
    };
  };
  f_pair->callback([&] { one_pair(false); });
  f_power->callback([&] { one_pair(true); });

  auto* f_scan = filter->add_subcommand("scan", "Verdict table over all pairs u < v with i = f(u), j = f(v)");
  f_scan->add_option("--graph", graph_arg, "Graph JSON file or named graph")->required();
  f_scan->add_option("--coloring", coloring_arg, "Coloring JSON file")->required();
  f_scan->add_option("--s", s_arg, "Putative parameter matrix (default: induced)");
  f_scan->add_option("--l", power, "Distance power l >= 1");
  f_scan->callback([&] {
    action = [&] {
      const Graph g = load_graph(graph_arg);
      const Coloring f = load_coloring(coloring_arg);
      std::optional<RationalMatrix> s = s_arg.empty() ? induced_parameters(g, f) : load_matrix(s_arg);
      if (!s) throw JsonFormatError("coloring is not perfect and no --s was given");
      const auto rows = scan_pairs(g.adjacency(), f, *s, power, opt.threads);
      std::ostringstream text;
      std::size_t bad = 0;
      for (const auto& row : rows)
        if (row.verdict.infeasible()) {
          ++bad;
          text << "u=" << row.u << " v=" << row.v << " i=" << row.i + 1 << " j=" << row.j + 1 << ": "
               << verdict_text(row.verdict) << "\n";
        }
      text << rows.size() << " pairs checked, " << bad << " infeasible\n";
      emit(verdict_table_to_json(rows), text.str());
      code = bad ? kNegative : kOk;
    };
  });

  auto* f_simple = filter->add_subcommand("simple", "d(S_i,S_j) <= 2(r-h), with forced distributions at equality");
  f_simple->add_option("--r", r_arg, "Valency")->required();
  f_simple->add_option("--h", h, "Common neighbors")->required();
  f_simple->add_flag("--adjacent", adjacent);
  f_simple->add_option("--s", s_arg, "Parameter matrix")->required();
  f_simple->add_option("--i", ci)->required();
  f_simple->add_option("--j", cj)->required();
  f_simple->callback([&] {
    action = [&] {
      if (ci == 0 || cj == 0) throw JsonFormatError("colors are 1-based");
      const PairContext ctx(parse_rational(r_arg), h, adjacent);
      const RationalMatrix s = load_matrix(s_arg);
      const FilterVerdict verdict = simple_pair_bound(ctx, s, ci - 1, cj - 1);
      json j = verdict_to_json(verdict);
      std::string text = verdict_text(verdict) + "\n";
      if (const auto forced = forced_distributions(ctx, s, ci - 1, cj - 1)) {
        auto vec = [](const std::vector<Rational>& xs) {
          json a = json::array();
          for (const auto& x : xs) a.push_back(rational_to_json(x));
          return a;
        };
        j["forced"] = {{"intersection", vec(forced->intersection)},
                       {"only_u", vec(forced->only_u)},
                       {"only_v", vec(forced->only_v)}};
        text += "equality: N(u)∩N(v) " + vec(forced->intersection).dump() + ", N(u)\\N(v) " +
                vec(forced->only_u).dump() + ", N(v)\\N(u) " + vec(forced->only_v).dump() + "\n";
      }
      emit(j, text);
      code = status_code(verdict.status);
    };
  });

  auto* f_two = filter->add_subcommand("two-color", "h <= b+c <= 2r-h (b+c >= h+2 when adjacent)");
  f_two->add_option("--r", r_arg, "Valency")->required();
  f_two->add_option("--h", h, "Common neighbors")->required();
  f_two->add_flag("--adjacent", adjacent);
  f_two->add_option("--b", b_arg)->required();
  f_two->add_option("--c", c_arg)->required();
  f_two->callback([&] {
    action = [&] {
      const Rational r = parse_rational(r_arg);
      const PairContext ctx(r, h, adjacent);
      const TwoColorParams params{parse_rational(b_arg), parse_rational(c_arg), r};
      const FilterVerdict verdict = two_color_check(ctx, params);
      json j = verdict_to_json(verdict);
      j["lambda2"] = rational_to_json(params.lambda2());
      std::string text = verdict_text(verdict) + "\n";
      if (const auto forced = two_color_forced_sets(ctx, params)) {
        j["forced_sets"] = {{"bound", forced->lower ? "lower" : "upper"},
                            {"only_u", to_string(forced->only_u)},
                            {"only_v", to_string(forced->only_v)}};
        text += std::string(forced->lower ? "lower" : "upper") + " bound attained: N(u)\\N(v) has the " +
                to_string(forced->only_u) + ", N(v)\\N(u) has the " + to_string(forced->only_v) + "\n";
      }
      emit(j, text);
      code = status_code(verdict.status);
    };
  });

  auto* f_drg = filter->add_subcommand("drg", "Ball and sphere bounds in a distance-regular graph");
  f_drg->add_option("--graph", graph_arg)->required();
  f_drg->add_option("--s", s_arg)->required();
  f_drg->add_option("--radius", radius)->required();
  f_drg->add_option("--u", u)->required();
  f_drg->add_option("--v", v)->required();
  f_drg->add_option("--i", ci)->required();
  f_drg->add_option("--j", cj)->required();
  f_drg->callback([&] {
    action = [&] {
      if (ci == 0 || cj == 0) throw JsonFormatError("colors are 1-based");
      const Graph g = load_graph(graph_arg);
      const auto verdicts = drg_check(g, load_matrix(s_arg), radius, u, v, ci - 1, cj - 1);
      emit(json::array({verdict_row_to_json(u, v, ci - 1, cj - 1, verdicts.ball),
                        verdict_row_to_json(u, v, ci - 1, cj - 1, verdicts.sphere)}),
           "ball:   " + verdict_text(verdicts.ball) + "\nsphere: " + verdict_text(verdicts.sphere) + "\n");
      code = verdicts.ball.infeasible() || verdicts.sphere.infeasible() ? kNegative : kOk;
    };
  });

  // circulant
  auto* circ = app.add_subcommand("circulant", "Circulant graphs C(d_1,...,d_m) on Z");
  circ->require_subcommand(1);
  std::string d_arg;
  std::int64_t t = 1, period = 1, t_max = 0;
  std::size_t k = 2;
  auto add_d = [&](CLI::App* sub) { sub->add_option("--d", d_arg, "Connection multiset, e.g. 1,2,4")->required(); };
  auto* c_h = circ->add_subcommand("h", "|N(x) ∩ N(x+t)|");
  add_d(c_h);
  c_h->add_option("--t", t)->required()->check(CLI::PositiveNumber);
  c_h->callback([&] {
    action = [&] {
      const CirculantSpec spec(parse_ints(d_arg));
      const std::size_t hv = circulant_h(spec, t);
      emit(json{{"t", t}, {"h", hv}, {"t_in_d", spec.contains(t)}}, "h = " + std::to_string(hv) + "\n");
    };
  });
  auto* c_filter = circ->add_subcommand("period-filter", "Periods forced by the two-color bound");
  add_d(c_filter);
  c_filter->add_option("--b", b_arg)->required();
  c_filter->add_option("--c", c_arg)->required();
  c_filter->add_option("--tmax", t_max, "Largest t to test (default 2 max(D) + 1)");
  c_filter->callback([&] {
    action = [&] {
      const CirculantSpec spec(parse_ints(d_arg));
      const TwoColorParams params{parse_rational(b_arg), parse_rational(c_arg), Rational(spec.valency())};
      const auto pc = circulant_period_filter(spec, params, t_max > 0 ? t_max : default_t_max(spec));
      std::string text = pc.implied_period_divides == 0
                             ? "no period constraint\n"
                             : "period T divides " + std::to_string(pc.implied_period_divides) + "\n";
      emit(period_constraint_to_json(pc), text);
      code = pc.implied_period_divides == 0 ? kInconclusive : kOk;
    };
  });
  auto* c_quot = circ->add_subcommand("quotient", "Quotient multigraph on Z_T");
  add_d(c_quot);
  c_quot->add_option("--T", period)->required()->check(CLI::PositiveNumber);
  c_quot->callback([&] {
    action = [&] {
      const Graph q = circulant_quotient(CirculantSpec(parse_ints(d_arg)), period);
      emit(graph_to_json(q), q.adjacency().to_string() + "\n");
    };
  });
  auto* c_enum = circ->add_subcommand("enumerate", "All perfect colorings of period T up to rotation and renaming");
  add_d(c_enum);
  c_enum->add_option("--T", period)->required()->check(CLI::PositiveNumber);
  c_enum->add_option("--k", k, "Maximum number of colors")->check(CLI::PositiveNumber);
  c_enum->callback([&] {
    action = [&] {
      const CirculantSpec spec(parse_ints(d_arg));
      const auto list = circulant_enumerate(spec, period, k, budget_or(1U << 20U));
      json j = json::array();
      std::ostringstream text;
      for (const auto& e : list) {
        json row{{"coloring", coloring_to_json(e.coloring)}, {"parameters", matrix_to_json(e.parameters)}};
        text << colors_text(e.coloring) << "  S = " << e.parameters.to_string();
        if (e.coloring.k() == 2) {
          const TwoColorParams p{e.parameters(0, 1), e.parameters(1, 0), Rational(spec.valency())};
          row["b"] = rational_to_json(p.b);
          row["c"] = rational_to_json(p.c);
          text << "  (b,c) = (" << to_string(p.b) << "," << to_string(p.c) << ")";
          if (p.b != p.c) text << ", (" << to_string(p.c) << "," << to_string(p.b) << ") with colors swapped";
        }
        text << "\n";
        j.push_back(std::move(row));
      }
      text << list.size() << " colorings\n";
      emit(j, text.str());
    };
  });
  auto* c_decide = circ->add_subcommand("decide", "Period filter plus exhaustive search at the forced period");
  add_d(c_decide);
  c_decide->add_option("--b", b_arg)->required();
  c_decide->add_option("--c", c_arg)->required();
  c_decide->add_option("--tmax", t_max);
  c_decide->callback([&] {
    action = [&] {
      const CirculantSpec spec(parse_ints(d_arg));
      const TwoColorParams params{parse_rational(b_arg), parse_rational(c_arg), Rational(spec.valency())};
      const auto d = circulant_decide(spec, params, t_max > 0 ? t_max : default_t_max(spec), budget_or(1U << 20U));
      json j{{"status", to_string(d.status)}, {"constraint", period_constraint_to_json(d.constraint)}};
      std::string text = std::string(to_string(d.status));
      if (d.constraint.implied_period_divides)
        text += ": every perfect coloring has period dividing " + std::to_string(d.constraint.implied_period_divides);
      if (d.witness) {
        j["witness"] = {{"coloring", coloring_to_json(d.witness->coloring)},
                        {"parameters", matrix_to_json(d.witness->parameters)}};
        text += "; witness " + colors_text(d.witness->coloring);
      }
      emit(j, text + "\n");
      code = outcome_code(d.status);
    };
  });

  // grid
  auto* grid = app.add_subcommand("grid", "Square and triangular grids on Z^2");
  grid->require_subcommand(1);
  std::string grid_arg = "square", offsets_arg, delta_arg, periods_arg, patch_arg;
  std::int64_t window = 0;
  std::size_t max_side = 0;
  bool all = false;
  auto add_grid = [&](CLI::App* sub) {
    sub->add_option("--grid", grid_arg, "square | triangular");
    sub->add_option("--offsets", offsets_arg, "Custom offsets 'x,y;x,y;...' (negatives implied)");
  };
  auto add_target = [&](CLI::App* sub) {
    sub->add_option("--b", b_arg);
    sub->add_option("--c", c_arg);
    sub->add_option("--s", s_arg, "Full parameter matrix instead of --b/--c");
  };
  auto target_matrix = [&](const GridSpec& spec) {
    if (!s_arg.empty()) return load_matrix(s_arg);
    if (b_arg.empty() || c_arg.empty()) throw CLI::ValidationError("give --b and --c, or --s");
    return TwoColorParams{parse_rational(b_arg), parse_rational(c_arg),
                          Rational(static_cast<unsigned long>(spec.valency()))}
        .matrix();
  };

  auto* g_h = grid->add_subcommand("h", "|N(0) ∩ N(delta)| and adjacency");
  add_grid(g_h);
  g_h->add_option("--delta", delta_arg, "x,y")->required();
  g_h->callback([&] {
    action = [&] {
      const GridH gh = grid_h(load_grid(grid_arg, offsets_arg), parse_vec2(delta_arg));
      emit(json{{"h", gh.h}, {"adjacent", gh.adjacent}},
           "h = " + std::to_string(gh.h) + (gh.adjacent ? ", adjacent\n" : ", not adjacent\n"));
    };
  });

  auto* g_reject = grid->add_subcommand("reject", "Two-color bound at every delta, with forced monochromatic directions");
  add_grid(g_reject);
  g_reject->add_option("--b", b_arg)->required();
  g_reject->add_option("--c", c_arg)->required();
  g_reject->add_option("--window", window, "Largest |dx|, |dy| (default 2 x reach)");
  g_reject->callback([&] {
    action = [&] {
      const GridSpec spec = load_grid(grid_arg, offsets_arg);
      const TwoColorParams params{parse_rational(b_arg), parse_rational(c_arg),
                                  Rational(static_cast<unsigned long>(spec.valency()))};
      const auto report = grid_reject_2color(spec, params, window, budget_or(10'000'000));
      json deltas = json::array();
      std::ostringstream text;
      for (const auto& c : report.checks)
        if (c.verdict.infeasible()) {
          json row{{"delta", {c.delta.x, c.delta.y}}, {"h", c.h}, {"adjacent", c.adjacent}};
          row.update(verdict_to_json(c.verdict));
          deltas.push_back(std::move(row));
          text << "delta " << c.delta.to_string() << " (h = " << c.h << (c.adjacent ? ", adjacent" : "")
               << "): " << c.verdict.checked.relation << " fails, " << to_string(c.verdict.checked.lhs)
               << (c.verdict.checked.relation.find(">=") != std::string::npos ? " < " : " > ")
               << to_string(c.verdict.checked.rhs) << "\n";
        }
      text << to_string(report.status) << ": " << report.reason << "\n";
      json j{{"status", to_string(report.status)}, {"infeasible_deltas", deltas}, {"reason", report.reason}};
      if (!report.monochromatic.empty())
        j["forced_lattice"] = {{"a", report.forced.a}, {"b", report.forced.b}, {"d", report.forced.d}};
      if (report.quotient_search) j["quotient_search"] = search_outcome_to_json(*report.quotient_search);
      emit(j, text.str());
      code = status_code(report.status);
    };
  });

  auto* g_torus = grid->add_subcommand("torus-search", "Doubly periodic witness search");
  add_grid(g_torus);
  add_target(g_torus);
  g_torus->add_option("--periods", periods_arg, "p,q")->required();
  g_torus->add_flag("--all", all, "List every coloring at these periods");
  g_torus->callback([&] {
    action = [&] {
      const GridSpec spec = load_grid(grid_arg, offsets_arg);
      const RationalMatrix s = target_matrix(spec);
      const Vec2 pq = parse_vec2(periods_arg);
      if (pq.x < 1 || pq.y < 1) throw CLI::ValidationError("periods must be positive");
      if (all) {
        const auto list = torus_search_all(spec, pq.x, pq.y, s, budget_or(10'000'000));
        json j = json::array();
        std::ostringstream text;
        for (const auto& w : list) {
          j.push_back(coloring_to_json(w.coloring));
          text << colors_text(w.coloring) << "\n";
        }
        text << list.size() << " colorings at periods " << pq.x << "x" << pq.y << "\n";
        emit(j, text.str());
        code = list.empty() ? kInconclusive : kOk;
        return;
      }
      const auto outcome = torus_search(spec, pq.x, pq.y, s, budget_or(10'000'000));
      std::ostringstream text;
      text << to_string(outcome.status) << " at " << outcome.certificate.scope << " (" << outcome.certificate.nodes
           << " nodes)";
      if (outcome.witness) {
        text << "\n";
        for (std::int64_t y = pq.y - 1; y >= 0; --y) {
          for (std::int64_t x = 0; x < pq.x; ++x)
            text << outcome.witness->coloring[static_cast<std::size_t>(x * pq.y + y)] + 1;
          text << "\n";
        }
      } else {
        text << ": no witness at these periods\n";
      }
      emit(search_outcome_to_json(outcome), text.str());
      code = outcome_code(outcome.status);
    };
  });

  auto* g_patch = grid->add_subcommand("patch-search", "Nonexistence proof by exhaustive patch search");
  add_grid(g_patch);
  add_target(g_patch);
  g_patch->add_option("--patch", patch_arg, "WxH, e.g. 6x6");
  g_patch->add_option("--max-side", max_side, "Try square patches up to this side and stop at the first rejection");
  g_patch->callback([&] {
    action = [&] {
      const GridSpec spec = load_grid(grid_arg, offsets_arg);
      const RationalMatrix s = target_matrix(spec);
      SearchOutcome outcome;
      if (max_side > 0) {
        auto hit = minimal_rejecting_patch(spec, s, max_side, budget_or(10'000'000));
        if (hit) {
          outcome = std::move(hit->second);
        } else {
          outcome.certificate.scope = "square patches up to " + std::to_string(max_side);
        }
      } else {
        const auto dims = split(patch_arg.empty() ? "6x6" : patch_arg, 'x');
        if (dims.size() != 2) throw CLI::ValidationError("--patch must look like 6x6");
        outcome = patch_search(spec, s, std::stoul(dims[0]), std::stoul(dims[1]), budget_or(10'000'000));
      }
      emit(search_outcome_to_json(outcome), std::string(to_string(outcome.status)) + " at " +
                                                outcome.certificate.scope + " (" +
                                                std::to_string(outcome.certificate.nodes) + " nodes)\n");
      code = outcome_code(outcome.status);
    };
  });

  // repro
  auto* repro = app.add_subcommand("repro", "Reproduce the worked examples");
  auto* repro_paper = repro->add_subcommand("paper", "Square grid, triangular grid and C(1,2,4) results");
  repro->require_subcommand(1);
  repro_paper->callback([&] {
    action = [&] {
      const auto items = reproduce_examples(budget_or(10'000'000));
      json j = json::array();
      std::ostringstream text;
      bool ok = true;
      for (const auto& item : items) {
        j.push_back({{"id", item.id}, {"claim", item.claim}, {"observed", item.observed}, {"pass", item.pass}});
        text << (item.pass ? "PASS " : "FAIL ") << item.id << "\n     claim:    " << item.claim
             << "\n     observed: " << item.observed << "\n";
        ok = ok && item.pass;
      }
      emit(j, text.str());
      code = ok ? kOk : kNegative;
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kOk : kUsage;
  }
  try {
    if (action) action();
  } catch (const MissingInput& e) {
    err << "error: " << e.what() << "\n";
    return kNoInput;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kBudget;
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kDataError;
  }
  return code;
}

}  // namespace perfcol::cli
