// Copyright 2026-present the rankdb authors
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

#include "rankdb/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdio>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <string>

#include "rankdb/catalog.hpp"
#include "rankdb/checks.hpp"
#include "rankdb/query.hpp"
#include "rankdb/similarity.hpp"

namespace rankdb::cli {

namespace {

using json = nlohmann::ordered_json;

enum class Format { text, jsonl };

struct Session {
  std::optional<Catalog> catalog;
  Format format = Format::text;
  std::ostream& out;
  std::ostream& err;
  std::istream& in;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

Catalog& need_catalog(Session& s) {
  if (!s.catalog) throw UsageError("no catalog loaded; pass -c CONFIG");
  return *s.catalog;
}

std::string join(const std::vector<std::string>& words) {
  std::string out;
  for (const auto& w : words) out += (out.empty() ? "" : " ") + w;
  return out;
}

json degree_json(const TruthDegree& a) { return json(a.value()); }

json value_json(const Value& v) {
  return v.kind() == ValueKind::text ? json(v.as_text()) : json(v.as_number());
}

std::pair<std::string, std::string> split_binding(const std::string& arg, const char* what) {
  auto eq = arg.find('=');
  if (eq == std::string::npos || eq == 0 || eq + 1 == arg.size()) {
    throw UsageError(std::string("expected ") + what + ", got '" + arg + "'");
  }
  return {arg.substr(0, eq), arg.substr(eq + 1)};
}

std::map<std::string, TruthDegree> parse_assumptions(const Catalog& c,
                                                     const std::vector<std::string>& args) {
  std::map<std::string, TruthDegree> out;
  for (const auto& a : args) {
    auto [name, deg] = split_binding(a, "name=degree");
    if (!c.tables.count(name)) throw UsageError("unknown table '" + name + "' in --assume");
    out.insert_or_assign(name, c.lattice.parse(deg));
  }
  return out;
}

void print_table(Session& s, const RankedDataTable& d) {
  auto rows = sorted_rows(d);
  auto names = d.scheme().names();
  if (s.format == Format::jsonl) {
    for (const auto& [t, r] : rows) {
      json j;
      j["rank"] = degree_json(r);
      for (std::size_t i = 0; i < names.size(); ++i) j[names[i]] = value_json(t.values[i]);
      s.out << j.dump() << "\n";
    }
    return;
  }
  std::vector<std::vector<std::string>> cells;
  cells.push_back({"rank"});
  cells.back().insert(cells.back().end(), names.begin(), names.end());
  for (const auto& [t, r] : rows) {
    std::vector<std::string> line{format_degree(r)};
    for (const auto& v : t.values) line.push_back(v.to_string());
    cells.push_back(std::move(line));
  }
  std::vector<std::size_t> width(cells[0].size(), 0);
  for (const auto& line : cells) {
    for (std::size_t i = 0; i < line.size(); ++i) width[i] = std::max(width[i], line[i].size());
  }
  for (const auto& line : cells) {
    std::string text;
    for (std::size_t i = 0; i < line.size(); ++i) {
      text += line[i];
      if (i + 1 < line.size()) text += std::string(width[i] - line[i].size() + 2, ' ');
    }
    s.out << text << "\n";
  }
  if (!d.lattice().is_bot(d.default_rank())) {
    s.out << "(every other tuple: " << format_degree(d.default_rank()) << ")\n";
  }
  s.out << "(" << rows.size() << (rows.size() == 1 ? " row" : " rows") << ")\n";
}

int cmd_query(Session& s, const std::string& text, const std::string& output) {
  Catalog& c = need_catalog(s);
  ExprPtr e = parse_query(text, c.lattice);
  RankedDataTable result = evaluate(*e, c.tables);
  if (!output.empty()) save_table(result, output);
  print_table(s, result);
  return kSuccess;
}

int cmd_sim(Session& s, const std::string& t1, const std::string& t2, const std::string& mode,
            const std::string& hedge) {
  Catalog& c = need_catalog(s);
  auto table = [&](const std::string& n) -> const RankedDataTable& {
    auto it = c.tables.find(n);
    if (it == c.tables.end()) throw UsageError("unknown table '" + n + "'");
    return it->second;
  };
  ComparisonConfig cfg;
  cfg.mode = parse_comparison_mode(mode);
  cfg.hedge = parse_hedge(hedge);
  Comparison r = compare(table(t1), table(t2), cfg);
  if (s.format == Format::jsonl) {
    json j;
    j["mode"] = to_string(cfg.mode);
    if (cfg.mode == ComparisonMode::hedged) j["hedge"] = to_string(cfg.hedge);
    j["first"] = t1;
    j["second"] = t2;
    j["forward"] = degree_json(r.forward);
    j["backward"] = degree_json(r.backward);
    j["similarity"] = degree_json(r.similarity);
    s.out << j.dump() << "\n";
    return kSuccess;
  }
  std::string m = to_string(cfg.mode);
  if (cfg.mode == ComparisonMode::hedged) m += " (" + to_string(cfg.hedge) + ")";
  s.out << "mode: " << m << "\n";
  s.out << "S(" << t1 << ", " << t2 << ") = " << format_degree(r.forward) << "\n";
  s.out << "S(" << t2 << ", " << t1 << ") = " << format_degree(r.backward) << "\n";
  s.out << "E(" << t1 << ", " << t2 << ") = " << format_degree(r.similarity) << "\n";
  return kSuccess;
}

std::string join_degrees(const std::vector<TruthDegree>& ds) {
  std::string out;
  for (const auto& d : ds) out += (out.empty() ? "" : ", ") + format_degree(d);
  return out;
}

void print_bound(Session& s, const SensitivityBound& b) {
  if (s.format == Format::jsonl) {
    for (const auto& step : b.trace) {
      json j;
      j["node"] = step.node;
      j["rule"] = step.rule;
      j["inputs"] = json::array();
      for (const auto& d : step.inputs) j["inputs"].push_back(degree_json(d));
      j["output"] = degree_json(step.output);
      j["guarantee"] = to_string(step.guarantee);
      s.out << j.dump() << "\n";
    }
    json j;
    j["bound"] = degree_json(b.value);
    j["guarantee"] = to_string(b.guarantee);
    s.out << j.dump() << "\n";
    return;
  }
  s.out << "trace:\n";
  for (const auto& step : b.trace) {
    std::string applied = step.rule;
    if (!step.inputs.empty()) applied += "(" + join_degrees(step.inputs) + ")";
    s.out << "  " << step.node << "\n      " << applied << " = " << format_degree(step.output)
          << "  [" << to_string(step.guarantee) << "]\n";
  }
  s.out << "bound = " << format_degree(b.value) << " (" << to_string(b.guarantee) << ")\n";
}

int cmd_bound(Session& s, const std::string& text, const std::vector<std::string>& assume) {
  Catalog& c = need_catalog(s);
  ExprPtr e = parse_query(text, c.lattice);
  SchemeCatalog schemes = schemes_of(c.tables);
  print_bound(s, propagate_bound(*e, parse_assumptions(c, assume), c.lattice, &schemes));
  return kSuccess;
}

int cmd_verify(Session& s, const std::string& text, const std::vector<std::string>& alts,
               const std::vector<std::string>& assume) {
  Catalog& c = need_catalog(s);
  ExprPtr e = parse_query(text, c.lattice);
  TableCatalog other = c.tables;
  for (const auto& a : alts) {
    auto [name, path] = split_binding(a, "name=path");
    if (!c.tables.count(name)) throw UsageError("unknown table '" + name + "' in --alt");
    Catalog tmp = c;
    load_table(tmp, name, path);
    other.insert_or_assign(name, tmp.tables.at(name));
  }
  VerifyReport r = verify_bound(*e, c.tables, other, parse_assumptions(c, assume), c.lattice);
  if (s.format == Format::jsonl) {
    json j;
    j["bound"] = degree_json(r.bound.value);
    j["guarantee"] = to_string(r.bound.guarantee);
    j["actual"] = degree_json(r.actual);
    j["slack"] = r.slack;
    j["holds"] = r.holds;
    s.out << j.dump() << "\n";
  } else {
    s.out << "bound  = " << format_degree(r.bound.value) << " ("
          << to_string(r.bound.guarantee) << ")\n";
    s.out << "actual = " << format_degree(r.actual) << "\n";
    char slack[32];
    std::snprintf(slack, sizeof slack, "%.12g", r.slack);
    s.out << "slack  = " << slack << "\n";
    s.out << (r.holds ? "holds" : "VIOLATED") << "\n";
  }
  return r.holds ? kSuccess : kViolation;
}

int cmd_check(Session& s, std::uint64_t seed, std::size_t iterations,
              const std::vector<std::string>& only) {
  checks::CheckOptions opt;
  opt.seed = seed;
  opt.iterations = iterations;
  for (const auto& name : only) {
    const auto& all = checks::suites();
    bool known = std::any_of(all.begin(), all.end(), [&](const auto& x) { return name == x.name; });
    if (!known) throw UsageError("unknown suite '" + name + "'");
  }
  std::size_t total = 0;
  std::size_t failed = 0;
  for (const auto& suite : checks::suites()) {
    if (!only.empty() && std::find(only.begin(), only.end(), suite.name) == only.end()) continue;
    for (const auto& r : suite.run(opt)) {
      ++total;
      if (!r.ok()) ++failed;
      if (s.format == Format::jsonl) {
        json j;
        j["suite"] = r.suite;
        j["check"] = r.name;
        j["ok"] = r.ok();
        j["instances"] = r.instances;
        j["violations"] = r.violations;
        j["seconds"] = r.seconds;
        if (!r.first_failure.empty()) j["first_failure"] = r.first_failure;
        s.out << j.dump() << "\n";
      } else {
        s.out << checks::format_result(r) << "\n";
      }
      s.out.flush();
    }
  }
  if (s.format == Format::text) {
    s.out << total << " checks, " << failed << " failed (seed " << seed << ", iterations "
          << iterations << ")\n";
  }
  return failed == 0 ? kSuccess : kViolation;
}

int cmd_tables(Session& s) {
  Catalog& c = need_catalog(s);
  s.out << "lattice: " << c.lattice.name() << "\n";
  for (const auto& [name, t] : c.tables) {
    s.out << name << " " << t.scheme().to_string() << " (" << t.size() << " rows)\n";
  }
  return kSuccess;
}

const char* kReplHelp =
    "verbs:\n"
    "  query EXPR [--output PATH]\n"
    "  sim T1 T2 [--mode rank|tuple|hedged] [--hedge identity|globalization]\n"
    "  bound EXPR [--assume NAME=DEGREE ...]\n"
    "  verify EXPR --alt NAME=PATH ... [--assume NAME=DEGREE ...]\n"
    "  check [--seed N] [--iterations K] [--suite NAME ...]\n"
    "  load NAME PATH     add or replace a table\n"
    "  tables             list tables\n"
    "  help, quit\n"
    "Expressions may be typed unquoted; 'text' literals are kept as written.\n";

int dispatch(Session& s, const std::vector<std::string>& args, bool top_level);

int cmd_repl(Session& s) {
  std::string line;
  int last = kSuccess;
  for (;;) {
    s.out << "rankdb> " << std::flush;
    if (!std::getline(s.in, line)) break;
    std::vector<std::string> words;
    try {
      words = split_words(line);
    } catch (const Error& e) {
      s.err << "error: " << e.what() << "\n";
      continue;
    }
    if (words.empty()) continue;
    if (words[0] == "quit" || words[0] == "exit") break;
    if (words[0] == "help") {
      s.out << kReplHelp;
      continue;
    }
    last = dispatch(s, words, false);
  }
  s.out << "\n";
  return last == kViolation ? kViolation : kSuccess;
}

int dispatch(Session& s, const std::vector<std::string>& args, bool top_level) {
  CLI::App app{"Similarity-based queries over ranked data tables", "rankdb"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string config;
  std::string format = "text";
  if (top_level) {
    app.add_option("-c,--config", config, "Config file (lattice, domains, attributes, tables)");
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "jsonl"}));
  }

  std::vector<std::string> expr_words;
  std::string output;
  auto* query = app.add_subcommand("query", "Evaluate a query and print the result");
  query->add_option("expr", expr_words, "Query expression")->required();
  query->add_option("-o,--output", output, "Also write the result as ranked CSV");

  std::string t1;
  std::string t2;
  std::string mode = "rank";
  std::string hedge = "identity";
  auto* sim = app.add_subcommand("sim", "Subsethood both ways and similarity of two tables");
  sim->add_option("first", t1)->required();
  sim->add_option("second", t2)->required();
  sim->add_option("--mode", mode)->check(CLI::IsMember({"rank", "tuple", "hedged"}));
  sim->add_option("--hedge", hedge)->check(CLI::IsMember({"identity", "globalization"}));

  std::vector<std::string> assume;
  auto* bound = app.add_subcommand("bound", "Propagate a similarity bound through a query");
  bound->add_option("expr", expr_words)->required();
  bound->add_option("--assume", assume, "Input similarity NAME=DEGREE (default 1)");

  std::vector<std::string> alts;
  auto* verify = app.add_subcommand("verify", "Check a propagated bound against alternate tables");
  verify->add_option("expr", expr_words)->required();
  verify->add_option("--alt", alts, "Alternate table NAME=PATH")->required();
  verify->add_option("--assume", assume, "Input similarity NAME=DEGREE (default: measured)");

  std::uint64_t seed = 1;
  std::size_t iterations = 1000;
  std::vector<std::string> only;
  auto* check = app.add_subcommand("check", "Run the property suites");
  check->add_option("--seed", seed);
  check->add_option("--iterations", iterations)->check(CLI::PositiveNumber);
  check->add_option("--suite", only, "Run only the named suites");

  CLI::App* repl = nullptr;
  CLI::App* tables = nullptr;
  std::string load_name;
  std::string load_path;
  CLI::App* load = nullptr;
  if (top_level) {
    repl = app.add_subcommand("repl", "Interactive loop offering the same verbs");
  } else {
    tables = app.add_subcommand("tables", "List tables");
    load = app.add_subcommand("load", "Load a ranked CSV as a table");
    load->add_option("name", load_name)->required();
    load->add_option("path", load_path)->required();
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, s.out, s.err);
    return code == 0 ? kSuccess : kUserError;
  }

  try {
    if (top_level) {
      s.format = format == "jsonl" ? Format::jsonl : Format::text;
      if (!config.empty()) s.catalog = load_config(config);
    }
    if (query->parsed()) return cmd_query(s, join(expr_words), output);
    if (sim->parsed()) return cmd_sim(s, t1, t2, mode, hedge);
    if (bound->parsed()) return cmd_bound(s, join(expr_words), assume);
    if (verify->parsed()) return cmd_verify(s, join(expr_words), alts, assume);
    if (check->parsed()) return cmd_check(s, seed, iterations, only);
    if (repl && repl->parsed()) return cmd_repl(s);
    if (tables && tables->parsed()) return cmd_tables(s);
    if (load && load->parsed()) {
      load_table(need_catalog(s), load_name, load_path);
      return kSuccess;
    }
  } catch (const std::exception& e) {
    s.err << "error: " << e.what() << "\n";
    return kUserError;
  }
  return kUserError;
}

}  // namespace

std::vector<std::string> split_words(const std::string& line) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    std::string w;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) {
      char ch = line[i];
      if (ch == '"') {
        auto close = line.find('"', i + 1);
        if (close == std::string::npos) throw Error("unterminated double quote");
        w += line.substr(i + 1, close - i - 1);
        i = close + 1;
      } else if (ch == '\'') {
        // Query string literals: kept with their quotes, '' included.
        std::size_t j = i + 1;
        for (;;) {
          if (j >= line.size()) throw Error("unterminated single quote");
          if (line[j] == '\'') {
            if (j + 1 < line.size() && line[j + 1] == '\'') {
              j += 2;
              continue;
            }
            break;
          }
          ++j;
        }
        w += line.substr(i, j - i + 1);
        i = j + 1;
      } else {
        w += ch;
        ++i;
      }
    }
    out.push_back(std::move(w));
  }
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        std::istream& in) {
  Session s{std::nullopt, Format::text, out, err, in};
  return dispatch(s, args, true);
}

}  // namespace rankdb::cli
