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

#include "rankdb/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

namespace rankdb {

namespace {

std::string_view trim(std::string_view s) {
  const char* ws = " \t\r";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) {
      if (pos < text.size()) out.push_back(text.substr(pos));
      break;
    }
    out.push_back(text.substr(pos, nl - pos));
    pos = nl + 1;
  }
  return out;
}

// Whitespace-separated words; "double quoted" words may hold spaces, with ""
// standing for a literal quote.
std::vector<std::string> words(std::string_view s, const std::string& source,
                               std::size_t line) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < s.size()) {
    if (s[i] == ' ' || s[i] == '\t') {
      ++i;
      continue;
    }
    std::string w;
    if (s[i] == '"') {
      ++i;
      for (;;) {
        if (i >= s.size()) throw FormatError(source, line, "unterminated quote");
        if (s[i] == '"') {
          if (i + 1 < s.size() && s[i + 1] == '"') {
            w += '"';
            i += 2;
            continue;
          }
          ++i;
          break;
        }
        w += s[i++];
      }
    } else {
      while (i < s.size() && s[i] != ' ' && s[i] != '\t') w += s[i++];
    }
    out.push_back(std::move(w));
  }
  return out;
}

struct RawDomain {
  std::size_t line = 0;
  std::string kind = "text";
  std::string similarity = "identity";
  std::optional<std::string> k;
  std::size_t k_line = 0;
  std::vector<std::pair<std::size_t, std::vector<std::string>>> pairs;
  std::optional<std::vector<std::string>> values;
  std::size_t values_line = 0;
};

struct RawAttribute {
  std::size_t line = 0;
  std::optional<std::string> domain;
};

Value to_value(ValueKind kind, const std::string& text, const std::string& source,
               std::size_t line) {
  if (kind == ValueKind::text) return Value::text(text);
  auto v = parse_number(text);
  if (!v) throw FormatError(source, line, "'" + text + "' is not a number");
  return *v;
}

}  // namespace

RelationScheme Catalog::scheme_for(const std::vector<std::string>& names) const {
  std::vector<Attribute> attrs;
  for (const auto& n : names) {
    auto b = bindings.find(n);
    if (b == bindings.end()) throw SchemaError("attribute " + n + " is not bound");
    attrs.push_back({n, domains.at(b->second)});
  }
  return RelationScheme(std::move(attrs));
}

Catalog parse_config(std::string_view text, const std::filesystem::path& base_dir,
                     const std::string& source) {
  enum class Section { none, lattice, domain, attribute, table };
  Section section = Section::none;
  std::string current;
  std::optional<std::string> lattice_kind;
  std::optional<std::string> chain_n;
  std::size_t lattice_line = 0;
  std::vector<std::pair<std::string, RawDomain>> raw_domains;
  std::vector<std::pair<std::string, RawAttribute>> raw_attrs;
  std::vector<std::pair<std::string, std::pair<std::size_t, std::string>>> raw_tables;
  bool seen_lattice = false;

  auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::size_t ln = i + 1;
    std::string_view line = trim(lines[i]);
    if (line.empty() || line[0] == '#' || line[0] == ';') continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw FormatError(source, ln, "expected ']'");
      std::string_view inner = trim(line.substr(1, line.size() - 2));
      auto sp = inner.find_first_of(" \t");
      std::string_view head = inner.substr(0, sp);
      std::string name =
          sp == std::string_view::npos ? std::string() : std::string(trim(inner.substr(sp)));
      if (head == "lattice") {
        if (!name.empty()) throw FormatError(source, ln, "[lattice] takes no name");
        if (seen_lattice) throw FormatError(source, ln, "duplicate [lattice] section");
        seen_lattice = true;
        lattice_line = ln;
        section = Section::lattice;
        continue;
      }
      if (name.empty()) {
        throw FormatError(source, ln, "section [" + std::string(head) + "] needs a name");
      }
      if (head == "domain") {
        for (const auto& [id, d] : raw_domains) {
          if (id == name) {
            throw FormatError(source, ln, "duplicate domain " + name +
                                              " (first at line " + std::to_string(d.line) + ")");
          }
        }
        raw_domains.push_back({name, RawDomain{}});
        raw_domains.back().second.line = ln;
        section = Section::domain;
      } else if (head == "attribute") {
        if (!valid_attribute_name(name)) {
          throw FormatError(source, ln, "invalid attribute name " + name);
        }
        for (const auto& [n, a] : raw_attrs) {
          if (n == name) throw FormatError(source, ln, "duplicate attribute " + name);
        }
        raw_attrs.push_back({name, RawAttribute{ln, std::nullopt}});
        section = Section::attribute;
      } else if (head == "table") {
        for (const auto& [n, t] : raw_tables) {
          if (n == name) throw FormatError(source, ln, "duplicate table " + name);
        }
        raw_tables.push_back({name, {ln, std::string()}});
        section = Section::table;
      } else {
        throw FormatError(source, ln, "unknown section [" + std::string(head) + "]");
      }
      current = name;
      continue;
    }
    auto eq = line.find('=');
    if (eq == std::string_view::npos) throw FormatError(source, ln, "expected key = value");
    std::string key(trim(line.substr(0, eq)));
    std::string value(trim(line.substr(eq + 1)));
    auto unknown = [&] { return FormatError(source, ln, "unknown key '" + key + "'"); };
    switch (section) {
      case Section::none:
        throw FormatError(source, ln, "key outside of a section");
      case Section::lattice:
        if (key == "kind") {
          lattice_kind = value;
        } else if (key == "n") {
          chain_n = value;
        } else {
          throw unknown();
        }
        break;
      case Section::domain: {
        RawDomain& d = raw_domains.back().second;
        if (key == "kind") {
          d.kind = value;
        } else if (key == "similarity") {
          d.similarity = value;
        } else if (key == "k") {
          d.k = value;
          d.k_line = ln;
        } else if (key == "pair") {
          auto w = words(value, source, ln);
          if (w.size() != 3) throw FormatError(source, ln, "pair needs: u v degree");
          d.pairs.push_back({ln, std::move(w)});
        } else if (key == "values") {
          d.values = words(value, source, ln);
          d.values_line = ln;
        } else {
          throw unknown();
        }
        break;
      }
      case Section::attribute:
        if (key != "domain") throw unknown();
        raw_attrs.back().second.domain = value;
        break;
      case Section::table:
        if (key != "file") throw unknown();
        raw_tables.back().second.second = value;
        break;
    }
  }

  Catalog c;
  if (lattice_kind) {
    LatticeKind kind;
    try {
      kind = parse_lattice_kind(*lattice_kind);
    } catch (const Error& e) {
      throw FormatError(source, lattice_line, e.what());
    }
    std::size_t n = 0;
    if (kind == LatticeKind::chain) {
      if (!chain_n) throw FormatError(source, lattice_line, "chain lattice needs n");
      try {
        std::size_t used = 0;
        long long v = std::stoll(*chain_n, &used);
        if (used != chain_n->size() || v < 1) throw std::invalid_argument("n");
        n = static_cast<std::size_t>(v);
      } catch (const std::exception&) {
        throw FormatError(source, lattice_line, "n must be a positive integer");
      }
    } else if (chain_n) {
      throw FormatError(source, lattice_line, "n is only valid for chain");
    }
    c.lattice = ResiduatedLattice::make(kind, n);
  } else if (seen_lattice) {
    throw FormatError(source, lattice_line, "[lattice] needs kind");
  }
  const auto& L = c.lattice;

  for (auto& [id, raw] : raw_domains) {
    ValueKind kind;
    if (raw.kind == "text") {
      kind = ValueKind::text;
    } else if (raw.kind == "number") {
      kind = ValueKind::number;
    } else {
      throw FormatError(source, raw.line, "domain kind must be text or number");
    }
    SimilaritySpec spec = IdentitySimilarity{};
    if (raw.similarity == "ramp") {
      if (!raw.k) throw FormatError(source, raw.line, "ramp similarity needs k");
      auto k = parse_number(*raw.k);
      if (!k) throw FormatError(source, raw.k_line, "k must be a number");
      spec = RampSimilarity{k->as_number()};
    } else if (raw.similarity == "table") {
      TableSimilarity t;
      for (const auto& [ln, w] : raw.pairs) {
        TruthDegree deg = L.bot();
        try {
          deg = L.parse(w[2]);
        } catch (const Error& e) {
          throw FormatError(source, ln, e.what());
        }
        t.pairs.push_back({to_value(kind, w[0], source, ln),
                           to_value(kind, w[1], source, ln), deg});
      }
      spec = std::move(t);
    } else if (raw.similarity != "identity") {
      throw FormatError(source, raw.line,
                        "similarity must be identity, table or ramp");
    }
    if (raw.similarity != "table" && !raw.pairs.empty()) {
      throw FormatError(source, raw.pairs.front().first, "pair needs similarity = table");
    }
    if (raw.similarity != "ramp" && raw.k) {
      throw FormatError(source, raw.k_line, "k needs similarity = ramp");
    }
    std::optional<std::vector<Value>> universe;
    if (raw.values) {
      universe.emplace();
      for (const auto& w : *raw.values) {
        universe->push_back(to_value(kind, w, source, raw.values_line));
      }
    }
    DomainPtr d;
    try {
      d = std::make_shared<const Domain>(id, kind, L, std::move(spec), std::move(universe));
    } catch (const Error& e) {
      throw FormatError(source, raw.line, e.what());
    }
    SimilarityReport report = validate_similarity(*d);
    if (!report.reflexive || !report.symmetric) {
      throw FormatError(source, raw.line, "domain " + id + ": " + report.detail);
    }
    c.reports.emplace(id, std::move(report));
    c.domains.emplace(id, std::move(d));
  }

  for (const auto& [name, raw] : raw_attrs) {
    if (!raw.domain) throw FormatError(source, raw.line, "attribute " + name + " needs domain");
    if (!c.domains.count(*raw.domain)) {
      throw FormatError(source, raw.line, "unknown domain " + *raw.domain);
    }
    c.bindings.emplace(name, *raw.domain);
  }

  for (const auto& [name, t] : raw_tables) {
    const auto& [ln, file] = t;
    if (file.empty()) throw FormatError(source, ln, "table " + name + " needs file");
    std::filesystem::path p = file;
    if (p.is_relative()) p = base_dir / p;
    load_table(c, name, p);
  }
  return c;
}

Catalog load_config(const std::filesystem::path& path) {
  return parse_config(read_file(path), path.parent_path(), path.string());
}

namespace {

std::vector<std::string> csv_fields(std::string_view line, const std::string& source,
                                    std::size_t ln) {
  std::vector<std::string> out;
  std::string cur;
  std::size_t i = 0;
  bool quoted_field = false;
  for (;;) {
    if (i < line.size() && line[i] == '"' && cur.empty() && !quoted_field) {
      quoted_field = true;
      ++i;
      for (;;) {
        if (i >= line.size()) throw FormatError(source, ln, "unterminated quote");
        if (line[i] == '"') {
          if (i + 1 < line.size() && line[i + 1] == '"') {
            cur += '"';
            i += 2;
            continue;
          }
          ++i;
          break;
        }
        cur += line[i++];
      }
      if (i < line.size() && line[i] != ',') {
        throw FormatError(source, ln, "text after closing quote");
      }
      continue;
    }
    if (i >= line.size() || line[i] == ',') {
      out.push_back(quoted_field ? cur : std::string(trim(cur)));
      cur.clear();
      quoted_field = false;
      if (i >= line.size()) break;
      ++i;
      continue;
    }
    cur += line[i++];
  }
  return out;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos &&
      trim(s).size() == s.size()) {
    return s;
  }
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

RankedDataTable parse_table_csv(std::string_view text, const Catalog& catalog,
                                const std::string& source) {
  if (text.substr(0, 3) == "\xEF\xBB\xBF") text.remove_prefix(3);
  auto lines = split_lines(text);
  std::size_t first = 0;
  while (first < lines.size() && trim(lines[first]).empty()) ++first;
  if (first == lines.size()) throw FormatError(source, 0, "missing header");
  auto header = csv_fields(lines[first], source, first + 1);
  if (header[0] != "rank") {
    throw FormatError(source, first + 1, "first header cell must be 'rank'");
  }
  std::vector<std::string> names(header.begin() + 1, header.end());
  RelationScheme scheme;
  try {
    scheme = catalog.scheme_for(names);
  } catch (const Error& e) {
    throw FormatError(source, first + 1, e.what());
  }
  // Column i of the file feeds position pos[i] of the sorted scheme.
  std::vector<std::size_t> pos;
  for (const auto& n : names) pos.push_back(*scheme.index_of(n));

  const auto& L = catalog.lattice;
  std::map<Tuple, std::size_t> seen;
  RankedDataTable::Rows rows;
  for (std::size_t i = first + 1; i < lines.size(); ++i) {
    const std::size_t ln = i + 1;
    if (trim(lines[i]).empty()) continue;
    auto cells = csv_fields(lines[i], source, ln);
    if (cells.size() != header.size()) {
      throw FormatError(source, ln, "expected " + std::to_string(header.size()) +
                                        " cells, got " + std::to_string(cells.size()));
    }
    TruthDegree rank = L.bot();
    try {
      rank = L.parse(cells[0]);
    } catch (const Error& e) {
      throw FormatError(source, ln, e.what());
    }
    Tuple t;
    t.values.resize(names.size(), Value::number(0));
    for (std::size_t c = 0; c < names.size(); ++c) {
      const Attribute& a = scheme.attributes()[pos[c]];
      Value v = to_value(a.domain->value_kind(), cells[c + 1], source, ln);
      if (!a.domain->conforms(v)) {
        throw FormatError(source, ln, "'" + cells[c + 1] + "' is not in the universe of " +
                                          a.domain->id());
      }
      t.values[pos[c]] = std::move(v);
    }
    auto [it, fresh] = seen.emplace(t, ln);
    if (!fresh) {
      throw FormatError(source, ln, "duplicate tuple " + format_tuple(t) +
                                        " (first at line " + std::to_string(it->second) + ")");
    }
    rows.emplace(std::move(t), rank);
  }
  return RankedDataTable(std::move(scheme), L, std::move(rows));
}

void load_table(Catalog& catalog, const std::string& name,
                const std::filesystem::path& path) {
  RankedDataTable t = parse_table_csv(read_file(path), catalog, path.string());
  catalog.tables.insert_or_assign(name, std::move(t));
}

std::vector<std::pair<Tuple, TruthDegree>> sorted_rows(const RankedDataTable& d) {
  std::vector<std::pair<Tuple, TruthDegree>> out(d.rows().begin(), d.rows().end());
  const auto& L = d.lattice();
  std::stable_sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
    return !L.leq(a.second, b.second);
  });
  return out;
}

std::string write_table_csv(const RankedDataTable& d) {
  if (!d.lattice().is_bot(d.default_rank())) {
    throw OpError(OpErrorKind::nonzero_default_unsupported,
                  "CSV cannot store a table with default rank " +
                      format_degree(d.default_rank()));
  }
  std::string out = "rank";
  for (const auto& a : d.scheme().attributes()) out += "," + csv_escape(a.name);
  out += "\n";
  for (const auto& [t, r] : sorted_rows(d)) {
    out += serialize_degree(r);
    for (const auto& v : t.values) out += "," + csv_escape(v.to_string());
    out += "\n";
  }
  return out;
}

void save_table(const RankedDataTable& d, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << write_table_csv(d);
}

}  // namespace rankdb
