#include "geocalc/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <iterator>
#include <string_view>

#include <json.hpp>

#include "geocalc/errors.hpp"

namespace geocalc {

namespace {

using nlohmann::json;

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string lower_no_space(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) {
      out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
  }
  return out;
}

std::optional<double> try_number(std::string_view s) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  if (s.empty()) return std::nullopt;
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

struct Line {
  std::size_t number;
  std::vector<std::string> fields;
};

// Non-blank lines split on commas, with trailing '\r' and '#' comments removed.
std::vector<Line> read_records(std::istream& in) {
  std::vector<Line> out;
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    std::string_view view(raw);
    if (const auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
    view = trim(view);
    if (view.empty()) continue;
    Line line{number, {}};
    std::size_t start = 0;
    while (true) {
      const auto comma = view.find(',', start);
      line.fields.emplace_back(trim(view.substr(start, comma == std::string_view::npos ? view.npos : comma - start)));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    out.push_back(std::move(line));
  }
  if (in.bad()) throw ParseError("failed to read input stream");
  return out;
}

bool is_tail_directive(const Line& line) {
  std::string joined;
  for (std::size_t i = 0; i < line.fields.size(); ++i) {
    if (i) joined += ',';
    joined += line.fields[i];
  }
  const std::string s = lower_no_space(joined);
  return s == "tail:one" || s == "tail,one" || s == "tail=one";
}

double field_number(const Line& line, std::size_t column) {
  if (column >= line.fields.size()) {
    throw ParseError("line " + std::to_string(line.number) + ": missing column " +
                     std::to_string(column + 1));
  }
  const auto v = try_number(line.fields[column]);
  if (!v) {
    throw ParseError("line " + std::to_string(line.number) + ": '" + line.fields[column] +
                     "' is not a number");
  }
  return *v;
}

// A column value is either an ordinary positive real or a log coordinate.
GNum make_entry(double v, bool log_coordinate) {
  return log_coordinate ? GNum::from_exponent(v) : GNum::from_real(v);
}

struct ColumnSpec {
  std::size_t index = 0;
  bool log = false;
};

std::optional<ColumnSpec> find_column(const std::vector<std::string>& header,
                                      std::string_view plain, std::string_view log_name) {
  std::optional<ColumnSpec> found;
  for (std::size_t i = 0; i < header.size(); ++i) {
    const std::string h = lower_no_space(header[i]);
    if (h == plain || h == log_name) {
      if (found) {
        throw ParseError("header names the '" + std::string(plain) + "' column twice");
      }
      found = ColumnSpec{i, h == log_name};
    }
  }
  return found;
}

void check_known_columns(const std::vector<std::string>& header,
                         std::initializer_list<std::string_view> known) {
  for (const auto& h : header) {
    const std::string name = lower_no_space(h);
    if (std::find(known.begin(), known.end(), name) == known.end()) {
      throw ParseError("unknown column '" + h + "' in header");
    }
  }
}

json parse_json(std::istream& in) {
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

std::vector<GNum> json_entries(const json& arr, bool log_coordinate, const std::string& key) {
  if (!arr.is_array()) throw ParseError("'" + key + "' must be an array of numbers");
  std::vector<GNum> out;
  out.reserve(arr.size());
  for (const auto& v : arr) {
    if (!v.is_number()) throw ParseError("'" + key + "' contains a non-numeric entry");
    out.push_back(make_entry(v.get<double>(), log_coordinate));
  }
  return out;
}

// Exactly one of plain/log_name must be present in obj.
std::vector<GNum> json_pick(const json& obj, const std::string& plain, const std::string& log_name) {
  const bool has_plain = obj.contains(plain);
  const bool has_log = obj.contains(log_name);
  if (has_plain == has_log) {
    throw ParseError("expected exactly one of '" + plain + "' or '" + log_name + "'");
  }
  return has_plain ? json_entries(obj.at(plain), false, plain)
                   : json_entries(obj.at(log_name), true, log_name);
}

bool json_tail(const json& obj) {
  if (!obj.contains("tail")) return false;
  const json& t = obj.at("tail");
  if (t.is_string() && t.get<std::string>() == "one") return true;
  throw ParseError("'tail' must be \"one\" when present");
}

GSeq json_sequence(const json& j) {
  if (j.is_array()) return GSeq(json_entries(j, false, "values"), false);
  if (!j.is_object()) throw ParseError("a sequence must be an array or an object");
  return GSeq(json_pick(j, "values", "log_values"), json_tail(j));
}

}  // namespace

InputFormat infer_format(const std::string& path) {
  const auto dot = path.rfind('.');
  if (dot == std::string::npos) return InputFormat::csv;
  return lower_no_space(path.substr(dot)) == ".json" ? InputFormat::json : InputFormat::csv;
}

GTable parse_table(std::istream& in, InputFormat format, double spacing_tolerance) {
  std::vector<GNum> nodes;
  std::vector<GNum> values;
  if (format == InputFormat::json) {
    const json j = parse_json(in);
    if (!j.is_object()) throw ParseError("table JSON must be an object");
    nodes = json_pick(j, "nodes", "log_x");
    values = json_pick(j, "values", "log_f");
  } else {
    const auto records = read_records(in);
    if (records.empty()) throw ParseError("empty input: a header line is required");
    const auto& header = records.front().fields;
    check_known_columns(header, {"x", "log_x", "f", "log_f"});
    const auto xcol = find_column(header, "x", "log_x");
    const auto fcol = find_column(header, "f", "log_f");
    if (!xcol || !fcol) throw ParseError("header must name a node column (x or log_x) and a value column (f or log_f)");
    for (std::size_t r = 1; r < records.size(); ++r) {
      const Line& line = records[r];
      if (line.fields.size() != header.size()) {
        throw ParseError("line " + std::to_string(line.number) + ": expected " +
                         std::to_string(header.size()) + " fields");
      }
      nodes.push_back(make_entry(field_number(line, xcol->index), xcol->log));
      values.push_back(make_entry(field_number(line, fcol->index), fcol->log));
    }
  }
  return GTable(std::move(nodes), std::move(values), spacing_tolerance);
}

GSeq parse_sequence(std::istream& in, InputFormat format) {
  if (format == InputFormat::json) return json_sequence(parse_json(in));

  auto records = read_records(in);
  bool tail = false;
  if (!records.empty() && is_tail_directive(records.back())) {
    tail = true;
    records.pop_back();
  }
  bool log = false;
  std::size_t first = 0;
  if (!records.empty() && !try_number(records.front().fields.front())) {
    const auto& header = records.front().fields;
    check_known_columns(header, {"x", "log_x"});
    if (header.size() != 1) throw ParseError("a sequence file has a single column");
    log = lower_no_space(header.front()) == "log_x";
    first = 1;
  }
  std::vector<GNum> entries;
  for (std::size_t r = first; r < records.size(); ++r) {
    if (records[r].fields.size() != 1) {
      throw ParseError("line " + std::to_string(records[r].number) + ": expected one value per line");
    }
    entries.push_back(make_entry(field_number(records[r], 0), log));
  }
  if (entries.empty()) throw TableTooSmall("the sequence has no entries");
  return GSeq(std::move(entries), tail);
}

SequencePair parse_sequence_pair(std::istream& in, InputFormat format) {
  if (format == InputFormat::json) {
    const json j = parse_json(in);
    if (!j.is_object() || !j.contains("a")) throw ParseError("expected an object with an 'a' sequence");
    SequencePair p{json_sequence(j.at("a")), std::nullopt, std::nullopt};
    if (j.contains("b")) p.b = json_sequence(j.at("b"));
    if (j.contains("n")) {
      const json& n = j.at("n");
      if (!n.is_number_integer() || n.get<long long>() < 0) throw ParseError("'n' must be a nonnegative integer");
      p.n = n.get<std::size_t>();
    }
    return p;
  }

  auto records = read_records(in);
  bool tail = false;
  if (!records.empty() && is_tail_directive(records.back())) {
    tail = true;
    records.pop_back();
  }
  if (records.empty()) throw ParseError("empty input: a header line is required");
  const auto& header = records.front().fields;
  check_known_columns(header, {"a", "log_a", "b", "log_b"});
  const auto acol = find_column(header, "a", "log_a");
  const auto bcol = find_column(header, "b", "log_b");
  if (!acol) throw ParseError("header must name an 'a' or 'log_a' column");
  std::vector<GNum> as;
  std::vector<GNum> bs;
  for (std::size_t r = 1; r < records.size(); ++r) {
    const Line& line = records[r];
    if (line.fields.size() != header.size()) {
      throw ParseError("line " + std::to_string(line.number) + ": expected " +
                       std::to_string(header.size()) + " fields");
    }
    as.push_back(make_entry(field_number(line, acol->index), acol->log));
    if (bcol) bs.push_back(make_entry(field_number(line, bcol->index), bcol->log));
  }
  if (as.empty()) throw TableTooSmall("the sequence has no entries");
  SequencePair p{GSeq(std::move(as), tail), std::nullopt, std::nullopt};
  if (bcol) p.b = GSeq(std::move(bs), tail);
  return p;
}

void write_table_csv(std::ostream& out, const GTable& t) {
  out << "log_x,log_f\n";
  char buf[64];
  for (std::size_t i = 0; i < t.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.17g,", t.nodes()[i].log_value());
    out << buf;
    std::snprintf(buf, sizeof buf, "%.17g\n", t.values()[i].log_value());
    out << buf;
  }
}

}  // namespace geocalc
