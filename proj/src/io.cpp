#include "szeta/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "szeta/errors.hpp"

namespace szeta {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::string format_cell(const Cell& c) {
  if (c.is_string()) {
    const auto s = c.get<std::string>();
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return q + "\"";
  }
  if (c.is_number_float()) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, c.get<double>());
    return std::string(buf, res.ptr);
  }
  if (c.is_null()) return "";
  return c.dump();
}

}  // namespace

Config Config::parse(std::istream& in) {
  Config c;
  std::string line;
  std::size_t no = 0;
  while (std::getline(in, line)) {
    ++no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError(no, "expected key = value");
    const auto key = trim(line.substr(0, eq));
    if (key.empty()) throw ParseError(no, "empty key");
    if (c.values_.count(key)) throw ParseError(no, "duplicate key '" + key + "'");
    c.values_[key] = trim(line.substr(eq + 1));
    c.lines_[key] = no;
  }
  return c;
}

Config Config::load(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw PreconditionError("cannot open config file " + path);
  return parse(f);
}

std::size_t Config::line_of(const std::string& key) const {
  const auto it = lines_.find(key);
  return it == lines_.end() ? 0 : it->second;
}

std::optional<std::string> Config::get_string(const std::string& key) const {
  const auto it = values_.find(key);
  if (it == values_.end()) return std::nullopt;
  return it->second;
}

double Config::get_double(const std::string& key, double fallback) const {
  const auto v = get_string(key);
  if (!v) return fallback;
  try {
    std::size_t used = 0;
    const double x = std::stod(*v, &used);
    if (used == v->size()) return x;
  } catch (const std::exception&) {
  }
  throw ParseError(line_of(key), "'" + key + "' is not a number: " + *v);
}

std::uint64_t Config::get_u64(const std::string& key, std::uint64_t fallback) const {
  const auto v = get_string(key);
  if (!v) return fallback;
  std::uint64_t x = 0;
  const auto [ptr, ec] = std::from_chars(v->data(), v->data() + v->size(), x);
  if (ec != std::errc() || ptr != v->data() + v->size())
    throw ParseError(line_of(key), "'" + key + "' is not an unsigned integer: " + *v);
  return x;
}

bool Config::get_bool(const std::string& key, bool fallback) const {
  const auto v = get_string(key);
  if (!v) return fallback;
  if (*v == "true" || *v == "1" || *v == "yes") return true;
  if (*v == "false" || *v == "0" || *v == "no") return false;
  throw ParseError(line_of(key), "'" + key + "' is not a boolean: " + *v);
}

std::vector<double> Config::get_doubles(const std::string& key, std::vector<double> fallback) const {
  const auto v = get_string(key);
  if (!v) return fallback;
  std::vector<double> out;
  std::stringstream ss(*v);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ParseError(line_of(key), "'" + key + "' has a non-numeric entry: " + item);
    }
  }
  return out;
}

void RunResult::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size())
    throw PreconditionError("row has " + std::to_string(row.size()) + " cells, expected " +
                            std::to_string(columns.size()));
  rows.push_back(std::move(row));
}

void write_csv(std::ostream& out, const RunResult& r) {
  out << "# szeta " << r.command << " format=" << kOutputVersion << '\n';
  for (const auto& [k, v] : r.inputs) out << "# input " << k << '=' << format_cell(v) << '\n';
  for (const auto& [k, v] : r.summary) out << "# summary " << k << '=' << format_cell(v) << '\n';
  for (std::size_t i = 0; i < r.columns.size(); ++i) out << (i ? "," : "") << r.columns[i];
  out << '\n';
  for (const auto& row : r.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << format_cell(row[i]);
    out << '\n';
  }
}

void write_json(std::ostream& out, const RunResult& r) {
  Cell j;
  j["format"] = kOutputVersion;
  j["command"] = r.command;
  j["inputs"] = Cell::object();
  for (const auto& [k, v] : r.inputs) j["inputs"][k] = v;
  j["summary"] = Cell::object();
  for (const auto& [k, v] : r.summary) j["summary"][k] = v;
  j["columns"] = r.columns;
  j["rows"] = Cell::array();
  for (const auto& row : r.rows) j["rows"].push_back(row);
  out << j.dump(2) << '\n';
}

void write_result(std::ostream& out, const RunResult& r, OutputFormat f) {
  if (f == OutputFormat::json)
    write_json(out, r);
  else
    write_csv(out, r);
}

}  // namespace szeta
