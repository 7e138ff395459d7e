#pragma once

// Key=value configuration files and the tabular run record written by the CLI.

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace szeta {

// Bumped whenever columns are added, removed or reordered.
inline constexpr int kOutputVersion = 1;

// `key = value` lines; '#' starts a comment; blank lines are ignored.
class Config {
 public:
  static Config parse(std::istream& in);
  static Config load(const std::string& path);

  bool has(const std::string& key) const { return values_.count(key) != 0; }
  void set(const std::string& key, const std::string& value) { values_[key] = value; }
  const std::map<std::string, std::string>& values() const noexcept { return values_; }

  std::optional<std::string> get_string(const std::string& key) const;
  // Each getter throws ParseError (with the defining line) on malformed values.
  double get_double(const std::string& key, double fallback) const;
  std::uint64_t get_u64(const std::string& key, std::uint64_t fallback) const;
  bool get_bool(const std::string& key, bool fallback) const;
  std::vector<double> get_doubles(const std::string& key, std::vector<double> fallback) const;

 private:
  std::map<std::string, std::string> values_;
  std::map<std::string, std::size_t> lines_;
  std::size_t line_of(const std::string& key) const;
};

using Cell = nlohmann::ordered_json;

struct RunResult {
  std::string command;
  std::vector<std::pair<std::string, Cell>> inputs;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  std::vector<std::pair<std::string, Cell>> summary;

  void add_row(std::vector<Cell> row);
};

enum class OutputFormat { csv, json };

// CSV: comment lines carrying version, command, inputs and summary, then a
// header and the rows. JSON carries the same fields in the same order.
void write_csv(std::ostream& out, const RunResult& r);
void write_json(std::ostream& out, const RunResult& r);
void write_result(std::ostream& out, const RunResult& r, OutputFormat f);

}  // namespace szeta
