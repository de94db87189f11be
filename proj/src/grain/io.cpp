#include "grain/io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace grain {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

double parse_double(const std::string& key, const std::string& value) {
  if (value == "inf" || value == "+inf")
    return std::numeric_limits<double>::infinity();
  double out = 0.0;
  auto [ptr, ec] =
      std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc{} || ptr != value.data() + value.size())
    throw Error("configuration key '" + key + "': cannot parse '" + value +
                "' as a number");
  return out;
}

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
  std::uint64_t out = 0;
  auto [ptr, ec] =
      std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc{} || ptr != value.data() + value.size())
    throw Error("configuration key '" + key + "': cannot parse '" + value +
                "' as a non-negative integer");
  return out;
}

std::vector<double> parse_list(const std::string& key,
                               const std::string& value) {
  std::vector<double> out;
  std::istringstream stream(value);
  std::string token;
  while (stream >> token) out.push_back(parse_double(key, token));
  if (out.empty())
    throw Error("configuration key '" + key + "': empty list");
  return out;
}

std::string render_list(const std::vector<double>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ' ';
    out += format_double(values[i]);
  }
  return out;
}

}  // namespace

RunConfig parse_run_config(const std::string& text) {
  RunConfig config;
  std::istringstream stream(text);
  std::string line, section;
  int line_no = 0;
  while (std::getline(stream, line)) {
    ++line_no;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']')
        throw Error("configuration line " + std::to_string(line_no) +
                    ": malformed section header");
      section = trim(line.substr(1, line.size() - 2));
      if (section != "model" && section != "scenario" &&
          section != "execution" && section != "output")
        throw Error("unknown configuration section '" + section + "'");
      continue;
    }
    std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw Error("configuration line " + std::to_string(line_no) +
                  ": expected key = value");
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    std::string qualified = section + "." + key;
    if (section.empty())
      throw Error("configuration key '" + key + "' appears before any "
                  "[section] header");

    if (section == "model") {
      if (key == "alpha") config.alpha = parse_double(qualified, value);
      else if (key == "p") config.p = parse_double(qualified, value);
      else if (key == "r_min") config.r_min = parse_double(qualified, value);
      else if (key == "grain") {
        if (value != "square" && value != "disk")
          throw Error("model.grain must be 'square' or 'disk'");
        config.grain = value;
      } else throw Error("unknown configuration key '" + qualified + "'");
    } else if (section == "scenario") {
      if (key == "kind") {
        if (value != "field" && value != "workload")
          throw Error("scenario.kind must be 'field' or 'workload'");
        config.kind = value;
      }
      else if (key == "gamma") config.gamma = parse_double(qualified, value);
      else if (key == "beta") config.beta = parse_double(qualified, value);
      else if (key == "T") config.T = parse_double(qualified, value);
      else if (key == "lambda") config.lambdas = parse_list(qualified, value);
      else if (key == "x") config.xs = parse_list(qualified, value);
      else if (key == "y") config.ys = parse_list(qualified, value);
      else if (key == "t_lag") config.t_lags = parse_list(qualified, value);
      else if (key == "s_lag") config.s_lags = parse_list(qualified, value);
      else throw Error("unknown configuration key '" + qualified + "'");
    } else if (section == "execution") {
      if (key == "seed") config.seed = parse_u64(qualified, value);
      else if (key == "replicates")
        config.replicates = parse_u64(qualified, value);
      else if (key == "threads")
        config.threads = static_cast<int>(parse_u64(qualified, value));
      else if (key == "budget") config.budget = parse_u64(qualified, value);
      else throw Error("unknown configuration key '" + qualified + "'");
    } else {  // output
      if (key == "directory") config.directory = value;
      else if (key == "format") {
        if (value != "csv") throw Error("output.format must be 'csv'");
        config.format = value;
      } else throw Error("unknown configuration key '" + qualified + "'");
    }
  }
  return config;
}

RunConfig load_run_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open configuration file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_run_config(buffer.str());
}

std::string render_run_config(const RunConfig& config) {
  std::ostringstream out;
  out << "[model]\n";
  out << "alpha = " << format_double(config.alpha) << "\n";
  out << "p = " << format_double(config.p) << "\n";
  out << "r_min = " << format_double(config.r_min) << "\n";
  out << "grain = " << config.grain << "\n";
  out << "\n[scenario]\n";
  out << "kind = " << config.kind << "\n";
  out << "gamma = " << format_double(config.gamma) << "\n";
  out << "beta = " << format_double(config.beta) << "\n";
  out << "T = " << format_double(config.T) << "\n";
  if (!config.lambdas.empty())
    out << "lambda = " << render_list(config.lambdas) << "\n";
  out << "x = " << render_list(config.xs) << "\n";
  out << "y = " << render_list(config.ys) << "\n";
  if (!config.t_lags.empty())
    out << "t_lag = " << render_list(config.t_lags) << "\n";
  if (!config.s_lags.empty())
    out << "s_lag = " << render_list(config.s_lags) << "\n";
  out << "\n[execution]\n";
  out << "seed = " << config.seed << "\n";
  out << "replicates = " << config.replicates << "\n";
  out << "threads = " << config.threads << "\n";
  out << "budget = " << config.budget << "\n";
  out << "\n[output]\n";
  out << "directory = " << config.directory << "\n";
  out << "format = " << config.format << "\n";
  return out.str();
}

std::string resolve_output_directory(const RunConfig& config) {
  const char* env = std::getenv("GRAINSIM_OUTPUT_DIR");
  if (env && *env) return env;
  return config.directory;
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  (void)ec;
  return std::string(buf, ptr);
}

void write_csv(const std::string& path, const CsvTable& table) {
  if (table.columns.empty()) throw Error("CSV table has no columns");
  for (const auto& row : table.rows)
    if (row.size() != table.columns.size())
      throw Error("CSV row width does not match the header");
  std::filesystem::path target(path);
  if (target.has_parent_path())
    std::filesystem::create_directories(target.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  for (const auto& line : table.preamble) out << "# " << line << "\n";
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    if (i) out << ',';
    out << table.columns[i];
  }
  out << "\n";
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      out << format_double(row[i]);
    }
    out << "\n";
  }
  if (!out) throw Error("write failed on '" + path + "'");
}

CsvTable read_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  CsvTable table;
  std::string line;
  bool have_header = false;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line.front() == '#') {
      std::string note = line.substr(1);
      if (!note.empty() && note.front() == ' ') note.erase(0, 1);
      table.preamble.push_back(note);
      continue;
    }
    std::vector<std::string> cells;
    std::size_t start = 0;
    while (true) {
      std::size_t comma = line.find(',', start);
      cells.push_back(line.substr(start, comma - start));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (!have_header) {
      table.columns = cells;
      have_header = true;
      continue;
    }
    if (cells.size() != table.columns.size())
      throw Error("CSV row width does not match the header in '" + path +
                  "'");
    std::vector<double> row;
    row.reserve(cells.size());
    for (const auto& cell : cells)
      row.push_back(parse_double("csv cell", cell));
    table.rows.push_back(std::move(row));
  }
  if (!have_header) throw Error("CSV file '" + path + "' has no header");
  return table;
}

}  // namespace grain
