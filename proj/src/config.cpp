#include "coaw/config.hpp"

#include <charconv>
#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <set>
#include <sstream>

#include "coaw/io.hpp"

namespace coaw {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void bad_value(std::string_view key, std::string_view value, std::string_view expected) {
  throw ConfigError("config key '" + std::string(key) + "': cannot parse '" + std::string(value) + "' as " +
                    std::string(expected));
}

template <typename T>
T parse_number(std::string_view key, std::string_view v, std::string_view expected) {
  T out{};
  const char* first = v.data();
  const char* last = v.data() + v.size();
  if (!v.empty() && v.front() == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, out);
  if (ec != std::errc{} || ptr != last || first == last) bad_value(key, v, expected);
  return out;
}

double parse_real(std::string_view key, std::string_view v) {
  if (v == "inf" || v == "+inf") return std::numeric_limits<double>::infinity();
  if (v == "-inf") return -std::numeric_limits<double>::infinity();
  return parse_number<double>(key, v, "a real number");
}

int parse_int(std::string_view key, std::string_view v) { return parse_number<int>(key, v, "an integer"); }

bool parse_bool(std::string_view key, std::string_view v) {
  if (v == "true") return true;
  if (v == "false") return false;
  bad_value(key, v, "a boolean (true/false)");
}

std::string unquote(std::string_view v) {
  if (v.size() >= 2 && v.front() == '"' && v.back() == '"') return std::string(v.substr(1, v.size() - 2));
  return std::string(v);
}

using Setter = std::function<void(RunConfig&, std::string_view key, std::string_view value)>;

const std::map<std::string, Setter, std::less<>>& setters() {
  static const std::map<std::string, Setter, std::less<>> table = {
      {"problem_id", [](RunConfig& c, auto, auto v) { c.problem_id = unquote(v); }},
      {"box_extent", [](RunConfig& c, auto k, auto v) { c.box_extent = parse_real(k, v); }},
      {"n_weight_samples", [](RunConfig& c, auto k, auto v) { c.n_weight_samples = parse_int(k, v); }},
      {"master_seed",
       [](RunConfig& c, auto k, auto v) { c.master_seed = parse_number<std::uint64_t>(k, v, "a 64-bit unsigned"); }},
      {"output_dir", [](RunConfig& c, auto, auto v) { c.output_dir = unquote(v); }},
      {"emit_plot_data", [](RunConfig& c, auto k, auto v) { c.emit_plot_data = parse_bool(k, v); }},
      {"record_runtime", [](RunConfig& c, auto k, auto v) { c.record_runtime = parse_bool(k, v); }},
      {"coa.initial_population", [](RunConfig& c, auto k, auto v) { c.coa.initial_population = parse_int(k, v); }},
      {"coa.min_eggs", [](RunConfig& c, auto k, auto v) { c.coa.min_eggs = parse_int(k, v); }},
      {"coa.max_eggs", [](RunConfig& c, auto k, auto v) { c.coa.max_eggs = parse_int(k, v); }},
      {"coa.max_iterations", [](RunConfig& c, auto k, auto v) { c.coa.max_iterations = parse_int(k, v); }},
      {"coa.n_clusters", [](RunConfig& c, auto k, auto v) { c.coa.n_clusters = parse_int(k, v); }},
      {"coa.lambda_max", [](RunConfig& c, auto k, auto v) { c.coa.lambda_max = parse_real(k, v); }},
      {"coa.egg_laying_alpha", [](RunConfig& c, auto k, auto v) { c.coa.egg_laying_alpha = parse_real(k, v); }},
      {"coa.max_cuckoos", [](RunConfig& c, auto k, auto v) { c.coa.max_cuckoos = parse_int(k, v); }},
      {"coa.pop_variance_stop", [](RunConfig& c, auto k, auto v) { c.coa.pop_variance_stop = parse_real(k, v); }},
      {"coa.accuracy_stop",
       [](RunConfig& c, auto k, auto v) {
         if (v == "none") {
           c.coa.accuracy_stop.reset();
         } else {
           c.coa.accuracy_stop = parse_real(k, v);
         }
       }},
      {"coa.detection_epsilon_frac",
       [](RunConfig& c, auto k, auto v) { c.coa.detection_epsilon_frac = parse_real(k, v); }},
      {"scalarizer.penalty_coefficient",
       [](RunConfig& c, auto k, auto v) { c.scalarizer.penalty_coefficient = parse_real(k, v); }},
      {"scalarizer.normalize", [](RunConfig& c, auto k, auto v) { c.scalarizer.normalize = parse_bool(k, v); }},
      {"oracle.resolution", [](RunConfig& c, auto k, auto v) { c.oracle.resolution = parse_int(k, v); }},
  };
  return table;
}

// Strips a trailing comment unless the '#' sits inside double quotes.
std::string_view strip_comment(std::string_view line) {
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '"') quoted = !quoted;
    if (line[i] == '#' && !quoted) return line.substr(0, i);
  }
  return line;
}

}  // namespace

void RunConfig::validate() const {
  try {
    (void)get_builtin(problem_id, box_extent);
    coa.validate();
    scalarizer.validate();
    oracle.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  if (n_weight_samples < 1) throw ConfigError("n_weight_samples must be >= 1");
  if (output_dir.empty()) throw ConfigError("output_dir must not be empty");
}

RunConfig parse_config(std::string_view text) {
  RunConfig cfg;
  std::set<std::string, std::less<>> seen;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    const auto raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    const auto line = trim(strip_comment(raw));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("config line " + std::to_string(line_no) + ": expected 'key = value'");
    }
    const auto key = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 1));
    const auto it = setters().find(key);
    if (it == setters().end()) {
      throw ConfigError("config line " + std::to_string(line_no) + ": unknown key '" + std::string(key) + "'");
    }
    if (!seen.insert(std::string(key)).second) {
      throw ConfigError("config line " + std::to_string(line_no) + ": duplicate key '" + std::string(key) + "'");
    }
    if (value.empty()) {
      throw ConfigError("config line " + std::to_string(line_no) + ": missing value for '" + std::string(key) + "'");
    }
    it->second(cfg, key, value);
  }
  cfg.validate();
  return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open config file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::string format_config(const RunConfig& c) {
  std::ostringstream out;
  auto real = [](double v) { return format_double(v); };
  auto boolean = [](bool b) { return b ? "true" : "false"; };
  out << "problem_id = " << c.problem_id << '\n'
      << "box_extent = " << real(c.box_extent) << '\n'
      << "n_weight_samples = " << c.n_weight_samples << '\n'
      << "master_seed = " << c.master_seed << '\n'
      << "output_dir = \"" << c.output_dir.string() << "\"\n"
      << "emit_plot_data = " << boolean(c.emit_plot_data) << '\n'
      << "record_runtime = " << boolean(c.record_runtime) << '\n'
      << "coa.initial_population = " << c.coa.initial_population << '\n'
      << "coa.min_eggs = " << c.coa.min_eggs << '\n'
      << "coa.max_eggs = " << c.coa.max_eggs << '\n'
      << "coa.max_iterations = " << c.coa.max_iterations << '\n'
      << "coa.n_clusters = " << c.coa.n_clusters << '\n'
      << "coa.lambda_max = " << real(c.coa.lambda_max) << '\n'
      << "coa.egg_laying_alpha = " << real(c.coa.egg_laying_alpha) << '\n'
      << "coa.max_cuckoos = " << c.coa.max_cuckoos << '\n'
      << "coa.pop_variance_stop = " << real(c.coa.pop_variance_stop) << '\n'
      << "coa.accuracy_stop = " << (c.coa.accuracy_stop ? real(*c.coa.accuracy_stop) : std::string("none")) << '\n'
      << "coa.detection_epsilon_frac = " << real(c.coa.detection_epsilon_frac) << '\n'
      << "scalarizer.penalty_coefficient = " << real(c.scalarizer.penalty_coefficient) << '\n'
      << "scalarizer.normalize = " << boolean(c.scalarizer.normalize) << '\n'
      << "oracle.resolution = " << c.oracle.resolution << '\n';
  return out.str();
}

}  // namespace coaw
