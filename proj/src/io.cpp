#include "coaw/io.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <system_error>

namespace coaw {

std::string format_double(double v) {
  if (v == 0.0) return "0";  // folds -0 as well
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  if (ec != std::errc{}) throw std::runtime_error("format_double: conversion failed");
  return std::string(buf.data(), ptr);
}

std::string front_to_csv(std::span<const FrontPoint> points, std::size_t dim, std::size_t n_obj) {
  std::vector<FrontPoint> rows(points.begin(), points.end());
  std::sort(rows.begin(), rows.end(), [](const FrontPoint& a, const FrontPoint& b) {
    return std::lexicographical_compare(a.f.begin(), a.f.end(), b.f.begin(), b.f.end());
  });
  std::string out;
  for (std::size_t d = 0; d < dim; ++d) out += (d ? ",x" : "x") + std::to_string(d + 1);
  for (std::size_t i = 0; i < n_obj; ++i) out += (i || dim ? ",f" : "f") + std::to_string(i + 1);
  out += '\n';
  for (const auto& r : rows) {
    if (r.x.size() != dim || r.f.size() != n_obj) throw std::invalid_argument("front_to_csv: row shape mismatch");
    bool first = true;
    for (const auto* part : {&r.x, &r.f}) {
      for (double v : *part) {
        if (!first) out += ',';
        out += format_double(v);
        first = false;
      }
    }
    out += '\n';
  }
  return out;
}

std::vector<FrontPoint> front_from_csv(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    auto line = text.substr(pos, nl - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty()) lines.push_back(line);
    pos = nl + 1;
  }
  if (lines.empty()) throw std::runtime_error("front CSV: missing header");

  auto split = [](std::string_view line) {
    std::vector<std::string_view> cells;
    std::size_t p = 0;
    for (;;) {
      const auto c = line.find(',', p);
      cells.push_back(line.substr(p, c == std::string_view::npos ? std::string_view::npos : c - p));
      if (c == std::string_view::npos) break;
      p = c + 1;
    }
    return cells;
  };

  const auto header = split(lines.front());
  std::vector<bool> is_objective;
  for (auto h : header) {
    if (h.size() >= 2 && h.front() == 'x') {
      is_objective.push_back(false);
    } else if (h.size() >= 2 && h.front() == 'f') {
      is_objective.push_back(true);
    } else {
      throw std::runtime_error("front CSV: unexpected column '" + std::string(h) + "'");
    }
  }
  if (std::none_of(is_objective.begin(), is_objective.end(), [](bool b) { return b; })) {
    throw std::runtime_error("front CSV: no objective columns");
  }

  std::vector<FrontPoint> out;
  for (std::size_t r = 1; r < lines.size(); ++r) {
    const auto cells = split(lines[r]);
    if (cells.size() != header.size()) {
      throw std::runtime_error("front CSV: row " + std::to_string(r + 1) + " has " + std::to_string(cells.size()) +
                               " cells, expected " + std::to_string(header.size()));
    }
    FrontPoint p;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      double v = 0.0;
      const auto cell = cells[c];
      const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
      if (ec != std::errc{} || ptr != cell.data() + cell.size() || cell.empty()) {
        throw std::runtime_error("front CSV: row " + std::to_string(r + 1) + ": bad number '" + std::string(cell) +
                                 "'");
      }
      (is_objective[c] ? p.f : p.x).push_back(v);
    }
    out.push_back(std::move(p));
  }
  return out;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<FrontPoint> read_front_csv(const std::filesystem::path& path) {
  return front_from_csv(read_text_file(path));
}

void write_files_atomically(const std::filesystem::path& dir,
                            std::span<const std::pair<std::string, std::string>> files) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw std::runtime_error("cannot create output directory '" + dir.string() + "': " + ec.message());

  std::vector<fs::path> temps;
  auto cleanup = [&] {
    for (const auto& t : temps) fs::remove(t, ec);
  };
  for (const auto& [name, content] : files) {
    const auto tmp = dir / (name + ".tmp");
    temps.push_back(tmp);
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << content;
    out.close();
    if (!out) {
      cleanup();
      throw std::runtime_error("failed writing '" + (dir / name).string() + "'");
    }
  }
  for (std::size_t i = 0; i < files.size(); ++i) {
    fs::rename(temps[i], dir / files[i].first, ec);
    if (ec) {
      cleanup();
      throw std::runtime_error("failed to move '" + temps[i].string() + "' into place: " + ec.message());
    }
  }
}

}  // namespace coaw
