#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "coaw/pareto.hpp"

namespace coaw {

/// Shortest decimal text that round-trips to the same double.
std::string format_double(double v);

/// Front CSV: header `x1,...,xD,f1,...,fM`, rows sorted by f1 then f2.
std::string front_to_csv(std::span<const FrontPoint> points, std::size_t dim, std::size_t n_obj);

/// Parses the front CSV schema. Columns are classified by their header name.
std::vector<FrontPoint> front_from_csv(std::string_view text);

std::vector<FrontPoint> read_front_csv(const std::filesystem::path& path);

std::string read_text_file(const std::filesystem::path& path);

/// Writes all files or none: contents go to temporaries first and are
/// renamed into place once every write succeeded.
void write_files_atomically(const std::filesystem::path& dir,
                            std::span<const std::pair<std::string, std::string>> files);

}  // namespace coaw
