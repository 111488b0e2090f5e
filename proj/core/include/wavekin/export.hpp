#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "wavekin/config.hpp"
#include "wavekin/grid.hpp"

namespace wavekin {

// CSV: '#'-prefixed metadata lines, a header row `x,y,z,t,psi`, then one row
// per grid point in storage order. Numbers carry 17 significant digits.
std::string to_csv(const FieldGrid& grid);
// JSON: {"format", "metadata", "axes", "values"} with a flat value array.
std::string to_json(const FieldGrid& grid);

FieldGrid from_csv(std::string_view text);
FieldGrid from_json(std::string_view text);

// Throws IoError carrying the path.
void export_grid(const FieldGrid& grid, const std::filesystem::path& path,
                 ExportFormat format);
// Format is chosen from the extension (.json, otherwise CSV).
FieldGrid import_grid(const std::filesystem::path& path);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace wavekin
