#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace starkdyn {

/// Column-oriented numeric table. Column 0 is the abscissa of plots.
struct Series
{
    std::vector<std::string> names;
    std::vector<std::vector<double>> columns;

    std::size_t rows() const { return columns.empty() ? 0 : columns.front().size(); }
};

/// Shortest form that still carries 17 significant digits; parses back to
/// the identical double.
std::string format_double(double v);

std::string to_csv(const Series& series);

/// Header plus one row per point, LF endings. Throws ParameterError for an
/// empty or ragged series and IoError (with the path) when writing fails.
void write_csv(const std::filesystem::path& path, const Series& series);

/// Same contract for rows that mix text and numbers (already formatted).
void write_csv(const std::filesystem::path& path, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows);

/// Reads a numeric CSV written by write_csv().
Series read_csv(const std::filesystem::path& path);

/// Static line plot: one polyline per column after the first, with axes,
/// tick labels and a legend.
std::string render_svg(const Series& series, std::string_view title = {});
void write_svg(const std::filesystem::path& path, const Series& series,
               std::string_view title = {});

void write_text(const std::filesystem::path& path, std::string_view text);

} // namespace starkdyn
