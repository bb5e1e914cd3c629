#include "starkdyn/output.hpp"

#include "starkdyn/errors.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

namespace starkdyn {

namespace {

std::string fixed(double v, int precision)
{
    std::array<char, 64> buf{};
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v,
                                   std::chars_format::general, precision);
    return ec == std::errc{} ? std::string(buf.data(), ptr) : std::string("nan");
}

void check_series(const Series& s)
{
    if (s.columns.empty() || s.rows() == 0)
        throw ParameterError("series is empty");
    if (s.names.size() != s.columns.size())
        throw ParameterError("series has " + std::to_string(s.names.size()) + " names for " +
                             std::to_string(s.columns.size()) + " columns");
    for (const auto& c : s.columns)
        if (c.size() != s.rows())
            throw ParameterError("series columns differ in length");
}

std::string escape_xml(std::string_view s)
{
    std::string out;
    for (char ch : s) {
        switch (ch) {
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '&': out += "&amp;"; break;
        case '"': out += "&quot;"; break;
        default: out += ch;
        }
    }
    return out;
}

std::vector<std::string> split(std::string_view line)
{
    std::vector<std::string> cells;
    std::size_t start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        cells.emplace_back(line.substr(start, comma == line.npos ? line.npos : comma - start));
        if (comma == line.npos)
            break;
        start = comma + 1;
    }
    return cells;
}

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                    "#9467bd", "#8c564b", "#e377c2", "#17becf"};

} // namespace

std::string format_double(double v) { return fixed(v, 17); }

std::string to_csv(const Series& s)
{
    check_series(s);
    std::string out;
    for (std::size_t c = 0; c < s.names.size(); ++c) {
        out += c ? "," : "";
        out += s.names[c];
    }
    out += '\n';
    for (std::size_t r = 0; r < s.rows(); ++r) {
        for (std::size_t c = 0; c < s.columns.size(); ++c) {
            out += c ? "," : "";
            out += format_double(s.columns[c][r]);
        }
        out += '\n';
    }
    return out;
}

void write_text(const std::filesystem::path& path, std::string_view text)
{
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f)
        throw IoError("cannot open '" + path.string() + "' for writing");
    f.write(text.data(), static_cast<std::streamsize>(text.size()));
    f.close();
    if (!f)
        throw IoError("write to '" + path.string() + "' failed");
}

void write_csv(const std::filesystem::path& path, const Series& series)
{
    write_text(path, to_csv(series));
}

void write_csv(const std::filesystem::path& path, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows)
{
    if (rows.empty())
        throw ParameterError("table is empty");
    std::string out;
    auto emit = [&out](const std::vector<std::string>& cells) {
        for (std::size_t c = 0; c < cells.size(); ++c) {
            out += c ? "," : "";
            out += cells[c];
        }
        out += '\n';
    };
    emit(header);
    for (const auto& r : rows) {
        if (r.size() != header.size())
            throw ParameterError("table row width differs from header");
        emit(r);
    }
    write_text(path, out);
}

Series read_csv(const std::filesystem::path& path)
{
    std::ifstream f(path, std::ios::binary);
    if (!f)
        throw IoError("cannot open '" + path.string() + "' for reading");

    Series s;
    std::string line;
    if (!std::getline(f, line))
        throw IoError("'" + path.string() + "' is empty");
    s.names = split(line);
    s.columns.resize(s.names.size());

    std::size_t line_no = 1;
    while (std::getline(f, line)) {
        ++line_no;
        if (line.empty())
            continue;
        const auto cells = split(line);
        if (cells.size() != s.names.size())
            throw IoError("'" + path.string() + "' line " + std::to_string(line_no) +
                          ": wrong number of fields");
        for (std::size_t c = 0; c < cells.size(); ++c) {
            double v = 0.0;
            const auto& cell = cells[c];
            auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
            if (ec != std::errc{} || ptr != cell.data() + cell.size())
                throw IoError("'" + path.string() + "' line " + std::to_string(line_no) +
                              ": '" + cell + "' is not a number");
            s.columns[c].push_back(v);
        }
    }
    return s;
}

std::string render_svg(const Series& s, std::string_view title)
{
    check_series(s);
    constexpr double W = 800, H = 500;
    constexpr double left = 80, right = 170, top = 40, bottom = 60;
    const double pw = W - left - right;
    const double ph = H - top - bottom;

    const auto& x = s.columns[0];
    const auto [xmin_it, xmax_it] = std::minmax_element(x.begin(), x.end());
    double xmin = *xmin_it, xmax = *xmax_it;
    double ymin = std::numeric_limits<double>::infinity();
    double ymax = -ymin;
    for (std::size_t c = 1; c < s.columns.size(); ++c)
        for (double v : s.columns[c])
            if (std::isfinite(v)) {
                ymin = std::min(ymin, v);
                ymax = std::max(ymax, v);
            }
    if (!std::isfinite(ymin)) {
        ymin = 0.0;
        ymax = 1.0;
    }
    if (xmax == xmin)
        xmax = xmin + 1.0;
    if (ymax == ymin) {
        ymin -= 0.5;
        ymax += 0.5;
    }

    auto px = [&](double v) { return left + (v - xmin) / (xmax - xmin) * pw; };
    auto py = [&](double v) { return top + (ymax - v) / (ymax - ymin) * ph; };

    std::ostringstream o;
    o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
      << "\" viewBox=\"0 0 " << W << ' ' << H << "\">\n";
    o << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    if (!title.empty())
        o << "<text x=\"" << W / 2 << "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
          << "font-size=\"16\">" << escape_xml(title) << "</text>\n";

    // axes
    o << "<g stroke=\"black\" stroke-width=\"1\">\n"
      << "<line x1=\"" << left << "\" y1=\"" << top + ph << "\" x2=\"" << left + pw << "\" y2=\""
      << top + ph << "\"/>\n"
      << "<line x1=\"" << left << "\" y1=\"" << top << "\" x2=\"" << left << "\" y2=\"" << top + ph
      << "\"/>\n</g>\n";

    o << "<g font-family=\"sans-serif\" font-size=\"11\">\n";
    constexpr int ticks = 5;
    for (int i = 0; i <= ticks; ++i) {
        const double f = static_cast<double>(i) / ticks;
        const double xv = xmin + f * (xmax - xmin);
        const double yv = ymin + f * (ymax - ymin);
        o << "<text x=\"" << px(xv) << "\" y=\"" << top + ph + 16
          << "\" text-anchor=\"middle\">" << fixed(xv, 4) << "</text>\n";
        o << "<text x=\"" << left - 6 << "\" y=\"" << py(yv) + 4 << "\" text-anchor=\"end\">"
          << fixed(yv, 4) << "</text>\n";
    }
    o << "<text x=\"" << left + pw / 2 << "\" y=\"" << H - 16 << "\" text-anchor=\"middle\">"
      << escape_xml(s.names[0]) << "</text>\n</g>\n";

    for (std::size_t c = 1; c < s.columns.size(); ++c) {
        const char* color = kPalette[(c - 1) % std::size(kPalette)];
        o << "<polyline class=\"series\" data-name=\"" << escape_xml(s.names[c])
          << "\" fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t r = 0; r < s.rows(); ++r) {
            const double v = s.columns[c][r];
            if (!std::isfinite(v))
                continue;
            o << (r ? " " : "") << fixed(px(x[r]), 10) << ',' << fixed(py(v), 10);
        }
        o << "\"/>\n";

        const double ly = top + 14 + 18 * static_cast<double>(c - 1);
        o << "<line x1=\"" << left + pw + 14 << "\" y1=\"" << ly << "\" x2=\"" << left + pw + 40
          << "\" y2=\"" << ly << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
        o << "<text x=\"" << left + pw + 46 << "\" y=\"" << ly + 4
          << "\" font-family=\"sans-serif\" font-size=\"12\">" << escape_xml(s.names[c])
          << "</text>\n";
    }
    o << "</svg>\n";
    return o.str();
}

void write_svg(const std::filesystem::path& path, const Series& series, std::string_view title)
{
    write_text(path, render_svg(series, title));
}

} // namespace starkdyn
