#include "gpc/diagram.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <sstream>

#include "gpc/errors.hpp"

namespace gpc {

DiagramPoint::DiagramPoint(double birth, double death) : birth_(birth), death_(death) {
    if (!std::isfinite(birth) || !std::isfinite(death)) {
        throw InvalidArgument("diagram point coordinates must be finite");
    }
    if (!(death > birth)) {
        throw InvalidArgument("diagram point must lie strictly above the diagonal");
    }
}

PersistenceDiagram::PersistenceDiagram(std::vector<DiagramPoint> points) : points_(std::move(points)) {
    std::sort(points_.begin(), points_.end());
}

PersistenceDiagram PersistenceDiagram::from_pairs(std::span<const std::pair<double, double>> pairs) {
    std::vector<DiagramPoint> pts;
    pts.reserve(pairs.size());
    for (const auto& [b, d] : pairs) pts.emplace_back(b, d);
    return PersistenceDiagram(std::move(pts));
}

PersistenceDiagram PersistenceDiagram::from_pairs(std::initializer_list<std::pair<double, double>> pairs) {
    return from_pairs(std::span<const std::pair<double, double>>(pairs.begin(), pairs.size()));
}

double PersistenceDiagram::min_birth() const {
    if (points_.empty()) throw InvalidArgument("min_birth of an empty diagram");
    return points_.front().birth();  // sorted by birth first
}

double PersistenceDiagram::max_death() const {
    if (points_.empty()) throw InvalidArgument("max_death of an empty diagram");
    double m = points_.front().death();
    for (const auto& p : points_) m = std::max(m, p.death());
    return m;
}

PersistenceDiagram PersistenceDiagram::merged_with(const PersistenceDiagram& other) const {
    std::vector<DiagramPoint> pts = points_;
    pts.insert(pts.end(), other.points_.begin(), other.points_.end());
    return PersistenceDiagram(std::move(pts));
}

double total_lifespan(const PersistenceDiagram& d) {
    double sum = 0.0;
    for (const auto& p : d) sum += p.lifespan();
    return sum;
}

double min_lifespan(const PersistenceDiagram& d) {
    double m = std::numeric_limits<double>::infinity();
    for (const auto& p : d) m = std::min(m, p.lifespan());
    return m;
}

double joint_min_lifespan(const PersistenceDiagram& c, const PersistenceDiagram& d) {
    return std::min({min_lifespan(c), min_lifespan(d), 1.0});
}

namespace {

std::string_view trim(std::string_view s) {
    const auto ws = " \t";
    const auto first = s.find_first_not_of(ws);
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(ws);
    return s.substr(first, last - first + 1);
}

double parse_field(std::string_view field, std::size_t line) {
    field = trim(field);
    if (field.empty()) throw ParseError(line, "empty field");
    // from_chars rejects a leading '+'
    if (field.front() == '+') field.remove_prefix(1);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec == std::errc::result_out_of_range) {
        throw InvalidPoint(line, "coordinate out of range");
    }
    if (ec != std::errc() || ptr != field.data() + field.size()) {
        throw ParseError(line, "not a number: '" + std::string(field) + "'");
    }
    return value;
}

}  // namespace

PersistenceDiagram load_diagram(std::istream& in, DiagramFormat format) {
    if (format != DiagramFormat::Csv) throw InvalidArgument("unsupported diagram format");
    std::vector<DiagramPoint> pts;
    std::string raw;
    std::size_t line_no = 0;
    bool seen_data = false;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line(raw);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (trim(line).empty() || line.front() == '#') continue;
        if (!seen_data && line == "birth,death") {
            seen_data = true;
            continue;
        }
        seen_data = true;
        const auto comma = line.find(',');
        if (comma == std::string_view::npos || line.find(',', comma + 1) != std::string_view::npos) {
            throw ParseError(line_no, "expected exactly two comma-separated fields");
        }
        const double b = parse_field(line.substr(0, comma), line_no);
        const double d = parse_field(line.substr(comma + 1), line_no);
        if (!std::isfinite(b) || !std::isfinite(d)) {
            throw InvalidPoint(line_no, "non-finite coordinate");
        }
        if (!(d > b)) {
            throw InvalidPoint(line_no, "death must be strictly greater than birth");
        }
        pts.emplace_back(b, d);
    }
    return PersistenceDiagram(std::move(pts));
}

PersistenceDiagram parse_diagram(std::string_view text) {
    std::istringstream in{std::string(text)};
    return load_diagram(in);
}

PersistenceDiagram load_diagram_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open diagram file: " + path);
    return load_diagram(in);
}

std::string serialize_diagram(const PersistenceDiagram& d) {
    std::string out;
    char buf[64];
    for (const auto& p : d) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", p.birth(), p.death());
        out += buf;
    }
    return out;
}

std::uint64_t diagram_hash(const PersistenceDiagram& d) {
    std::uint64_t h = 14695981039346656037ULL;
    for (const unsigned char c : serialize_diagram(d)) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

}  // namespace gpc
