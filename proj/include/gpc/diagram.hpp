#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gpc {

/// A (birth, death) pair strictly above the diagonal with finite coordinates.
class DiagramPoint {
public:
    /// Throws InvalidArgument when death <= birth or a coordinate is not finite.
    DiagramPoint(double birth, double death);

    double birth() const noexcept { return birth_; }
    double death() const noexcept { return death_; }
    double lifespan() const noexcept { return death_ - birth_; }

    friend bool operator==(const DiagramPoint&, const DiagramPoint&) = default;
    friend auto operator<=>(const DiagramPoint&, const DiagramPoint&) = default;

private:
    double birth_;
    double death_;
};

/// Finite multiset of diagram points kept in lexicographic (birth, death) order,
/// so multiset equality is list equality. Immutable after construction.
class PersistenceDiagram {
public:
    PersistenceDiagram() = default;
    explicit PersistenceDiagram(std::vector<DiagramPoint> points);

    /// Convenience for tests and bindings; validates every pair.
    static PersistenceDiagram from_pairs(std::span<const std::pair<double, double>> pairs);
    static PersistenceDiagram from_pairs(std::initializer_list<std::pair<double, double>> pairs);

    const std::vector<DiagramPoint>& points() const noexcept { return points_; }
    std::size_t size() const noexcept { return points_.size(); }
    bool empty() const noexcept { return points_.empty(); }
    const DiagramPoint& operator[](std::size_t i) const { return points_[i]; }
    auto begin() const noexcept { return points_.begin(); }
    auto end() const noexcept { return points_.end(); }

    /// Smallest birth; the diagram must be nonempty.
    double min_birth() const;
    /// Largest death; the diagram must be nonempty.
    double max_death() const;

    /// Multiset union.
    PersistenceDiagram merged_with(const PersistenceDiagram& other) const;

    friend bool operator==(const PersistenceDiagram&, const PersistenceDiagram&) = default;

private:
    std::vector<DiagramPoint> points_;
};

/// L_D: sum of lifespans, 0 for the empty diagram.
double total_lifespan(const PersistenceDiagram& d);

/// δ_D: smallest lifespan; +infinity for the empty diagram.
double min_lifespan(const PersistenceDiagram& d);

/// 1/δ_D with the convention 1/min(∅) = 0.
inline double inverse_min_lifespan(double delta) {
    return delta == std::numeric_limits<double>::infinity() ? 0.0 : 1.0 / delta;
}

/// min{δ_C, δ_D, 1}; always in (0, 1].
double joint_min_lifespan(const PersistenceDiagram& c, const PersistenceDiagram& d);

enum class DiagramFormat { Csv };

/// Reads `birth,death` rows. Optional header `birth,death` as the first data line,
/// `#` comments and blank lines skipped, LF or CRLF.
/// Throws ParseError(line) or InvalidPoint(line).
PersistenceDiagram load_diagram(std::istream& in, DiagramFormat format = DiagramFormat::Csv);
PersistenceDiagram parse_diagram(std::string_view text);
PersistenceDiagram load_diagram_file(const std::string& path);

/// Writes one `birth,death` row per point at full (17 digit) precision.
std::string serialize_diagram(const PersistenceDiagram& d);

/// FNV-1a 64 over the serialized canonical form; used to tag emitted files.
std::uint64_t diagram_hash(const PersistenceDiagram& d);

}  // namespace gpc
