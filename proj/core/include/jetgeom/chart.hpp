#pragma once
#include <memory>
#include <string>
#include <vector>

namespace jetgeom {

class Chart;
using ChartPtr = std::shared_ptr<const Chart>;

// A coordinate chart. Coordinates are real-valued; a subset may be declared
// as circle-fiber half-angles, for which sin/cos are admitted in expressions.
//
// Internally each plain coordinate owns one polynomial variable; each angle
// coordinate owns two (its sine and cosine), reduced modulo s^2 + c^2 - 1.
class Chart {
public:
    static ChartPtr make(std::vector<std::string> coords,
                         std::vector<std::string> angle_coords = {});

    const std::vector<std::string>& coords() const { return coords_; }
    std::size_t dim() const { return coords_.size(); }
    bool is_angle(std::size_t ci) const { return sin_var_[ci] >= 0; }

    // -1 if absent.
    int coord_index(const std::string& name) const;

    // Polynomial-variable layout.
    std::size_t nvars() const { return var_names_.size(); }
    int coord_var(std::size_t ci) const { return coord_var_[ci]; }
    int sin_var(std::size_t ci) const { return sin_var_[ci]; }   // -1 unless angle
    int cos_var(std::size_t ci) const { return cos_var_[ci]; }   // -1 unless angle
    const std::string& var_name(std::size_t v) const { return var_names_[v]; }
    // Coordinate that owns variable v (every variable belongs to exactly one).
    std::size_t var_owner(std::size_t v) const { return var_owner_[v]; }

    bool same_as(const Chart& o) const;

    // New chart with extra coordinates appended (names must be fresh).
    ChartPtr extended(const std::vector<std::string>& more,
                      const std::vector<std::string>& more_angles = {}) const;
    // New chart with one coordinate removed.
    ChartPtr without(const std::string& coord) const;

private:
    std::vector<std::string> coords_;
    std::vector<int> coord_var_, sin_var_, cos_var_;
    std::vector<std::string> var_names_;
    std::vector<std::size_t> var_owner_;
    std::vector<std::string> angle_names_;
    friend ChartPtr make_chart_impl(std::vector<std::string>, std::vector<std::string>);
};

// True when the two pointers denote equal charts (same coords, same angles).
bool same_chart(const ChartPtr& a, const ChartPtr& b);
// Throws ChartMismatch unless same_chart.
void require_same_chart(const ChartPtr& a, const ChartPtr& b);

} // namespace jetgeom
