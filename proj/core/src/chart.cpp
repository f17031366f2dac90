#include "jetgeom/chart.hpp"
#include "jetgeom/error.hpp"

#include <algorithm>
#include <set>

namespace jetgeom {

ChartPtr Chart::make(std::vector<std::string> coords,
                     std::vector<std::string> angle_coords) {
    auto ch = std::make_shared<Chart>(Chart{});
    std::set<std::string> seen;
    for (const auto& c : coords) {
        if (c == "i") throw StructureError("'i' is reserved for the imaginary unit");
        if (!seen.insert(c).second)
            throw StructureError("duplicate coordinate name: " + c);
    }
    std::set<std::string> angles(angle_coords.begin(), angle_coords.end());
    for (const auto& a : angles)
        if (!seen.count(a))
            throw StructureError("angle coordinate not in chart: " + a);
    ch->coords_ = std::move(coords);
    ch->angle_names_.assign(angles.begin(), angles.end());
    for (std::size_t ci = 0; ci < ch->coords_.size(); ++ci) {
        const std::string& name = ch->coords_[ci];
        if (angles.count(name)) {
            ch->coord_var_.push_back(-1);
            ch->sin_var_.push_back((int)ch->var_names_.size());
            ch->var_names_.push_back("sin(" + name + ")");
            ch->var_owner_.push_back(ci);
            ch->cos_var_.push_back((int)ch->var_names_.size());
            ch->var_names_.push_back("cos(" + name + ")");
            ch->var_owner_.push_back(ci);
        } else {
            ch->coord_var_.push_back((int)ch->var_names_.size());
            ch->var_names_.push_back(name);
            ch->var_owner_.push_back(ci);
            ch->sin_var_.push_back(-1);
            ch->cos_var_.push_back(-1);
        }
    }
    return ch;
}

int Chart::coord_index(const std::string& name) const {
    auto it = std::find(coords_.begin(), coords_.end(), name);
    return it == coords_.end() ? -1 : (int)(it - coords_.begin());
}

bool Chart::same_as(const Chart& o) const {
    return coords_ == o.coords_ && sin_var_ == o.sin_var_;
}

ChartPtr Chart::extended(const std::vector<std::string>& more,
                         const std::vector<std::string>& more_angles) const {
    std::vector<std::string> cs = coords_;
    for (const auto& m : more) {
        if (coord_index(m) >= 0)
            throw StructureError("coordinate name already in chart: " + m);
        cs.push_back(m);
    }
    for (const auto& m : more_angles) {
        if (coord_index(m) >= 0)
            throw StructureError("coordinate name already in chart: " + m);
        cs.push_back(m);
    }
    std::vector<std::string> as = angle_names_;
    as.insert(as.end(), more_angles.begin(), more_angles.end());
    return make(cs, as);
}

ChartPtr Chart::without(const std::string& coord) const {
    int ci = coord_index(coord);
    if (ci < 0) throw StructureError("no such coordinate: " + coord);
    std::vector<std::string> cs;
    for (std::size_t k = 0; k < coords_.size(); ++k)
        if ((int)k != ci) cs.push_back(coords_[k]);
    std::vector<std::string> as;
    for (const auto& a : angle_names_)
        if (a != coord) as.push_back(a);
    return make(cs, as);
}

bool same_chart(const ChartPtr& a, const ChartPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return a->same_as(*b);
}

void require_same_chart(const ChartPtr& a, const ChartPtr& b) {
    if (!same_chart(a, b)) throw ChartMismatch("values live on different charts");
}

} // namespace jetgeom
