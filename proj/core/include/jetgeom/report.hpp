#pragma once
#include <string>
#include <vector>

namespace jetgeom {

// Outcome of a validator: overall verdict plus human-readable failure notes.
struct Report {
    bool ok = true;
    std::vector<std::string> notes;

    void fail(std::string what) {
        ok = false;
        notes.push_back(std::move(what));
    }
    void note(std::string what) { notes.push_back(std::move(what)); }
    void merge(const Report& o, const std::string& prefix = "") {
        ok = ok && o.ok;
        for (const auto& n : o.notes) notes.push_back(prefix + n);
    }
};

} // namespace jetgeom
