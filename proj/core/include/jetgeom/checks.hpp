#pragma once
#include "jetgeom/structfile.hpp"

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace jetgeom {

// A registered validator operating on the objects of one structure file.
// Checks are deterministic given the seed (most ignore it entirely).
using CheckFn = std::function<Report(const std::vector<StructObject>&, unsigned seed)>;

// Sorted names of all registered checks.
std::vector<std::string> check_names();
// One-line description of a registered check; throws StructureError when the
// name is unknown.
std::string check_description(const std::string& name);

// Run a registered check; throws StructureError on an unknown name or when
// the file lacks the objects the check needs.
Report run_check(const std::string& name, const std::vector<StructObject>& objects,
                 unsigned seed = 0);

// The canonical fixture gallery: (filename, contents) pairs in emission
// order; generated from the built-in example constructions and serialized
// canonically, so repeated emission is byte-identical.
std::vector<std::pair<std::string, std::string>> example_gallery();

} // namespace jetgeom
