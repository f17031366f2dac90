#pragma once
#include "jetgeom/algebroid.hpp"
#include "jetgeom/genstruct.hpp"

#include <string>
#include <variant>
#include <vector>

namespace jetgeom {

// Structure-definition files: a line-based text format with one named section
// per geometric object.
//
//   # comment (blank lines ignored)
//   [object-name]
//   kind = bivector            one of: bivector | form | multiderivation |
//                              tensor11 | endo-dl | genblock | algebroid
//   chart = x y z              coordinate names, space separated
//   angles = psi               optional subset of the chart coordinates
//   degree = 2                 forms only (default 1)
//   rank = 3                   algebroid only
//   0,1 = x + y^2              component entries: [part] i,j,... = expression
//
// Component keys per kind (indices are 0-based chart positions):
//   bivector        i,j
//   form            i1,...,ik (k = degree)
//   multiderivation lambda i,j      e i
//   tensor11        i,j             (row, column; not antisymmetrized)
//   endo-dl         n i,j   y i   gamma i   g
//   genblock        phi i,j   pi i,j   omega i,j
//   algebroid       anchor a,i   c a,b,k
// Omitted components are zero. Writing is canonical (fixed key order, sorted
// index tuples, normalized expression printing), so emitted files are stable.
struct StructObject {
    std::string name;
    std::string kind;
    ChartPtr chart;
    std::variant<Multivector, DiffForm, MultiDerivation, Tensor11, EndoDL, GenBlockTangent,
                 AlgebroidData>
        value;
};

// Parse the whole text; throws ParseError (with a byte offset into the text)
// on grammar violations and StructureError on inconsistent object data.
std::vector<StructObject> read_structfile(const std::string& text);
// Convenience wrapper; throws Error when the file cannot be read.
std::vector<StructObject> read_structfile_file(const std::string& path);

// Canonical serialization; read_structfile(write_structfile(v)) reproduces v
// and re-serializes byte-identically.
std::string write_structfile(const std::vector<StructObject>& objects);

} // namespace jetgeom
