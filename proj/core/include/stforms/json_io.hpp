#pragma once

#include "stforms/form.hpp"
#include "stforms/group.hpp"
#include "stforms/intertwine.hpp"
#include "stforms/matrix.hpp"

#include <stdexcept>
#include <string>

namespace stforms {

/// Raised for malformed serialized input (bad JSON, bad rationals, duplicate
/// exponent tuples, wrong component counts).
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Matrices serialize as JSON arrays of arrays of "num/den" strings.
std::string matrix_to_json(const RatMatrix& m);
RatMatrix matrix_from_json(const std::string& text);

/// Form file format:
///   degree 0/4: {"degree":0,"f":poly}
///   degree 1/3: {"degree":1,"f":poly,"a":[poly,poly,poly]}
///   degree 2:   {"degree":2,"a":[...],"b":[...]}
/// where poly is a term list [{"c":"3/2","e":[et,ex,ey,ez]}, ...]; an empty
/// list is the zero polynomial. Duplicate exponent tuples are rejected.
std::string form_to_json(const Form& w);
Form form_from_json(const std::string& text);

std::string group_element_to_json(const GroupElement& g);
GroupElement group_element_from_json(const std::string& text);

/// {"spacetime":...,"p":...,"q":...,"mode":...,"dim":...,"basis":[...],"labels":[...]}
std::string intertwiner_space_to_json(const IntertwinerSpace& space,
                                      const std::vector<OperatorLabel>& labels);
IntertwinerSpace intertwiner_space_from_json(const std::string& text);

}  // namespace stforms
