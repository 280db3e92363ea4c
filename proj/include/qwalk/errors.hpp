#pragma once

#include <stdexcept>

namespace qwalk {

// A constructor was handed a coin outside its case (a=0 vs b=0 vs abcd!=0).
struct wrong_case_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// An operation received an input with no usable mass (e.g. normalizing the
// zero measure).
struct degenerate_input_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace qwalk
