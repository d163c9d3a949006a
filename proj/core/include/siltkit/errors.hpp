#pragma once

#include <stdexcept>
#include <string>

namespace siltkit {

/* Input-side errors map to CLI exit code 1. */
struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/* Internal invariant violations map to CLI exit code 2. */
struct consistency_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct non_admissible_relation : input_error { using input_error::input_error; };
struct dimension_unbounded : input_error { using input_error::input_error; };
struct empty_vertex_set : input_error { using input_error::input_error; };
struct empty_complement : input_error { using input_error::input_error; };
struct bad_parameters : input_error { using input_error::input_error; };
struct singular_cartan : input_error { using input_error::input_error; };
struct size_mismatch : input_error { using input_error::input_error; };
struct not_certified_silting : input_error { using input_error::input_error; };
struct not_basic : input_error { using input_error::input_error; };
struct incomplete_poset : input_error { using input_error::input_error; };
struct not_weakly_symmetric : input_error { using input_error::input_error; };
struct not_triangular : input_error { using input_error::input_error; };
struct unknown_identifier : input_error { using input_error::input_error; };
struct non_parallel_relation : input_error { using input_error::input_error; };
struct unsupported_format : input_error { using input_error::input_error; };
struct approximation_failure : consistency_error { using consistency_error::consistency_error; };

struct syntax_error : input_error {
  int line, column;
  syntax_error(const std::string& msg, int line_, int col_)
      : input_error(msg + " (line " + std::to_string(line_) + ", column " + std::to_string(col_) + ")"),
        line(line_), column(col_) {}
};

}  // namespace siltkit
