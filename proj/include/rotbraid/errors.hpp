#pragma once

#include <stdexcept>
#include <string>

namespace rotbraid {

enum class errc {
  index_out_of_range,
  strand_count_mismatch,
  invalid_pair,
  invalid_index,
  unsupported_strand_count,
  not_pure,
  invalid_class,
  zero_axis,
  out_of_range,
  not_closed,
  numerical_ambiguity,
  sparse_sampling,
  not_normalizable,
  degenerate_triangle,
  not_anchored,
  no_clear_pole,
  pole_collision,
  degenerate_crossing,
  triple_crossing,
  not_pure_result,
  disagreement,
  bad_certificate,
  parse_error,
};

const char* errc_name(errc code);

/// Single exception type for all domain errors; `code()` identifies the kind.
class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void throw_error(errc code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace rotbraid
