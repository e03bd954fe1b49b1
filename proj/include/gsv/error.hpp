#pragma once

#include <stdexcept>
#include <string>

namespace gsv {

// Machine-readable failure causes. The CLI maps a subset of these to
// dedicated exit codes; everything else is a generic failure.
enum class errc {
  dimension_mismatch,
  ball_not_enumerable,
  cap_exceeded,
  codomain_overflow,
  not_hilbert,
  not_a_dof_function,
  order_too_large,
  too_large,
  parse_error,
  solver_failure,
  invalid_argument,
};

const char* to_string(errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace gsv
