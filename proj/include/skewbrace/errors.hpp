#pragma once

#include <stdexcept>
#include <string>

namespace sb {

enum class Errc {
  // group validation
  not_associative,
  no_identity_at_zero,
  not_invertible,
  not_latin,
  not_subgroup,
  not_normal,
  unsupported_order,
  // brace validation
  compatibility_fails,
  bad_parameters,
  not_an_ideal,
  internal_ideal_check_failed,
  well_definedness_violation,
  not_regular,
  ann_not_contained,
  not_a_subgroup,
  not_two_sided,
  // solutions
  braid_fails,
  not_bijective,
  not_involutive,
  induced_not_well_defined,
  unsupported_solution_kind,
  internal_axiom_failure,
  // io
  parse_error,
  hash_mismatch,
  flag_mismatch,
  io_error,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace sb
