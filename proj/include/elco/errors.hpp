#pragma once

#include <stdexcept>
#include <string>

namespace elco {

// Stable error kinds so the CLI can map failures to exit codes.
enum class Errc {
  non_prime,
  unsupported_order,
  division_by_zero,
  index_out_of_range,
  ambient_mismatch,
  duplicate_entry_label,
  symbol_out_of_range,
  radius_out_of_range,
  enumeration_bound_exceeded,
  not_distance_two,
  unsupported_distance,
  alphabet_not_field,
  singular_matrix,
  orbit_bound_exceeded,
  group_too_large,
  not_bijection,
  not_verified_triple,
  generator_escapes_code,
  image_bound_exceeded,
  simplicity_violation,
  parse_error,
  io_error,
};

class Error : public std::runtime_error {
 public:
  Error(Errc kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Errc kind() const noexcept { return kind_; }

 private:
  Errc kind_;
};

[[noreturn]] inline void raise(Errc kind, const std::string& what) { throw Error(kind, what); }

const char* errc_name(Errc kind);

}  // namespace elco
