#pragma once

#include <stdexcept>
#include <string>

namespace a5g {

enum class Errc {
  syntax = 1,
  root_order,
  field_mismatch,
  division_by_zero,
  invalid_argument,
  not_homogeneous,
  not_invertible,
  bound_exceeded,
  not_on_variety,
  smooth_point,
  degenerate,
  no_solution,
  not_found,
  config,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc c, const std::string& what) : std::runtime_error(what), code_(c) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace a5g
