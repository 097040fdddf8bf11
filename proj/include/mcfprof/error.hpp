#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mcfprof {

enum class ErrorKind {
  degenerate_surface,
  resolution,
  topology,
  numerical_blowup,
  neck_crossed,
  precondition,
  extinct,
  domain,
  window,
  fit_failure,
  insufficient_data,
  empty_window,
  geometry,
  config,
  inconclusive,
  io,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace mcfprof
