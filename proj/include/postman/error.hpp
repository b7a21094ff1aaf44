#pragma once

#include <stdexcept>
#include <string>

namespace postman {

enum class Errc {
  not_eulerian,
  unknown_link,
  odd_order,
  odd_x,
  disconnected,
  not_strongly_connected,
  too_large,
  parity,
  demand_sum,
  duplicate_link,
  parse,
  not_simple,
  empty_phi,
  usage,
  internal,
};

const char* errc_name(Errc c);

/// Exception carrying a stable error code alongside the message.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] void fail(Errc code, const std::string& what);

}  // namespace postman
