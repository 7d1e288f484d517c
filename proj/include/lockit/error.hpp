#pragma once

#include <stdexcept>
#include <string>

namespace lockit {

enum class ErrorKind {
  invalid_input,  // caller violated a precondition
  resource,       // a configured size cap was exceeded
  domain,         // product requested outside the domain of a partial group
  parse,          // malformed spec document
  internal,       // a postcondition failed; indicates a bug
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) { throw Error(kind, msg); }

// Postcondition guard. Always on: the checks are cheap relative to the searches they guard.
#define LOCKIT_ENSURE(cond, msg)                                                        \
  do {                                                                                  \
    if (!(cond)) ::lockit::fail(::lockit::ErrorKind::internal, std::string("postcondition failed: ") + (msg)); \
  } while (0)

}  // namespace lockit
