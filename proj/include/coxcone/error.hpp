#pragma once

#include <stdexcept>
#include <string>

namespace coxcone {

// validation: bad input data. bound: an enumeration limit was exceeded.
// not_found: a search was exhausted honestly. internal: a broken invariant.
enum class ErrKind { validation, bound, not_found, internal };

struct Error : std::runtime_error {
  ErrKind kind;
  Error(ErrKind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

[[noreturn]] inline void fail(ErrKind k, const std::string& msg) { throw Error(k, msg); }

inline void require(bool cond, ErrKind k, const std::string& msg) {
  if (!cond) fail(k, msg);
}

}  // namespace coxcone
