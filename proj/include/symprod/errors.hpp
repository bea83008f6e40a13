#pragma once

#include <stdexcept>
#include <string>

namespace symprod {

// Error codes cover contract violations only. Domain outcomes that are
// ordinary values (empty meet, inconsistent linear system, undecided
// configuration) are optionals/variants, never exceptions.
enum class Errc {
  invalid_argument,   // bad parameters, dimension mismatches, bad indices
  parse_error,        // malformed JSON or scalar strings
  too_large,          // enumeration guard exceeded
  inconsistent,       // profile/config data contradicts itself
  missing_gonality,   // bound needs a gonality the profile cannot resolve
  not_certified,      // strict mode asked for a certificate that is absent
  no_certificate,     // search range exhausted without a valid certificate
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace symprod
