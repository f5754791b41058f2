#pragma once

#include <stdexcept>
#include <string>

namespace zm {

enum class ErrorKind {
  InvalidTriple,        // (m,n,r) does not present a ZM-group
  InvalidAutomorphism,  // (x1,x2,y) is not an automorphism triple
  Capacity,             // exceeds integer width or an enumeration budget
  Precondition,         // operation called outside its domain
  NoOrder,              // multiplicative order of a non-unit
  Internal,             // a Burnside division or consistency check failed
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace zm
