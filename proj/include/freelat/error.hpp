#pragma once

#include <stdexcept>
#include <string>

namespace freelat {

enum class ErrorKind {
  Parse,           // malformed input text
  UnknownElement,  // a name that is not in the ground set
  Cycle,           // cover digraph has a directed cycle (antisymmetry violation)
  CapExceeded,     // an enumeration or construction hit its configured cap
  NotClosed,       // argument required to be a closed set is not
  NotIrreducible,  // argument required to be join irreducible is not
  Overflow,        // a count does not fit the configured word width
  Invalid,         // structurally invalid object (non-lattice, bad relation, ...)
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace freelat
