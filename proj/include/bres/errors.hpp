#pragma once

#include <stdexcept>
#include <string>

namespace bres {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Line integral requested for a function that does not decay at least like |xi_n|^-2.
class NonIntegrable : public Error {
 public:
  using Error::Error;
};

/// Numeric evaluation requested within 1e-12 of a pole at +-i.
class PoleProximity : public Error {
 public:
  using Error::Error;
};

/// (n, p1, p2) outside the catalog of covered operator pairs.
class UnsupportedConfiguration : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t pos)
      : Error(msg + " at offset " + std::to_string(pos)), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

}  // namespace bres
