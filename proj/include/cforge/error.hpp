#pragma once

#include <stdexcept>
#include <string>

namespace cforge {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand tensors or cochains do not fit the diagram they are used with.
class ShapeError : public Error {
 public:
  using Error::Error;
};

class IndexError : public Error {
 public:
  using Error::Error;
};

class NotInvertible : public Error {
 public:
  using Error::Error;
};

class MissingStar : public Error {
 public:
  using Error::Error;
};

class NotACocycle : public Error {
 public:
  using Error::Error;
};

class FirstOrderObstruction : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// Raised instead of truncating when an assembled matrix exceeds the caps.
class ResourceLimit : public Error {
 public:
  ResourceLimit(const std::string& what, int degree)
      : Error(what), degree_(degree) {}
  int degree() const { return degree_; }

 private:
  int degree_;
};

}  // namespace cforge
