#pragma once

#include <stdexcept>
#include <string>

namespace triform {

// Base for every error the library raises. Callers that only care about
// "bad input" can catch this one type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DegenerateTriangle : public Error {
 public:
  using Error::Error;
};

class CoincidentAnchors : public Error {
 public:
  using Error::Error;
};

class CoincidentTarget : public Error {
 public:
  using Error::Error;
};

class NoMovement : public Error {
 public:
  using Error::Error;
};

class InvalidAngles : public Error {
 public:
  using Error::Error;
};

class CycleLimitExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace triform
