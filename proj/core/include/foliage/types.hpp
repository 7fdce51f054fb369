#pragma once

#include <array>
#include <complex>
#include <stdexcept>
#include <string>

namespace foliage {

using Complex = std::complex<double>;

inline constexpr int kMaxCoords = 4;
inline constexpr int kMaxHalfCodim = 4;

// Integer Fourier mode vector; entries past the model's coordinate count stay 0.
using ModeVector = std::array<int, kMaxCoords>;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ModelMismatchError : public Error {
 public:
  using Error::Error;
};

class ArgumentError : public Error {
 public:
  using Error::Error;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

class TruncationError : public Error {
 public:
  using Error::Error;
};

class CapabilityError : public Error {
 public:
  using Error::Error;
};

class ConsistencyError : public Error {
 public:
  using Error::Error;
};

// i^k for any integer k.
inline Complex i_pow(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

std::string mode_to_string(const ModeVector& m, int dims);

}  // namespace foliage
