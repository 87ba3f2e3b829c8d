// Copyright (c) 2026 the floquet toolkit developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0.txt
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace floquet {

/// Base class for every error thrown by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgumentError : public Error {
 public:
  using Error::Error;
};

class NotSquareError : public Error {
 public:
  using Error::Error;
};

/// A matrix failed a Hermiticity check; carries the measured max|M - M^dag|.
class NotHermitianError : public Error {
 public:
  NotHermitianError(const std::string& what, double deviation)
      : Error(what), deviation_(deviation) {}
  double deviation() const { return deviation_; }

 private:
  double deviation_ = 0.0;
};

/// A matrix failed a unitarity check; carries the measured max|U^dag U - I|.
class NotUnitaryError : public Error {
 public:
  NotUnitaryError(const std::string& what, double deviation)
      : Error(what), deviation_(deviation) {}
  double deviation() const { return deviation_; }

 private:
  double deviation_ = 0.0;
};

class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// The integer harmonic ratio was not reduced: gcd(N1, N2) != 1.
class NotCoprimeError : public Error {
 public:
  NotCoprimeError(const std::string& what, int n1, int n2)
      : Error(what), n1_(n1), n2_(n2) {}
  int n1() const { return n1_; }
  int n2() const { return n2_; }

 private:
  int n1_ = 0;
  int n2_ = 0;
};

class IndexOutOfRangeError : public Error {
 public:
  using Error::Error;
};

/// The Fourier basis of a propagator does not contain the zero harmonic.
class ZeroBlockMissingError : public Error {
 public:
  using Error::Error;
};

class MarginTooSmallError : public Error {
 public:
  using Error::Error;
};

/// A k-space operation was requested on a non-periodic Hamiltonian.
class NotPeriodicError : public Error {
 public:
  using Error::Error;
};

/// Integrator unitarity drift exceeded its bound (time step too large).
class NonUnitaryDriftError : public Error {
 public:
  NonUnitaryDriftError(const std::string& what, double deviation)
      : Error(what), deviation_(deviation) {}
  double deviation() const { return deviation_; }

 private:
  double deviation_ = 0.0;
};

}  // namespace floquet
