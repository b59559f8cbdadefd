#ifndef ROBINTRI_ERRORS_HPP
#define ROBINTRI_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace robintri {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class InvalidSigma : public Error {
public:
  explicit InvalidSigma(const std::string& what) : Error(what) {}
};

// Iteration budget exhausted; carries the best iterate found.
class NonConvergence : public Error {
public:
  NonConvergence(const std::string& what, double L, double M, double N,
                 double residual, int iterations)
      : Error(what), L(L), M(M), N(N), residual(residual),
        iterations(iterations) {}
  double L, M, N;
  double residual;
  int iterations;
};

class Singularity : public Error {
public:
  explicit Singularity(const std::string& what) : Error(what) {}
};

class CutoffTooSmall : public Error {
public:
  explicit CutoffTooSmall(const std::string& what) : Error(what) {}
};

class DomainError : public Error {
public:
  explicit DomainError(const std::string& what) : Error(what) {}
};

class OutsideDomain : public Error {
public:
  explicit OutsideDomain(const std::string& what) : Error(what) {}
};

class LimitTooLarge : public Error {
public:
  explicit LimitTooLarge(const std::string& what) : Error(what) {}
};

class ArithmeticOverflow : public Error {
public:
  explicit ArithmeticOverflow(const std::string& what) : Error(what) {}
};

class StepTooSmall : public Error {
public:
  explicit StepTooSmall(const std::string& what) : Error(what) {}
};

} // namespace robintri

#endif // ROBINTRI_ERRORS_HPP
