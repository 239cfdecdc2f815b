#ifndef SRW_ERRORS_HPP
#define SRW_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "srw/element_set.hpp"

namespace srw {

/// Base of every error raised by the workbench.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input tables, maps or matrices (wrong size, out-of-range entries).
class BadShape : public Error {
 public:
  using Error::Error;
};

class ZeroEqualsOne : public Error {
 public:
  ZeroEqualsOne() : Error("zero and one designate the same element") {}
};

/// A relation that is not reflexive, antisymmetric and transitive.
class InvalidOrder : public Error {
 public:
  InvalidOrder(std::string property, std::vector<Element> witness)
      : Error("relation is not a partial order: " + property + " fails"),
        property_(std::move(property)),
        witness_(std::move(witness)) {}
  const std::string& property() const { return property_; }
  const std::vector<Element>& witness() const { return witness_; }

 private:
  std::string property_;
  std::vector<Element> witness_;
};

class CapacityExceeded : public Error {
 public:
  using Error::Error;
};

/// The operation requires a positive ordered semiring.
class NotPositive : public Error {
 public:
  NotPositive() : Error("operation requires a positive order (0 least)") {}
};

class HypothesisNotMet : public Error {
 public:
  using Error::Error;
};

class NotAnnihilating : public Error {
 public:
  explicit NotAnnihilating(Element s)
      : Error("map is not a pc-function: s * star(s) != 0 for s = " + std::to_string(s)),
        witness_(s) {}
  Element witness() const { return witness_; }

 private:
  Element witness_;
};

class NotAnIdeal : public Error {
 public:
  using Error::Error;
};

class NotPrime : public Error {
 public:
  NotPrime() : Error("ideal is not prime") {}
};

class NotContaining : public Error {
 public:
  NotContaining() : Error("prime ideal does not contain the given ideal") {}
};

class EmptySpectrum : public Error {
 public:
  EmptySpectrum() : Error("no prime ideal contains the given ideal") {}
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace srw

#endif  // SRW_ERRORS_HPP
