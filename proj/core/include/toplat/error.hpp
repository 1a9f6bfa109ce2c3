#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace toplat {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller passed an argument outside the operation's domain.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// An enumeration or construction would exceed a configured cap.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

// A documented precondition of the operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// The relation handed to the lattice builder is not a partial order.
class NotAPoset : public Error {
 public:
  NotAPoset(std::string what, std::vector<std::size_t> witness)
      : Error(std::move(what)), witness_(std::move(witness)) {}
  const std::vector<std::size_t>& witness() const noexcept { return witness_; }

 private:
  std::vector<std::size_t> witness_;
};

// A pair of elements lacks a least upper or greatest lower bound.
class NotALattice : public Error {
 public:
  NotALattice(std::string what, std::size_t a, std::size_t b)
      : Error(std::move(what)), a_(a), b_(b) {}
  std::size_t first() const noexcept { return a_; }
  std::size_t second() const noexcept { return b_; }

 private:
  std::size_t a_;
  std::size_t b_;
};

}  // namespace toplat
