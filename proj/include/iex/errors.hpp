#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace iex {

/// Base of every runtime failure raised by the library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent caller input (bad labels, duplicate sets, ...).
class input_error : public error {
 public:
  using error::error;
};

/// The union of the family is empty, so there is no Venn region at all.
class empty_union_error : public error {
 public:
  empty_union_error() : error("empty union") {}
};

/// A size guard (face budget, lattice budget) would be exceeded.
class resource_error : public error {
 public:
  using error::error;
};

/// The randomized tube construction rejected every permutation it drew.
class restarts_exhausted : public error {
 public:
  explicit restarts_exhausted(std::size_t restarts)
      : error("no acceptable permutation after " + std::to_string(restarts) +
              " restarts"),
        restarts_(restarts) {}

  std::size_t restarts() const noexcept { return restarts_; }

 private:
  std::size_t restarts_;
};

/// A precondition documented on an operation was violated by the caller.
class contract_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace iex
