#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "osg/subset.hpp"

namespace osg {

// Base for every exception thrown by this library. Mathematical failures of
// a structure (a broken axiom, a false lemma) are never exceptions; they are
// reported as values.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised while assembling a structure from names, table and order.
class BuildError : public Error {
 public:
  explicit BuildError(const std::string& what, std::vector<Element> cycle = {})
      : Error(what), cycle_(std::move(cycle)) {}

  // Non-empty when the supplied strict pairs close a cycle; lists the cycle
  // starting and ending at the same element.
  const std::vector<Element>& cycle() const { return cycle_; }

 private:
  std::vector<Element> cycle_;
};

// An operation was called outside its domain (no zero, empty argument, a
// subset that is not closed under the product, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace osg
