#pragma once

#include <stdexcept>
#include <string>

namespace raaglie {

// Input could not be parsed or validated (graph documents, trace/word syntax).
class ParseError : public std::runtime_error {
public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// The request is syntactically fine but has no answer in the model
// (non-unit constant term, element outside the Lie subalgebra, ...).
class DomainError : public std::runtime_error {
public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// A configured resource bound was hit before the computation finished.
class LimitError : public std::runtime_error {
public:
  explicit LimitError(const std::string& what) : std::runtime_error(what) {}
};

class NotLyndonError : public DomainError {
public:
  explicit NotLyndonError(const std::string& what) : DomainError(what) {}
};

class NotUnitError : public DomainError {
public:
  explicit NotUnitError(const std::string& what) : DomainError(what) {}
};

class NonHomogeneousError : public DomainError {
public:
  explicit NonHomogeneousError(const std::string& what) : DomainError(what) {}
};

class NotInLieSubalgebraError : public DomainError {
public:
  explicit NotInLieSubalgebraError(const std::string& what) : DomainError(what) {}
};

class NotInFiltrationError : public DomainError {
public:
  explicit NotInFiltrationError(const std::string& what) : DomainError(what) {}
};

// Values from different graphs or truncation degrees were mixed.
class MismatchError : public DomainError {
public:
  explicit MismatchError(const std::string& what) : DomainError(what) {}
};

}  // namespace raaglie
