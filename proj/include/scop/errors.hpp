// Copyright 2026 The scopwb Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SCOP_ERRORS_HPP
#define SCOP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace scop {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Lattice errors.
class UnknownElementError : public Error {
 public:
  using Error::Error;
};
class NoBoundError : public Error {
 public:
  using Error::Error;
};
class TooManyAtomsError : public Error {
 public:
  using Error::Error;
};
class LatticeDefinitionError : public Error {
 public:
  using Error::Error;
};

// SCOP system errors.
class UnknownIdError : public Error {
 public:
  using Error::Error;
};
class UnknownCoupleError : public Error {
 public:
  using Error::Error;
};
class UnknownEntryError : public Error {
 public:
  using Error::Error;
};
class DuplicateEntryError : public Error {
 public:
  using Error::Error;
};
class EmptyRestrictionError : public Error {
 public:
  using Error::Error;
};

// Hilbert-space errors.
class DimensionMismatchError : public Error {
 public:
  using Error::Error;
};
class NonUnitStateError : public Error {
 public:
  using Error::Error;
};
class RankDeficientError : public Error {
 public:
  using Error::Error;
};
class InvalidFamilyError : public Error {
 public:
  using Error::Error;
};

// Distance-measure errors.
class FeatureMismatchError : public Error {
 public:
  using Error::Error;
};
class EmptyExemplarSetError : public Error {
 public:
  using Error::Error;
};
class ProfileError : public Error {
 public:
  using Error::Error;
};

// Correlation-data errors.
class UnnormalizedTableError : public Error {
 public:
  using Error::Error;
};

/// Error while parsing a document; carries the 1-based source location.
class ParseError : public Error {
 public:
  ParseError(std::string message, int line, int column)
      : Error(message + " (line " + std::to_string(line) + ", column " +
              std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace scop

#endif  // SCOP_ERRORS_HPP
