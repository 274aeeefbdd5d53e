// Copyright 2026 The polylift Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef POLYLIFT_ERRORS_HPP_
#define POLYLIFT_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace polylift {

/// Base class for every failure mode this library reports by exception.
/// Expected negative answers (an empty solution set, a failed search, a
/// rejected certificate) are ordinary return values, never exceptions.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Operands live in different quadratic extensions (distinct radicands).
class DomainMismatchError : public Error {
 public:
  explicit DomainMismatchError(const std::string& what) : Error(what) {}
};

/// Malformed scalar, matrix, polyhedron, or lift text.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error(what) {}
};

/// Operand shapes are incompatible.
class DimensionMismatchError : public Error {
 public:
  explicit DimensionMismatchError(const std::string& what) : Error(what) {}
};

/// The operation requires a nonempty polyhedron.
class EmptyPolyhedronError : public Error {
 public:
  explicit EmptyPolyhedronError(const std::string& what) : Error(what) {}
};

/// The operation requires a polyhedron without lines.
class LinesPresentError : public Error {
 public:
  explicit LinesPresentError(const std::string& what) : Error(what) {}
};

/// The operation requires a full-dimensional polyhedron.
class NotFullDimensionalError : public Error {
 public:
  explicit NotFullDimensionalError(const std::string& what) : Error(what) {}
};

/// Supplied representations disagree with each other or with the set they
/// claim to describe (e.g. a slack entry came out negative).
class RepresentationMismatchError : public Error {
 public:
  explicit RepresentationMismatchError(const std::string& what) : Error(what) {}
};

/// The polyhedron is a translated cone and the called operation excludes
/// that case (a cone-specific entry point exists instead).
class TranslatedConeError : public Error {
 public:
  explicit TranslatedConeError(const std::string& what) : Error(what) {}
};

/// The operation requires a pointed cone with apex at the origin.
class NotPointedConeError : public Error {
 public:
  explicit NotPointedConeError(const std::string& what) : Error(what) {}
};

/// A supplied basis was expected to have pairwise orthogonal columns.
class QNotOrthogonalError : public Error {
 public:
  explicit QNotOrthogonalError(const std::string& what) : Error(what) {}
};

/// The matrix rank is below the minimum the identification criterion covers.
class RankTooSmallError : public Error {
 public:
  explicit RankTooSmallError(const std::string& what) : Error(what) {}
};

/// A factorization does not match the matrix it claims to factor.
class FactorizationMismatchError : public Error {
 public:
  explicit FactorizationMismatchError(const std::string& what) : Error(what) {}
};

/// The lineality-block factors required by the lines case are missing.
class MissingLinealityFactorsError : public Error {
 public:
  explicit MissingLinealityFactorsError(const std::string& what)
      : Error(what) {}
};

/// The line-free component of the polyhedron is a translated cone, which the
/// called operation excludes.
class TranslatedComponentError : public Error {
 public:
  explicit TranslatedComponentError(const std::string& what) : Error(what) {}
};

/// Exact search or enumeration exceeded its documented size cap.
class SizeCapError : public Error {
 public:
  explicit SizeCapError(const std::string& what) : Error(what) {}
};

/// Fewer sample points than the polynomial degree bound requires.
class TooFewSamplesError : public Error {
 public:
  explicit TooFewSamplesError(const std::string& what) : Error(what) {}
};

/// A linear system that must determine its unknowns uniquely does not.
class DegenerateSystemError : public Error {
 public:
  explicit DegenerateSystemError(const std::string& what) : Error(what) {}
};

/// A linear system that must be solvable is not.
class InconsistentSystemError : public Error {
 public:
  explicit InconsistentSystemError(const std::string& what) : Error(what) {}
};

/// File could not be read or written.
class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error(what) {}
};

}  // namespace polylift

#endif  // POLYLIFT_ERRORS_HPP_
