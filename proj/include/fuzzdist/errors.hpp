// Copyright 2026 The fuzzdist Authors
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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fuzzdist {

/// Root of the library's exception hierarchy.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A measure was invoked on operands that violate its precondition
/// (non-normal input, empty cut, degenerate set, ...).
class MeasureError : public Error {
public:
    using Error::Error;
};

class NotNormalError : public MeasureError {
public:
    using MeasureError::MeasureError;
};

class EmptyCutError : public MeasureError {
public:
    using MeasureError::MeasureError;
};

/// No grid level exists at which both operands' cuts are nonempty, so the
/// empty-cut substitution rule has nothing to substitute from.
class NoOverlapLevelsError : public MeasureError {
public:
    using MeasureError::MeasureError;
};

/// All-zero membership: cannot be normalized or proportion-scaled.
class DegenerateSetError : public MeasureError {
public:
    using MeasureError::MeasureError;
};

/// Bad input data (files, records, set definitions).
class DataError : public Error {
public:
    using Error::Error;
};

class InvalidSetError : public DataError {
public:
    using DataError::DataError;
};

class ParseError : public DataError {
public:
    ParseError(const std::string& what, std::size_t line)
        : DataError(what + " (line " + std::to_string(line) + ")"), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class RatingOutOfRangeError : public ParseError {
public:
    using ParseError::ParseError;
};

class DuplicateItemError : public ParseError {
public:
    using ParseError::ParseError;
};

class UnknownItemError : public DataError {
public:
    using DataError::DataError;
};

}  // namespace fuzzdist
