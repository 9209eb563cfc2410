/*
 *   Copyright 2026 the fuzzrel authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/**
 * @file
 * Exception hierarchy shared by all fuzzrel components.
 */

#ifndef FUZZREL_ERRORS_HPP
#define FUZZREL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fuzzrel {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Two operands live over different universes (or a value was handed to an
/// operation expecting the mapping's domain/codomain).
class UniverseMismatch : public Error {
public:
    explicit UniverseMismatch(const std::string& what) : Error(what) {}
};

/// An element label was looked up in a universe that does not contain it.
class ElementNotInUniverse : public Error {
public:
    explicit ElementNotInUniverse(const std::string& what) : Error(what) {}
};

/// A caller-supplied parameter is outside its documented range.
class ParameterError : public Error {
public:
    explicit ParameterError(const std::string& what) : Error(what) {}
};

/// A law was checked against an instance lacking a required component.
class MissingComponent : public Error {
public:
    explicit MissingComponent(const std::string& what) : Error(what) {}
};

/// A document (JSON or text) failed to parse; the message names the
/// offending file, line or field.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error(what) {}
};

} // namespace fuzzrel

#endif // FUZZREL_ERRORS_HPP
