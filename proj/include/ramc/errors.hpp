// Copyright 2026 The ramc Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RAMC_ERRORS_HPP
#define RAMC_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ramc {

class Error : public std::runtime_error {
public:
	using std::runtime_error::runtime_error;
};

/// Malformed input: program text, trace JSON, duplicate variables, unknown
/// registers in a final condition.
class FormatError : public Error {
public:
	FormatError(const std::string &msg, std::size_t line = 0, std::size_t column = 0);

	std::size_t line() const { return line_; }
	std::size_t column() const { return column_; }

private:
	std::size_t line_;
	std::size_t column_;
};

/// An event, thread or variable that does not exist in the queried object.
class LookupError : public Error {
public:
	using Error::Error;
};

/// An operation applied to arguments outside its domain (e.g. a coherence
/// edge between writes on different variables).
class DomainError : public Error {
public:
	using Error::Error;
};

/// A read was asked to take its value from a write outside readable(...).
class NotReadableError : public Error {
public:
	using Error::Error;
};

/// Local statements did not reach a global statement within the step budget.
class DivergenceError : public Error {
public:
	using Error::Error;
};

/// Brute-force enumeration bound exceeded.
class CapacityError : public Error {
public:
	CapacityError(const std::string &msg, std::size_t count)
		: Error(msg), count_(count)
	{}

	std::size_t count() const { return count_; }

private:
	std::size_t count_;
};

/// An internal contract of the explorer or of a trace was broken.
class InvariantError : public Error {
public:
	using Error::Error;
};

} // namespace ramc

#endif // RAMC_ERRORS_HPP
