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


#include "ramc/errors.hpp"

namespace ramc {

namespace {

std::string withPosition(const std::string &msg, std::size_t line, std::size_t column)
{
	if (line == 0)
		return msg;
	return std::to_string(line) + ":" + std::to_string(column) + ": " + msg;
}

} // namespace

FormatError::FormatError(const std::string &msg, std::size_t line, std::size_t column)
	: Error(withPosition(msg, line, column)), line_(line), column_(column)
{}

} // namespace ramc
