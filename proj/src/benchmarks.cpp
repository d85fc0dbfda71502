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


#include "ramc/benchmarks.hpp"

#include <sstream>

namespace ramc {

Program nWritersProgram(std::uint32_t n)
{
	std::ostringstream os;
	os << "vars x\n";
	for (std::uint32_t i = 1; i <= n; ++i)
		os << "thread w" << i << "\n  w x " << i << "\nend\n";
	os << "thread reader\n  r x a\nend\n";
	return parseProgram(os.str());
}

Program redundantCoProgram(std::uint32_t n)
{
	std::ostringstream os;
	os << "vars x\n";
	for (int t = 1; t <= 2; ++t) {
		os << "thread t" << t << '\n';
		for (std::uint32_t i = 0; i < n; ++i)
			os << "  w x 1\n";
		os << "end\n";
	}
	os << "thread t3\n  r x a\n  r x b\nend\n";
	return parseProgram(os.str());
}

std::uint64_t nWritersExpected(std::uint32_t n) { return std::uint64_t{n} + 1; }

std::uint64_t redundantCoExpected(std::uint32_t n)
{
	const std::uint64_t k = n;
	return 3 * k * k + 3 * k + 1;
}

} // namespace ramc
