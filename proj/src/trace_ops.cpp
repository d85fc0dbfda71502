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


#include "ramc/trace_ops.hpp"

#include "ramc/trace_io.hpp"

#include <algorithm>

namespace ramc {

WeakTraceKey weaken(const Trace &trace)
{
	std::string out;
	for (ThreadId t = 0; t < trace.threadCount(); ++t) {
		auto ids = trace.threadEvents(t);
		if (ids.empty())
			continue;
		out += "t" + std::to_string(t + 1) + "[";
		for (std::size_t i = 0; i < ids.size(); ++i) {
			const auto &e = trace.event(ids[i]);
			if (i)
				out += ';';
			out += e.isWrite() ? "W " : "R ";
			out += trace.varName(e.var);
			if (e.isWrite())
				out += " " + std::to_string(e.value);
		}
		out += ']';
	}
	out += '|';

	auto rf = trace.rfEdges();
	std::sort(rf.begin(), rf.end());
	for (std::size_t i = 0; i < rf.size(); ++i) {
		if (i)
			out += ',';
		out += formatEventId(trace, rf[i].first) + ">" + formatEventId(trace, rf[i].second);
	}
	return WeakTraceKey{std::move(out)};
}

bool isTotal(const Trace &trace)
{
	for (VarId x = 0; x < trace.varCount(); ++x) {
		const auto ws = trace.writes(x);
		for (auto a : ws) {
			for (auto b : ws) {
				if (a == b)
					continue;
				if (!trace.coRelated(a, b) && !trace.coRelated(b, a))
					return false;
				if (!trace.coRelated(a, b))
					continue;
				for (auto c : ws)
					if (b != c && trace.coRelated(b, c) && (a == c || !trace.coRelated(a, c)))
						return false;
			}
		}
	}
	return true;
}

std::vector<EventPair> derivedFr(const Trace &trace, VarId x)
{
	std::vector<EventPair> out;
	const auto ws = trace.writes(x);
	for (auto r : trace.reads(x)) {
		auto src = trace.readSource(r);
		if (!src)
			continue;
		for (auto w : ws)
			if (trace.coRelated(*src, w))
				out.emplace_back(r, w);
	}
	std::sort(out.begin(), out.end());
	return out;
}

} // namespace ramc
