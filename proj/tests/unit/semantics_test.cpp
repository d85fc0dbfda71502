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
#include "ramc/oracle.hpp"
#include "ramc/ra_checker.hpp"
#include "ramc/semantics.hpp"
#include "ramc/trace_ops.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>

namespace ramc {
namespace {

using testing::naiveReadable;
using testing::naiveVisible;

std::set<EventId> asSet(const std::vector<EventId> &v) { return {v.begin(), v.end()}; }

// Thread 3 has read x from e3 (which follows e2 in po) and then written y.
// e1 is an unrelated write on x in thread 1.
struct HiddenWriteFixture {
	Trace trace = Trace::empty({"x", "y"});
	EventId e1, e2, e3, e4, e5;

	HiddenWriteFixture()
	{
		e1 = trace.appendWrite(0, 0, 1);
		e2 = trace.appendWrite(1, 0, 2);
		e3 = trace.appendWrite(1, 0, 3);
		e4 = trace.appendRead(2, 0, e3);
		e5 = trace.appendWrite(2, 1, 1);
	}
};

TEST(ReadableTest, HiddenWriteIsNotReadable)
{
	HiddenWriteFixture f;
	EXPECT_EQ(asSet(readable(f.trace, 2, 0)), (std::set<EventId>{f.e1, f.e3}));
	EXPECT_EQ(asSet(visible(f.trace, 2, 0)), (std::set<EventId>{f.e3}));
}

TEST(ReadableTest, EmptyTraceOffersInitializer)
{
	auto t = Trace::empty({"x"});
	EXPECT_EQ(readable(t, 0, 0), std::vector<EventId>{EventId::init(0)});
	EXPECT_TRUE(visible(t, 0, 0).empty());
	EXPECT_THROW(readable(t, 0, 3), LookupError);
}

TEST(ReadableTest, OwnWriteHidesInitializer)
{
	auto t = Trace::empty({"x"});
	auto w = t.appendWrite(0, 0, 1);
	EXPECT_EQ(readable(t, 0, 0), std::vector<EventId>{w});
	EXPECT_EQ(readable(t, 1, 0), (std::vector<EventId>{EventId::init(0), w}));
}

TEST(ReadableTest, AgreesWithDefinitionOnRandomTraces)
{
	std::mt19937_64 rng(29);
	for (int iter = 0; iter < 500; ++iter) {
		auto t = saturate(testing::randomTrace(rng, {3, 2, 10, 0.1}));
		for (ThreadId th = 0; th < 4; ++th) {
			for (VarId x = 0; x < t.varCount(); ++x) {
				const auto r = asSet(readable(t, th, x));
				const auto v = asSet(visible(t, th, x));
				ASSERT_EQ(r, naiveReadable(t, th, x));
				ASSERT_EQ(v, naiveVisible(t, th, x));
				ASSERT_TRUE(std::includes(r.begin(), r.end(), v.begin(), v.end()));
			}
		}
	}
}

TEST(ExtendTest, WriteAddsOnlyProgramOrder)
{
	HiddenWriteFixture f;
	auto before = f.trace;
	auto e = extendWrite(f.trace, 2, 0, 7);
	EXPECT_EQ(e, EventId::of(2, 3));
	EXPECT_TRUE(f.trace.reaches(f.e5, e));
	EXPECT_EQ(f.trace.rfEdges(), before.rfEdges());
	for (VarId x = 0; x < 2; ++x)
		EXPECT_EQ(f.trace.coEdges(x), before.coEdges(x));

	auto empty = Trace::empty({"x"});
	EXPECT_EQ(extendWrite(empty, 0, 0, 1), EventId::of(0, 1));
}

TEST(ExtendTest, ReadOrdersVisibleWritesBeforeSource)
{
	HiddenWriteFixture f;
	auto e6 = extendRead(f.trace, 2, 0, f.e1);
	EXPECT_EQ(f.trace.readSource(e6), f.e1);
	EXPECT_EQ(f.trace.coEdges(0), (std::vector<EventPair>{{f.e3, f.e1}}));
	EXPECT_TRUE(isSaturated(f.trace));
	EXPECT_TRUE(satisfiesRa(f.trace).consistent);
}

TEST(ExtendTest, ReadingLaterWriteOrdersEarlierOne)
{
	auto t = testing::tau6();
	extendRead(t, 0, 0, EventId::of(1, 1));
	EXPECT_EQ(t.coEdges(0), (std::vector<EventPair>{{EventId::of(0, 1), EventId::of(1, 1)}}));
}

TEST(ExtendTest, ReadingSoleVisibleWriteAddsNoCoherence)
{
	HiddenWriteFixture f;
	extendRead(f.trace, 2, 0, f.e3);
	EXPECT_TRUE(f.trace.coEdges(0).empty());
}

TEST(ExtendTest, UnreadableSourceRejected)
{
	HiddenWriteFixture f;
	EXPECT_THROW(extendRead(f.trace, 2, 0, f.e2), NotReadableError);
}

TEST(EnabledTest, WriteReadBackChoosesBetweenWrites)
{
	auto p = testing::corpusProgram("fig1.rap");
	auto c = Configuration::initial(p);
	auto t = Trace::empty(p->vars);
	step(c, t, Observation::write(EventId::of(0, 1)));
	step(c, t, Observation::write(EventId::of(1, 1)));
	auto obs = enabledObservations(c, t);
	std::vector<Observation> forT1;
	for (const auto &o : obs)
		if (o.event.thread == 0)
			forT1.push_back(o);
	ASSERT_EQ(forT1.size(), 2U);
	EXPECT_EQ(*forT1[0].source, EventId::of(0, 1));
	EXPECT_EQ(*forT1[1].source, EventId::of(1, 1));

	step(c, t, Observation::read(EventId::of(0, 2), EventId::of(1, 1)));
	EXPECT_EQ(c.registers(0)[*p->threads[0].findRegister("a")], 2);
}

TEST(EnabledTest, TerminalConfigurationHasNone)
{
	auto p = testing::corpusProgram("2p2w.rap");
	std::mt19937_64 rng(1);
	Configuration c = Configuration::initial(p);
	auto t = testing::randomRun(p, rng, [&](const Configuration &, const Trace &, const Observation &,
						const Configuration &after, const Trace &) { c = after; });
	EXPECT_TRUE(c.isTerminal());
	EXPECT_TRUE(enabledObservations(c, t).empty());
}

TEST(EnabledTest, CountMatchesDefinition)
{
	std::mt19937_64 rng(31);
	for (std::uint64_t seed = 0; seed < 100; ++seed) {
		auto p = std::make_shared<const Program>(generateProgram({3, 2, 5, 3, 0.15, seed}));
		testing::randomRun(p, rng, [&](const Configuration &c, const Trace &t, const Observation &,
					       const Configuration &, const Trace &) {
			std::size_t expected = 0;
			for (std::uint32_t th = 0; th < c.threadCount(); ++th) {
				auto g = c.nextGlobal(th);
				if (g)
					expected += g->isWrite ? 1 : naiveReadable(t, th, g->var).size();
			}
			ASSERT_EQ(enabledObservations(c, t).size(), expected);
		});
	}
}

TEST(StepTest, RejectsObservationsThatAreNotEnabled)
{
	auto p = testing::corpusProgram("fig1.rap");
	auto c = Configuration::initial(p);
	auto t = Trace::empty(p->vars);
	EXPECT_THROW(step(c, t, Observation::write(EventId::of(0, 2))), InvariantError);
	EXPECT_THROW(step(c, t, Observation::read(EventId::of(0, 1), EventId::init(0))), InvariantError);
	step(c, t, Observation::write(EventId::of(0, 1)));
	// t1 now reads; its own write hides the initializer.
	EXPECT_THROW(step(c, t, Observation::read(EventId::of(0, 2), EventId::init(0))), InvariantError);
}

TEST(StepTest, EventsMatchRunLabels)
{
	std::mt19937_64 rng(37);
	for (std::uint64_t seed = 0; seed < 200; ++seed) {
		auto p = std::make_shared<const Program>(generateProgram({3, 2, 5, 3, 0.15, seed}));
		testing::randomRun(p, rng, [&](const Configuration &c, const Trace &, const Observation &obs,
					       const Configuration &, const Trace &after) {
			const auto g = *c.nextGlobal(obs.event.threadId());
			const auto &e = after.event(obs.event);
			ASSERT_EQ(e.isWrite(), g.isWrite);
			ASSERT_EQ(e.var, g.var);
			if (g.isWrite)
				ASSERT_EQ(e.value, g.value);
			else
				ASSERT_EQ(after.readSource(obs.event), obs.source);
			ASSERT_EQ(after.size(), after.varCount() + [&] {
				std::size_t n = 0;
				for (ThreadId th = 0; th < after.threadCount(); ++th)
					n += after.threadSize(th);
				return n;
			}());
		});
	}
}

TEST(PreservationTest, StepsKeepSaturationAndRa)
{
	std::mt19937_64 rng(41);
	int steps = 0;
	for (std::uint64_t seed = 0; steps < 1000; ++seed) {
		auto p = std::make_shared<const Program>(generateProgram({3, 2, 5, 3, 0.15, seed}));
		testing::randomRun(p, rng, [&](const Configuration &c, const Trace &t, const Observation &,
					       const Configuration &, const Trace &after) {
			ASSERT_TRUE(isSaturated(t));
			ASSERT_TRUE(isSaturated(after));
			ASSERT_TRUE(satisfiesRa(after).consistent);
			ASSERT_FALSE(c.isTerminal());
			ASSERT_FALSE(enabledObservations(c, t).empty());
			++steps;
		});
	}
}

TEST(RegisterTest, ValuesDependOnlyOnReadSources)
{
	// Same rf choices, two different interleavings.
	auto p = testing::corpusProgram("sb.rap");
	auto run = [&](const std::vector<Observation> &seq) {
		auto c = Configuration::initial(p);
		auto t = Trace::empty(p->vars);
		for (const auto &o : seq)
			step(c, t, o);
		return std::pair(c.registers(0), c.registers(1));
	};
	const auto x = EventId::of(0, 1);
	const auto y = EventId::of(1, 1);
	auto a = run({Observation::write(x), Observation::write(y), Observation::read(EventId::of(0, 2), y),
		      Observation::read(EventId::of(1, 2), x)});
	auto b = run({Observation::write(y), Observation::write(x), Observation::read(EventId::of(1, 2), x),
		      Observation::read(EventId::of(0, 2), y)});
	EXPECT_EQ(a, b);
}

} // namespace
} // namespace ramc
