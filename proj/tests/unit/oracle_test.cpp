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

#include "test_support.hpp"

#include <gtest/gtest.h>

namespace ramc {
namespace {

std::shared_ptr<const Program> parse(const std::string &text)
{
	return std::make_shared<const Program>(parseProgram(text));
}

TEST(ReferenceTest, WriteReadBack)
{
	auto p = testing::corpusProgram("fig1.rap");
	auto r = enumerateTotalTraces(p);
	EXPECT_EQ(r.totalTraces, 4U);
	EXPECT_EQ(r.weakKeys.size(), 3U);
	auto q = enumerateByPermutation(p);
	EXPECT_EQ(q.totalTraces, r.totalTraces);
	EXPECT_EQ(q.weakKeys, r.weakKeys);
}

TEST(ReferenceTest, Litmus)
{
	// 2+2W: RA constrains each variable separately, so all four orders survive.
	auto r = enumerateTotalTraces(testing::corpusProgram("2p2w.rap"));
	EXPECT_EQ(r.totalTraces, 4U);
	EXPECT_EQ(r.weakKeys.size(), 1U);

	auto sb = enumerateTotalTraces(testing::corpusProgram("sb.rap"));
	EXPECT_EQ(sb.totalTraces, 4U);
	EXPECT_EQ(sb.weakKeys.size(), 4U);

	// n_writers_N: N! coherence orders, each read by any writer or init.
	auto nw = enumerateTotalTraces(testing::corpusProgram("n_writers_3.rap"));
	EXPECT_EQ(nw.weakKeys.size(), 4U);
	EXPECT_EQ(nw.totalTraces, 6U * 4U);
}

TEST(ReferenceTest, RoutesAgreeOnFuzz)
{
	for (std::uint64_t seed = 0; seed < 100; ++seed) {
		auto p = std::make_shared<const Program>(generateProgram({3, 2, 4, 3, 0.15, seed}));
		auto a = enumerateTotalTraces(p);
		auto b = enumerateByPermutation(p);
		ASSERT_EQ(a.totalTraces, b.totalTraces) << printProgram(*p);
		ASSERT_EQ(a.weakKeys, b.weakKeys) << printProgram(*p);
	}
}

TEST(ReferenceTest, ThreadOrderDoesNotChangeCounts)
{
	auto a = parse("vars x y\nthread t1\n  w x 1\n  r y a\nend\nthread t2\n  w y 1\n  r x b\n  w x 2\nend\n");
	auto b = parse("vars x y\nthread t2\n  w y 1\n  r x b\n  w x 2\nend\nthread t1\n  w x 1\n  r y a\nend\n");
	auto ra = enumerateTotalTraces(a);
	auto rb = enumerateTotalTraces(b);
	EXPECT_EQ(ra.totalTraces, rb.totalTraces);
	EXPECT_EQ(ra.weakKeys.size(), rb.weakKeys.size());
}

TEST(ReferenceTest, LimitsAndLoops)
{
	auto loop = testing::corpusProgram("redundant_co_loop.rap");
	EXPECT_THROW(enumerateTotalTraces(loop), DomainError);
	EXPECT_THROW(enumerateByPermutation(loop), DomainError);

	auto big = testing::corpusProgram("n_writers_10.rap");
	EXPECT_THROW(enumerateTotalTraces(big, {20, 6}), CapacityError);
	EXPECT_THROW(enumerateTotalTraces(big, {5, 20}), CapacityError);
}

TEST(BruteforceTest, Fixtures)
{
	EXPECT_TRUE(checkConsistencyBruteforce(testing::twoPlusTwoW()));
	EXPECT_FALSE(checkConsistencyBruteforce(testing::programSTrace()));
	EXPECT_TRUE(checkConsistencyBruteforce(testing::tau6()));
	EXPECT_TRUE(checkConsistencyBruteforce(testing::tau8()));
	EXPECT_FALSE(checkConsistencyBruteforce(testing::tau9()));
}

TEST(BruteforceTest, AgreesWithSaturation)
{
	std::mt19937_64 rng(43);
	int consistent = 0;
	for (int iter = 0; iter < 500; ++iter) {
		auto t = testing::randomTrace(rng, {3, 2, 8, 0.1});
		const bool expected = checkConsistencyBruteforce(t);
		ASSERT_EQ(isRaConsistent(t).consistent, expected) << iter;
		consistent += expected;
	}
	// Both outcomes are exercised.
	EXPECT_GT(consistent, 50);
	EXPECT_LT(consistent, 450);
}

TEST(BruteforceTest, CapacityGuard)
{
	auto t = Trace::empty({"x"});
	for (ThreadId th = 0; th < 4; ++th)
		t.appendWrite(th, 0, 1);
	EXPECT_THROW(checkConsistencyBruteforce(t, 3), CapacityError);
	EXPECT_TRUE(checkConsistencyBruteforce(t, 4));
}

TEST(MandatoryCoherenceTest, MatchesSaturatedReachability)
{
	std::mt19937_64 rng(47);
	int checked = 0;
	for (std::uint64_t seed = 0; checked < 300; ++seed) {
		auto p = std::make_shared<const Program>(generateProgram({3, 2, 5, 3, 0.15, seed}));
		auto t = testing::randomRun(p, rng);
		const auto mandatory = mandatoryCoherence(t);
		for (VarId x = 0; x < t.varCount(); ++x) {
			for (auto a : t.writes(x)) {
				for (auto b : t.writes(x)) {
					if (a == b || a.isInit() || b.isInit())
						continue;
					ASSERT_EQ(mandatory.contains({a, b}), t.reaches(a, b, x))
						<< printProgram(*p);
				}
			}
		}
		++checked;
	}
}

TEST(MandatoryCoherenceTest, AfterCrossRead)
{
	// tau8: t1 read x:=2 after writing x:=1, so x:=1 must precede x:=2.
	auto m = mandatoryCoherence(testing::tau8());
	EXPECT_EQ(m, (std::set<EventPair>{{EventId::of(0, 1), EventId::of(1, 1)}}));
	EXPECT_TRUE(mandatoryCoherence(testing::tau6()).empty());
}

TEST(GeneratorTest, DeterministicAndBounded)
{
	for (std::uint64_t seed = 0; seed < 200; ++seed) {
		const FuzzSpec spec{4, 3, 6, 5, 0.3, seed};
		auto p = generateProgram(spec);
		EXPECT_EQ(p, generateProgram(spec));
		EXPECT_EQ(parseProgram(printProgram(p)), p);
		EXPECT_FALSE(p.hasBackwardJump());
		EXPECT_EQ(p.threads.size(), 4U);
		EXPECT_EQ(p.vars.size(), 3U);
		bool anyWrite = false;
		for (const auto &t : p.threads) {
			std::size_t n = 0;
			for (const auto &s : t.body) {
				if (s.kind == Statement::Kind::Label)
					continue;
				++n;
				if (s.kind == Statement::Kind::Write) {
					anyWrite = true;
					// Either a constant or r<k> + constant.
					const auto &c = s.expr.kind == Expr::Kind::Const ? s.expr : s.expr.args.at(1);
					EXPECT_EQ(c.kind, Expr::Kind::Const);
					EXPECT_GE(c.value, 1);
					EXPECT_LE(c.value, 5);
				}
			}
			EXPECT_GE(n, 1U);
			EXPECT_LE(n, 6U);
		}
		EXPECT_TRUE(anyWrite);
	}
}

TEST(GeneratorTest, SingleStatementIsWrite)
{
	auto p = generateProgram({1, 1, 1, 1, 0.5, 0});
	ASSERT_EQ(p.threads.size(), 1U);
	ASSERT_EQ(p.threads[0].body.size(), 1U);
	EXPECT_EQ(p.threads[0].body[0].kind, Statement::Kind::Write);
}

TEST(GeneratorTest, SeedsDiffer)
{
	std::set<std::string> texts;
	for (std::uint64_t seed = 0; seed < 50; ++seed)
		texts.insert(printProgram(generateProgram({3, 2, 5, 3, 0.15, seed})));
	EXPECT_GT(texts.size(), 45U);
}

TEST(DifferentialTest, CorpusMatches)
{
	for (const char *name : {"fig1.rap", "dpor_example.rap", "n_writers_4.rap", "redundant_co_2.rap",
				 "mp.rap", "sb.rap", "s.rap", "2p2w.rap"}) {
		auto r = differentialCheck(testing::corpusProgram(name));
		EXPECT_TRUE(r.match) << name;
		EXPECT_EQ(r.dporTraces, r.oracleKeys.size()) << name;
	}
}

TEST(DifferentialTest, FuzzMatches)
{
	for (std::uint64_t seed = 0; seed < 200; ++seed) {
		auto p = std::make_shared<const Program>(generateProgram({3, 2, 5, 3, 0.15, seed}));
		auto r = differentialCheck(p, {}, {16, 8});
		ASSERT_TRUE(r.match) << printProgram(*p);
	}
}

TEST(DifferentialTest, ReportsMissingTraces)
{
	auto p = parse("vars x y\nthread t1\n  r x a\nend\nthread t2\n  r x b\nend\n"
		       "thread t3\n  r y c\n  w x 1\nend\n");
	auto r = differentialCheck(p, {PostponeStrategy::ClosestRead, false});
	EXPECT_FALSE(r.match);
	EXPECT_TRUE(r.onlyDpor.empty());
	EXPECT_FALSE(r.onlyOracle.empty());
}

} // namespace
} // namespace ramc
