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
#include "ramc/program.hpp"

#include <gtest/gtest.h>

namespace ramc {
namespace {

using Kind = Statement::Kind;

std::size_t nonLabel(const ThreadCode &t)
{
	return static_cast<std::size_t>(std::count_if(t.body.begin(), t.body.end(),
						      [](const Statement &s) { return s.kind != Kind::Label; }));
}

TEST(ParseTest, StoreBufferingListing)
{
	auto p = parseProgram("vars x y\nthread t1\n w x 1\n r y r1\nend\nthread t2\n w y 1\n r x r2\nend\n");
	ASSERT_EQ(p.threads.size(), 2U);
	EXPECT_EQ(p.threads[0].body.size(), 2U);
	EXPECT_EQ(p.threads[1].body.size(), 2U);
	EXPECT_EQ(p.threads[0].body[0].kind, Kind::Write);
	EXPECT_EQ(p.threads[0].body[1].kind, Kind::Read);
	EXPECT_EQ(p.threads[0].registers, std::vector<std::string>{"r1"});
}

TEST(ParseTest, WriteReadBackProgram)
{
	auto p = parseProgram("vars x\nthread t1\n  w x 1\n  r x a\nend\nthread t2\n  w x 2\n  r x b\nend\n");
	const auto &t1 = p.threads[0].body;
	EXPECT_EQ(t1[0].kind, Kind::Write);
	EXPECT_EQ(t1[0].expr, Expr::constant(1));
	EXPECT_EQ(t1[1].kind, Kind::Read);
	EXPECT_EQ(p.threads[0].registers[t1[1].reg], "a");
	EXPECT_EQ(p.threads[1].body[0].expr, Expr::constant(2));
	EXPECT_EQ(p.globalStatementCount(), 4U);
}

TEST(ParseTest, EmptyFileReportsPosition)
{
	try {
		parseProgram("");
		FAIL() << "expected FormatError";
	} catch (const FormatError &e) {
		EXPECT_EQ(e.line(), 1U);
		EXPECT_EQ(e.column(), 1U);
	}
}

TEST(ParseTest, DiagnosticsCarryLineAndColumn)
{
	try {
		parseProgram("vars x\nthread t\n  w x (1 +\nend\n");
		FAIL() << "expected FormatError";
	} catch (const FormatError &e) {
		EXPECT_EQ(e.line(), 3U);
		EXPECT_EQ(e.column(), 11U);
	}
	try {
		parseProgram("vars x\nthread t\n  l goto nowhere\nend\n");
		FAIL() << "expected FormatError";
	} catch (const FormatError &e) {
		EXPECT_EQ(e.line(), 3U);
		EXPECT_EQ(e.column(), 10U);
		EXPECT_NE(std::string(e.what()).find("unknown label"), std::string::npos);
	}
}

TEST(ParseTest, RejectsSharedVariableInExpression)
{
	EXPECT_THROW(parseProgram("vars x y\nthread t\n  w x y + 1\nend\n"), FormatError);
	EXPECT_THROW(parseProgram("vars x\nthread t\n  l r = x\nend\n"), FormatError);
	EXPECT_THROW(parseProgram("vars x\nthread t\n  r x x\nend\n"), FormatError);
}

TEST(ParseTest, RejectsStructuralErrors)
{
	EXPECT_THROW(parseProgram("vars x x\nthread t\nend\n"), FormatError);
	EXPECT_THROW(parseProgram("vars x\nthread t\n  w z 1\nend\n"), FormatError);
	EXPECT_THROW(parseProgram("vars x\nthread t\n  w x 1\n"), FormatError);
	EXPECT_THROW(parseProgram("vars x\nthread t\n label a\n label a\nend\n"), FormatError);
	EXPECT_THROW(parseProgram("vars x\nthread t\nend\nthread t\nend\n"), FormatError);
	EXPECT_THROW(parseProgram("vars x\nthread t\n  w x 1 1\nend\n"), FormatError);
	EXPECT_THROW(parseProgram("vars x\nthread t\n  r x a\nend\nfinal exists a@u == 1\n"), FormatError);
	EXPECT_THROW(parseProgram("vars x\nthread t\n  r x a\nend\nfinal exists q@t == 1\n"), FormatError);
	EXPECT_THROW(parseProgram("vars x\nthread t\n  w x 1 $\nend\n"), FormatError);
}

TEST(ParseTest, CommentsCrlfAndOperatorPrecedence)
{
	auto p = parseProgram("# header\r\nvars x # shared\r\nthread t\r\n  l r = 1 + 2 * 3\r\n"
			      "  w x -r\r\nend\r\nfinal forall r@t == 7 && r@t > 0 || r@t < 0\r\n");
	ASSERT_TRUE(p.final);
	EXPECT_EQ(p.final->mode, FinalCondition::Mode::Forall);
	ASSERT_EQ(p.final->disjuncts.size(), 2U);
	EXPECT_EQ(p.final->disjuncts[0].size(), 2U);
	EXPECT_EQ(p.final->disjuncts[1].size(), 1U);
	auto c = Configuration::initial(std::make_shared<const Program>(p));
	auto g = c.nextGlobal(0);
	ASSERT_TRUE(g);
	EXPECT_EQ(g->value, -7);
}

TEST(ParseTest, RoundTripIsStable)
{
	const char *text = R"(vars x y
thread a
  l i = 0
  label top
  w x (i * 2) - -3
  r y v
  l if v + 1 >= i goto out
  l i = i + 1
  l if i < 3 goto top
  label out
  halt
end
thread b
  w y -(4)
end
final exists v@a == 1 || v@a != 2 && v@a <= -5
)";
	auto p = parseProgram(text);
	auto printed = printProgram(p);
	auto again = parseProgram(printed);
	EXPECT_EQ(again, p);
	EXPECT_EQ(printProgram(again), printed);
}

TEST(UnrollTest, LoopFreeProgramUnchanged)
{
	auto p = parseProgram("vars x\nthread t\n  w x 1\n  l if 1 == 1 goto e\n  w x 2\n  label e\nend\n");
	EXPECT_FALSE(p.hasBackwardJump());
	EXPECT_EQ(unroll(p, 4), p);
}

TEST(UnrollTest, TwoStatementLoopBoundThree)
{
	auto p = parseProgram("vars x\nthread t\n  label L\n  w x 1\n  l if 1 == 1 goto L\nend\n");
	auto u = unroll(p, 3);
	EXPECT_FALSE(u.hasBackwardJump());
	const auto &body = u.threads[0].body;
	EXPECT_EQ(nonLabel(u.threads[0]), 7U); // 3 copies of 2 statements + halt
	EXPECT_EQ(body.back().kind, Kind::Halt);
	EXPECT_EQ(std::count_if(body.begin(), body.end(), [](const Statement &s) { return s.kind == Kind::Write; }),
		  3);
	EXPECT_EQ(parseProgram(printProgram(u)), u);
}

TEST(UnrollTest, UnconditionalBackEdgeBecomesHalt)
{
	auto p = parseProgram("vars x\nthread t\n  label L\n  w x 1\n  l goto L\nend\n");
	auto u = unroll(p, 2);
	EXPECT_FALSE(u.hasBackwardJump());
	EXPECT_EQ(nonLabel(u.threads[0]), 4U);
	EXPECT_EQ(u.threads[0].body.back().kind, Kind::Halt);
}

TEST(UnrollTest, CountedLoopGivesStraightLineWrites)
{
	const char *text = "vars x\nthread t\n  l i = 0\n  label loop\n  w x 1\n  l i = i + 1\n"
			   "  l if i < 4 goto loop\nend\n";
	auto u = std::make_shared<const Program>(unroll(parseProgram(text), 4));
	auto c = Configuration::initial(u);
	int writes = 0;
	while (auto g = c.nextGlobal(0)) {
		ASSERT_TRUE(g->isWrite);
		c.applyWrite(0);
		++writes;
	}
	EXPECT_EQ(writes, 4);
}

TEST(UnrollTest, NestedLoopsUnrollInnermostFirst)
{
	const char *text = R"(vars x
thread t
  l i = 0
  label outer
  l j = 0
  label inner
  w x 1
  l j = j + 1
  l if j < 2 goto inner
  l i = i + 1
  l if i < 2 goto outer
end
)";
	auto u = std::make_shared<const Program>(unroll(parseProgram(text), 2));
	EXPECT_FALSE(u->hasBackwardJump());
	auto c = Configuration::initial(u);
	int writes = 0;
	while (c.nextGlobal(0)) {
		c.applyWrite(0);
		++writes;
	}
	EXPECT_EQ(writes, 4);
	EXPECT_EQ(parseProgram(printProgram(*u)), *u);
}

TEST(UnrollTest, RejectsZeroBound)
{
	EXPECT_THROW(unroll(parseProgram("vars x\nthread t\nend\n"), 0), DomainError);
}

TEST(ConfigurationTest, PendingWriteEvaluatesExpression)
{
	auto p = std::make_shared<const Program>(
		parseProgram("vars x\nthread t\n  l r = 2\n  w x r + 1\nend\n"));
	auto c = Configuration::initial(p);
	auto g = c.nextGlobal(0);
	ASSERT_TRUE(g);
	EXPECT_TRUE(g->isWrite);
	EXPECT_EQ(g->value, 3);
	EXPECT_EQ(c.nextGlobal(0), g); // idempotent until a step is taken
	EXPECT_FALSE(c.isTerminal());
	c.applyWrite(0);
	EXPECT_TRUE(c.isTerminal());
	EXPECT_FALSE(c.nextGlobal(0));
}

TEST(ConfigurationTest, ConditionalSkipsRead)
{
	auto p = std::make_shared<const Program>(parseProgram(
		"vars x y\nthread t\n  r x a\n  l if a == 0 goto skip\n  r y b\n  label skip\n  w y 5\nend\n"));
	auto c = Configuration::initial(p);
	c.applyRead(0, 0);
	auto g = c.nextGlobal(0);
	ASSERT_TRUE(g);
	EXPECT_TRUE(g->isWrite);
	EXPECT_EQ(g->value, 5);

	auto d = Configuration::initial(p);
	d.applyRead(0, 1);
	auto h = d.nextGlobal(0);
	ASSERT_TRUE(h);
	EXPECT_FALSE(h->isWrite);
}

TEST(ConfigurationTest, LocalDivergenceIsReported)
{
	auto p = std::make_shared<const Program>(parseProgram("vars x\nthread t\n  label l\n  l goto l\nend\n"));
	EXPECT_THROW(Configuration::initial(p), DivergenceError);
}

TEST(ConfigurationTest, StepsOnWrongKindAreRejected)
{
	auto p = std::make_shared<const Program>(parseProgram("vars x\nthread t\n  w x 1\nend\n"));
	auto c = Configuration::initial(p);
	EXPECT_THROW(c.applyRead(0, 1), InvariantError);
	c.applyWrite(0);
	EXPECT_THROW(c.applyWrite(0), InvariantError);
}

TEST(FinalConditionTest, EvaluatesOverTerminalRegisters)
{
	auto p = std::make_shared<const Program>(parseProgram(
		"vars x\nthread t1\n  w x 1\n  r x a\nend\nthread t2\n  w x 2\n  r x b\nend\n"
		"final exists a@t1 == 2 && b@t2 == 2\n"));
	auto c = Configuration::initial(p);
	EXPECT_THROW(evalFinalCondition(c, *p), DomainError);
	c.applyWrite(0);
	c.applyWrite(1);
	c.applyRead(0, 2);
	c.applyRead(1, 2);
	EXPECT_TRUE(evalFinalCondition(c, *p));

	auto d = Configuration::initial(p);
	d.applyWrite(0);
	d.applyWrite(1);
	d.applyRead(0, 2);
	d.applyRead(1, 1);
	EXPECT_FALSE(evalFinalCondition(d, *p));
}

TEST(FinalConditionTest, UnassignedRegisterIsZero)
{
	auto p = std::make_shared<const Program>(parseProgram(
		"vars x\nthread t\n  l if 1 == 1 goto e\n  r x a\n  label e\nend\nfinal forall a@t == 0\n"));
	auto c = Configuration::initial(p);
	ASSERT_TRUE(c.isTerminal());
	EXPECT_TRUE(evalFinalCondition(c, *p));
}

} // namespace
} // namespace ramc
