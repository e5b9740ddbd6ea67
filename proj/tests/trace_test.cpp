#include <gtest/gtest.h>

#include <cctype>
#include <random>
#include <sstream>

#include "robust_topo/trace.hpp"

namespace rtopo::trace {
namespace {

std::string replay(std::string_view text) {
  const auto ops = parse_trace(text);
  const ReplayResult r = execute_trace(ops);
  EXPECT_EQ(r.status, kOk) << r.error;
  return r.output;
}

TEST(ParseTrace, OneOpPerLine) {
  const auto ops = parse_trace("node a\nnode b\nedge a b\norder\n");
  ASSERT_EQ(ops.size(), 4u);
  EXPECT_EQ(ops[0].kind, OpKind::Node);
  EXPECT_EQ(ops[0].first, "a");
  EXPECT_EQ(ops[2].kind, OpKind::Edge);
  EXPECT_EQ(ops[2].first, "a");
  EXPECT_EQ(ops[2].second, "b");
  EXPECT_EQ(ops[2].line, 3u);
  EXPECT_EQ(ops[3].kind, OpKind::Order);
}

TEST(ParseTrace, SkipsCommentsAndBlankLines) {
  const auto ops = parse_trace("# comment\n\nedge a b");
  ASSERT_EQ(ops.size(), 1u);
  EXPECT_EQ(ops[0].kind, OpKind::Edge);
  EXPECT_EQ(ops[0].line, 3u);
}

TEST(ParseTrace, RejectsUnknownKeyword) {
  try {
    parse_trace("frobnicate x");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1u);
  }
}

TEST(ParseTrace, RejectsWrongArity) {
  try {
    parse_trace("node a\nedge a\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  EXPECT_THROW(parse_trace("order now"), ParseError);
}

TEST(ExecuteTrace, ClassifiesEdges) {
  EXPECT_EQ(replay("node a\nnode b\nedge a b\nedge b a\norder\n"),
            "edge a b acyclic\nedge b a cyclic\ncyclic 1\n");
}

TEST(ExecuteTrace, RecoversOrderingAfterRemoval) {
  EXPECT_EQ(replay("node a\nnode b\nedge a b\nedge b a\norder\n"
                   "deledge a b\norder\n"),
            "edge a b acyclic\nedge b a cyclic\ncyclic 1\n"
            "promoted b a\norder b a\n");
}

TEST(ExecuteTrace, SelfLoop) {
  EXPECT_EQ(replay("node a\nedge a a\n"), "edge a a cyclic\n");
}

TEST(ExecuteTrace, ReachCheckAndDelnode) {
  EXPECT_EQ(replay("node a\nnode v\nnode c\nedge a v\nedge v c\nedge c a\n"
                   "reach a c\nreach c a\ncheck\ndelnode v\norder\n"),
            "edge a v acyclic\nedge v c acyclic\nedge c a cyclic\n"
            "reach a c true\nreach c a false\ncheck ok\n"
            "promoted c a\norder c a\n");
}

TEST(ExecuteTrace, EmptyOrder) {
  EXPECT_EQ(replay("order\n"), "order\n");
}

TEST(ExecuteTrace, SemanticErrorsHaltReplay) {
  auto run = [](std::string_view text) {
    return execute_trace(parse_trace(text));
  };
  const ReplayResult unknown = run("node a\nedge a b\norder\n");
  EXPECT_EQ(unknown.status, kSemanticError);
  EXPECT_EQ(unknown.output, "");
  EXPECT_NE(unknown.error.find("line 2"), std::string::npos);

  EXPECT_EQ(run("node a\nnode a\n").status, kSemanticError);
  const ReplayResult edge = run("node a\nnode b\nedge a b\ndeledge b a\norder\n");
  EXPECT_EQ(edge.status, kSemanticError);
  EXPECT_EQ(edge.output, "edge a b acyclic\n");
  EXPECT_EQ(run("delnode z\n").status, kSemanticError);
}

TEST(ExecuteTrace, NamesCanBeReusedAfterDelnode) {
  EXPECT_EQ(replay("node a\nnode b\nedge a b\ndelnode a\nnode a\nedge b a\n"
                   "order\n"),
            "edge a b acyclic\nedge b a acyclic\norder b a\n");
}

// Minimal DOT grammar: header, node statements, edge statements with an
// optional attribute list, closing brace.
bool is_valid_dot(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != "digraph g {") return false;
  auto id = [](std::istringstream& s, std::string& out) {
    s >> std::ws;
    out.clear();
    if (s.peek() == '"') {
      s.get();
      for (int c; (c = s.get()) != EOF;) {
        if (c == '\\') {
          out += static_cast<char>(s.get());
          continue;
        }
        if (c == '"') return true;
        out += static_cast<char>(c);
      }
      return false;
    }
    while (std::isalnum(s.peek()) || s.peek() == '_') {
      out += static_cast<char>(s.get());
    }
    return !out.empty();
  };
  bool closed = false;
  while (std::getline(in, line)) {
    if (closed) return false;
    if (line == "}") {
      closed = true;
      continue;
    }
    std::istringstream s(line);
    std::string lhs, rhs, rest;
    if (!id(s, lhs)) return false;
    s >> std::ws;
    if (s.peek() == ';') {
      s.get();
    } else {
      std::string arrow;
      s >> arrow;
      if (arrow != "->" || !id(s, rhs)) return false;
      std::getline(s, rest);
      if (rest != ";" && rest != " [style=dashed];") return false;
      continue;
    }
    std::getline(s, rest);
    if (!rest.empty()) return false;
  }
  return closed;
}

std::string dot_for(std::string_view text) {
  Session session;
  std::string out;
  for (const auto& op : parse_trace(text)) session.apply(op, out);
  return export_dot(session.graph(), session.names());
}

TEST(ExportDot, EmptyGraph) {
  EXPECT_EQ(dot_for(""), "digraph g {\n}\n");
}

TEST(ExportDot, EdgeStyles) {
  const std::string acyclic = dot_for("node a\nnode b\nedge a b\n");
  EXPECT_NE(acyclic.find("a -> b;"), std::string::npos);
  EXPECT_EQ(acyclic.find("style=dashed"), std::string::npos);

  const std::string cyclic = dot_for("node a\nnode b\nedge a b\nedge b a\n");
  EXPECT_NE(cyclic.find("b -> a [style=dashed];"), std::string::npos);
}

TEST(ExportDot, VerticesInRepresentationOrder) {
  EXPECT_EQ(dot_for("node y\nnode m\nnode x\nedge x y\n"),
            "digraph g {\n  x;\n  m;\n  y;\n  x -> y;\n}\n");
}

TEST(ExportDot, QuotesAwkwardNames) {
  const std::string dot = dot_for("node a-1\nnode 2b\nnode \"q\nedge a-1 2b\n");
  EXPECT_NE(dot.find("\"a-1\" -> \"2b\";"), std::string::npos);
  EXPECT_NE(dot.find("\"\\\"q\";"), std::string::npos);
  EXPECT_TRUE(is_valid_dot(dot)) << dot;
}

TEST(ExportDot, RandomTracesProduceValidDot) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 50; ++trial) {
    std::string text;
    for (int i = 0; i < 8; ++i) text += "node n" + std::to_string(i) + '\n';
    for (int k = 0; k < 20; ++k) {
      text += "edge n" + std::to_string(rng() % 8) + " n" +
              std::to_string(rng() % 8) + '\n';
    }
    const std::string dot = dot_for(text);
    ASSERT_TRUE(is_valid_dot(dot)) << dot;
    ASSERT_EQ(dot, dot_for(text));
  }
}

TEST(BenchCompare, CountsEveryOp) {
  const auto ops = parse_trace(
      "node a\nnode b\nnode c\nnode d\nedge a b\nedge b c\nedge c d\n"
      "edge d a\ndeledge c d\ndelnode b\n");
  ASSERT_EQ(ops.size(), 10u);
  const BenchStats s = bench_compare(ops);
  EXPECT_EQ(s.ops, 10u);
  EXPECT_EQ(s.incremental_ops, 10u);
  EXPECT_EQ(s.batch_ops, 10u);
  EXPECT_EQ(s.node_ops, 4u);
  EXPECT_EQ(s.edge_ops, 4u);
  EXPECT_EQ(s.deledge_ops, 1u);
  EXPECT_EQ(s.delnode_ops, 1u);
  EXPECT_EQ(s.disagreements, 0u);
  EXPECT_TRUE(s.final_agreement);
  const std::string text = format_bench(s);
  EXPECT_NE(text.find("incremental_ops 10\n"), std::string::npos);
  EXPECT_NE(text.find("batch_ops 10\n"), std::string::npos);
}

TEST(BenchCompare, InOrderChainNeverReorders) {
  std::string text;
  constexpr int n = 500;
  for (int i = 1; i <= n; ++i) text += "node a" + std::to_string(i) + '\n';
  for (int i = 1; i < n; ++i) {
    text += "edge a" + std::to_string(i) + " a" + std::to_string(i + 1) + '\n';
  }
  const BenchStats s = bench_compare(parse_trace(text));
  EXPECT_EQ(s.incremental_reorders, 0u);
  EXPECT_FALSE(s.final_cyclic);
  EXPECT_TRUE(s.final_agreement);
}

TEST(BenchCompare, RandomTraceStrategiesAgree) {
  std::mt19937_64 rng(1000);
  std::string text;
  for (int i = 0; i < 200; ++i) text += "node v" + std::to_string(i) + '\n';
  for (int k = 0; k < 1000; ++k) {
    text += "edge v" + std::to_string(rng() % 200) + " v" +
            std::to_string(rng() % 200) + '\n';
  }
  const BenchStats s = bench_compare(parse_trace(text));
  EXPECT_EQ(s.edge_ops, 1000u);
  EXPECT_EQ(s.disagreements, 0u);
  EXPECT_TRUE(s.final_agreement);
}

TEST(BenchCompare, RejectsQueries) {
  EXPECT_THROW(bench_compare(parse_trace("node a\norder\n")), SemanticError);
  EXPECT_THROW(bench_compare(parse_trace("edge a b\n")), SemanticError);
}

}  // namespace
}  // namespace rtopo::trace
