#include <doctest.h>

#include <string>

#include "trihull/errors.hpp"
#include "trihull/problem_io.hpp"

using namespace trihull;

TEST_CASE("minimal shm file") {
  const auto f = parse_problem("shm\nn 3\nm 1\nb 2.0\nA 1\n1 0 0\n0 2 0\n0 0 3\n");
  REQUIRE(f.kind == ProblemKind::shm);
  const auto& inst = std::get<ShmInstance>(f.payload);
  CHECK(inst.n() == 3);
  CHECK(inst.m() == 1);
  CHECK(inst.b() == Vector{2.0});
  CHECK(inst.mats()[0](2, 2) == 3.0);
}

TEST_CASE("comments, blank lines and sdp kind") {
  const auto f = parse_problem("# header\n\nsdp\nn 1  # order\nm 1\nb 2\nA 1\n1\n");
  REQUIRE(f.kind == ProblemKind::sdp);
  CHECK(std::get<SdpFeasibilityInstance>(f.payload).rhs == Vector{2});
}

TEST_CASE("maxcut edge list") {
  const auto f = parse_problem("maxcut\nn 2\nedge 1 2 1.0\n");
  REQUIRE(f.kind == ProblemKind::maxcut);
  const auto& mc = std::get<MaxCutInstance>(f.payload);
  CHECK(mc.n == 2);
  CHECK(mc.weights(0, 1) == 1.0);
  CHECK(mc.weights(1, 0) == 1.0);
  CHECK(mc.weights(0, 0) == 0.0);
}

TEST_CASE("chm file") {
  const auto f = parse_problem("chm\nm 2\nN 3\np0 0.25 0.25\n0 0\n1 0\n0 1\n");
  REQUIRE(f.kind == ProblemKind::chm);
  const auto& p = std::get<ChmProblem>(f.payload);
  CHECK(p.set.size() == 3);
  CHECK(p.p0 == Vector{0.25, 0.25});
}

TEST_CASE("svm file") {
  const auto f = parse_problem("svm\nleft\nn 2\nm 1\nA 1\n1 0\n0 2\nright\nn 2\nm 1\nA 1\n4 0\n0 5\n");
  REQUIRE(f.kind == ProblemKind::svm);
  const auto& p = std::get<SvmProblem>(f.payload);
  CHECK(p.left.mats()[0](1, 1) == 2.0);
  CHECK(p.right.mats()[0](0, 0) == 4.0);
}

namespace {

std::string parse_error(const std::string& text, std::size_t& line) {
  try {
    parse_problem(text);
  } catch (const ParseError& e) {
    line = e.line();
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("malformed files name the line") {
  std::size_t line = 0;
  CHECK_FALSE(parse_error("shm\nn 3\nm 1\nb 2.0 3.0\nA 1\n1 0 0\n0 2 0\n0 0 3\n", line).empty());
  CHECK(line == 4);

  CHECK_FALSE(parse_error("shm\nn 2\nm 1\nb 1\nA 1\n1 x\n0 1\n", line).empty());
  CHECK(line == 6);

  CHECK_FALSE(parse_error("shm\nn 2\nm 1\nb 1\nA 1\n1 1\n0 1\n", line).empty());

  CHECK_FALSE(parse_error("polytope\nn 2\n", line).empty());
  CHECK(line == 1);

  CHECK_FALSE(parse_error("", line).empty());
  CHECK_FALSE(parse_error("maxcut\nn 2\nedge 1 1 1\n", line).empty());
  CHECK(line == 3);
  CHECK_FALSE(parse_error("maxcut\nn 2\nedge 1 3 1\n", line).empty());
  CHECK_FALSE(parse_error("maxcut\nn 2\nedge 1 2 -1\n", line).empty());
  CHECK_FALSE(parse_error("chm\nm 2\nN 2\np0 0 0\n1 0\n", line).empty());
  CHECK_FALSE(parse_error("shm\nn 2\nm 1\nb 1\nA 2\n1 0\n0 1\n", line).empty());
}
