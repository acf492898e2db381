#pragma once

// Line-oriented problem files. Blank lines and '#' comments are ignored.
//
//   shm | sdp          chm              maxcut          svm
//   n 3                m 2              n 2             left
//   m 1                N 3              edge 1 2 1.0      n .. m .. A ..
//   b 2.0              p0 0.25 0.25                     right
//   A 1                0 0                                n .. m .. A ..
//   1 0 0              1 0
//   0 2 0              0 1
//   0 0 3

#include <string_view>
#include <variant>

#include "trihull/chm.hpp"
#include "trihull/reductions.hpp"
#include "trihull/symcore.hpp"

namespace trihull {

enum class ProblemKind { shm, chm, sdp, maxcut, svm };

const char* to_string(ProblemKind kind);

struct ChmProblem {
  PointSet set;
  Vector p0;
};

struct SvmProblem {
  ShmInstance left;
  ShmInstance right;
};

struct ProblemFile {
  ProblemKind kind;
  std::variant<ShmInstance, ChmProblem, SdpFeasibilityInstance, MaxCutInstance, SvmProblem> payload;
};

/// Throws ParseError with the offending line and column.
ProblemFile parse_problem(std::string_view text);

}  // namespace trihull
