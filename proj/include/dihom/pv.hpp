#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "dihom/grid.hpp"

namespace dihom::pv {

enum class Op { P, V };

struct Action {
  Op op;
  std::string semaphore;
  friend bool operator==(const Action&, const Action&) = default;
};

/// Two sequential processes over binary semaphores.
struct PVProgram {
  std::vector<std::string> semaphores;  // sorted, unique
  std::array<std::vector<Action>, 2> processes;
  friend bool operator==(const PVProgram&, const PVProgram&) = default;
};

/// Grammar (whitespace-insensitive, '#' starts a line comment):
///
///   program := proc "|" proc
///   proc    := action+
///   action  := ("P" | "V") "(" ident ")"
///
/// Throws ParseError (with line and column), BracketingError when a process
/// releases a semaphore it does not hold, re-acquires one it holds, or ends
/// holding one, and UnsupportedError for more than two processes.
PVProgram parse_pv(std::string_view text);

/// Canonical text, e.g. "P(a)V(a) | P(a)V(a)"; parse_pv(print_pv(p)) == p.
std::string print_pv(const PVProgram& p);

/// Open interval during which a process holds a semaphore: from the
/// completion coordinate of its P to that of the matching V (action k
/// completes at coordinate k + 1).
struct HoldInterval {
  std::string semaphore;
  double start;
  double end;
};

std::vector<HoldInterval> hold_intervals(const std::vector<Action>& process);

/// Bounds [0, len1] x [0, len2]; one open forbidden box per semaphore and per
/// pair of hold intervals of that semaphore in the two processes.
grid::GridComplex program_to_grid(const PVProgram& p);

}  // namespace dihom::pv
