#pragma once

#include "sclab/automata_io.hpp"

#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace sclab {

/// Expression tree over automaton-valued operations. Text form is
/// kind(args) with file references written @path and argument placeholders
/// written _ (auto-numbered) or _N (1-based):
///   star(union(@a.json,@b.json))
///   lq(@l.json, star(@m.json))
///   cat(@a1.json,@a2.json,@a3.json)
/// Kinds: union, inter, cat, star, rev, lq, slq, lqs. cat takes two or more
/// arguments and builds the deterministic tuple automaton.
struct OpExpr {
  enum class Kind {
    Union,
    Intersection,
    Cat,
    Star,
    Reversal,
    LeftQuotient,
    StarOfLeftQuotient,
    LeftQuotientOfStar,
    FileRef,
    Arg,
  };

  Kind kind = Kind::FileRef;
  std::vector<OpExpr> children;
  std::string file;  // FileRef
  int arg = -1;      // Arg slot, 0-based
};

/// Parse the text form; throws std::invalid_argument on malformed input.
OpExpr parse_op_expr(std::string_view text);

std::string op_expr_to_string(const OpExpr&);

/// Number of argument slots (0 when the expression has no placeholders).
int arg_slot_count(const OpExpr&);

using FileLoader = std::function<Automaton(const std::string&)>;

/// Evaluate the tree. File references go through `loader`; placeholder
/// slots are bound from `args`. Deterministic sub-results feed deterministic
/// constructions directly; nondeterministic ones are determinized first.
Automaton eval_op_expr(const OpExpr& expr, const FileLoader& loader,
                       const std::vector<Dfa>& args = {});

}  // namespace sclab
