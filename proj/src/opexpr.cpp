#include "sclab/opexpr.hpp"

#include "sclab/regops.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace sclab {

namespace {

struct Parser {
  std::string_view text;
  std::size_t pos = 0;
  int next_auto_slot = 0;

  [[noreturn]] void fail(const std::string& msg) {
    throw std::invalid_argument("op expression: " + msg + " at offset " + std::to_string(pos));
  }

  void skip_space() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool eat(char c) {
    skip_space();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  OpExpr parse_expr() {
    skip_space();
    if (pos >= text.size()) fail("unexpected end of input");
    char c = text[pos];
    if (c == '@') return parse_file_ref();
    if (c == '_') return parse_placeholder();
    return parse_call();
  }

  OpExpr parse_file_ref() {
    ++pos;  // '@'
    std::size_t begin = pos;
    while (pos < text.size() && text[pos] != ',' && text[pos] != ')') ++pos;
    std::string path(text.substr(begin, pos - begin));
    while (!path.empty() && std::isspace(static_cast<unsigned char>(path.back()))) path.pop_back();
    if (path.empty()) fail("empty file reference");
    OpExpr e;
    e.kind = OpExpr::Kind::FileRef;
    e.file = std::move(path);
    return e;
  }

  OpExpr parse_placeholder() {
    ++pos;  // '_'
    OpExpr e;
    e.kind = OpExpr::Kind::Arg;
    std::size_t begin = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos > begin) {
      int slot = std::stoi(std::string(text.substr(begin, pos - begin)));
      if (slot < 1) fail("placeholder slots are 1-based");
      e.arg = slot - 1;
      next_auto_slot = std::max(next_auto_slot, slot);
    } else {
      e.arg = next_auto_slot++;
    }
    return e;
  }

  OpExpr parse_call() {
    skip_space();
    std::size_t begin = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      ++pos;
    std::string name(text.substr(begin, pos - begin));
    if (name.empty()) fail("expected an operation name");

    OpExpr e;
    if (name == "union") e.kind = OpExpr::Kind::Union;
    else if (name == "inter") e.kind = OpExpr::Kind::Intersection;
    else if (name == "cat") e.kind = OpExpr::Kind::Cat;
    else if (name == "star") e.kind = OpExpr::Kind::Star;
    else if (name == "rev") e.kind = OpExpr::Kind::Reversal;
    else if (name == "lq") e.kind = OpExpr::Kind::LeftQuotient;
    else if (name == "slq") e.kind = OpExpr::Kind::StarOfLeftQuotient;
    else if (name == "lqs") e.kind = OpExpr::Kind::LeftQuotientOfStar;
    else fail("unknown operation \"" + name + "\"");

    if (!eat('(')) fail("expected '('");
    e.children.push_back(parse_expr());
    while (eat(',')) e.children.push_back(parse_expr());
    if (!eat(')')) fail("expected ')'");

    check_arity(e);
    return e;
  }

  void check_arity(const OpExpr& e) {
    const std::size_t n = e.children.size();
    switch (e.kind) {
      case OpExpr::Kind::Union:
      case OpExpr::Kind::Intersection:
      case OpExpr::Kind::LeftQuotient:
      case OpExpr::Kind::StarOfLeftQuotient:
      case OpExpr::Kind::LeftQuotientOfStar:
        if (n != 2) fail("operation takes exactly two arguments");
        break;
      case OpExpr::Kind::Star:
      case OpExpr::Kind::Reversal:
        if (n != 1) fail("operation takes exactly one argument");
        break;
      case OpExpr::Kind::Cat:
        if (n < 2) fail("cat takes at least two arguments");
        break;
      default:
        break;
    }
  }
};

const char* kind_name(OpExpr::Kind k) {
  switch (k) {
    case OpExpr::Kind::Union: return "union";
    case OpExpr::Kind::Intersection: return "inter";
    case OpExpr::Kind::Cat: return "cat";
    case OpExpr::Kind::Star: return "star";
    case OpExpr::Kind::Reversal: return "rev";
    case OpExpr::Kind::LeftQuotient: return "lq";
    case OpExpr::Kind::StarOfLeftQuotient: return "slq";
    case OpExpr::Kind::LeftQuotientOfStar: return "lqs";
    default: return "";
  }
}

Dfa as_dfa(Automaton a) {
  if (std::holds_alternative<Dfa>(a)) return complete(std::get<Dfa>(std::move(a)));
  return determinize(std::get<Nfa>(a));
}

Nfa as_nfa(Automaton a) {
  if (std::holds_alternative<Nfa>(a)) return std::get<Nfa>(std::move(a));
  return lift(complete(std::get<Dfa>(a)));
}

}  // namespace

OpExpr parse_op_expr(std::string_view text) {
  Parser p{text};
  OpExpr e = p.parse_expr();
  p.skip_space();
  if (p.pos != text.size()) p.fail("trailing input");
  return e;
}

std::string op_expr_to_string(const OpExpr& e) {
  switch (e.kind) {
    case OpExpr::Kind::FileRef:
      return "@" + e.file;
    case OpExpr::Kind::Arg:
      return "_" + std::to_string(e.arg + 1);
    default: {
      std::string out = kind_name(e.kind);
      out += '(';
      for (std::size_t i = 0; i < e.children.size(); ++i) {
        if (i) out += ',';
        out += op_expr_to_string(e.children[i]);
      }
      out += ')';
      return out;
    }
  }
}

int arg_slot_count(const OpExpr& e) {
  int count = (e.kind == OpExpr::Kind::Arg) ? e.arg + 1 : 0;
  for (const OpExpr& c : e.children) count = std::max(count, arg_slot_count(c));
  return count;
}

Automaton eval_op_expr(const OpExpr& e, const FileLoader& loader, const std::vector<Dfa>& args) {
  switch (e.kind) {
    case OpExpr::Kind::FileRef:
      if (!loader) throw std::invalid_argument("op expression: no file loader provided");
      return loader(e.file);
    case OpExpr::Kind::Arg:
      if (e.arg < 0 || e.arg >= static_cast<int>(args.size()))
        throw std::invalid_argument("op expression: unbound argument slot");
      return args[e.arg];
    case OpExpr::Kind::Union:
      return op_union(as_dfa(eval_op_expr(e.children[0], loader, args)),
                      as_dfa(eval_op_expr(e.children[1], loader, args)));
    case OpExpr::Kind::Intersection:
      return op_intersection(as_dfa(eval_op_expr(e.children[0], loader, args)),
                             as_dfa(eval_op_expr(e.children[1], loader, args)));
    case OpExpr::Kind::Cat: {
      std::vector<Dfa> parts;
      parts.reserve(e.children.size());
      for (const OpExpr& c : e.children) parts.push_back(as_dfa(eval_op_expr(c, loader, args)));
      return catenation_k(parts);
    }
    case OpExpr::Kind::Star:
      return op_star(as_nfa(eval_op_expr(e.children[0], loader, args)));
    case OpExpr::Kind::Reversal:
      return op_reversal(as_dfa(eval_op_expr(e.children[0], loader, args)));
    case OpExpr::Kind::LeftQuotient:
      return left_quotient(as_dfa(eval_op_expr(e.children[0], loader, args)),
                           as_dfa(eval_op_expr(e.children[1], loader, args)));
    case OpExpr::Kind::StarOfLeftQuotient:
      return star_of_left_quotient(as_dfa(eval_op_expr(e.children[0], loader, args)),
                                   as_dfa(eval_op_expr(e.children[1], loader, args)));
    case OpExpr::Kind::LeftQuotientOfStar:
      return left_quotient_of_star(as_dfa(eval_op_expr(e.children[0], loader, args)),
                                   as_dfa(eval_op_expr(e.children[1], loader, args)));
  }
  throw std::invalid_argument("op expression: unknown node kind");
}

}  // namespace sclab
