#pragma once

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "reslat/finalg.hpp"

namespace reslat {

enum class Op { Join, Meet, Prod, LDiv, RDiv };

/// Immutable term over {v, ^, *, \, /, 1, 0}. Cheap to copy (shared nodes).
class Term {
 public:
  enum class Kind { Var, One, Zero, Binary };

  static Term var(std::string name);
  static Term one();
  static Term zero();
  static Term binary(Op op, Term lhs, Term rhs);

  Kind kind() const { return node_->kind; }
  const std::string& name() const { return node_->name; }
  Op op() const { return node_->op; }
  const Term& lhs() const { return *node_->lhs; }
  const Term& rhs() const { return *node_->rhs; }

  /// Sorted, deduplicated variable names.
  std::vector<std::string> variables() const;
  bool uses_zero() const;

  friend bool operator==(const Term& a, const Term& b);

 private:
  struct Node {
    Kind kind;
    std::string name;
    Op op{};
    std::shared_ptr<const Term> lhs, rhs;
  };
  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

// Term-building shorthands.
Term join(Term a, Term b);
Term meet(Term a, Term b);
Term operator*(Term a, Term b);
Term ldiv(Term a, Term b);  // a\b
Term rdiv(Term a, Term b);  // a/b

enum class Rel { Eq, Le, Ge };

struct Atom {
  Term lhs;
  Rel rel;
  Term rhs;
  friend bool operator==(const Atom&, const Atom&) = default;
};

/// premises => conclusions. With no premises this is a plain equation,
/// inequality, or a conjunction of them.
struct Statement {
  std::vector<Atom> premises;
  std::vector<Atom> conclusions;

  bool is_quasi() const { return !premises.empty(); }
  std::vector<std::string> variables() const;
  friend bool operator==(const Statement&, const Statement&) = default;
};

using Assignment = std::map<std::string, Elem>;

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : std::runtime_error("parse error at " + std::to_string(position) + ": " + what), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class EvalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Term parse_term(const std::string& text);
Statement parse_statement(const std::string& text);

std::string to_string(const Term& t);
std::string to_string(const Atom& a);
std::string to_string(const Statement& s);
std::string to_string(const Assignment& a);

/// Throws EvalError on unbound variables or 0 in a zero-free algebra.
Elem eval(const FinAlg& alg, const Term& t, const Assignment& a);

struct Verdict {
  bool holds = true;
  std::optional<Assignment> counterexample;
};

/// Exhaustive check over all assignments in mixed-radix order (variables
/// sorted, first variable most significant); the reported counterexample is
/// the least failing assignment.
Verdict satisfies(const FinAlg& alg, const Statement& s);

/// Named statements; throws std::invalid_argument for unknown names or bad
/// parameters.
Statement builtin(const std::string& name, const std::vector<int>& params = {});
/// Registry entries as (name, number of integer parameters).
std::vector<std::pair<std::string, int>> builtin_names();

/// A single term p with: s holds iff p >= 1 holds. Quasi-equations throw.
Term unit_form(const Statement& s);

}  // namespace reslat
