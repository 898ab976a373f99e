#include "reslat/term.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>
#include <sstream>

namespace reslat {

// ---------------------------------------------------------------------------
// Term

Term Term::var(std::string name) {
  return Term(std::make_shared<const Node>(Node{Kind::Var, std::move(name), {}, nullptr, nullptr}));
}
Term Term::one() { return Term(std::make_shared<const Node>(Node{Kind::One, {}, {}, nullptr, nullptr})); }
Term Term::zero() { return Term(std::make_shared<const Node>(Node{Kind::Zero, {}, {}, nullptr, nullptr})); }
Term Term::binary(Op op, Term lhs, Term rhs) {
  return Term(std::make_shared<const Node>(Node{Kind::Binary,
                                                {},
                                                op,
                                                std::make_shared<const Term>(std::move(lhs)),
                                                std::make_shared<const Term>(std::move(rhs))}));
}

namespace {
void collect_vars(const Term& t, std::set<std::string>& out) {
  switch (t.kind()) {
    case Term::Kind::Var: out.insert(t.name()); break;
    case Term::Kind::Binary:
      collect_vars(t.lhs(), out);
      collect_vars(t.rhs(), out);
      break;
    default: break;
  }
}
}  // namespace

std::vector<std::string> Term::variables() const {
  std::set<std::string> s;
  collect_vars(*this, s);
  return {s.begin(), s.end()};
}

bool Term::uses_zero() const {
  if (kind() == Kind::Zero) return true;
  if (kind() == Kind::Binary) return lhs().uses_zero() || rhs().uses_zero();
  return false;
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Term::Kind::Var: return a.name() == b.name();
    case Term::Kind::Binary: return a.op() == b.op() && a.lhs() == b.lhs() && a.rhs() == b.rhs();
    default: return true;
  }
}

Term join(Term a, Term b) { return Term::binary(Op::Join, std::move(a), std::move(b)); }
Term meet(Term a, Term b) { return Term::binary(Op::Meet, std::move(a), std::move(b)); }
Term operator*(Term a, Term b) { return Term::binary(Op::Prod, std::move(a), std::move(b)); }
Term ldiv(Term a, Term b) { return Term::binary(Op::LDiv, std::move(a), std::move(b)); }
Term rdiv(Term a, Term b) { return Term::binary(Op::RDiv, std::move(a), std::move(b)); }

std::vector<std::string> Statement::variables() const {
  std::set<std::string> s;
  for (const auto* list : {&premises, &conclusions})
    for (const auto& a : *list) {
      collect_vars(a.lhs, s);
      collect_vars(a.rhs, s);
    }
  return {s.begin(), s.end()};
}

// ---------------------------------------------------------------------------
// Lexer / parser

namespace {

enum class Tok { Var, One, Zero, Star, LDiv, RDiv, Meet, Join, Arrow, LParen, RParen, Eq, Le, Ge, Amp, Implies, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> lex(const std::string& s) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto two = [&](char a, char b) { return s[i] == a && i + 1 < s.size() && s[i + 1] == b; };
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (std::isalpha(static_cast<unsigned char>(c))) {
      while (i < s.size() && std::isalnum(static_cast<unsigned char>(s[i]))) ++i;
      out.push_back({Tok::Var, s.substr(start, i - start), start});
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      const std::string num = s.substr(start, i - start);
      if (num != "0" && num != "1") throw ParseError(start, "unknown constant '" + num + "'");
      out.push_back({num == "1" ? Tok::One : Tok::Zero, num, start});
      continue;
    }
    Tok k;
    std::size_t len = 1;
    if (two('/', '\\')) k = Tok::Meet, len = 2;
    else if (two('\\', '/')) k = Tok::Join, len = 2;
    else if (two('-', '>')) k = Tok::Arrow, len = 2;
    else if (two('<', '=')) k = Tok::Le, len = 2;
    else if (two('>', '=')) k = Tok::Ge, len = 2;
    else if (two('=', '>')) k = Tok::Implies, len = 2;
    else if (c == '*') k = Tok::Star;
    else if (c == '\\') k = Tok::LDiv;
    else if (c == '/') k = Tok::RDiv;
    else if (c == '(') k = Tok::LParen;
    else if (c == ')') k = Tok::RParen;
    else if (c == '=') k = Tok::Eq;
    else if (c == '&') k = Tok::Amp;
    else throw ParseError(start, std::string("unknown token '") + c + "'");
    out.push_back({k, s.substr(start, len), start});
    i += len;
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

class Parser {
 public:
  explicit Parser(const std::string& text) : toks_(lex(text)) {}

  Statement statement() {
    Statement s;
    s.conclusions = atoms();
    if (peek().kind == Tok::Implies) {
      next();
      s.premises = std::move(s.conclusions);
      s.conclusions = atoms();
    }
    expect_end();
    return s;
  }

  Term term() {
    Term t = join_level();
    expect_end();
    return t;
  }

 private:
  const Token& peek() const { return toks_[i_]; }
  const Token& next() { return toks_[i_++]; }

  void expect_end() {
    if (peek().kind != Tok::End) throw ParseError(peek().pos, "unexpected '" + peek().text + "'");
  }

  std::vector<Atom> atoms() {
    std::vector<Atom> v{atom()};
    while (peek().kind == Tok::Amp) {
      next();
      v.push_back(atom());
    }
    return v;
  }

  Atom atom() {
    Term lhs = join_level();
    Rel rel;
    switch (peek().kind) {
      case Tok::Eq: rel = Rel::Eq; break;
      case Tok::Le: rel = Rel::Le; break;
      case Tok::Ge: rel = Rel::Ge; break;
      default: throw ParseError(peek().pos, "expected '=', '<=' or '>='");
    }
    next();
    Term rhs = join_level();
    return {std::move(lhs), rel, std::move(rhs)};
  }

  Term join_level() {
    Term t = meet_level();
    while (peek().kind == Tok::Join) {
      next();
      t = join(std::move(t), meet_level());
    }
    return t;
  }

  Term meet_level() {
    Term t = div_level();
    while (peek().kind == Tok::Meet) {
      next();
      t = meet(std::move(t), div_level());
    }
    return t;
  }

  Term div_level() {
    Term t = prod_level();
    while (true) {
      const Tok k = peek().kind;
      if (k == Tok::LDiv || k == Tok::Arrow) {
        next();
        t = ldiv(std::move(t), prod_level());
      } else if (k == Tok::RDiv) {
        next();
        t = rdiv(std::move(t), prod_level());
      } else {
        return t;
      }
    }
  }

  Term prod_level() {
    Term t = primary();
    while (peek().kind == Tok::Star) {
      next();
      t = std::move(t) * primary();
    }
    return t;
  }

  Term primary() {
    const Token& tk = next();
    switch (tk.kind) {
      case Tok::Var: return Term::var(tk.text);
      case Tok::One: return Term::one();
      case Tok::Zero: return Term::zero();
      case Tok::LParen: {
        Term t = join_level();
        if (peek().kind != Tok::RParen) throw ParseError(peek().pos, "expected ')'");
        next();
        return t;
      }
      case Tok::End: throw ParseError(tk.pos, "unexpected end of input");
      default: throw ParseError(tk.pos, "unexpected '" + tk.text + "'");
    }
  }

  std::vector<Token> toks_;
  std::size_t i_ = 0;
};

}  // namespace

Term parse_term(const std::string& text) { return Parser(text).term(); }
Statement parse_statement(const std::string& text) { return Parser(text).statement(); }

// ---------------------------------------------------------------------------
// Printer

namespace {

int level(const Term& t) {
  if (t.kind() != Term::Kind::Binary) return 5;
  switch (t.op()) {
    case Op::Join: return 1;
    case Op::Meet: return 2;
    case Op::LDiv:
    case Op::RDiv: return 3;
    case Op::Prod: return 4;
  }
  return 5;
}

const char* op_text(Op op) {
  switch (op) {
    case Op::Join: return " \\/ ";
    case Op::Meet: return " /\\ ";
    case Op::Prod: return " * ";
    case Op::LDiv: return " \\ ";
    case Op::RDiv: return " / ";
  }
  return "?";
}

void print(const Term& t, std::ostream& os) {
  switch (t.kind()) {
    case Term::Kind::Var: os << t.name(); return;
    case Term::Kind::One: os << '1'; return;
    case Term::Kind::Zero: os << '0'; return;
    case Term::Kind::Binary: break;
  }
  const int l = level(t);
  const bool pl = level(t.lhs()) < l;
  const bool pr = level(t.rhs()) <= l;
  if (pl) os << '(';
  print(t.lhs(), os);
  if (pl) os << ')';
  os << op_text(t.op());
  if (pr) os << '(';
  print(t.rhs(), os);
  if (pr) os << ')';
}

const char* rel_text(Rel r) {
  switch (r) {
    case Rel::Eq: return " = ";
    case Rel::Le: return " <= ";
    case Rel::Ge: return " >= ";
  }
  return "?";
}

}  // namespace

std::string to_string(const Term& t) {
  std::ostringstream os;
  print(t, os);
  return os.str();
}

std::string to_string(const Atom& a) { return to_string(a.lhs) + rel_text(a.rel) + to_string(a.rhs); }

std::string to_string(const Statement& s) {
  auto list = [](const std::vector<Atom>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " & " : "") + to_string(v[i]);
    return out;
  };
  if (s.premises.empty()) return list(s.conclusions);
  return list(s.premises) + " => " + list(s.conclusions);
}

std::string to_string(const Assignment& a) {
  std::string out;
  for (const auto& [k, v] : a) out += (out.empty() ? "" : ", ") + k + "=" + std::to_string(v);
  return out;
}

// ---------------------------------------------------------------------------
// Evaluation

namespace {

// Postfix program over variable slots.
struct Program {
  struct Instr {
    Term::Kind kind;
    Op op;
    int slot;
  };
  std::vector<Instr> code;

  Elem run(const FinAlg& A, const std::vector<Elem>& env, std::vector<Elem>& stack) const {
    stack.clear();
    for (const auto& in : code) {
      switch (in.kind) {
        case Term::Kind::Var: stack.push_back(env[in.slot]); break;
        case Term::Kind::One: stack.push_back(A.unit); break;
        case Term::Kind::Zero: stack.push_back(*A.zero); break;
        case Term::Kind::Binary: {
          const Elem b = stack.back();
          stack.pop_back();
          const Elem a = stack.back();
          Elem r = 0;
          switch (in.op) {
            case Op::Join: r = A.join(a, b); break;
            case Op::Meet: r = A.meet(a, b); break;
            case Op::Prod: r = A.prod(a, b); break;
            case Op::LDiv: r = A.ldiv(a, b); break;
            case Op::RDiv: r = A.rdiv(a, b); break;
          }
          stack.back() = r;
          break;
        }
      }
    }
    return stack.back();
  }
};

void compile(const Term& t, const std::vector<std::string>& vars, Program& p) {
  if (t.kind() == Term::Kind::Binary) {
    compile(t.lhs(), vars, p);
    compile(t.rhs(), vars, p);
    p.code.push_back({Term::Kind::Binary, t.op(), -1});
    return;
  }
  int slot = -1;
  if (t.kind() == Term::Kind::Var)
    slot = static_cast<int>(std::lower_bound(vars.begin(), vars.end(), t.name()) - vars.begin());
  p.code.push_back({t.kind(), Op::Join, slot});
}

struct CompiledAtom {
  Program lhs, rhs;
  Rel rel;

  bool holds(const FinAlg& A, const std::vector<Elem>& env, std::vector<Elem>& stack) const {
    const Elem l = lhs.run(A, env, stack);
    const Elem r = rhs.run(A, env, stack);
    switch (rel) {
      case Rel::Eq: return l == r;
      case Rel::Le: return A.leq(l, r);
      case Rel::Ge: return A.leq(r, l);
    }
    return false;
  }
};

void require_evaluable(const FinAlg& alg, bool uses_zero) {
  if (uses_zero && !alg.zero) throw EvalError("constant 0 used in an algebra without zero");
  if (!alg.has_divisions()) throw EvalError("algebra has no division tables");
}

}  // namespace

Elem eval(const FinAlg& alg, const Term& t, const Assignment& a) {
  require_evaluable(alg, t.uses_zero());
  const auto vars = t.variables();
  std::vector<Elem> env;
  for (const auto& v : vars) {
    auto it = a.find(v);
    if (it == a.end()) throw EvalError("unbound variable '" + v + "'");
    if (it->second < 0 || it->second >= alg.size) throw EvalError("value of '" + v + "' out of range");
    env.push_back(it->second);
  }
  Program p;
  compile(t, vars, p);
  std::vector<Elem> stack;
  return p.run(alg, env, stack);
}

Verdict satisfies(const FinAlg& alg, const Statement& s) {
  bool zero = false;
  for (const auto* list : {&s.premises, &s.conclusions})
    for (const auto& a : *list) zero = zero || a.lhs.uses_zero() || a.rhs.uses_zero();
  require_evaluable(alg, zero);

  const auto vars = s.variables();
  auto compile_list = [&](const std::vector<Atom>& atoms) {
    std::vector<CompiledAtom> out;
    for (const auto& a : atoms) {
      CompiledAtom c;
      compile(a.lhs, vars, c.lhs);
      compile(a.rhs, vars, c.rhs);
      c.rel = a.rel;
      out.push_back(std::move(c));
    }
    return out;
  };
  const auto premises = compile_list(s.premises);
  const auto conclusions = compile_list(s.conclusions);

  std::vector<Elem> env(vars.size(), 0), stack;
  const int n = alg.size;
  while (true) {
    bool applicable = true;
    for (const auto& p : premises)
      if (!p.holds(alg, env, stack)) {
        applicable = false;
        break;
      }
    if (applicable)
      for (const auto& c : conclusions)
        if (!c.holds(alg, env, stack)) {
          Assignment w;
          for (std::size_t i = 0; i < vars.size(); ++i) w[vars[i]] = env[i];
          return {false, std::move(w)};
        }
    // mixed-radix increment, last variable fastest
    int i = static_cast<int>(env.size()) - 1;
    while (i >= 0 && ++env[i] == n) env[i--] = 0;
    if (i < 0) break;
  }
  return {true, std::nullopt};
}

// ---------------------------------------------------------------------------
// Registry

namespace {

Term V(const std::string& n) { return Term::var(n); }
Term Vi(int i) { return Term::var("x" + std::to_string(i)); }
Term one() { return Term::one(); }

Atom eq(Term a, Term b) { return {std::move(a), Rel::Eq, std::move(b)}; }
Atom le(Term a, Term b) { return {std::move(a), Rel::Le, std::move(b)}; }
Atom ge(Term a, Term b) { return {std::move(a), Rel::Ge, std::move(b)}; }

Statement plain(std::vector<Atom> atoms) { return {{}, std::move(atoms)}; }

Term power(const Term& t, int n) {
  Term out = t;
  for (int i = 1; i < n; ++i) out = out * t;
  return out;
}

struct Entry {
  int arity;
  std::function<Statement(const std::vector<int>&)> make;
};

const std::map<std::string, Entry>& registry() {
  static const std::map<std::string, Entry> r = [] {
    std::map<std::string, Entry> m;
    const Term x = V("x"), y = V("y"), z = V("z"), u = V("u"), v = V("v"), w = V("w");
    m["integral"] = {0, [=](auto&) { return plain({le(x, one())}); }};
    m["commutative"] = {0, [=](auto&) { return plain({eq(x * y, y * x)}); }};
    m["idempotent"] = {0, [=](auto&) { return plain({eq(x * x, x)}); }};
    m["divisible"] = {0, [=](auto&) {
                        return plain({eq(rdiv(x, y) * y, meet(x, y)), eq(meet(x, y), y * ldiv(y, x))});
                      }};
    m["cancellative"] = {0, [=](auto&) { return plain({eq(rdiv(x * y, y), x), eq(ldiv(x, x * y), y)}); }};
    m["prelinear"] = {0, [=](auto&) { return plain({ge(join(rdiv(x, y), rdiv(y, x)), one())}); }};
    m["representable"] = {0, [=](auto&) {
                            const Term xy = join(x, y);
                            return plain({ge(join(ldiv(u, ldiv(xy, x) * u), rdiv(v * ldiv(xy, y), v)), one())});
                          }};
    m["one-distributive"] = {0, [=](auto&) {
                               return plain({le(meet(join(x, y), one()), join(meet(x, one()), meet(y, one())))});
                             }};
    m["wajsberg"] = {0, [=](auto&) {
                       return plain({eq(ldiv(rdiv(y, x), y), ldiv(rdiv(x, y), x)),
                                     eq(rdiv(y, ldiv(x, y)), rdiv(x, ldiv(y, x)))});
                     }};
    m["product-hoop"] = {0, [=](auto&) { return plain({eq(join(ldiv(y, z), ldiv(ldiv(y, x * y), x)), one())}); }};
    m["involutive"] = {0, [=](auto&) { return plain({eq(ldiv(ldiv(x, Term::zero()), Term::zero()), x)}); }};
    m["G"] = {0, [=](auto&) {
                const Term lw = meet(ldiv(w, x * w), one());
                const Term rz = meet(rdiv(z * y, z), one());
                return Statement{{eq(join(x, y), one())}, {eq(join(lw, rz), one())}};
              }};
    m["normal"] = {1, [=](const std::vector<int>& p) {
                     if (p[0] < 1) throw std::invalid_argument("normal: exponent must be >= 1");
                     const Term c = power(meet(x, one()), p[0]);
                     return plain({le(c * y, y * x), le(y * c, x * y)});
                   }};
    m["lambda"] = {1, [](const std::vector<int>& p) {
                     const int n = p[0];
                     if (n < 1) throw std::invalid_argument("lambda: n must be >= 1");
                     Term lhs = rdiv(Vi(0), rdiv(Vi(0), ldiv(Vi(1), Vi(0))));
                     for (int i = 1; i < n; ++i) lhs = meet(lhs, rdiv(Vi(i), rdiv(Vi(i), ldiv(Vi(i + 1), Vi(i)))));
                     Term rhs = Vi(0);
                     for (int i = 1; i <= n; ++i) rhs = join(rhs, Vi(i));
                     return plain({le(lhs, rhs)});
                   }};
    m["finite-chain"] = {1, [](const std::vector<int>& p) {
                           const int n = p[0];
                           if (n < 1) throw std::invalid_argument("finite-chain: n must be >= 1");
                           Term t = rdiv(Vi(1), Vi(0));
                           for (int i = 1; i < n; ++i) t = join(t, rdiv(Vi(i + 1), Vi(i)));
                           return plain({ge(t, one())});
                         }};
    return m;
  }();
  return r;
}

}  // namespace

Statement builtin(const std::string& name, const std::vector<int>& params) {
  const auto& r = registry();
  auto it = r.find(name);
  if (it == r.end()) throw std::invalid_argument("unknown builtin '" + name + "'");
  if (static_cast<int>(params.size()) != it->second.arity)
    throw std::invalid_argument("builtin '" + name + "' takes " + std::to_string(it->second.arity) +
                                " parameter(s), got " + std::to_string(params.size()));
  return it->second.make(params);
}

std::vector<std::pair<std::string, int>> builtin_names() {
  std::vector<std::pair<std::string, int>> out;
  for (const auto& [k, e] : registry()) out.emplace_back(k, e.arity);
  return out;
}

Term unit_form(const Statement& s) {
  if (s.is_quasi()) throw std::invalid_argument("quasi-equations have no single-term form");
  std::optional<Term> acc;
  for (const auto& a : s.conclusions) {
    Term t = [&] {
      switch (a.rel) {
        case Rel::Le: return ldiv(a.lhs, a.rhs);
        case Rel::Ge: return ldiv(a.rhs, a.lhs);
        case Rel::Eq: break;
      }
      return meet(ldiv(a.lhs, a.rhs), ldiv(a.rhs, a.lhs));
    }();
    acc = acc ? meet(*acc, t) : t;
  }
  return *acc;
}

}  // namespace reslat
