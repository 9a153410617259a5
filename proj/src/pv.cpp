#include "dihom/pv.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <set>

#include "dihom/errors.hpp"

namespace dihom::pv {

namespace {

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  std::optional<char> peek() {
    skip_space();
    if (pos_ >= text_.size()) return std::nullopt;
    return text_[pos_];
  }

  void expect(char c, const char* what) {
    auto got = peek();
    if (!got || *got != c)
      throw ParseError(std::string("expected ") + what + (got ? std::string(", found '") + *got + "'" : ", found end of input"),
                       line_, col_);
    advance();
  }

  std::string ident() {
    skip_space();
    std::size_t start = pos_;
    if (pos_ >= text_.size() || !(std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      throw ParseError("expected a semaphore name", line_, col_);
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      advance();
    return std::string(text_.substr(start, pos_ - start));
  }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  int line() const { return line_; }
  int col() const { return col_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

std::vector<Action> parse_process(Lexer& lx) {
  std::vector<Action> out;
  while (true) {
    auto c = lx.peek();
    if (!c || *c == '|') break;
    if (*c != 'P' && *c != 'V') throw ParseError(std::string("expected P or V, found '") + *c + "'", lx.line(), lx.col());
    Op op = *c == 'P' ? Op::P : Op::V;
    lx.advance();
    lx.expect('(', "'('");
    auto name = lx.ident();
    lx.expect(')', "')'");
    out.push_back({op, std::move(name)});
  }
  if (out.empty()) throw ParseError("process has no actions", lx.line(), lx.col());
  return out;
}

void check_bracketing(const std::vector<Action>& proc, int number) {
  std::set<std::string> held;
  for (std::size_t k = 0; k < proc.size(); ++k) {
    const auto& a = proc[k];
    if (a.op == Op::P) {
      if (!held.insert(a.semaphore).second)
        throw BracketingError("process " + std::to_string(number) + " acquires '" + a.semaphore +
                              "' twice at action " + std::to_string(k + 1));
    } else if (held.erase(a.semaphore) == 0) {
      throw BracketingError("process " + std::to_string(number) + " releases '" + a.semaphore +
                            "' without holding it at action " + std::to_string(k + 1));
    }
  }
  if (!held.empty())
    throw BracketingError("process " + std::to_string(number) + " never releases '" + *held.begin() + "'");
}

}  // namespace

PVProgram parse_pv(std::string_view text) {
  Lexer lx(text);
  PVProgram p;
  p.processes[0] = parse_process(lx);
  lx.expect('|', "'|' between the two processes");
  p.processes[1] = parse_process(lx);
  if (auto c = lx.peek()) {
    if (*c == '|') throw UnsupportedError("programs with more than two processes are not supported");
    throw ParseError(std::string("unexpected '") + *c + "'", lx.line(), lx.col());
  }
  check_bracketing(p.processes[0], 1);
  check_bracketing(p.processes[1], 2);
  std::set<std::string> sems;
  for (const auto& proc : p.processes)
    for (const auto& a : proc) sems.insert(a.semaphore);
  p.semaphores.assign(sems.begin(), sems.end());
  return p;
}

std::string print_pv(const PVProgram& p) {
  std::string out;
  for (int k = 0; k < 2; ++k) {
    if (k) out += " | ";
    for (const auto& a : p.processes[k]) out += (a.op == Op::P ? "P(" : "V(") + a.semaphore + ")";
  }
  return out;
}

std::vector<HoldInterval> hold_intervals(const std::vector<Action>& process) {
  std::map<std::string, std::size_t> open;
  std::vector<HoldInterval> out;
  for (std::size_t k = 0; k < process.size(); ++k) {
    const auto& a = process[k];
    if (a.op == Op::P) {
      open[a.semaphore] = k;
    } else if (auto it = open.find(a.semaphore); it != open.end()) {
      out.push_back({a.semaphore, static_cast<double>(it->second + 1), static_cast<double>(k + 1)});
      open.erase(it);
    }
  }
  return out;
}

grid::GridComplex program_to_grid(const PVProgram& p) {
  const auto len1 = static_cast<double>(p.processes[0].size());
  const auto len2 = static_cast<double>(p.processes[1].size());
  auto h1 = hold_intervals(p.processes[0]);
  auto h2 = hold_intervals(p.processes[1]);
  std::vector<grid::Box> forbidden;
  for (const auto& s : p.semaphores)
    for (const auto& a : h1)
      for (const auto& b : h2)
        if (a.semaphore == s && b.semaphore == s) {
          auto box = grid::Box::open({a.start, b.start}, {a.end, b.end});
          if (std::find(forbidden.begin(), forbidden.end(), box) == forbidden.end()) forbidden.push_back(box);
        }
  return grid::GridComplex::build(grid::Box::closed({0, 0}, {len1, len2}), std::move(forbidden));
}

}  // namespace dihom::pv
