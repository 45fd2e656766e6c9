#include "setsharing/parser.hpp"

#include <cctype>

namespace setsharing {

SyntaxError::SyntaxError(int line_, int column_, const std::string& message)
    : std::runtime_error("line " + std::to_string(line_) + ", column " +
                         std::to_string(column_) + ": " + message),
      line(line_),
      column(column_) {}

Variable NameTable::intern(const std::string& name) {
  auto it = ids_.find(name);
  if (it != ids_.end()) return it->second;
  Variable v(static_cast<std::uint32_t>(names_.size()));
  names_.push_back(name);
  ids_.emplace(name, v);
  return v;
}

std::optional<Variable> NameTable::find(const std::string& name) const {
  auto it = ids_.find(name);
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

const std::string& NameTable::name(Variable v) const {
  return names_.at(v.id());
}

VarSet ProblemFile::universe() const {
  std::size_t n = universe_declared ? universe_size : names.size();
  VarSet out;
  for (std::size_t i = 0; i < n; ++i) {
    out.insert(Variable(static_cast<std::uint32_t>(i)));
  }
  return out;
}

EquationSet ProblemFile::equations() const {
  EquationSet out;
  out.reserve(items.size());
  for (const ProblemItem& item : items) out.push_back(Equation{item.lhs, item.rhs});
  return out;
}

Substitution ProblemFile::substitution() const {
  Substitution out;
  for (const ProblemItem& item : items) {
    if (!item.lhs.is_var()) {
      throw SyntaxError(item.line, 1, "expected a binding with a variable on the left");
    }
    Variable x = item.lhs.as_var();
    if (item.rhs.is_var() && item.rhs.as_var() == x) {
      throw SyntaxError(item.line, 1, "a variable cannot be bound to itself");
    }
    if (out.binds(x)) {
      throw SyntaxError(item.line, 1, "variable is bound twice");
    }
    out.bind(x, item.rhs);
  }
  return out;
}

namespace {

class LineParser {
 public:
  LineParser(const std::string& text, int line_no, ProblemFile& file,
             const boost::container::flat_set<std::string>& universe_names)
      : text_(text), line_(line_no), file_(file), universe_names_(universe_names) {}

  ProblemItem parse_item() {
    Term lhs = term();
    skip_spaces();
    bool is_binding = false;
    if (peek() == '=') {
      ++pos_;
    } else if (peek() == '-' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
      pos_ += 2;
      is_binding = true;
      if (!lhs.is_var()) fail("the left side of a binding must be a variable");
    } else {
      fail("expected '=' or '->'");
    }
    Term rhs = term();
    if (!at_end()) fail("unexpected trailing input");
    return ProblemItem{is_binding, std::move(lhs), std::move(rhs), line_};
  }

 private:
  void skip_spaces() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool at_end() {
    skip_spaces();
    return pos_ >= text_.size();
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw SyntaxError(line_, static_cast<int>(pos_) + 1, message);
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void expect(char c) {
    skip_spaces();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string identifier() {
    skip_spaces();
    std::size_t start = pos_;
    auto is_ident = [](char c) {
      return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    };
    if (pos_ >= text_.size() || !is_ident(text_[pos_]) ||
        std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      fail("expected an identifier");
    }
    while (pos_ < text_.size() && is_ident(text_[pos_])) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  bool is_variable_name(const std::string& name) const {
    return std::isupper(static_cast<unsigned char>(name[0])) ||
           universe_names_.count(name) != 0;
  }

  Term term() {
    std::string name = identifier();
    skip_spaces();
    if (is_variable_name(name)) {
      if (peek() == '(') fail("a variable cannot take arguments");
      return Term::var(file_.names.intern(name));
    }
    if (peek() != '(') return Term::make(name);
    ++pos_;  // '('
    std::vector<Term> args;
    args.push_back(term());
    skip_spaces();
    while (peek() == ',') {
      ++pos_;
      args.push_back(term());
      skip_spaces();
    }
    expect(')');
    return Term::make(name, std::move(args));
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  int line_;
  ProblemFile& file_;
  const boost::container::flat_set<std::string>& universe_names_;
};

std::string strip(std::string s) {
  std::size_t begin = 0;
  while (begin < s.size() && std::isspace(static_cast<unsigned char>(s[begin]))) ++begin;
  std::size_t end = s.size();
  while (end > begin && std::isspace(static_cast<unsigned char>(s[end - 1]))) --end;
  return s.substr(begin, end - begin);
}

std::vector<std::string> split_names(const std::string& list, int line) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos <= list.size()) {
    std::size_t comma = list.find(',', pos);
    std::string entry = strip(list.substr(
        pos, comma == std::string::npos ? std::string::npos : comma - pos));
    if (entry.empty()) {
      throw SyntaxError(line, 1, "empty entry in universe list");
    }
    out.push_back(entry);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace

ProblemFile parse_problem(std::string_view text,
                          const std::vector<std::string>& universe_override) {
  ProblemFile file;
  boost::container::flat_set<std::string> universe_names;

  auto declare_universe = [&](const std::vector<std::string>& names) {
    file.universe_declared = true;
    for (const std::string& n : names) {
      universe_names.insert(n);
      file.names.intern(n);
    }
    file.universe_size = file.names.size();
  };

  if (!universe_override.empty()) declare_universe(universe_override);

  int line_no = 0;
  bool body_started = false;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string line(text.substr(
        pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos));
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;

    std::size_t comment = line.find('%');
    if (comment != std::string::npos) line = line.substr(0, comment);
    std::string stripped = strip(line);
    if (stripped.empty()) continue;

    if (stripped.rfind("mode:", 0) == 0) {
      if (body_started) throw SyntaxError(line_no, 1, "header after the first item");
      std::string value = strip(stripped.substr(5));
      if (value == "herbrand") {
        file.mode = EqualityMode::Herbrand;
      } else if (value == "rational") {
        file.mode = EqualityMode::RationalTrees;
      } else {
        throw SyntaxError(line_no, 1, "mode must be 'herbrand' or 'rational'");
      }
      continue;
    }
    if (stripped.rfind("universe:", 0) == 0) {
      if (body_started) throw SyntaxError(line_no, 1, "header after the first item");
      if (universe_override.empty()) {
        declare_universe(split_names(strip(stripped.substr(9)), line_no));
      }
      continue;
    }

    body_started = true;
    LineParser parser(line, line_no, file, universe_names);
    file.items.push_back(parser.parse_item());
  }
  return file;
}

}  // namespace setsharing
