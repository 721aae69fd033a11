#include "strew/format.hpp"

#include <sstream>
#include <vector>

namespace strew {

namespace {

std::string trim(const std::string& s) {
  std::size_t first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos)
    return "";
  std::size_t last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

[[noreturn]] void fail(std::size_t line, const std::string& message) {
  throw InputError("line " + std::to_string(line) + ": " + message);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> tokens;
  std::istringstream stream(s);
  std::string token;
  while (stream >> token)
    tokens.push_back(token);
  return tokens;
}

} // namespace

SystemFile parse_system_file(const std::string& text) {
  std::optional<Alphabet> alphabet;
  std::vector<Rule> rules;
  std::set<std::string> assumptions;
  bool in_rules = false;

  std::istringstream stream(text);
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(stream, raw)) {
    ++line_no;
    std::string line = trim(raw);
    if (line.empty() || line[0] == '#')
      continue;

    if (line.rfind("alphabet:", 0) == 0) {
      if (alphabet)
        fail(line_no, "duplicate alphabet section");
      std::string symbols;
      for (const std::string& token : split_ws(line.substr(9))) {
        if (token.size() != 1)
          fail(line_no, "alphabet symbols must be single characters, got '" + token + "'");
        symbols += token;
      }
      try {
        alphabet.emplace(symbols);
      } catch (const InputError& e) {
        fail(line_no, e.what());
      }
      continue;
    }

    if (line.rfind("assume:", 0) == 0) {
      for (const std::string& token : split_ws(line.substr(7))) {
        if (token != kAssumeTerminating && token != kAssumeConfluent &&
            token != kAssumeForwardClosed)
          fail(line_no, "unknown assumption '" + token + "'");
        assumptions.insert(token);
      }
      continue;
    }

    if (line == "rules:") {
      if (!alphabet)
        fail(line_no, "rules section before alphabet");
      if (in_rules)
        fail(line_no, "duplicate rules section");
      in_rules = true;
      continue;
    }

    if (!in_rules)
      fail(line_no, "expected 'alphabet:', 'rules:' or 'assume:', got '" + line + "'");

    std::size_t arrow = line.find("->");
    if (arrow == std::string::npos)
      fail(line_no, "rule line must contain '->'");
    std::string lhs = trim(line.substr(0, arrow));
    std::string rhs = trim(line.substr(arrow + 2));
    if (lhs == "eps" || lhs.empty())
      fail(line_no, "left-hand side must be a non-empty word");
    if (rhs.empty())
      fail(line_no, "right-hand side missing; use 'eps' for the empty word");
    if (rhs == "eps")
      rhs.clear();
    for (char c : lhs) {
      if (!alphabet->contains(c))
        fail(line_no, std::string("symbol '") + c + "' not declared in the alphabet");
    }
    for (char c : rhs) {
      if (!alphabet->contains(c))
        fail(line_no, std::string("symbol '") + c + "' not declared in the alphabet");
    }
    for (std::size_t i = 0; i < rules.size(); ++i) {
      if (rules[i].lhs == lhs && rules[i].rhs == rhs)
        fail(line_no, "duplicate rule");
    }
    rules.push_back({std::move(lhs), std::move(rhs)});
  }

  if (!alphabet)
    fail(line_no, "missing alphabet section");
  if (!in_rules)
    fail(line_no, "missing rules section");
  return SystemFile{RewriteSystem(*alphabet, std::move(rules), std::move(assumptions))};
}

std::string serialize_system(const RewriteSystem& system) {
  std::string out = "alphabet:";
  for (char c : system.alphabet().symbols()) {
    out += ' ';
    out += c;
  }
  out += "\nrules:\n";
  for (const Rule& rule : system.rules()) {
    out += rule.lhs;
    out += " -> ";
    out += rule.rhs.empty() ? "eps" : rule.rhs;
    out += '\n';
  }
  if (!system.assumptions().empty()) {
    out += "assume:";
    for (const std::string& fact : system.assumptions()) {
      out += ' ';
      out += fact;
    }
    out += '\n';
  }
  return out;
}

} // namespace strew
