#include "cyltqft/token.hpp"

#include <cctype>

#include "cyltqft/error.hpp"

namespace cyltqft::token {

namespace {

bool reserved(char c) {
  switch (c) {
    case '(':
    case ')':
    case '[':
    case ']':
    case '|':
    case ',':
    case ':':
      return true;
    default:
      return static_cast<unsigned char>(c) < 0x20;
  }
}

// Recursive-descent recognizer. Advances `pos` past one token.
bool parse(std::string_view s, std::size_t& pos, bool allow_chain);

bool parse_tuple(std::string_view s, std::size_t& pos) {
  ++pos;  // '('
  if (pos < s.size() && s[pos] == ')') {
    ++pos;
    return true;
  }
  while (true) {
    if (!parse(s, pos, true)) return false;
    if (pos >= s.size()) return false;
    if (s[pos] == ')') {
      ++pos;
      return true;
    }
    if (s[pos] != ',') return false;
    ++pos;
  }
}

bool parse_chain(std::string_view s, std::size_t& pos) {
  ++pos;  // '['
  std::size_t parts = 0;
  while (true) {
    if (!parse(s, pos, false)) return false;
    ++parts;
    if (pos >= s.size()) return false;
    if (s[pos] == ']') {
      ++pos;
      return parts >= 2;
    }
    if (s[pos] != '|') return false;
    ++pos;
  }
}

bool parse(std::string_view s, std::size_t& pos, bool allow_chain) {
  if (pos >= s.size()) return false;
  if (s[pos] == '(') return parse_tuple(s, pos);
  if (s[pos] == '[') return allow_chain && parse_chain(s, pos);
  std::size_t start = pos;
  while (pos < s.size() && !reserved(s[pos])) ++pos;
  if (pos == start) return false;
  if (pos < s.size() && s[pos] == ':') {
    for (std::size_t i = start; i < pos; ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    ++pos;
    return parse(s, pos, true);
  }
  return true;
}

// Splits `inner` (the text between outer delimiters) at top-level `sep`.
std::vector<std::string> split_top(std::string_view inner, char sep) {
  std::vector<std::string> out;
  if (inner.empty()) return out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < inner.size(); ++i) {
    char c = inner[i];
    if (c == '(' || c == '[') {
      ++depth;
    } else if (c == ')' || c == ']') {
      --depth;
    } else if (c == sep && depth == 0) {
      out.emplace_back(inner.substr(start, i - start));
      start = i + 1;
    }
  }
  out.emplace_back(inner.substr(start));
  return out;
}

}  // namespace

bool is_atom(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (reserved(c)) return false;
  }
  return true;
}

bool is_valid(std::string_view s) {
  std::size_t pos = 0;
  return parse(s, pos, true) && pos == s.size();
}

std::string tuple(std::span<const std::string> parts) {
  std::string out = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ',';
    out += parts[i];
  }
  out += ')';
  return out;
}

std::string pair(std::string_view a, std::string_view b) {
  std::string out;
  out.reserve(a.size() + b.size() + 3);
  out += '(';
  out += a;
  out += ',';
  out += b;
  out += ')';
  return out;
}

std::string tagged(std::size_t tag, std::string_view inner) {
  std::string out = std::to_string(tag);
  out += ':';
  out += inner;
  return out;
}

std::pair<std::size_t, std::string> split_tag(std::string_view s) {
  std::size_t i = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  if (i == 0 || i >= s.size() || s[i] != ':') {
    throw InputError("not a tagged token: " + std::string(s));
  }
  return {std::stoul(std::string(s.substr(0, i))), std::string(s.substr(i + 1))};
}

std::string chain(std::string_view a, std::string_view b) {
  auto strip = [](std::string_view t) {
    return (t.size() >= 2 && t.front() == '[') ? t.substr(1, t.size() - 2) : t;
  };
  std::string out;
  out.reserve(a.size() + b.size() + 3);
  out += '[';
  out += strip(a);
  out += '|';
  out += strip(b);
  out += ']';
  return out;
}

std::vector<std::string> chain_parts(std::string_view s) {
  if (s.size() >= 2 && s.front() == '[') {
    return split_top(s.substr(1, s.size() - 2), '|');
  }
  return {std::string(s)};
}

std::vector<std::string> tuple_parts(std::string_view s) {
  if (s.size() < 2 || s.front() != '(' || s.back() != ')') {
    throw InputError("not a tuple token: " + std::string(s));
  }
  return split_top(s.substr(1, s.size() - 2), ',');
}

}  // namespace cyltqft::token
