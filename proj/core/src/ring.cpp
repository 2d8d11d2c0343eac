#include "fibercone/ring.hpp"

#include <cctype>
#include <unordered_set>

#include "fibercone/errors.hpp"

namespace fibercone {

namespace {

bool valid_name(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

}  // namespace

Ring::Ring(std::vector<std::string> vars) : vars_(std::move(vars)) {
  if (vars_.empty()) throw InvalidInput("a ring needs at least one variable");
  std::unordered_set<std::string> seen;
  for (const auto& v : vars_) {
    if (!valid_name(v)) throw InvalidInput("bad variable name '" + v + "'");
    if (!seen.insert(v).second) throw InvalidInput("duplicate variable '" + v + "'");
  }
}

std::optional<int> Ring::index_of(std::string_view name) const {
  for (int i = 0; i < dim(); ++i) {
    if (vars_[i] == name) return i;
  }
  return std::nullopt;
}

}  // namespace fibercone
