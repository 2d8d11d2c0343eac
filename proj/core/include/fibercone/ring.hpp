#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fibercone {

// A polynomial ring over the rationals with the standard grading: every
// variable has degree 1. The coefficient field is fixed, so a ring is just
// its ordered variable list.
class Ring {
 public:
  explicit Ring(std::vector<std::string> vars);

  int dim() const { return static_cast<int>(vars_.size()); }
  const std::vector<std::string>& vars() const { return vars_; }
  const std::string& var_name(int i) const { return vars_[i]; }
  std::optional<int> index_of(std::string_view name) const;

  friend bool operator==(const Ring& a, const Ring& b) = default;

 private:
  std::vector<std::string> vars_;
};

}  // namespace fibercone
