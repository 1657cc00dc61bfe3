#pragma once

#include <cctype>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "annibounds/errors.hpp"
#include "annibounds/field.hpp"
#include "annibounds/monomial.hpp"

namespace annibounds {

/// The ambient polynomial ring: coefficient field, variable names, and the
/// monomial order every canonical term list is sorted by.
class Ring {
public:
  Ring(Field field, std::vector<std::string> variables,
       MonomialOrder order = MonomialOrder::grevlex)
      : field_(field), variables_(std::move(variables)), order_(order) {
    if (variables_.empty()) throw InvalidArgument("a ring needs at least one variable");
    if (variables_.size() + 1 > kMaxVariables)
      throw Unsupported("at most " + std::to_string(kMaxVariables - 1) + " variables are supported");
    std::set<std::string> seen;
    for (const auto& v : variables_) {
      if (!valid_identifier(v)) throw InvalidArgument("invalid variable name '" + v + "'");
      if (!seen.insert(v).second) throw InvalidArgument("duplicate variable name '" + v + "'");
    }
  }

  const Field& field() const noexcept { return field_; }
  const std::vector<std::string>& variables() const noexcept { return variables_; }
  std::size_t nvars() const noexcept { return variables_.size(); }
  MonomialOrder order() const noexcept { return order_; }

  TermOrder term_order(std::vector<int> weights = {}) const {
    return TermOrder(order_, variables_.size(), std::move(weights));
  }

  /// Index of a variable name, or -1.
  int variable_index(const std::string& name) const {
    for (std::size_t i = 0; i < variables_.size(); ++i)
      if (variables_[i] == name) return static_cast<int>(i);
    return -1;
  }

  std::string description() const {
    std::string s = field_.name() + "[";
    for (std::size_t i = 0; i < variables_.size(); ++i) {
      if (i) s += ",";
      s += variables_[i];
    }
    return s + "] order " + to_string(order_);
  }

  friend bool operator==(const Ring& a, const Ring& b) {
    return a.field_ == b.field_ && a.variables_ == b.variables_ && a.order_ == b.order_;
  }

  static bool valid_identifier(const std::string& s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    for (char c : s)
      if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'')) return false;
    return true;
  }

private:
  Field field_;
  std::vector<std::string> variables_;
  MonomialOrder order_;
};

using RingPtr = std::shared_ptr<const Ring>;

inline RingPtr make_ring(Field field, std::vector<std::string> variables,
                         MonomialOrder order = MonomialOrder::grevlex) {
  return std::make_shared<const Ring>(field, std::move(variables), order);
}

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
  return a == b || (a && b && *a == *b);
}

inline void require_same_ring(const RingPtr& a, const RingPtr& b) {
  if (!same_ring(a, b)) throw RingMismatch("operands belong to different rings");
}

} // namespace annibounds
