#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ydhopf/morphism.hpp"

namespace ydhopf {

struct Assertion {
  std::string name;
  std::string anchor;  // the identity being checked, in formula form
  bool pass = false;
  std::optional<Witness> witness;
  std::string note;
};

// Ordered list of named checks; a failing check does not stop later ones.
class Report {
 public:
  void add(Assertion a) { items_.push_back(std::move(a)); }
  // Records exact equality of two morphisms (with a witness on failure).
  bool check_equal(const std::string& name, const std::string& anchor, const LinearMorphism& lhs,
                   const LinearMorphism& rhs);
  bool check(const std::string& name, const std::string& anchor, bool pass, std::string note = {});
  // Runs fn; an ydhopf::Error thrown inside is recorded as a failure of `name`.
  bool guarded(const std::string& name, const std::string& anchor, const std::function<bool()>& fn);
  // check_equal on two lazily built sides; a construction error is a failure.
  bool guarded_equal(const std::string& name, const std::string& anchor,
                     const std::function<std::pair<LinearMorphism, LinearMorphism>()>& sides);
  void append(const Report& other, const std::string& prefix = {});

  const std::vector<Assertion>& items() const { return items_; }
  const Assertion* find(const std::string& name) const;
  bool verdict() const;
  std::string to_text() const;

 private:
  std::vector<Assertion> items_;
};

}  // namespace ydhopf
