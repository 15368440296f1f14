#include "ydhopf/report.hpp"

#include <sstream>

#include "ydhopf/error.hpp"

namespace ydhopf {

bool Report::check_equal(const std::string& name, const std::string& anchor, const LinearMorphism& lhs,
                         const LinearMorphism& rhs) {
  Assertion a{name, anchor, false, std::nullopt, {}};
  if (lhs.dom() != rhs.dom() || lhs.cod() != rhs.cod()) {
    a.note = "sides typed differently: " + lhs.dom().str() + " -> " + lhs.cod().str() + " vs " +
             rhs.dom().str() + " -> " + rhs.cod().str();
  } else {
    a.witness = first_difference(lhs, rhs);
    a.pass = !a.witness;
  }
  items_.push_back(std::move(a));
  return items_.back().pass;
}

bool Report::check(const std::string& name, const std::string& anchor, bool pass, std::string note) {
  items_.push_back({name, anchor, pass, std::nullopt, std::move(note)});
  return pass;
}

bool Report::guarded(const std::string& name, const std::string& anchor, const std::function<bool()>& fn) {
  try {
    return check(name, anchor, fn());
  } catch (const Error& e) {
    return check(name, anchor, false, e.what());
  }
}

bool Report::guarded_equal(const std::string& name, const std::string& anchor,
                           const std::function<std::pair<LinearMorphism, LinearMorphism>()>& sides) {
  std::pair<LinearMorphism, LinearMorphism> lr;
  try {
    lr = sides();
  } catch (const Error& e) {
    return check(name, anchor, false, e.what());
  }
  return check_equal(name, anchor, lr.first, lr.second);
}

void Report::append(const Report& other, const std::string& prefix) {
  for (Assertion a : other.items_) {
    a.name = prefix + a.name;
    items_.push_back(std::move(a));
  }
}

const Assertion* Report::find(const std::string& name) const {
  for (const Assertion& a : items_)
    if (a.name == name) return &a;
  return nullptr;
}

bool Report::verdict() const {
  for (const Assertion& a : items_)
    if (!a.pass) return false;
  return true;
}

std::string Report::to_text() const {
  std::ostringstream os;
  for (const Assertion& a : items_) {
    os << (a.pass ? "PASS " : "FAIL ") << a.name;
    if (!a.anchor.empty()) os << "  [" << a.anchor << "]";
    os << "\n";
    if (a.witness)
      os << "     first difference at row " << a.witness->row << ", col " << a.witness->col
         << ": lhs " << a.witness->lhs << ", rhs " << a.witness->rhs << "\n";
    if (!a.note.empty()) os << "     " << a.note << "\n";
  }
  os << "verdict: " << (verdict() ? "PASS" : "FAIL") << " (" << items_.size() << " assertions)\n";
  return os.str();
}

}  // namespace ydhopf
