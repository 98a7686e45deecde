#include <chowkit/report.hpp>

#include <algorithm>

namespace chowkit {

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

const Check* VerificationReport::first_failure() const {
  for (const auto& c : checks)
    if (!c.passed) return &c;
  return nullptr;
}

void VerificationReport::add(std::string name, bool passed, std::string detail) {
  checks.push_back({std::move(name), passed, std::move(detail)});
}

void VerificationReport::expect_equal(std::string name, const Polynomial& lhs, const Polynomial& rhs) {
  if (lhs == rhs) {
    add(std::move(name), true);
  } else {
    add(std::move(name), false, "lhs = " + lhs.to_string() + ", rhs = " + rhs.to_string());
  }
}

void VerificationReport::expect_equal(std::string name, const IncidenceFunction& lhs, const IncidenceFunction& rhs) {
  auto m = first_mismatch(lhs, rhs);
  if (!m) {
    add(std::move(name), true);
    return;
  }
  const Poset& p = lhs.poset();
  add(std::move(name), false,
      "interval [" + p.label(m->s) + ", " + p.label(m->t) + "]: lhs = " + m->lhs.to_string() +
          ", rhs = " + m->rhs.to_string());
}

void VerificationReport::merge(const VerificationReport& other, const std::string& prefix) {
  for (const auto& c : other.checks) checks.push_back({prefix + c.name, c.passed, c.detail});
}

}  // namespace chowkit
