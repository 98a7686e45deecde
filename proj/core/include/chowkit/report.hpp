#pragma once

#include <chowkit/incidence.hpp>

#include <string>
#include <vector>

namespace chowkit {

struct Check {
  std::string name;
  bool passed = true;
  // For failures: the first failing interval and both sides.
  std::string detail;
};

struct VerificationReport {
  std::vector<Check> checks;

  bool passed() const;
  const Check* first_failure() const;
  void add(std::string name, bool passed, std::string detail = {});
  // Records a polynomial equality.
  void expect_equal(std::string name, const Polynomial& lhs, const Polynomial& rhs);
  // Records an interval-wise equality of incidence functions.
  void expect_equal(std::string name, const IncidenceFunction& lhs, const IncidenceFunction& rhs);
  void merge(const VerificationReport& other, const std::string& prefix = {});
};

}  // namespace chowkit
