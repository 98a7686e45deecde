#pragma once

// Posets and matroids every property test runs over.

#include <chowkit/fixtures.hpp>

#include <string>
#include <utility>
#include <vector>

namespace corpus {

struct NamedPoset {
  std::string name;
  chowkit::Poset poset;
};

struct NamedMatroid {
  std::string name;
  chowkit::Matroid matroid;
};

inline std::vector<NamedMatroid> matroids(int max_n = 6) {
  std::vector<NamedMatroid> out;
  for (int n = 1; n <= max_n; ++n) {
    for (int r = 1; r <= n; ++r) {
      out.push_back({"U(" + std::to_string(r) + "," + std::to_string(n) + ")", chowkit::Matroid::uniform(r, n)});
    }
  }
  out.push_back({"K4", chowkit::Matroid::graphic_k4()});
  return out;
}

inline std::vector<NamedPoset> posets(int max_n = 6) {
  std::vector<NamedPoset> out;
  for (const auto& name : chowkit::poset_fixture_names()) out.push_back({name, chowkit::poset_fixture(name)});
  for (auto& m : matroids(max_n)) out.push_back({"L(" + m.name + ")", m.matroid.flats().poset});
  return out;
}

// Every corpus member except the two non-Cohen-Macaulay figures.
inline bool cohen_macaulay(const std::string& name) {
  return name != "figure1" && name != "figure3";
}

}  // namespace corpus
