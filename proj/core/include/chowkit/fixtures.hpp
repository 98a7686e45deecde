#pragma once

// Named example posets and matroids.

#include <chowkit/matroid.hpp>
#include <chowkit/poset.hpp>

#include <string>
#include <vector>

namespace chowkit {

// figure1, figure3, figure4, b2..b5, c2..c4, u34, k4.
std::vector<std::string> poset_fixture_names();
// Throws InputError for unknown names.
Poset poset_fixture(const std::string& name);

// k4, u34.
std::vector<std::string> matroid_fixture_names();
Matroid matroid_fixture(const std::string& name);

}  // namespace chowkit
