#include <chowkit/fixtures.hpp>

#include <map>
#include <utility>

namespace chowkit {

namespace {

using Adjacency = std::vector<std::pair<std::string, std::vector<std::string>>>;

Poset from_adjacency(const Adjacency& adj) {
  std::vector<std::string> labels;
  std::map<std::string, int> index;
  auto id = [&](const std::string& l) {
    auto [it, inserted] = index.emplace(l, static_cast<int>(labels.size()));
    if (inserted) labels.push_back(l);
    return it->second;
  };
  std::vector<Cover> covers;
  for (const auto& [lower, uppers] : adj) {
    const int s = id(lower);
    for (const auto& u : uppers) covers.emplace_back(s, id(u));
  }
  const int n = static_cast<int>(labels.size());
  return Poset::from_covers(n, covers, std::nullopt, std::move(labels));
}

// Rank 3, not Cohen-Macaulay.
Poset figure1() {
  return from_adjacency({
      {"s", {"a1", "a2", "a3", "a4", "a5"}},
      {"a1", {"b1", "b2"}},
      {"a2", {"b2", "b3"}},
      {"a3", {"b3", "b4"}},
      {"a4", {"b4"}},
      {"a5", {"b5"}},
      {"b1", {"t"}},
      {"b2", {"t"}},
      {"b3", {"t"}},
      {"b4", {"t"}},
      {"b5", {"t"}},
  });
}

// Two rank 4 chains glued at their ends.
Poset figure3() {
  return from_adjacency({
      {"s", {"a1", "a2"}},
      {"a1", {"b1"}},
      {"a2", {"b2"}},
      {"b1", {"c1"}},
      {"b2", {"c2"}},
      {"c1", {"t"}},
      {"c2", {"t"}},
  });
}

Poset figure4() {
  return from_adjacency({
      {"v0", {"v1", "v2", "v3"}},
      {"v1", {"v4", "v5", "v7"}},
      {"v2", {"v4", "v5", "v7"}},
      {"v3", {"v5", "v6", "v7"}},
      {"v4", {"v8", "v9", "v10", "v11", "v12"}},
      {"v5", {"v8", "v9", "v11", "v12"}},
      {"v6", {"v9", "v10", "v11"}},
      {"v7", {"v9", "v10", "v11", "v12"}},
      {"v8", {"v13", "v14", "v15"}},
      {"v9", {"v13", "v14", "v15", "v16"}},
      {"v10", {"v13", "v14", "v16"}},
      {"v11", {"v13", "v14"}},
      {"v12", {"v13", "v14", "v15"}},
      {"v13", {"v18", "v19"}},
      {"v14", {"v19"}},
      {"v15", {"v18", "v19"}},
      {"v16", {"v17", "v19"}},
      {"v17", {"v20"}},
      {"v18", {"v20"}},
      {"v19", {"v20"}},
  });
}

}  // namespace

std::vector<std::string> poset_fixture_names() {
  return {"figure1", "figure3", "figure4", "b2", "b3", "b4", "b5", "c2", "c3", "c4", "u34", "k4"};
}

Poset poset_fixture(const std::string& name) {
  if (name == "figure1") return figure1();
  if (name == "figure3") return figure3();
  if (name == "figure4") return figure4();
  if (name.size() == 2 && name[1] >= '0' && name[1] <= '9') {
    const int k = name[1] - '0';
    if (name[0] == 'b' && k >= 2 && k <= 5) return boolean_lattice(k);
    if (name[0] == 'c' && k >= 2 && k <= 4) return chain(k);
  }
  if (name == "u34" || name == "k4") return matroid_fixture(name).flats().poset;
  throw InputError("unknown poset fixture '" + name + "'");
}

std::vector<std::string> matroid_fixture_names() { return {"k4", "u34"}; }

Matroid matroid_fixture(const std::string& name) {
  if (name == "k4") return Matroid::graphic_k4();
  if (name == "u34") return Matroid::uniform(3, 4);
  throw InputError("unknown matroid fixture '" + name + "'");
}

}  // namespace chowkit
