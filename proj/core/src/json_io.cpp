#include <chowkit/json_io.hpp>

#include <json.hpp>

#include <algorithm>
#include <map>
#include <optional>

namespace chowkit {

namespace {

using nlohmann::json;

// Line of the first occurrence of "key" in text, 1 when absent.
int line_of(const std::string& text, const std::string& key) {
  const auto pos = text.find("\"" + key + "\"");
  if (pos == std::string::npos) return 1;
  return 1 + static_cast<int>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(pos), '\n'));
}

class Reader {
 public:
  Reader(const std::string& text, std::string source) : text_(text), source_(std::move(source)) {}

  json parse() const {
    try {
      return json::parse(text_);
    } catch (const json::parse_error& e) {
      int line = 1, column = 1;
      const std::size_t end = std::min(e.byte == 0 ? 0 : e.byte - 1, text_.size());
      for (std::size_t k = 0; k < end; ++k) {
        if (text_[k] == '\n') {
          ++line;
          column = 1;
        } else {
          ++column;
        }
      }
      std::string what = e.what();
      const auto colon = what.find(": ", what.find("parse error"));
      if (colon != std::string::npos) what = what.substr(colon + 2);
      throw InputError(source_ + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + what);
    }
  }

  [[noreturn]] void fail(const std::string& key, const std::string& message) const {
    throw InputError(source_ + ":" + std::to_string(line_of(text_, key)) + ": " + message);
  }

  const json& field(const json& obj, const std::string& key) const {
    if (!obj.is_object()) fail(key, "expected a JSON object");
    auto it = obj.find(key);
    if (it == obj.end()) fail(key, "missing key '" + key + "'");
    return *it;
  }

  int integer(const json& v, const std::string& key) const {
    if (!v.is_number_integer()) fail(key, "'" + key + "' must be an integer");
    const auto value = v.get<long long>();
    if (value < -(1LL << 30) || value > (1LL << 30)) fail(key, "'" + key + "' out of range");
    return static_cast<int>(value);
  }

  std::vector<Integer> coefficients(const json& v, const std::string& key) const {
    if (!v.is_array()) fail(key, "'" + key + "' must be an array");
    std::vector<Integer> out;
    for (const auto& c : v) {
      try {
        if (c.is_string()) {
          const auto s = c.get<std::string>();
          const bool ok = !s.empty() && std::all_of(s.begin() + (s[0] == '-' ? 1 : 0), s.end(),
                                                    [](char ch) { return ch >= '0' && ch <= '9'; }) &&
                          s != "-";
          if (!ok) fail(key, "coefficient '" + s + "' is not a decimal integer");
          out.emplace_back(s);
        } else if (c.is_number_integer()) {
          out.emplace_back(c.get<long long>());
        } else {
          fail(key, "coefficients must be decimal strings");
        }
      } catch (const InputError&) {
        throw;
      } catch (const std::exception&) {
        fail(key, "malformed coefficient");
      }
    }
    return out;
  }

  // Wraps library validation errors with the position of `key`.
  template <class F>
  auto anchored(const std::string& key, F&& f) const {
    try {
      return f();
    } catch (const InputError& e) {
      fail(key, e.what());
    }
  }

 private:
  const std::string& text_;
  std::string source_;
};

json coeffs_json(const Polynomial& p) {
  json arr = json::array();
  for (const auto& c : p.coeffs()) arr.push_back(c.str());
  return arr;
}

}  // namespace

Poset poset_from_json(const std::string& text, const std::string& source) {
  const Reader r(text, source);
  const json doc = r.parse();
  const json& elements = r.field(doc, "elements");
  if (!elements.is_array() || elements.empty()) r.fail("elements", "'elements' must be a non-empty array");
  std::vector<std::string> labels;
  std::map<std::string, int> index;
  for (const auto& e : elements) {
    std::string label;
    if (e.is_string()) {
      label = e.get<std::string>();
    } else if (e.is_number_integer()) {
      label = std::to_string(e.get<long long>());
    } else {
      r.fail("elements", "element labels must be strings or integers");
    }
    if (!index.emplace(label, static_cast<int>(labels.size())).second) {
      r.fail("elements", "duplicate element label '" + label + "'");
    }
    labels.push_back(label);
  }
  const int n = static_cast<int>(labels.size());
  auto element = [&](const json& v) {
    if (v.is_number_integer()) {
      const auto k = v.get<long long>();
      if (k < 0 || k >= n) r.fail("covers", "cover endpoint " + std::to_string(k) + " out of range");
      return static_cast<int>(k);
    }
    if (v.is_string()) {
      auto it = index.find(v.get<std::string>());
      if (it == index.end()) r.fail("covers", "unknown element '" + v.get<std::string>() + "'");
      return it->second;
    }
    r.fail("covers", "cover endpoints must be indices or labels");
  };
  const json& covers_json = r.field(doc, "covers");
  if (!covers_json.is_array()) r.fail("covers", "'covers' must be an array");
  std::vector<Cover> covers;
  for (const auto& c : covers_json) {
    if (!c.is_array() || c.size() != 2) r.fail("covers", "each cover must be a pair [lower, upper]");
    covers.emplace_back(element(c[0]), element(c[1]));
  }
  std::optional<std::vector<int>> rank;
  if (doc.contains("rank")) {
    const json& rj = doc["rank"];
    if (!rj.is_array() || static_cast<int>(rj.size()) != n) r.fail("rank", "'rank' must list one rank per element");
    rank.emplace();
    for (const auto& v : rj) rank->push_back(r.integer(v, "rank"));
  }
  return r.anchored(rank ? "rank" : "covers", [&] { return Poset::from_covers(n, covers, rank, labels); });
}

std::string poset_to_json(const Poset& p) {
  json doc;
  doc["elements"] = p.labels();
  json covers = json::array();
  for (const auto& [s, t] : p.covers()) covers.push_back({s, t});
  doc["covers"] = covers;
  std::vector<int> rank(p.size());
  for (int s = 0; s < p.size(); ++s) rank[s] = p.rank(s);
  doc["rank"] = rank;
  return doc.dump();
}

Matroid matroid_from_json(const std::string& text, const std::string& source) {
  const Reader r(text, source);
  const json doc = r.parse();
  if (!doc.is_object()) r.fail("", "expected a JSON object");
  if (doc.contains("named")) {
    const json& name = doc["named"];
    if (!name.is_string()) r.fail("named", "'named' must be a string");
    if (name.get<std::string>() == "k4") return Matroid::graphic_k4();
    if (name.get<std::string>() == "u34") return Matroid::uniform(3, 4);
    r.fail("named", "unknown matroid '" + name.get<std::string>() + "'");
  }
  if (doc.contains("uniform")) {
    const json& u = doc["uniform"];
    const int rk = r.integer(r.field(u, "r"), "r");
    const int n = r.integer(r.field(u, "n"), "n");
    return r.anchored("uniform", [&] { return Matroid::uniform(rk, n); });
  }
  const int n = r.integer(r.field(doc, "n"), "n");
  const json& bases_json = r.field(doc, "bases");
  if (!bases_json.is_array()) r.fail("bases", "'bases' must be an array of arrays");
  std::vector<std::vector<int>> bases;
  for (const auto& b : bases_json) {
    if (!b.is_array()) r.fail("bases", "'bases' must be an array of arrays");
    std::vector<int> basis;
    for (const auto& e : b) basis.push_back(r.integer(e, "bases"));
    bases.push_back(std::move(basis));
  }
  return r.anchored("bases", [&] { return Matroid::from_bases(n, bases); });
}

std::string matroid_to_json(const Matroid& m) {
  json doc;
  doc["n"] = m.size();
  json bases = json::array();
  for (Subset b : m.bases()) bases.push_back(subset_elements(b));
  doc["bases"] = bases;
  return doc.dump();
}

Polynomial polynomial_from_json(const std::string& text, const std::string& source) {
  const Reader r(text, source);
  const json doc = r.parse();
  return Polynomial(r.coefficients(r.field(doc, "coeffs"), "coeffs"));
}

std::string polynomial_to_json(const Polynomial& p) {
  json doc;
  doc["coeffs"] = coeffs_json(p);
  return doc.dump();
}

AbPolynomial ab_polynomial_from_json(const std::string& text, const std::string& source) {
  const Reader r(text, source);
  const json doc = r.parse();
  if (!doc.is_array()) r.fail("", "expected an array of {word, coeffs} terms");
  AbPolynomial out;
  for (const auto& term : doc) {
    const json& w = r.field(term, "word");
    if (!w.is_string()) r.fail("word", "'word' must be a string");
    const Polynomial c(r.coefficients(r.field(term, "coeffs"), "coeffs"));
    r.anchored("word", [&] {
      out += AbPolynomial::word(w.get<std::string>(), c);
      return 0;
    });
  }
  return out;
}

std::string ab_polynomial_to_json(const AbPolynomial& p) {
  json doc = json::array();
  for (const auto& [w, c] : p.terms()) doc.push_back({{"word", w}, {"coeffs", coeffs_json(c)}});
  return doc.dump();
}

}  // namespace chowkit
