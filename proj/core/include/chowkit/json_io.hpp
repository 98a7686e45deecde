#pragma once

// JSON encodings of posets, matroids, polynomials and ab-polynomials.
// Parse errors are reported as InputError("<source>:<line>:<column>: ...").

#include <chowkit/abindex.hpp>
#include <chowkit/matroid.hpp>
#include <chowkit/poset.hpp>

#include <string>

namespace chowkit {

// {"elements": [labels], "covers": [[i, j], ...], "rank": [...]}; "rank" is
// optional and covers may name elements by index or by label.
Poset poset_from_json(const std::string& text, const std::string& source = "<input>");
std::string poset_to_json(const Poset& p);

// {"n": n, "bases": [[...], ...]}, {"uniform": {"r": r, "n": n}} or
// {"named": "k4"}.
Matroid matroid_from_json(const std::string& text, const std::string& source = "<input>");
std::string matroid_to_json(const Matroid& m);

// {"coeffs": ["3", "11", "3"]}, ascending powers as decimal strings.
Polynomial polynomial_from_json(const std::string& text, const std::string& source = "<input>");
std::string polynomial_to_json(const Polynomial& p);

// [{"word": "ab", "coeffs": ["1", "1"]}, ...] in word order.
AbPolynomial ab_polynomial_from_json(const std::string& text, const std::string& source = "<input>");
std::string ab_polynomial_to_json(const AbPolynomial& p);

}  // namespace chowkit
