#pragma once

// Built-in algebras. All tables use 0-based basis indices.
//
//   complex        1, i               i i = -1
//   quaternions    1, i, j, k         i j = k, j k = i, k i = j, squares -1
//   octonions      1, e1 .. e7        e_a e_b = e_c for each oriented Fano line
//                                     (a, b, c) and its cyclic shifts, with
//                                     lines (1,2,3) (1,4,5) (1,7,6) (2,4,6)
//                                     (2,5,7) (3,4,7) (3,6,5); e_b e_a = -e_c;
//                                     squares -1
//   dual           1, eps             eps eps = 0
//   split_complex  1, j               j j = 1
//   mat2           E11, E12, E21, E22 E_ab E_cd = delta_bc E_ad, unit E11 + E22

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "salg/algebra.hpp"

namespace salg {

inline const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names{"complex", "quaternions", "octonions",
                                              "dual",    "split_complex", "mat2"};
  return names;
}

namespace detail {

/// Unit e_0 plus imaginary units squaring to `square` and products from
/// oriented triples.
template <typename Scalar>
std::vector<StructureConstant<Scalar>> unital_table(Index n, int square,
                                                    const std::vector<std::array<Index, 3>>& triples) {
  std::vector<StructureConstant<Scalar>> c;
  c.push_back({0, 0, 0, Scalar(1)});
  for (Index a = 1; a < n; ++a) {
    c.push_back({0, a, a, Scalar(1)});
    c.push_back({a, 0, a, Scalar(1)});
    if (square != 0) c.push_back({a, a, 0, Scalar(square)});
  }
  for (const auto& t : triples)
    for (int shift = 0; shift < 3; ++shift) {
      const Index a = t[static_cast<std::size_t>(shift)];
      const Index b = t[static_cast<std::size_t>((shift + 1) % 3)];
      const Index r = t[static_cast<std::size_t>((shift + 2) % 3)];
      c.push_back({a, b, r, Scalar(1)});
      c.push_back({b, a, r, Scalar(-1)});
    }
  return c;
}

}  // namespace detail

template <typename Scalar>
Algebra<Scalar> catalog(std::string_view name) {
  if (name == "complex") return make_algebra<Scalar>("complex", 2, detail::unital_table<Scalar>(2, -1, {}), {"1", "i"});
  if (name == "quaternions")
    return make_algebra<Scalar>("quaternions", 4, detail::unital_table<Scalar>(4, -1, {{1, 2, 3}}),
                                {"1", "i", "j", "k"});
  if (name == "octonions")
    return make_algebra<Scalar>(
        "octonions", 8,
        detail::unital_table<Scalar>(8, -1, {{1, 2, 3}, {1, 4, 5}, {1, 7, 6}, {2, 4, 6}, {2, 5, 7}, {3, 4, 7}, {3, 6, 5}}),
        {"1", "e1", "e2", "e3", "e4", "e5", "e6", "e7"});
  if (name == "dual") return make_algebra<Scalar>("dual", 2, detail::unital_table<Scalar>(2, 0, {}), {"1", "eps"});
  if (name == "split_complex")
    return make_algebra<Scalar>("split_complex", 2, detail::unital_table<Scalar>(2, 1, {}), {"1", "j"});
  if (name == "mat2") {
    std::vector<StructureConstant<Scalar>> c;
    for (Index a = 0; a < 2; ++a)
      for (Index b = 0; b < 2; ++b)
        for (Index d = 0; d < 2; ++d) c.push_back({2 * a + b, 2 * b + d, 2 * a + d, Scalar(1)});
    return make_algebra<Scalar>("mat2", 4, c, {"E11", "E12", "E21", "E22"});
  }
  std::string valid;
  for (const auto& n : catalog_names()) valid += (valid.empty() ? "" : ", ") + n;
  throw AlgebraError("unknown algebra '" + std::string(name) + "'; valid names: " + valid);
}

}  // namespace salg
