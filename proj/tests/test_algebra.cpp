#include <doctest.h>

#include "support.hpp"

using namespace salg;
using namespace salg::test;

TEST_SUITE("algebra") {

TEST_CASE("make_algebra builds the complex numbers and detects the unit") {
  const Alg c = make_algebra<Q>("c", 2, {{0, 0, 0, Q(1)}, {0, 1, 1, Q(1)}, {1, 0, 1, Q(1)}, {1, 1, 0, Q(-1)}});
  REQUIRE(c.unit().has_value());
  CHECK(exactly_equal(*c.unit(), el({1, 0})));
  CHECK(c == cat("complex"));
  CHECK(c.constant(1, 1, 0) == Q(-1));

  const Alg field = make_algebra<Q>("q", 1, {{0, 0, 0, Q(1)}});
  REQUIRE(field.unit().has_value());
  CHECK(exactly_equal(*field.unit(), el({1})));
}

TEST_CASE("make_algebra rejects bad tables") {
  CHECK_THROWS_WITH_AS(make_algebra<Q>("d", 2, {{0, 0, 0, Q(1)}, {0, 0, 0, Q(2)}}),
                       "duplicate structure constant (0,0,0)", AlgebraError);
  CHECK_THROWS_WITH_AS(make_algebra<Q>("d", 2, {{0, 0, 9, Q(1)}}), "structure constant index out of range (0,0,9)",
                       AlgebraError);
  CHECK_THROWS_AS(make_algebra<Q>("d", 0, {}), AlgebraError);
  CHECK_THROWS_AS(make_algebra<Q>("d", 2, {}, {"only-one-label"}), AlgebraError);
}

TEST_CASE("products") {
  const Alg c = cat("complex"), h = cat("quaternions");
  CHECK(exactly_equal(mul(c, el({1, 1}), el({1, -1})), el({2, 0})));
  CHECK(exactly_equal(mul(h, e(4, 1), e(4, 2)), e(4, 3)));
  CHECK(exactly_equal(mul(h, e(4, 2), e(4, 3)), e(4, 1)));
  CHECK(exactly_equal(mul(h, e(4, 3), e(4, 1)), e(4, 2)));
  CHECK(exactly_equal(mul(h, e(4, 2), e(4, 1)), El(-e(4, 3))));
  CHECK(exactly_equal(mul(h, e(4, 3), e(4, 3)), El(-e(4, 0))));
  CHECK_THROWS_AS(mul(c, el({1, 0, 0}), el({1, 0})), DimensionError);
  Sampler s(1);
  for (const auto& name : all_names()) {
    const Alg a = cat(name);
    const El x = s.vector<Q>(a.dim());
    CHECK(exactly_equal(mul(a, *a.unit(), x), x));
    CHECK(exactly_equal(mul(a, x, *a.unit()), x));
  }
}

TEST_CASE("element module operations") {
  CHECK(exactly_equal(El(el({1, 2}) + el({3, -2})), el({4, 0})));
  CHECK(is_zero(El(Q(0) * el({5, 7}))));
  CHECK(exactly_equal(El(Q(1, 2) * el({1, 1})), El((El(2) << Q(1, 2), Q(1, 2)).finished())));
}

TEST_CASE("commutator") {
  const Alg h = cat("quaternions"), c = cat("complex");
  CHECK(exactly_equal(commutator(h, e(4, 1), e(4, 2)), El(Q(2) * e(4, 3))));
  CHECK(is_zero(commutator(c, e(2, 1), el({1, 1}))));
  Sampler s(2);
  for (const auto& name : all_names()) {
    const Alg a = cat(name);
    const El x = s.vector<Q>(a.dim()), y = s.vector<Q>(a.dim());
    CHECK(is_zero(commutator(a, x, x)));
    CHECK(exactly_equal(commutator(a, x, y), El(-commutator(a, y, x))));
  }
}

TEST_CASE("associator") {
  const Alg h = cat("quaternions"), o = cat("octonions");
  CHECK(is_zero(associator(h, e(4, 1), e(4, 2), e(4, 3))));
  // e1 e2 = e3, e3 e4 = e7; e2 e4 = e6, e1 e6 = -e7: (e1,e2,e4) = 2 e7
  const El golden = El(Q(2) * e(8, 7));
  CHECK(exactly_equal(associator(o, e(8, 1), e(8, 2), e(8, 4)), golden));
  CHECK(exactly_equal(naive_assoc(o, e(8, 1), e(8, 2), e(8, 4)), golden));
  Sampler s(3);
  for (const auto& name : all_names()) {
    const Alg a = cat(name);
    CHECK(is_zero(associator(a, *a.unit(), s.vector<Q>(a.dim()), s.vector<Q>(a.dim()))));
  }
}

TEST_CASE("property flags") {
  struct Expect {
    const char* name;
    bool commutative;
    bool associative;
  };
  for (const Expect& x : {Expect{"complex", true, true}, Expect{"quaternions", false, true},
                          Expect{"octonions", false, false}, Expect{"dual", true, true},
                          Expect{"split_complex", true, true}, Expect{"mat2", false, true}}) {
    CAPTURE(x.name);
    const Alg a = cat(x.name);
    CHECK(is_commutative(a) == x.commutative);
    CHECK(is_associative(a) == x.associative);
  }
  CHECK(cat("complex").dim() == 2);
  CHECK(cat("octonions").dim() == 8);
  CHECK(cat("mat2").dim() == 4);
  CHECK(exactly_equal(*cat("mat2").unit(), el({1, 0, 0, 1})));
}

TEST_CASE("flags agree with randomized identity checks") {
  Sampler s(4);
  std::vector<Alg> algebras;
  for (const auto& name : all_names()) algebras.push_back(cat(name));
  for (int t = 0; t < 5; ++t) algebras.push_back(random_algebra(s, 2));
  for (const Alg& a : algebras) {
    bool comm = true, assoc = true;
    for (int t = 0; t < 100; ++t) {
      const El x = s.vector<Q>(a.dim()), y = s.vector<Q>(a.dim()), z = s.vector<Q>(a.dim());
      comm = comm && is_zero(commutator(a, x, y));
      assoc = assoc && is_zero(associator(a, x, y, z));
    }
    CHECK(comm == is_commutative(a));
    CHECK(assoc == is_associative(a));
  }
}

TEST_CASE("find_unit") {
  CHECK(exactly_equal(*find_unit(cat("complex")), el({1, 0})));
  CHECK_FALSE(find_unit(make_algebra<Q>("zero", 1, {})).has_value());
  const Alg h = cat("quaternions");
  CHECK(Subspace<Q>::span({*find_unit(h)}, 4) == center(h));
  // left unit only: e0 e_j = e_j but e1 e0 = 0
  const Alg lefty = make_algebra<Q>("lefty", 2, {{0, 0, 0, Q(1)}, {0, 1, 1, Q(1)}});
  CHECK_FALSE(lefty.unit().has_value());
}

TEST_CASE("opposite algebra") {
  const Alg c = cat("complex"), h = cat("quaternions"), m = cat("mat2");
  CHECK(opposite(c) == c);
  const Alg hop = opposite(h);
  CHECK(exactly_equal(mul(hop, e(4, 1), e(4, 2)), El(-e(4, 3))));
  CHECK(opposite(hop) == h);
  CHECK(opposite(cat("octonions")) != cat("octonions"));
  CHECK(opposite(opposite(cat("octonions"))) == cat("octonions"));

  // transpose E_ab -> E_ba is an isomorphism mat2 -> mat2^op
  const Alg mop = opposite(m);
  auto transpose = [](Index i) { return 2 * (i % 2) + i / 2; };
  for (Index i = 0; i < 4; ++i)
    for (Index j = 0; j < 4; ++j) {
      const El prod = mul(m, e(4, i), e(4, j));
      El t_prod = El::Zero(4);
      for (Index k = 0; k < 4; ++k) t_prod(transpose(k)) = prod(k);
      CHECK(exactly_equal(t_prod, mul(mop, e(4, transpose(i)), e(4, transpose(j)))));
    }
}

TEST_CASE("nucleus and center") {
  const Alg h = cat("quaternions"), o = cat("octonions"), c = cat("complex"), m = cat("mat2");
  CHECK(nucleus(h) == Subspace<Q>::whole(4));
  CHECK(center(h) == Subspace<Q>::span({e(4, 0)}, 4));
  CHECK(nucleus(o) == Subspace<Q>::span({e(8, 0)}, 8));
  CHECK(center(o) == Subspace<Q>::span({e(8, 0)}, 8));
  CHECK(nucleus(c) == Subspace<Q>::whole(2));
  CHECK(center(c) == Subspace<Q>::whole(2));
  CHECK(center(m) == Subspace<Q>::span({el({1, 0, 0, 1})}, 4));
  CHECK(nucleus(make_algebra<Q>("zero", 3, {})) == Subspace<Q>::whole(3));
}

TEST_CASE("nucleus and center match the brute-force oracle on random algebras") {
  Sampler s(5);
  for (int t = 0; t < 20; ++t) {
    // sparse random tables so nontrivial nuclei actually occur
    std::vector<StructureConstant<Q>> table;
    for (Index i = 0; i < 3; ++i)
      for (Index j = 0; j < 3; ++j)
        if (s.integer(0, 3) == 0) table.push_back({i, j, s.integer(0, 2), Q(s.integer(1, 2))});
    const Alg a = make_algebra<Q>("sparse", 3, table);
    const Subspace<Q> nuc = nucleus(a), cen = center(a);
    CHECK(nuc.contains(cen));
    for (Index i = 0; i < nuc.dim(); ++i) CHECK(naive_in_nucleus(a, nuc.basis(i)));
    for (Index i = 0; i < cen.dim(); ++i) CHECK(naive_in_center(a, cen.basis(i)));
    // basis vectors outside the reported subspaces fail the identities
    for (Index i = 0; i < 3; ++i) {
      if (!nuc.contains(e(3, i))) CHECK_FALSE(naive_in_nucleus(a, e(3, i)));
      if (!cen.contains(e(3, i))) CHECK_FALSE(naive_in_center(a, e(3, i)));
    }
  }
}

TEST_CASE("change of basis") {
  const Alg c = cat("complex");
  const Alg scaled = change_basis(c, mat(2, 2, {1, 0, 0, 2}));
  CHECK(scaled.constant(1, 1, 0) == Q(-4));
  CHECK(change_basis(c, Mat(Mat::Identity(2, 2))) == c);
  CHECK_THROWS_AS(change_basis(c, mat(2, 2, {1, 1, 1, 1})), AlgebraError);
  CHECK_THROWS_AS(BasisChange<Q>(mat(2, 2, {1, 2, 2, 4})), AlgebraError);

  Sampler s(6);
  for (const auto& name : all_names()) {
    CAPTURE(name);
    const Alg a = cat(name);
    const BasisChange<Q> ch(s.invertible<Q>(a.dim()));
    const Alg b = change_basis(a, ch);
    CHECK(change_basis(b, ch.reversed()) == a);
    CHECK(is_commutative(b) == is_commutative(a));
    CHECK(is_associative(b) == is_associative(a));
    CHECK(nucleus(b).dim() == nucleus(a).dim());
    CHECK(center(b).dim() == center(a).dim());
    REQUIRE(b.unit().has_value());
    CHECK(exactly_equal(*b.unit(), element_change_basis(*a.unit(), ch)));
    const El x = s.vector<Q>(a.dim()), y = s.vector<Q>(a.dim());
    CHECK(exactly_equal(mul(b, ch.to_new(x), ch.to_new(y)), ch.to_new(mul(a, x, y))));
  }
}

TEST_CASE("catalog") {
  for (const auto& name : all_names()) {
    const Alg a = cat(name);
    CHECK(a.name() == name);
    CHECK(a.unit().has_value());
    CHECK(static_cast<Index>(a.labels().size()) == a.dim());
  }
  CHECK_THROWS_WITH_AS(cat("sedenions"),
                       "unknown algebra 'sedenions'; valid names: complex, quaternions, octonions, dual, "
                       "split_complex, mat2",
                       AlgebraError);
}

TEST_CASE("octonions are alternative") {
  // (x,x,y) = (y,x,x) = 0 distinguishes a proper octonion table
  const Alg o = cat("octonions");
  Sampler s(8);
  for (int t = 0; t < 30; ++t) {
    const El x = s.vector<Q>(8), y = s.vector<Q>(8);
    CHECK(is_zero(associator(o, x, x, y)));
    CHECK(is_zero(associator(o, y, x, x)));
  }
}

TEST_CASE("bilinearity of mul") {
  Sampler s(9);
  for (const auto& name : all_names()) {
    const Alg a = cat(name);
    for (int t = 0; t < 20; ++t) {
      const El x = s.vector<Q>(a.dim()), x2 = s.vector<Q>(a.dim()), y = s.vector<Q>(a.dim());
      const Q k = s.scalar<Q>();
      CHECK(exactly_equal(mul(a, El(x + x2), y), El(mul(a, x, y) + mul(a, x2, y))));
      CHECK(exactly_equal(mul(a, y, El(x + x2)), El(mul(a, y, x) + mul(a, y, x2))));
      CHECK(exactly_equal(mul(a, El(k * x), y), El(k * mul(a, x, y))));
      CHECK(exactly_equal(mul(a, x, y), naive_mul(a, x, y)));
    }
  }
}

TEST_CASE("Teichmuller identity, expanded independently via the naive product") {
  Sampler s(10);
  std::vector<Alg> algebras;
  for (const auto& name : all_names()) algebras.push_back(cat(name));
  algebras.push_back(random_algebra(s, 3));
  for (const Alg& alg : algebras) {
    for (int t = 0; t < 10; ++t) {
      const El a = s.vector<Q>(alg.dim()), b = s.vector<Q>(alg.dim()), c = s.vector<Q>(alg.dim()),
               d = s.vector<Q>(alg.dim());
      auto m = [&](const El& x, const El& y) { return naive_mul(alg, x, y); };
      auto as = [&](const El& x, const El& y, const El& z) { return naive_assoc(alg, x, y, z); };
      const El defect = m(a, as(b, c, d)) - as(m(a, b), c, d) + as(a, m(b, c), d) - as(a, b, m(c, d)) +
                        m(as(a, b, c), d);
      CHECK(is_zero(defect));
      CHECK(is_zero(teichmuller_defect(alg, a, b, c, d)));
    }
  }
}

}  // TEST_SUITE
