#include <doctest.h>

#include <cmath>

#include "easyq/errors.hpp"
#include "easyq/intertwiner.hpp"
#include "easyq/models.hpp"
#include "easyq/rng.hpp"

using namespace easyq;

namespace {

BlockMatrixModel f_model(int p, int q) {
  const IndexSpace s(p, q);
  BlockMatrixModel u(s.n(), 1);
  for (int z = 0; z < s.n(); ++z) u.entry(z, s.bar(z)).at(0, 0) = 1.0;
  return u;
}

BlockMatrixModel identity_model(int n) {
  BlockMatrixModel u(n, 1);
  for (int z = 0; z < n; ++z) u.entry(z, z).at(0, 0) = 1.0;
  return u;
}

double selfadjoint_residual(const BlockMatrixModel& u) {
  double worst = 0.0;
  for (const CMat& e : u.entries) worst = std::max(worst, rel_residual(adjoint(e), e));
  return worst;
}

}  // namespace

TEST_CASE("the flip matrix passes the isometry presets") {
  const BlockMatrixModel u = f_model(2, 1);
  for (RelationPreset preset : {RelationPreset::Opq, RelationPreset::Hpq, RelationPreset::Hspq})
    CHECK(check(u, preset, 2, 1).pass);
  // a generic rotation block breaks the row sums but not the isometries
  const BlockMatrixModel t = sample_classical(SampleGroup::TorusH, 2, 1, 1);
  CHECK_FALSE(check(t, RelationPreset::Bpq, 2, 1).pass);
}

TEST_CASE("identity passes every preset at p = 0") {
  const BlockMatrixModel u = identity_model(3);
  for (RelationPreset preset : {RelationPreset::Opq, RelationPreset::Bpq, RelationPreset::Spq,
                                RelationPreset::Hpq, RelationPreset::Hspq, RelationPreset::H4,
                                RelationPreset::Magic})
    CHECK(check(u, preset, 0, 3).pass);
}

TEST_CASE("model size must match 2p+q for relation presets") {
  CHECK_THROWS_AS(check(identity_model(3), RelationPreset::Opq, 1, 0), ShapeMismatchError);
}

TEST_CASE("samplers pass their presets with tiny residuals") {
  const struct {
    SampleGroup group;
    RelationPreset preset;
    int p, q;
  } rows[] = {
      {SampleGroup::O, RelationPreset::Opq, 2, 1},
      {SampleGroup::B, RelationPreset::Bpq, 2, 1},
      {SampleGroup::B, RelationPreset::Bpq, 2, 0},
      {SampleGroup::B, RelationPreset::Bpq, 0, 3},
      {SampleGroup::HxS, RelationPreset::Spq, 2, 2},
      {SampleGroup::TorusH, RelationPreset::Hpq, 2, 1},
      {SampleGroup::H4, RelationPreset::H4, 2, 1},
      {SampleGroup::Hq, RelationPreset::Hspq, 0, 4},
      {SampleGroup::Sq, RelationPreset::Spq, 0, 4},
  };
  for (const auto& row : rows) {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      const BlockMatrixModel u = sample_classical(row.group, row.p, row.q, seed);
      const CheckReport report = check(u, row.preset, row.p, row.q, 1e-9);
      INFO(group_name(row.group), " seed ", seed, " residual ", report.maxResidual);
      CHECK(report.pass);
    }
  }
}

TEST_CASE("samplers are deterministic in the seed") {
  const auto a = sample_classical(SampleGroup::O, 2, 1, 42);
  const auto b = sample_classical(SampleGroup::O, 2, 1, 42);
  CHECK(model_to_json(a) == model_to_json(b));
  const auto c = sample_classical(SampleGroup::O, 2, 1, 43);
  CHECK(model_to_json(a) != model_to_json(c));
}

TEST_CASE("bar relations are equivalent to selfadjointness after conjugation") {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    // bar-form models conjugate to selfadjoint entries
    for (SampleGroup g : {SampleGroup::O, SampleGroup::TorusH}) {
      const BlockMatrixModel u = sample_classical(g, 2, 1, seed);
      CHECK(selfadjoint_residual(conjugate_by_c(u, 2, 1)) < 1e-9);
    }
  }
  // and conjugation preserves unitarity
  const BlockMatrixModel u = sample_classical(SampleGroup::O, 2, 1, 7);
  const BlockMatrixModel v = conjugate_by_c(u, 2, 1);
  const CMat eye = CMat::identity(v.n * v.d);
  CHECK(rel_residual(mul(v.flat(), adjoint(v.flat())), eye) < 1e-12);

  // the flip matrix conjugates to selfadjoint entries
  CHECK(selfadjoint_residual(conjugate_by_c(f_model(1, 0), 1, 0)) < 1e-12);

  // a non bar-form unitary does not
  BlockMatrixModel bad = identity_model(3);
  bad.entry(0, 0).at(0, 0) = cplx(0.0, 1.0);  // pairs i with 1, breaking U*_00 = U_11
  CHECK_FALSE(check(bad, RelationPreset::Opq, 1, 1).pass);
  CHECK(selfadjoint_residual(conjugate_by_c(bad, 1, 1)) > 1e-3);
}

TEST_CASE("bar form comes back from selfadjoint models") {
  // U = C* V C for real orthogonal V satisfies the bar relations; V here
  // is a signed permutation so the conjugation is exact
  SplitMix64 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const int p = 1 + rng.below(2);
    const int q = rng.below(3);
    const BlockMatrixModel u = sample_classical(SampleGroup::O, p, q, rng.next());
    CHECK(check(u, RelationPreset::Opq, p, q).pass);
  }
}

TEST_CASE("sudoku transform sorts the pair block structure") {
  // scalar hyperoctahedral sample on the pair part only
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const BlockMatrixModel u = sample_classical(SampleGroup::HxS, 3, 0, seed);
    CHECK(check(u, RelationPreset::Spq, 3, 0).pass);
    const BlockMatrixModel s = sudoku_transform(u, 3);
    CHECK(check(s, RelationPreset::Sudoku, 0, 0).pass);
  }

  // the one-pair flip model is already in sudoku form
  const BlockMatrixModel flip = f_model(1, 0);
  const BlockMatrixModel s = sudoku_transform(flip, 1);
  CHECK(model_to_json(s) == model_to_json(flip));
}

TEST_CASE("partial symmetries split into a double sudoku") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const BlockMatrixModel u = sample_classical(SampleGroup::H4, 2, 0, seed);
    // entries are in {-1,0,1}; the positive/negative parts fill the
    // 4p x 4p magic pattern
    const BlockMatrixModel dd = double_sudoku(u, 2);
    CHECK(check(dd, RelationPreset::Magic, 0, 0).pass);
    CHECK(check(dd, RelationPreset::DoubleSudoku, 0, 0).pass);
  }
}

TEST_CASE("quotient projections form a magic unitary") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const BlockMatrixModel u = sample_classical(SampleGroup::TorusH, 2, 1, seed);
    const BlockMatrixModel p = quotient_projections(u, 2, 1);
    CHECK(check(p, RelationPreset::Magic, 0, 0).pass);
    // scalar case: the projections are the underlying permutation matrix
    for (const CMat& e : p.entries) {
      const double v = e.at(0, 0).real();
      CHECK(std::abs(e.at(0, 0).imag()) < 1e-12);
      CHECK(std::min(std::abs(v), std::abs(v - 1.0)) < 1e-12);
    }
  }
  const BlockMatrixModel id = identity_model(3);
  CHECK(model_to_json(quotient_projections(id, 0, 3)) == model_to_json(id));
  CHECK_THROWS_AS(quotient_projections(sample_classical(SampleGroup::O, 1, 1, 3), 1, 1),
                  PrecondFailedError);
}

TEST_CASE("row and column products of isometry entries vanish") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const BlockMatrixModel u = sample_classical(SampleGroup::TorusH, 2, 1, seed);
    const CMat zero(u.d, u.d);
    for (int z = 0; z < u.n; ++z)
      for (int y = 0; y < u.n; ++y)
        for (int x = 0; x < u.n; ++x) {
          if (x == y) continue;
          CHECK(fro_norm(mul(u.entry(y, z), adjoint(u.entry(x, z)))) < 1e-9);
          CHECK(fro_norm(mul(adjoint(u.entry(z, y)), u.entry(z, x))) < 1e-9);
        }
  }
}

TEST_CASE("isometries with unit row sums are projections") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const BlockMatrixModel u = sample_classical(SampleGroup::HxS, 2, 2, seed);
    REQUIRE(check(u, RelationPreset::Hpq, 2, 2).pass);
    CMat rowSum(u.d, u.d);
    for (int y = 0; y < u.n; ++y) rowSum = add(rowSum, u.entry(0, y));
    REQUIRE(rel_residual(rowSum, CMat::identity(u.d)) < 1e-9);
    CHECK(check(u, RelationPreset::Spq, 2, 2).pass);
  }
}

TEST_CASE("duality vectors are fixed by every sampled model") {
  const struct {
    SampleGroup group;
    int p, q;
  } rows[] = {{SampleGroup::O, 2, 1},   {SampleGroup::B, 2, 1},     {SampleGroup::HxS, 2, 1},
              {SampleGroup::TorusH, 2, 1}, {SampleGroup::H4, 2, 1}, {SampleGroup::Hq, 0, 3},
              {SampleGroup::Sq, 0, 3}};
  for (const auto& row : rows) {
    const IndexSpace s(row.p, row.q);
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      const BlockMatrixModel u = sample_classical(row.group, row.p, row.q, seed);
      CHECK(is_intertwiner(xi_column(s), u, 0, 2, 1e-9).ok);
    }
  }
  // the all-ones vector is additionally fixed for bistochastic samples
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const BlockMatrixModel u = sample_classical(SampleGroup::B, 2, 1, seed);
    CHECK(is_intertwiner(eta_column(IndexSpace(2, 1)), u, 0, 1, 1e-9).ok);
  }
}

TEST_CASE("the triple fork intertwines isometry models") {
  const IndexSpace s(2, 1);
  const IntMatrix fork3 = diag_fork_matrix(s, 3, false);
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const BlockMatrixModel u = sample_classical(SampleGroup::TorusH, 2, 1, seed);
    CHECK(is_intertwiner(fork3, u, 1, 3, 1e-9).ok);
  }
  // and the barred variant intertwines partial-symmetry models
  const IntMatrix fork3bar = diag_fork_matrix(s, 3, true);
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const BlockMatrixModel u = sample_classical(SampleGroup::H4, 2, 1, seed);
    CHECK(is_intertwiner(fork3bar, u, 1, 3, 1e-9).ok);
  }
  // the double fork intertwines magic models
  const IntMatrix fork2 = diag_fork_matrix(s, 2, false);
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const BlockMatrixModel u = sample_classical(SampleGroup::HxS, 2, 1, seed);
    CHECK(is_intertwiner(fork2, u, 1, 2, 1e-9).ok);
  }
}

TEST_CASE("witness search returns nothing for scalar models") {
  CHECK_FALSE(witness_search(1, 3000, 11).has_value());
  CHECK_FALSE(witness_search(2, 0, 11).has_value());
  CHECK_THROWS_AS(witness_search(7, 10, 1), SizeLimitError);
}

TEST_CASE("scalar partial symmetry relation pins -1, 0, 1") {
  SplitMix64 rng(99);
  for (int k = 1; k <= 3; ++k) {
    for (int trial = 0; trial < 2000; ++trial) {
      const cplx z(4.0 * rng.uniform() - 2.0, 4.0 * rng.uniform() - 2.0);
      if (scalar_partial_symmetry_relation(z, k, 1e-9)) {
        const bool near = std::abs(z) < 1e-4 || std::abs(z - 1.0) < 1e-4 || std::abs(z + 1.0) < 1e-4;
        CHECK(near);
      }
    }
    for (double v : {-1.0, 0.0, 1.0}) CHECK(scalar_partial_symmetry_relation(cplx(v, 0.0), k));
  }

  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto values = classify_partial_symmetries(sample_classical(SampleGroup::Hq, 0, 4, seed));
    for (double v : values) CHECK((v == -1.0 || v == 0.0 || v == 1.0));
  }
}

TEST_CASE("model json round trip") {
  const BlockMatrixModel u = sample_classical(SampleGroup::TorusH, 1, 2, 5);
  const BlockMatrixModel back = model_from_json(model_to_json(u));
  CHECK(model_to_json(back) == model_to_json(u));
  CHECK_THROWS_AS(model_from_json("{\"n\":2}"), ParseError);
  CHECK_THROWS_AS(model_from_json("["), ParseError);
}
