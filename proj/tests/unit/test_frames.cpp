#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "eqlines/construct/generators.hpp"
#include "eqlines/frames/report_io.hpp"
#include "eqlines/frames/verify.hpp"
#include "float_oracle.hpp"

using namespace eqlines::frames;
using eqlines::exact::DomainError;
using eqlines::exact::make_rational;
namespace construct = eqlines::construct;

namespace {

Rational q(long n, long d = 1) { return make_rational(n, d); }

LineSet bb1() {
  const Surd a = Surd::sqrt(q(1, 3));
  return LineSet::from_rows({{a, a, a}, {-a, a, a}, {a, -a, a}, {a, a, -a}});
}

// Seven copies of bb1 on the lines of the Fano plane.
LineSet fano() {
  const int lines[7][3] = {{1, 2, 3}, {3, 4, 5}, {1, 5, 6}, {2, 4, 6}, {3, 6, 7}, {1, 4, 7}, {2, 5, 7}};
  const LineSet b = bb1();
  std::vector<std::vector<Surd>> rows;
  for (const auto& l : lines) {
    for (std::size_t r = 0; r < 4; ++r) {
      std::vector<Surd> row(7);
      for (std::size_t c = 0; c < 3; ++c) row[static_cast<std::size_t>(l[c] - 1)] = b.at(r, c);
      rows.push_back(row);
    }
  }
  return LineSet::from_rows(rows);
}

LineSet identity_set(std::size_t n) {
  std::vector<std::vector<Surd>> rows(n, std::vector<Surd>(n));
  for (std::size_t i = 0; i < n; ++i) rows[i][i] = Surd(1);
  return LineSet::from_rows(rows);
}

oracle::Mat doubles(const LineSet& ls) {
  oracle::Mat out(ls.m(), std::vector<double>(ls.n()));
  auto flat = ls.to_doubles();
  for (std::size_t i = 0; i < ls.m(); ++i)
    for (std::size_t j = 0; j < ls.n(); ++j) out[i][j] = flat[i * ls.n() + j];
  return out;
}

// Fields that must not depend on row signs or order.
void expect_same_invariants(const VerificationReport& a, const VerificationReport& b) {
  EXPECT_EQ(a.status, b.status);
  EXPECT_EQ(a.common_angle, b.common_angle);
  EXPECT_EQ(a.angle_spectrum, b.angle_spectrum);
  EXPECT_EQ(a.is_tight, b.is_tight);
  EXPECT_EQ(a.frame_bound, b.frame_bound);
  EXPECT_EQ(a.rank, b.rank);
  EXPECT_EQ(a.welch_equality, b.welch_equality);
  EXPECT_EQ(a.gerzon_slack, b.gerzon_slack);
  EXPECT_EQ(a.neumann, b.neumann);
}

std::vector<LineSet> property_sets() {
  return {bb1(),
          fano(),
          construct::two_angle(5),
          construct::family_one_fifth_a(7),
          construct::family_one_third(5),
          construct::simplex(4),
          construct::family_three_n_plus_one(2),
          LineSet::from_rows({{Surd(1), Surd(0)}, {Surd(1), Surd(0)}, {Surd(0), Surd(1)}})};
}

}  // namespace

TEST(InnerProduct, Examples) {
  EXPECT_EQ(inner_product(bb1(), 0, 1), Surd(q(1, 3)));
  const LineSet six = construct::two_angle(3);
  EXPECT_EQ(inner_product(six, 0, 1), Surd::term(q(1, 5), 5));
  const LineSet a2 = construct::family_one_third(4);
  for (std::size_t i = 0; i < a2.m(); ++i) EXPECT_EQ(inner_product(a2, i, i), Surd(1));
}

TEST(InnerProduct, LengthMismatch) {
  std::vector<Surd> u(3, Surd(1)), v(2, Surd(1));
  EXPECT_THROW(inner_product(u, v), DomainError);
}

TEST(LineSetShape, Validation) {
  EXPECT_THROW(LineSet(0, 1, {}), DomainError);
  EXPECT_THROW(LineSet(2, 2, std::vector<Surd>(3)), DomainError);
  EXPECT_THROW(LineSet::from_rows({{Surd(1)}, {Surd(1), Surd(0)}}), DomainError);
}

TEST(Verify, FanoComposition) {
  auto rep = verify_equiangular(fano());
  EXPECT_EQ(rep.status, Status::equiangular);
  ASSERT_TRUE(rep.common_angle);
  EXPECT_EQ(*rep.common_angle, Surd(q(1, 3)));
  ASSERT_EQ(rep.angle_spectrum.size(), 1u);
  EXPECT_EQ(rep.angle_spectrum[0].count, 378u);
  EXPECT_TRUE(rep.is_tight);
  EXPECT_EQ(rep.frame_bound, q(4));
  EXPECT_TRUE(rep.welch_equality);
  EXPECT_EQ(rep.gerzon_slack, 0);
  EXPECT_EQ(rep.neumann, NeumannStatus::pass);
  EXPECT_TRUE(rep.offending_pairs.empty());
}

TEST(Verify, SingleRowIsVacuouslyEquiangular) {
  auto rep = verify_equiangular(LineSet::from_rows({{Surd(1), Surd(0), Surd(0)}}));
  EXPECT_EQ(rep.status, Status::equiangular);
  EXPECT_TRUE(rep.angle_spectrum.empty());
  EXPECT_FALSE(rep.common_angle);
  EXPECT_FALSE(rep.welch_equality);
  EXPECT_EQ(rep.gerzon_slack, 5);
}

TEST(Verify, ParallelLinesListed) {
  const Surd a = Surd::sqrt(q(1, 2));
  auto rep = verify_equiangular(LineSet::from_rows({{a, a}, {a, -a}, {-a, -a}}));
  EXPECT_EQ(rep.status, Status::parallel_lines);
  ASSERT_EQ(rep.offending_pairs.size(), 1u);
  EXPECT_EQ(rep.offending_pairs[0].i, 1u);
  EXPECT_EQ(rep.offending_pairs[0].j, 3u);
  EXPECT_EQ(rep.offending_pairs[0].value, Surd(-1));
  EXPECT_FALSE(rep.common_angle);
}

TEST(Verify, NotUnitNorm) {
  auto rep = verify_equiangular(LineSet::from_rows({{Surd(1), Surd(0)}, {Surd(1), Surd(1)}}));
  EXPECT_EQ(rep.status, Status::not_unit_norm);
  ASSERT_EQ(rep.offending_pairs.size(), 1u);
  EXPECT_EQ(rep.offending_pairs[0], (PairValue{2, 2, Surd(2)}));
}

TEST(Verify, MultipleAnglesFlagsMinority) {
  // bb1 plus e1: e1 meets the four rows at 1/sqrt3
  const Surd a = Surd::sqrt(q(1, 3));
  auto rep = verify_equiangular(
      LineSet::from_rows({{a, a, a}, {-a, a, a}, {a, -a, a}, {a, a, -a}, {Surd(1), Surd(0), Surd(0)}}));
  EXPECT_EQ(rep.status, Status::multiple_angles);
  ASSERT_EQ(rep.angle_spectrum.size(), 2u);
  EXPECT_EQ(rep.angle_spectrum[0].angle, Surd(q(1, 3)));
  EXPECT_EQ(rep.angle_spectrum[0].count, 6u);
  EXPECT_EQ(rep.angle_spectrum[1].angle, a);
  EXPECT_EQ(rep.angle_spectrum[1].count, 4u);
  EXPECT_EQ(rep.offending_pairs.size(), 4u);
  for (const auto& p : rep.offending_pairs) EXPECT_EQ(p.j, 5u);
}

TEST(Verify, FloatsDoNotDecide) {
  // |row 2|^2 = 1 + 10^-18, which rounds to 1.0 in double
  const Surd tiny(make_rational(1, 1000000000));
  const LineSet ls = LineSet::from_rows({{Surd(0), Surd(1)}, {Surd(1), tiny}});
  const auto g = oracle::gram(doubles(ls));
  EXPECT_EQ(g[1][1], 1.0);
  auto rep = verify_equiangular(ls);
  EXPECT_EQ(rep.status, Status::not_unit_norm);
  EXPECT_EQ(rep.offending_pairs[0].value, Surd(1) + Surd(make_rational(1, 1000000000) * make_rational(1, 1000000000)));
}

TEST(AngleSpectrum, Examples) {
  auto s1 = angle_spectrum(bb1());
  ASSERT_EQ(s1.size(), 1u);
  EXPECT_EQ(s1[0], (AngleCount{Surd(q(1, 3)), 6}));

  auto s2 = angle_spectrum(identity_set(2));
  ASSERT_EQ(s2.size(), 1u);
  EXPECT_EQ(s2[0], (AngleCount{Surd(0), 1}));

  EXPECT_THROW(angle_spectrum(LineSet::from_rows({{Surd(2)}})), DomainError);
}

TEST(AngleSpectrum, TwoAngleFourMatchesFloatCount) {
  const auto f = oracle::analyze(oracle::generate("two_angle", 4));
  ASSERT_EQ(f.angles.size(), 2u);
  std::size_t zeros = 0, fifths = 0;
  {
    const auto g = oracle::gram(oracle::generate("two_angle", 4));
    for (std::size_t i = 0; i < g.size(); ++i)
      for (std::size_t j = i + 1; j < g.size(); ++j) (std::abs(g[i][j]) < 1e-9 ? zeros : fifths) += 1;
  }
  // frozen from the float count above
  EXPECT_EQ(zeros, 8u);
  EXPECT_EQ(fifths, 20u);
  auto s = angle_spectrum(construct::two_angle(4));
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s[0], (AngleCount{Surd(0), 8}));
  EXPECT_EQ(s[1], (AngleCount{Surd::term(q(1, 5), 5), 20}));
}

TEST(FrameOperator, Examples) {
  Matrix s = frame_operator(bb1());
  Matrix expect = Matrix::identity(3);
  for (std::size_t i = 0; i < 3; ++i) expect(i, i) = Surd(q(4, 3));
  EXPECT_EQ(s, expect);

  Matrix e = frame_operator(LineSet::from_rows({{Surd(1), Surd(0)}}));
  EXPECT_EQ(e(0, 0), Surd(1));
  EXPECT_TRUE(e(1, 1).is_zero());
  EXPECT_TRUE(e(0, 1).is_zero());
}

TEST(FrameOperator, OneThirdFamilyDiagonal) {
  // S = diag(2(N-1)/3, 4/3, ..., 4/3); scalar only when N = 3
  for (std::size_t n : {2u, 3u, 4u, 6u}) {
    Matrix s = frame_operator(construct::family_one_third(n));
    EXPECT_EQ(s(0, 0), Surd(make_rational(2 * static_cast<long>(n - 1), 3)));
    for (std::size_t i = 1; i < n; ++i) {
      EXPECT_EQ(s(i, i), Surd(q(4, 3)));
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) EXPECT_TRUE(s(i, j).is_zero());
    }
  }
}

TEST(IsTight, Examples) {
  auto six = is_tight(construct::two_angle(3));
  EXPECT_TRUE(six.tight);
  EXPECT_EQ(six.frame_bound, q(2));

  auto id = is_tight(identity_set(3));
  EXPECT_TRUE(id.tight);
  EXPECT_EQ(id.frame_bound, q(1));

  for (std::size_t n : {2u, 4u, 5u, 10u}) EXPECT_FALSE(is_tight(construct::family_one_third(n)).tight) << n;
  // four lines in R^3 from the family are the tetrahedron, which is tight
  auto three = is_tight(construct::family_one_third(3));
  EXPECT_TRUE(three.tight);
  EXPECT_EQ(three.frame_bound, q(4, 3));
}

TEST(IsTight, RelativeToSpan) {
  auto t = is_tight(construct::simplex(3));
  EXPECT_TRUE(t.tight);
  EXPECT_EQ(t.rank, 3u);
  EXPECT_EQ(t.frame_bound, q(4, 3));
}

TEST(WelchBound, Examples) {
  EXPECT_EQ(welch_bound_sq(28, 7), q(1, 9));
  EXPECT_EQ(welch_bound_sq(16, 6), q(1, 9));
  EXPECT_EQ(welch_bound_sq(6, 6), q(0));
  EXPECT_EQ(welch_bound_sq(6, 3), q(1, 5));
  EXPECT_THROW(welch_bound_sq(3, 5), DomainError);
  EXPECT_THROW(welch_bound_sq(1, 1), DomainError);
  EXPECT_THROW(welch_bound_sq(3, 0), DomainError);
}

TEST(GerzonBound, Examples) {
  EXPECT_EQ(gerzon_bound(7), 28u);
  EXPECT_EQ(gerzon_bound(2), 3u);
  EXPECT_EQ(gerzon_bound(1), 1u);
}

TEST(NeumannLint, Examples) {
  EXPECT_EQ(neumann_lint(28, 7, Surd(q(1, 3))), NeumannStatus::pass);
  EXPECT_EQ(neumann_lint(6, 3, Surd::term(q(1, 5), 5)), NeumannStatus::not_applicable);
  EXPECT_EQ(neumann_lint(13, 6, Surd::term(q(1, 5), 5)), NeumannStatus::violation);
  EXPECT_EQ(neumann_lint(13, 6, Surd(q(1, 4))), NeumannStatus::violation);
  EXPECT_EQ(neumann_lint(13, 6, Surd(q(2, 5))), NeumannStatus::violation);
  EXPECT_EQ(neumann_lint(36, 15, Surd(q(1, 5))), NeumannStatus::pass);
}

TEST(IsUnitary, Examples) {
  EXPECT_TRUE(is_unitary(construct::circ_sa_2n(2)));
  EXPECT_TRUE(is_unitary(identity_set(3)));
  EXPECT_THROW(is_unitary(bb1()), DomainError);
  EXPECT_FALSE(is_unitary(LineSet::from_rows({{Surd(1), Surd(0)}, {Surd(1), Surd(0)}})));
}

TEST(IsEtf, Examples) {
  EXPECT_TRUE(is_etf(construct::simplex(3)));
  EXPECT_TRUE(is_etf(fano()));
  EXPECT_TRUE(is_etf(bb1()));
  EXPECT_FALSE(is_etf(construct::family_one_third(4)));
}

TEST(Rank, ExactDependencies) {
  const Surd r2 = Surd::sqrt(2), r3 = Surd::sqrt(3), r6 = Surd::sqrt(6);
  Matrix a(2, 2);
  a(0, 0) = r2;
  a(0, 1) = r3;
  a(1, 0) = r6;
  a(1, 1) = Surd(3);
  EXPECT_EQ(rank(a), 1u);
  a(1, 1) = Surd(3) + Surd(make_rational(1, 1000000007));
  EXPECT_EQ(rank(a), 2u);
  EXPECT_EQ(rank(construct::simplex(3)), 3u);
  EXPECT_EQ(rank(construct::two_angle(5)), 5u);
  EXPECT_EQ(rank(Matrix(3, 3)), 0u);
}

TEST(ReportJson, StableFields) {
  auto j = to_json(verify_equiangular(bb1()));
  for (const char* k : {"m", "n", "status", "common_angle", "angle_spectrum", "offending_pairs", "is_tight",
                        "frame_bound", "rank", "welch_equality", "gerzon_slack", "neumann_status"})
    EXPECT_TRUE(j.contains(k)) << k;
  EXPECT_EQ(j["status"], "equiangular");
  EXPECT_EQ(j["neumann_status"], "not-applicable");
  EXPECT_EQ(to_json(verify_equiangular(LineSet::from_rows({{Surd(2)}})))["status"], "not-unit-norm");
}

TEST(FramesProperties, RowSignInvariance) {
  std::mt19937 rng(17);
  for (const auto& ls : property_sets()) {
    const auto base = verify_equiangular(ls);
    const bool etf = is_etf(ls);
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<Surd> e = ls.entries();
      for (std::size_t i = 0; i < ls.m(); ++i) {
        if (rng() % 2 == 0) continue;
        for (std::size_t j = 0; j < ls.n(); ++j) e[i * ls.n() + j] = -e[i * ls.n() + j];
      }
      LineSet flipped(ls.m(), ls.n(), e);
      expect_same_invariants(base, verify_equiangular(flipped));
      EXPECT_EQ(etf, is_etf(flipped));
    }
  }
}

TEST(FramesProperties, PermutationInvariance) {
  std::mt19937 rng(23);
  for (const auto& ls : property_sets()) {
    const auto base = verify_equiangular(ls);
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<std::size_t> rp(ls.m()), cp(ls.n());
      std::iota(rp.begin(), rp.end(), 0);
      std::iota(cp.begin(), cp.end(), 0);
      std::shuffle(rp.begin(), rp.end(), rng);
      std::shuffle(cp.begin(), cp.end(), rng);
      std::vector<Surd> e;
      for (std::size_t i : rp)
        for (std::size_t j : cp) e.push_back(ls.at(i, j));
      auto rep = verify_equiangular(LineSet(ls.m(), ls.n(), e));
      expect_same_invariants(base, rep);
      EXPECT_EQ(base.offending_pairs.size(), rep.offending_pairs.size());
    }
  }
}

TEST(FramesProperties, WelchEqualityIffTight) {
  for (const auto& ls : property_sets()) {
    auto rep = verify_equiangular(ls);
    if (rep.status != Status::equiangular || rep.m < 2) continue;
    EXPECT_EQ(rep.welch_equality, rep.is_tight);
    if (rep.is_tight) EXPECT_EQ(rep.frame_bound, make_rational(static_cast<long>(rep.m), static_cast<long>(rep.rank)));
  }
}

TEST(FramesProperties, GramAgreesWithFloatOracle) {
  for (const auto& ls : property_sets()) {
    const Matrix g = gram(ls);
    const auto og = oracle::gram(doubles(ls));
    for (std::size_t i = 0; i < ls.m(); ++i)
      for (std::size_t j = 0; j < ls.m(); ++j) ASSERT_NEAR(g(i, j).to_double(), og[i][j], 1e-10);
  }
}
