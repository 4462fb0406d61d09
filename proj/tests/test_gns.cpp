#include <doctest.h>

#include "freestar/gns.hpp"
#include "freestar/parser.hpp"
#include "testutil.hpp"

using namespace freestar;
using testutil::Rng;

namespace {

Polynomial P(const std::string& s, int g = 2) {
  return parse_poly(s, g, FieldMode::Rational);
}

IdealPresentation commutator_ideal() {
  return IdealPresentation::from_generators({P("x1*x2 - x2*x1")});
}

bool all_zero(const std::vector<Scalar>& v) {
  for (const auto& c : v)
    if (!c.is_zero()) return false;
  return true;
}

}  // namespace

TEST_CASE("ideal truncation adjoins the analytic monomials of degree d+1") {
  IdealPresentation t = truncate_ideal(commutator_ideal(), 1);
  CHECK(t.homogeneous);
  CHECK(t.analytic_generated);
  CHECK(t.star_closed);
  // commutator + 4 analytic monomials of degree 2, star-closed
  std::vector<std::string> got;
  for (const auto& p : t.generators) got.push_back(format_poly(p));
  CHECK(std::find(got.begin(), got.end(), "x1*x2") != got.end());
  CHECK(std::find(got.begin(), got.end(), "x2*x1") != got.end());
  CHECK(std::find(got.begin(), got.end(), "x1'*x2'") != got.end());

  IdealPresentation tx = truncate_ideal(
      IdealPresentation::from_generators({P("x1")}), 0);
  std::vector<std::string> gx;
  for (const auto& p : tx.generators) gx.push_back(format_poly(p));
  CHECK(gx == std::vector<std::string>{"x1", "x2", "x1'", "x2'"});

  IdealPresentation tz = truncate_ideal(IdealPresentation::trivial(2, FieldMode::Rational), 1);
  CHECK(tz.generators.size() == 8);  // 4 analytic degree-2 monomials + stars
}

TEST_CASE("truncation agrees with the ideal up to degree d") {
  IdealPresentation I = commutator_ideal();
  int d = 2;
  GroebnerBasis gb_full = complete(I, 6);
  GroebnerBasis gb_trunc = complete(truncate_ideal(I, d), 6);
  Rng rng(47);
  for (int t = 0; t < 40; ++t) {
    Polynomial p = rng.poly(2, FieldMode::Rational, d);
    CHECK((gb_full.member(p) == Membership::member) ==
          (gb_trunc.member(p) == Membership::member));
  }
}

TEST_CASE("witness for the commutator ideal at degree 1") {
  GNSWitness w = build_witness(commutator_ideal(), 1);
  Matrix x1x2 = w.Xop[0] * w.Xop[1];
  Matrix x2x1 = w.Xop[1] * w.Xop[0];
  CHECK(x1x2 == x2x1);
  CHECK(x1x2.is_zero());  // x1x2 lies in the truncated ideal
  CHECK_FALSE(w.Xop[0].is_zero());
  CHECK_FALSE(w.Xop[1].is_zero());

  WitnessReport rep = verify_witness(w, commutator_ideal(),
                                     {P("x1"), P("x2"), P("x1'")});
  CHECK(rep.generators_vanish);
  CHECK(rep.probes_separate);
  CHECK(rep.adjoint_identity);
}

TEST_CASE("witness separates all low-degree non-members (commutator, d = 2)") {
  IdealPresentation I = commutator_ideal();
  GNSWitness w = build_witness(I, 2);
  for (const auto& gen : star_ideal_generators(I.generators))
    CHECK(evaluate_witness(gen, w).is_zero());

  for (const auto& m : standard_monomials(w.gb, 2)) {
    Polynomial q = Polynomial::monomial(2, FieldMode::Rational, m);
    CHECK_FALSE(all_zero(w.coords_of(q)));
  }
  WitnessReport rep = verify_witness(w, I, {P("x1"), P("x2"), P("x1*x1")});
  CHECK(rep.ok());
}

TEST_CASE("witness for a principal monomial ideal: x1 acts as zero") {
  IdealPresentation I = IdealPresentation::from_generators({P("x1")});
  GNSWitness w = build_witness(I, 1);
  CHECK(w.Xop[0].is_zero());
  CHECK_FALSE(w.Xop[1].is_zero());
  WitnessReport rep = verify_witness(w, I, {P("x2")});
  CHECK(rep.ok());
}

TEST_CASE("witness for the zero ideal: truncated-Fock-like separation") {
  IdealPresentation I = IdealPresentation::trivial(1, FieldMode::Rational);
  GNSWitness w = build_witness(I, 1);
  for (const auto& s : {"1", "x1", "x1'", "x1 + 2*x1'", "1 - x1"})
    CHECK_FALSE(all_zero(w.coords_of(P(s, 1))));
}

TEST_CASE("probe degree guard") {
  GNSWitness w = build_witness(commutator_ideal(), 1);
  CHECK_THROWS_AS(verify_witness(w, commutator_ideal(), {P("x1*x1")}),
                  PreconditionError);
}

TEST_CASE("evaluation is a *-homomorphism for the Gram adjoint") {
  GNSWitness w = build_witness(commutator_ideal(), 1);
  Rng rng(53);
  for (int t = 0; t < 20; ++t) {
    Polynomial p = rng.poly(2, FieldMode::Rational, 2);
    Polynomial q = rng.poly(2, FieldMode::Rational, 2);
    CHECK(evaluate_witness(p * q, w) == evaluate_witness(p, w) * evaluate_witness(q, w));
    Matrix lhs = evaluate_witness(involution(p), w);
    Matrix rhs = solve(w.gram, evaluate_witness(p, w).conj_transpose() * w.gram);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("degree-d faithfulness over all monomials") {
  for (auto I : {commutator_ideal(), IdealPresentation::from_generators({P("x1")})}) {
    int d = 2;
    GNSWitness w = build_witness(I, d);
    std::vector<Word> level{Word::one()};
    std::vector<Word> all{Word::one()};
    for (int k = 1; k <= d; ++k) {
      std::vector<Word> next;
      for (const auto& ww : level)
        for (int idx = 1; idx <= 2; ++idx)
          for (bool st : {false, true})
            next.push_back(ww.append(Letter(static_cast<uint32_t>(idx), st)));
      for (const auto& ww : next) all.push_back(ww);
      level = std::move(next);
    }
    for (const auto& m : all) {
      Polynomial q = Polynomial::monomial(2, FieldMode::Rational, m);
      Matrix qX = evaluate_witness(q, w);
      if (w.gb.member(q) == Membership::member)
        CHECK(qX.is_zero());
      else
        CHECK_FALSE(qX.is_zero());
    }
  }
}

TEST_CASE("homogeneous scaling identity") {
  GNSWitness w = build_witness(commutator_ideal(), 2);
  Rng rng(59);
  for (int t = 0; t < 20; ++t) {
    int k = static_cast<int>(rng.range(1, 2));
    Polynomial p = rng.homogeneous_poly(2, FieldMode::Rational, k);
    Scalar lambda(Rational(rng.range(1, 5), rng.range(1, 5)));
    std::vector<Matrix> sop, sadj;
    for (const auto& m : w.Xop) sop.push_back(m.scaled(lambda));
    for (const auto& m : w.Xadj) sadj.push_back(m.scaled(lambda));
    Matrix lhs = evaluate_with_adjoints(p, sop, sadj);
    Scalar lk(1);
    for (int i = 0; i < k; ++i) lk *= lambda;
    CHECK(lhs == evaluate_witness(p, w).scaled(lk));
  }
}

TEST_CASE("bounded family: unit norm bounds and preserved vanishing") {
  IdealPresentation I = commutator_ideal();
  auto family = bounded_family(I, 2);
  REQUIRE(family.size() == 2);
  for (const auto& sw : family) {
    CHECK(sw.norm_bound <= Rational(1));
    for (const auto& gen : star_ideal_generators(I.generators))
      CHECK(evaluate_with_adjoints(gen, sw.witness.Xop, sw.witness.Xadj).is_zero());
    CHECK_FALSE(sw.witness.Xop[0].is_zero());
  }

  IdealPresentation Ix = IdealPresentation::from_generators({P("x1")});
  for (const auto& sw : bounded_family(Ix, 2)) CHECK(sw.witness.Xop[0].is_zero());
}

TEST_CASE("witness kernel does not depend on the constant policy") {
  IdealPresentation I = commutator_ideal();
  GNSWitness a = build_witness(I, 1, CSearchPolicy::DoublingScan);
  GNSWitness b = build_witness(I, 1, CSearchPolicy::PowersOfThree);
  CHECK(a.dim() == b.dim());
  CHECK(a.basis == b.basis);
  // identical vanishing pattern over the spanning classes
  for (const auto& [w, coords] : a.class_coords)
    CHECK(all_zero(coords) == all_zero(b.class_coords.at(w)));
}

TEST_CASE("witness construction is reproducible bit for bit") {
  IdealPresentation I = commutator_ideal();
  GNSWitness a = build_witness(I, 1);
  GNSWitness b = build_witness(I, 1);
  GNSWitness c = build_witness(I, 1, CSearchPolicy::BracketBinary);
  CHECK(a.gram == b.gram);
  CHECK(a.gram == c.gram);
  CHECK(a.basis == c.basis);
  for (int i = 0; i < a.g; ++i) {
    CHECK(a.Xop[static_cast<size_t>(i)] == c.Xop[static_cast<size_t>(i)]);
    CHECK(a.Xadj[static_cast<size_t>(i)] == c.Xadj[static_cast<size_t>(i)]);
  }
}

TEST_CASE("orthonormal display export approximately represents the quotient") {
  GNSWitness w = build_witness(commutator_ideal(), 1);
  auto xs = orthonormal_display(w);
  REQUIRE(xs.size() == 2);
  int n = w.dim();
  auto mul = [n](const std::vector<std::vector<double>>& a,
                 const std::vector<std::vector<double>>& b) {
    std::vector<std::vector<double>> out(static_cast<size_t>(n),
                                         std::vector<double>(static_cast<size_t>(n), 0.0));
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k)
        for (int j = 0; j < n; ++j)
          out[static_cast<size_t>(i)][static_cast<size_t>(j)] +=
              a[static_cast<size_t>(i)][static_cast<size_t>(k)] * b[static_cast<size_t>(k)][static_cast<size_t>(j)];
    return out;
  };
  // the commuting relation survives the float change of basis
  auto ab = mul(xs[0], xs[1]);
  auto ba = mul(xs[1], xs[0]);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      CHECK(std::abs(ab[static_cast<size_t>(i)][static_cast<size_t>(j)] -
                     ba[static_cast<size_t>(i)][static_cast<size_t>(j)]) < 1e-9);
  // in the orthonormal basis the Gram adjoint becomes the plain transpose
  auto adj = orthonormal_display(w);  // recompute for determinism check
  for (size_t i = 0; i < xs.size(); ++i) CHECK(xs[i] == adj[i]);
}

TEST_CASE("non-homogeneous or non-analytic ideals are rejected") {
  CHECK_THROWS_AS(build_witness(IdealPresentation::from_generators({P("1 - x1'*x1", 1)}), 1),
                  PreconditionError);
  CHECK_THROWS_AS(build_witness(IdealPresentation::from_generators({P("x1*x2 - x2*x1 + 1")}), 1),
                  PreconditionError);
}
