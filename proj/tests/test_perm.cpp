#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fixglue/perm.hpp"
#include "oracles.hpp"

using namespace fixglue;

namespace {

Perm random_perm(std::mt19937_64& rng, int n) {
  std::vector<int> img(static_cast<size_t>(n));
  std::iota(img.begin(), img.end(), 0);
  std::shuffle(img.begin(), img.end(), rng);
  return Perm::from_images(std::move(img));
}

}  // namespace

TEST_CASE("compose / inverse / conjugate basics") {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 50; ++t) {
    Perm p = random_perm(rng, 9);
    CHECK((p * p.inverse()).is_identity());
    Perm tperm = random_perm(rng, 9);
    CHECK(Perm(9).conjugated_by(tperm).is_identity());
    CHECK(p.conjugated_by(tperm).cycle_type() == p.cycle_type());
  }
  // (1,2) conjugated by (2,3) is (1,3)
  Perm a = Perm::from_cycles(4, "(1,2)");
  Perm t = Perm::from_cycles(4, "(2,3)");
  CHECK(a.conjugated_by(t) == Perm::from_cycles(4, "(1,3)"));
}

TEST_CASE("degree mismatch raises") {
  CHECK_THROWS_AS(Perm(3) * Perm(4), std::invalid_argument);
  CHECK_THROWS_AS(Perm::from_cycles(4, "(1,2)").apply(BitVec(3)), std::invalid_argument);
}

TEST_CASE("vector action") {
  BitVec v = BitVec::from_string("100");
  CHECK(Perm(3).apply(v) == v);
  CHECK(Perm::from_cycles(3, "(1,2,3)").apply(v) == BitVec::from_string("010"));

  std::mt19937_64 rng(2);
  for (int t = 0; t < 50; ++t) {
    int n = 3 + static_cast<int>(rng() % 10);
    Perm s = random_perm(rng, n), u = random_perm(rng, n);
    BitVec w(n);
    for (int i = 0; i < n; ++i)
      if (rng() & 1) w.set(i, true);
    // right action and weight preservation
    CHECK(u.apply(s.apply(w)) == (s * u).apply(w));
    CHECK(s.apply(w).weight() == w.weight());
    // out[i] = v[sigma^{-1}(i)]
    Perm si = s.inverse();
    BitVec img = s.apply(w);
    for (int i = 0; i < n; ++i) CHECK(img.get(i) == w.get(si.image(i)));
  }
}

TEST_CASE("cycle type / fixed point free") {
  CHECK(Perm(4).cycle_type() == std::vector<int>{1, 1, 1, 1});
  CHECK_FALSE(Perm(4).is_fixed_point_free());
  Perm p = Perm::from_cycles(4, "(1,2)(3,4)");
  CHECK(p.cycle_type() == std::vector<int>{2, 2});
  CHECK(p.is_fixed_point_free());
  CHECK(p.is_involution());
}

TEST_CASE("cycle string round trip and bracket parsing") {
  Perm p = Perm::from_cycles(6, "(1,2)(3,5,4)");
  CHECK(p.to_cycle_string() == "(1,2)(3,5,4)");
  CHECK(Perm::from_cycles(6, p.to_cycle_string()) == p);
  CHECK(Perm(5).to_cycle_string() == "()");
  auto q = Perm::parse(4, "[2,1,4,3]");
  REQUIRE(q.has_value());
  CHECK(*q == Perm::from_cycles(4, "(1,2)(3,4)"));
  CHECK_FALSE(Perm::parse(4, "nonsense").has_value());
}

TEST_CASE("conjugator_in_sym") {
  Perm s = Perm::from_cycles(4, "(1,2)");
  SUBCASE("same element") {
    auto t = conjugator_in_sym(s, s);
    REQUIRE(t.has_value());
    CHECK(s.conjugated_by(*t) == s);
  }
  SUBCASE("disjoint transpositions") {
    Perm tau = Perm::from_cycles(4, "(3,4)");
    auto t = conjugator_in_sym(s, tau);
    REQUIRE(t.has_value());
    CHECK(s.conjugated_by(*t) == tau);
  }
  SUBCASE("cycle type obstruction") {
    CHECK_FALSE(conjugator_in_sym(s, Perm::from_cycles(4, "(1,2,3)")).has_value());
  }
  SUBCASE("random conjugates at degree 8") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 100; ++t) {
      Perm a = random_perm(rng, 8), c = random_perm(rng, 8);
      Perm b = a.conjugated_by(c);
      auto w = conjugator_in_sym(a, b);
      REQUIRE(w.has_value());
      CHECK(a.conjugated_by(*w) == b);
    }
  }
}

TEST_CASE("klein_pair_conjugator validated against brute force at degrees 4 and 8") {
  for (int n : {4, 8}) {
    Perm chi = Perm::from_cycles(n, n == 4 ? "(1,2)(3,4)" : "(1,2)(3,4)(5,6)(7,8)");
    Perm mu = Perm::from_cycles(n, n == 4 ? "(1,3)(2,4)" : "(1,3)(2,4)(5,7)(6,8)");
    auto perms = oracle::all_perms(n);
    int checked = 0;
    for (const Perm& a : perms) {
      if (!a.is_involution()) continue;
      for (const Perm& b : perms) {
        if (!b.is_involution() || !(a * b == b * a)) continue;
        // brute force: does any t conjugate (a, b) onto (chi, mu)?
        bool exists = false;
        for (const Perm& t : perms)
          if (a.conjugated_by(t) == chi && b.conjugated_by(t) == mu) {
            exists = true;
            break;
          }
        auto got = klein_pair_conjugator(a, b, chi, mu);
        CHECK(got.has_value() == exists);
        if (got) {
          CHECK(a.conjugated_by(*got) == chi);
          CHECK(b.conjugated_by(*got) == mu);
        }
        if (++checked >= (n == 4 ? 100000 : 400)) break;
      }
      if (checked >= (n == 4 ? 100000 : 400)) break;
    }
  }
}

TEST_CASE("klein_pair_conjugator rejects pairs with fixed points") {
  Perm chi = Perm::from_cycles(8, "(1,2)(3,4)(5,6)(7,8)");
  Perm mu = Perm::from_cycles(8, "(1,3)(2,4)(5,7)(6,8)");
  Perm bad = Perm::from_cycles(8, "(1,2)(3,4)(5,6)");  // fixes 7, 8
  Perm partner = Perm::from_cycles(8, "(1,3)(2,4)(7,8)");
  CHECK((bad * partner == partner * bad));
  CHECK_FALSE(klein_pair_conjugator(bad, partner, chi, mu).has_value());
}

TEST_CASE("induced_pair_perm") {
  int n = 8;
  Perm alpha = Perm::from_cycles(n, "(1,2)(3,4)(5,6)(7,8)");
  Perm beta = Perm::from_cycles(n, "(1,3)(2,4)(5,7)(6,8)");
  Perm gamma = Perm::from_cycles(n, "(1,5)(2,6)(3,7)(4,8)");
  CHECK(induced_pair_perm(alpha, alpha).is_identity());
  CHECK(induced_pair_perm(beta, alpha) == Perm::from_cycles(4, "(1,2)(3,4)"));
  CHECK(induced_pair_perm(gamma, alpha) == Perm::from_cycles(4, "(1,3)(2,4)"));
  CHECK_THROWS_AS(induced_pair_perm(Perm::from_cycles(n, "(1,3)"), alpha), std::invalid_argument);

  // homomorphism property on the centralizer
  std::mt19937_64 rng(4);
  auto cperms = oracle::all_perms(6);
  Perm sig = Perm::from_cycles(6, "(1,2)(3,4)(5,6)");
  std::vector<Perm> cent;
  for (const Perm& p : cperms)
    if (p * sig == sig * p) cent.push_back(p);
  for (int t = 0; t < 200; ++t) {
    const Perm& r1 = cent[rng() % cent.size()];
    const Perm& r2 = cent[rng() % cent.size()];
    CHECK(induced_pair_perm(r1 * r2, sig) == induced_pair_perm(r1, sig) * induced_pair_perm(r2, sig));
  }
}
