#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "fixglue/permgroup.hpp"
#include "fixglue/util.hpp"
#include "oracles.hpp"

using namespace fixglue;

namespace {

std::set<Perm> element_set(const PermGroup& g, uint64_t bound = kDefaultElementsBound) {
  auto e = g.elements(bound);
  return {e.begin(), e.end()};
}

std::set<Perm> closure(int degree, const std::vector<Perm>& gens) {
  std::set<Perm> out{Perm(degree)};
  std::vector<Perm> queue{Perm(degree)};
  while (!queue.empty()) {
    Perm p = queue.back();
    queue.pop_back();
    for (const Perm& s : gens) {
      Perm q = p * s;
      if (out.insert(q).second) queue.push_back(q);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("trivial and small groups") {
  PermGroup t = PermGroup::trivial(5);
  CHECK(t.order() == 1);
  CHECK(t.elements().size() == 1);
  CHECK(t.contains(Perm(5)));
  CHECK_FALSE(t.contains(Perm::from_cycles(5, "(1,2)")));

  PermGroup s3 = PermGroup::generated(3, {Perm::from_cycles(3, "(1,2)"), Perm::from_cycles(3, "(1,2,3)")});
  CHECK(s3.order() == 6);
  auto elems = s3.elements();
  CHECK(elems.size() == 6);
  CHECK(std::set<Perm>(elems.begin(), elems.end()).size() == 6);
}

TEST_CASE("chain order equals brute-force closure on random groups") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 25; ++t) {
    int n = 4 + static_cast<int>(rng() % 5);
    std::vector<Perm> gens;
    int ng = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < ng; ++i) {
      std::vector<int> img(static_cast<size_t>(n));
      std::iota(img.begin(), img.end(), 0);
      std::shuffle(img.begin(), img.end(), rng);
      gens.push_back(Perm::from_images(img));
    }
    auto cl = closure(n, gens);
    if (cl.size() > 10000) continue;
    PermGroup g = PermGroup::generated(n, gens);
    CHECK(g.order() == cl.size());
    for (const Perm& p : cl) CHECK(g.contains(p));
    // membership is exact, not just order-matching
    auto all = oracle::all_perms(n);
    for (int probe = 0; probe < 40; ++probe) {
      const Perm& p = all[rng() % all.size()];
      CHECK(g.contains(p) == (cl.count(p) > 0));
    }
  }
}

TEST_CASE("elements respects the bound") {
  PermGroup s5 = PermGroup::generated(5, {Perm::from_cycles(5, "(1,2)"), Perm::from_cycles(5, "(1,2,3,4,5)")});
  CHECK(s5.order() == 120);
  CHECK_THROWS(s5.elements(100));
  CHECK(s5.elements(120).size() == 120);
}

TEST_CASE("order of the Klein pair group at degree 36") {
  Perm chi = Perm::from_cycles(36, "(1,2)(3,4)(5,6)(7,8)(9,10)(11,12)(13,14)(15,16)(17,18)(19,20)(21,22)(23,24)(25,26)(27,28)(29,30)(31,32)(33,34)(35,36)");
  std::string mu_s;
  for (int b = 0; b < 9; ++b) {
    int x = 4 * b;
    mu_s += "(" + std::to_string(x + 1) + "," + std::to_string(x + 3) + ")(" + std::to_string(x + 2) + "," +
            std::to_string(x + 4) + ")";
  }
  Perm mu = Perm::from_cycles(36, mu_s);
  PermGroup g = PermGroup::generated(36, {chi, mu});
  CHECK(g.order() == 4);
  auto reps = g.involution_class_reps(true);
  CHECK(reps.size() == 3);  // abelian: chi, mu, chi*mu are singleton classes
}

TEST_CASE("symmetric group facade") {
  PermGroup s72 = PermGroup::symmetric(72);
  CHECK(s72.is_natural_symmetric());
  CHECK(s72.contains(Perm::from_cycles(72, "(1,72)")));
  CHECK_FALSE(s72.has_u64_order());
  PermGroup s8 = PermGroup::symmetric(8);
  CHECK(s8.order() == 40320);
}

TEST_CASE("centralizer vs brute force at small degree") {
  auto s4_elems = oracle::all_perms(4);
  PermGroup s4 = PermGroup::symmetric(4);

  SUBCASE("of the trivial group") {
    PermGroup c = PermGroup::centralizer(s4, PermGroup::trivial(4));
    CHECK(c.order() == 24);
  }
  SUBCASE("of the regular Klein group") {
    PermGroup v = PermGroup::generated(4, {Perm::from_cycles(4, "(1,2)(3,4)"), Perm::from_cycles(4, "(1,3)(2,4)")});
    PermGroup c = PermGroup::centralizer(s4, v);
    auto brute = oracle::brute_centralizer(s4_elems, v.generators());
    CHECK(c.order() == brute.size());
    CHECK(c.order() == 4);
    for (const Perm& p : brute) CHECK(c.contains(p));
  }
  SUBCASE("backtrack path inside a proper subgroup") {
    // A4 = <(1,2,3),(2,3,4)>, centralizer of (1,2)(3,4) in A4 is the Klein group
    PermGroup a4 = PermGroup::generated(4, {Perm::from_cycles(4, "(1,2,3)"), Perm::from_cycles(4, "(2,3,4)")});
    CHECK(a4.order() == 12);
    PermGroup h = PermGroup::generated(4, {Perm::from_cycles(4, "(1,2)(3,4)")});
    PermGroup c = PermGroup::centralizer(a4, h);
    auto brute = oracle::brute_centralizer(a4.elements(), h.generators());
    CHECK(c.order() == brute.size());
    for (const Perm& p : brute) CHECK(c.contains(p));
  }
}

TEST_CASE("centralizer of fpf involutions in S8: order 2^4 * 4! = 384") {
  Perm a = Perm::from_cycles(8, "(1,2)(3,4)(5,6)(7,8)");
  PermGroup c = PermGroup::centralizer(PermGroup::symmetric(8), PermGroup::generated(8, {a}));
  CHECK(c.order() == 384);
  auto brute = oracle::brute_centralizer(oracle::all_perms(8), {a});
  CHECK(brute.size() == 384);
  for (const Perm& p : brute) CHECK(c.contains(p));
}

TEST_CASE("structural centralizer of a free Klein action matches brute force") {
  Perm chi = Perm::from_cycles(8, "(1,2)(3,4)(5,6)(7,8)");
  Perm mu = Perm::from_cycles(8, "(1,3)(2,4)(5,7)(6,8)");
  PermGroup c = PermGroup::centralizer(PermGroup::symmetric(8), PermGroup::generated(8, {chi, mu}));
  CHECK(c.order() == 32);  // 4^2 * 2!
  auto brute = oracle::brute_centralizer(oracle::all_perms(8), {chi, mu});
  CHECK(brute.size() == 32);
  for (const Perm& p : brute) CHECK(c.contains(p));
  CHECK(element_set(c).size() == 32);
}

TEST_CASE("general backtrack centralizer agrees with brute force inside Aut-sized groups") {
  // S4 x S4 embedded at degree 8, centralizer of a product involution
  std::vector<Perm> gens = {Perm::from_cycles(8, "(1,2)"), Perm::from_cycles(8, "(1,2,3,4)"),
                            Perm::from_cycles(8, "(5,6)"), Perm::from_cycles(8, "(5,6,7,8)")};
  PermGroup g = PermGroup::generated(8, gens);
  CHECK(g.order() == 576);
  PermGroup h = PermGroup::generated(8, {Perm::from_cycles(8, "(1,2)(5,6)(7,8)")});
  PermGroup c = PermGroup::centralizer(g, h);
  auto brute = oracle::brute_centralizer(g.elements(), h.generators());
  CHECK(c.order() == brute.size());
  for (const Perm& p : brute) CHECK(c.contains(p));
}

TEST_CASE("right transversal") {
  PermGroup s3 = PermGroup::generated(3, {Perm::from_cycles(3, "(1,2)"), Perm::from_cycles(3, "(1,2,3)")});
  SUBCASE("H = G") {
    auto reps = s3.right_transversal(s3);
    CHECK(reps.size() == 1);
    CHECK(reps[0].is_identity());
  }
  SUBCASE("index 3") {
    PermGroup h = PermGroup::generated(3, {Perm::from_cycles(3, "(1,2)")});
    auto reps = s3.right_transversal(h);
    CHECK(reps.size() == 3);
    for (size_t i = 0; i < reps.size(); ++i)
      for (size_t j = 0; j < reps.size(); ++j)
        if (i != j) CHECK_FALSE(h.contains(reps[i] * reps[j].inverse()));
  }
  SUBCASE("not a subgroup") {
    PermGroup h = PermGroup::generated(3, {Perm::from_cycles(3, "(1,2)")});
    PermGroup g = PermGroup::generated(3, {Perm::from_cycles(3, "(1,2,3)")});
    CHECK_THROWS_AS(g.right_transversal(h), std::invalid_argument);
  }
  SUBCASE("inside the degree-8 Klein centralizer: order-8 subgroup has 4 cosets") {
    Perm chi = Perm::from_cycles(8, "(1,2)(3,4)(5,6)(7,8)");
    Perm mu = Perm::from_cycles(8, "(1,3)(2,4)(5,7)(6,8)");
    PermGroup c = PermGroup::centralizer(PermGroup::symmetric(8), PermGroup::generated(8, {chi, mu}));
    REQUIRE(c.order() == 32);
    // subgroup of order 8: the Klein translations on each orbit
    PermGroup h = PermGroup::generated(
        8, {Perm::from_cycles(8, "(1,2)(3,4)"), Perm::from_cycles(8, "(1,3)(2,4)"), Perm::from_cycles(8, "(5,6)(7,8)")});
    REQUIRE(h.order() == 8);
    REQUIRE(h.is_subgroup_of(c));
    auto reps = c.right_transversal(h);
    CHECK(reps.size() == 4);
    for (size_t i = 0; i < reps.size(); ++i)
      for (size_t j = 0; j < reps.size(); ++j)
        if (i != j) CHECK_FALSE(h.contains(reps[i] * reps[j].inverse()));
  }
}

TEST_CASE("involution class representatives") {
  SUBCASE("S4 fpf classes") {
    PermGroup s4 = PermGroup::generated(4, {Perm::from_cycles(4, "(1,2)"), Perm::from_cycles(4, "(1,2,3,4)")});
    auto reps = s4.involution_class_reps(true);
    REQUIRE(reps.size() == 1);
    CHECK(reps[0].cycle_type() == std::vector<int>{2, 2});
    auto all = s4.involution_class_reps(false);
    CHECK(all.size() == 2);  // transpositions and double transpositions
  }
  SUBCASE("classes are exhaustive and duplicate-free (vs brute force)") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 10; ++t) {
      int n = 5 + static_cast<int>(rng() % 3);
      std::vector<Perm> gens;
      for (int i = 0; i < 2; ++i) {
        std::vector<int> img(static_cast<size_t>(n));
        std::iota(img.begin(), img.end(), 0);
        std::shuffle(img.begin(), img.end(), rng);
        gens.push_back(Perm::from_images(img));
      }
      PermGroup g = PermGroup::generated(n, gens);
      if (g.order() > 5000) continue;
      auto elems = g.elements();
      auto reps = g.involution_class_reps(false);
      // every involution is conjugate to exactly one representative
      for (const Perm& x : elems) {
        if (!x.is_involution()) continue;
        int hits = 0;
        for (const Perm& r : reps) {
          bool conj = false;
          for (const Perm& c : elems)
            if (x.conjugated_by(c) == r) {
              conj = true;
              break;
            }
          hits += conj ? 1 : 0;
        }
        CHECK(hits == 1);
      }
    }
  }
}

TEST_CASE("order string uses exact arithmetic") {
  PermGroup s8 = PermGroup::generated(8, {Perm::from_cycles(8, "(1,2)"), Perm::from_cycles(8, "(1,2,3,4,5,6,7,8)")});
  CHECK(s8.order_string() == "40320");
  // 2^36 * 1000000007 = 68719476736 * 10^9 + 68719476736 * 7
  CHECK(product_decimal({uint64_t{1} << 36, 1000000007}) == "68719477217036337152");
  CHECK(product_decimal({}) == "1");
}
