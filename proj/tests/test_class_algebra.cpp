#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <random>

#include "classpower/classpower.hpp"
#include "oracles.hpp"

using namespace classpower;

namespace {

FiniteGroup build_named(const std::string& name) {
  auto cat = build_catalogue();
  return build_entry(find_catalogue_entry(cat, name)).group;
}

struct GroupFixture {
  FiniteGroup G;
  ClassDecomposition dec;
  explicit GroupFixture(const std::string& name) : G(build_named(name)), dec(conjugacy_classes(G)) {}
};

ClassIndex class_with(const ClassDecomposition& dec, std::uint64_t order, std::uint64_t size) {
  for (ClassIndex c = 0; c < dec.count(); ++c)
    if (dec.element_order_of_class[c] == order && dec.size(c) == size) return c;
  throw std::runtime_error("no class with the requested order/size");
}

}  // namespace

TEST_CASE("BigUint arithmetic") {
  CHECK(BigUint{0}.is_zero());
  CHECK(BigUint{7}.to_string() == "7");
  CHECK((BigUint{1} + BigUint{2}) == BigUint{3});
  CHECK(BigUint::pow(24, 7) == BigUint{4586471424ull});
  // past 64 bits: 720^8
  CHECK(BigUint::pow(720, 8).to_string() == "72220413630873600000000");
  CHECK(BigUint::pow(720, 8) > BigUint::pow(720, 7));

  // agreement with native arithmetic on random products
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    std::uint64_t a = rng() % (1ull << 31), b = rng() % (1ull << 31);
    CHECK((BigUint{a} * BigUint{b}).as_u64() == a * b);
    CHECK((BigUint{a} + BigUint{b}).as_u64() == a + b);
    CHECK((BigUint{a} < BigUint{b}) == (a < b));
  }
}

TEST_CASE("class product against the all-pairs oracle") {
  GroupFixture s3("S3");
  const auto& dec = s3.dec;

  // multiplying by the trivial class is the identity
  for (ClassIndex c = 0; c < dec.count(); ++c) {
    ClassMultiset ms = class_product(s3.G, dec, c, 0);
    REQUIRE(ms.multiplicities.size() == 1);
    CHECK(ms.multiplicities.begin()->first == c);
    CHECK(ms.multiplicities.begin()->second == BigUint{1});
  }

  // S3 transpositions: K^2 = 3*1 + 3*C with C the 3-cycles
  ClassIndex k = class_with(dec, 2, 3);
  ClassIndex c3 = class_with(dec, 3, 2);
  ClassMultiset sq = class_product(s3.G, dec, k, k);
  REQUIRE(sq.multiplicities.size() == 2);
  CHECK(sq.multiplicities.at(0) == BigUint{3});
  CHECK(sq.multiplicities.at(c3) == BigUint{3});

  // every pair on S3 and A4 matches the naive all-pairs histogram
  for (const char* name : {"S3", "A4"}) {
    GroupFixture f(name);
    for (ClassIndex i = 0; i < f.dec.count(); ++i) {
      for (ClassIndex j = 0; j < f.dec.count(); ++j) {
        auto hist = oracles::naive_product_histogram(f.G, f.dec.classes[i].members,
                                                     f.dec.classes[j].members);
        ClassMultiset ms = class_product(f.G, f.dec, i, j);
        for (ClassIndex l = 0; l < f.dec.count(); ++l) {
          std::uint64_t expected = 0;
          auto it = hist.find(f.dec.classes[l].rep);
          if (it != hist.end()) expected = it->second;
          auto got = ms.multiplicities.find(l);
          CHECK((got == ms.multiplicities.end() ? 0 : got->second.as_u64()) == expected);
          // multiplicity is constant across the output class
          for (ElementIndex e : f.dec.classes[l].members) {
            auto eit = hist.find(e);
            CHECK((eit == hist.end() ? 0 : eit->second) == expected);
          }
        }
      }
    }
  }
}

TEST_CASE("mass conservation on every product of several groups") {
  for (const char* name : {"S3", "A4", "M16", "SL23", "Z3:Z4"}) {
    GroupFixture f(name);
    for (ClassIndex i = 0; i < f.dec.count(); ++i)
      for (ClassIndex j = 0; j < f.dec.count(); ++j) {
        ClassMultiset ms = class_product(f.G, f.dec, i, j);
        CHECK(ms.total_mass(f.dec) == BigUint{f.dec.size(i)} * BigUint{f.dec.size(j)});
      }
  }
}

TEST_CASE("class powers") {
  GroupFixture a4("A4");
  ClassIndex k = class_with(a4.dec, 3, 4);

  ClassMultiset p1 = class_power(a4.G, a4.dec, k, 1);
  REQUIRE(p1.multiplicities.size() == 1);
  CHECK(p1.multiplicities.begin()->first == k);

  // A4: K^3 = {1} u D with D the double-transposition class
  ClassMultiset p3 = class_power(a4.G, a4.dec, k, 3);
  ClassIndex dt = class_with(a4.dec, 2, 3);
  const std::vector<ClassIndex> expected{0, dt};
  CHECK(p3.support() == expected);

  // the element set of K^n equals the naive repeated set product
  for (unsigned n = 1; n <= 6; ++n) {
    ClassMultiset p = class_power(a4.G, a4.dec, k, n);
    auto set = oracles::naive_power_set(a4.G, a4.dec.classes[k].members, n);
    std::vector<ElementIndex> support_set;
    for (auto [c, mult] : p.multiplicities)
      support_set.insert(support_set.end(), a4.dec.classes[c].members.begin(),
                         a4.dec.classes[c].members.end());
    std::sort(support_set.begin(), support_set.end());
    CHECK(support_set == set);
    // mass |K|^n exactly
    CHECK(p.total_mass(a4.dec) == BigUint::pow(a4.dec.size(k), n));
  }

  // Z3:Z4, K the order-4 class of size 3: K^3 is a single class != K
  GroupFixture zz("Z3:Z4");
  ClassIndex b = class_with(zz.dec, 4, 3);
  ClassMultiset bp3 = class_power(zz.G, zz.dec, b, 3);
  REQUIRE(bp3.multiplicities.size() == 1);
  CHECK(bp3.multiplicities.begin()->first != b);
  CHECK(bp3.multiplicities.begin()->first == zz.dec.inverse_class[b]);
  CHECK(zz.dec.size(b) == 3);
}

TEST_CASE("structure constants") {
  // abelian: c[i][j][l] = 1 iff rep_i * rep_j lies in class l
  FiniteGroup Z6 = build_named("Z6");
  ClassDecomposition zdec = conjugacy_classes(Z6);
  StructureConstants zsc = structure_constants(Z6, zdec);
  for (ClassIndex i = 0; i < zsc.k; ++i)
    for (ClassIndex j = 0; j < zsc.k; ++j) {
      ClassIndex prod = zdec.class_of[Z6.mult(zdec.classes[i].rep, zdec.classes[j].rep)];
      for (ClassIndex l = 0; l < zsc.k; ++l)
        CHECK(zsc.at(i, j, l) == (l == prod ? 1u : 0u));
    }

  GroupFixture s3("S3");
  StructureConstants sc = structure_constants(s3.G, s3.dec);
  for (ClassIndex i = 0; i < sc.k; ++i)
    for (ClassIndex j = 0; j < sc.k; ++j) {
      std::uint64_t mass = 0;
      for (ClassIndex l = 0; l < sc.k; ++l) mass += sc.at(i, j, l) * s3.dec.size(l);
      CHECK(mass == s3.dec.size(i) * s3.dec.size(j));
      // class sums commute
      for (ClassIndex l = 0; l < sc.k; ++l) CHECK(sc.at(i, j, l) == sc.at(j, i, l));
    }

  // A4: c[K][K][K^-1] matches the single-class square K^2 = K^-1
  GroupFixture a4("A4");
  StructureConstants asc = structure_constants(a4.G, a4.dec);
  ClassIndex k = class_with(a4.dec, 3, 4);
  ClassIndex kinv = a4.dec.inverse_class[k];
  CHECK(class_power(a4.G, a4.dec, k, 2).support() == std::vector<ClassIndex>{kinv});
  CHECK(asc.at(k, k, kinv) == 4);
}

TEST_CASE("Le1 coefficient identities hold for all structure constants") {
  for (const char* name : {"S3", "A4", "M16", "SL23", "Z2xF21"}) {
    GroupFixture f(name);
    StructureConstants sc = structure_constants(f.G, f.dec);
    const auto& inv = f.dec.inverse_class;
    for (ClassIndex i = 0; i < sc.k; ++i)
      for (ClassIndex j = 0; j < sc.k; ++j)
        for (ClassIndex l = 0; l < sc.k; ++l) {
          // (D1 D2, D3) = (D1^-1 D2^-1, D3^-1)
          CHECK(sc.at(i, j, l) == sc.at(inv[i], inv[j], inv[l]));
          // (D1 D2, D3) |D3| = |D2| (D1 D3^-1, D2^-1)
          CHECK(sc.at(i, j, l) * f.dec.size(l) == sc.at(i, inv[l], inv[j]) * f.dec.size(j));
          // (D1 D2, D1) = (D2 D1^-1, D1^-1) = (D2^-1 D1, D1)
          CHECK(sc.at(i, j, i) == sc.at(j, inv[i], inv[i]));
          CHECK(sc.at(i, j, i) == sc.at(inv[j], i, i));
        }
  }
}

TEST_CASE("no nontrivial class squares to itself") {
  for (const char* name : {"S3", "A4", "S4", "M16", "SL23", "Q8", "AGammaL18", "A5", "G126"}) {
    GroupFixture f(name);
    for (ClassIndex c = 1; c < f.dec.count(); ++c) {
      ClassMultiset sq = class_power(f.G, f.dec, c, 2);
      CHECK(sq.support() != std::vector<ClassIndex>{c});
    }
  }
}

TEST_CASE("support shape classification") {
  // trivial class: every power is SingleClass of the trivial class
  GroupFixture s3("S3");
  ClassMultiset triv = class_power(s3.G, s3.dec, 0, 3);
  SupportShape ts = classify_support(s3.dec, 0, triv, 0);
  CHECK(ts.tag == ShapeTag::SingleClass);
  CHECK(ts.companion == 0);

  // M16: (a^G)^2 = D u D^-1 with |D| = 1
  GroupFixture m16("M16");
  ClassIndex a = class_with(m16.dec, 8, 2);
  ClassMultiset sq = class_power(m16.G, m16.dec, a, 2);
  ElementIndex rep = m16.dec.classes[a].rep;
  ClassIndex pc = m16.dec.class_of[m16.G.power(rep, 2)];
  SupportShape shape = classify_support(m16.dec, a, sq, pc);
  CHECK(shape.tag == ShapeTag::ClassPlusInverse);
  CHECK(m16.dec.size(shape.companion) == 1);
  CHECK(shape.companion == pc);

  // AGammaL(1,8): order-7 class of size 24 squares to K u K^-1
  GroupFixture agl("AGammaL18");
  ClassIndex k7 = class_with(agl.dec, 7, 24);
  ClassMultiset k7sq = class_power(agl.G, agl.dec, k7, 2);
  ElementIndex k7rep = agl.dec.classes[k7].rep;
  ClassIndex k7pc = agl.dec.class_of[agl.G.power(k7rep, 2)];
  SupportShape k7shape = classify_support(agl.dec, k7, k7sq, k7pc);
  CHECK(k7shape.tag == ShapeTag::SelfPlusInverse);

  // S3 transpositions: K^2 = {1} u C
  ClassIndex k = class_with(s3.dec, 2, 3);
  ClassMultiset ksq = class_power(s3.G, s3.dec, k, 2);
  SupportShape kshape = classify_support(s3.dec, k, ksq, 0);
  CHECK(kshape.tag == ShapeTag::TrivialPlusClass);
  CHECK(s3.dec.size(kshape.companion) == 2);
}

TEST_CASE("real classes") {
  GroupFixture s3("S3");
  CHECK(is_real_class(s3.dec, 0));
  CHECK(is_real_class(s3.dec, class_with(s3.dec, 2, 3)));  // involutions

  GroupFixture m16("M16");
  CHECK(!is_real_class(m16.dec, class_with(m16.dec, 8, 2)));
}

TEST_CASE("single-class power chain (order return behaviour)") {
  // whenever some power is a single class, the power sets keep size |K| and
  // K^(o+1) returns to K, K^(o-1) to K^-1
  for (const char* name : {"Z3:Z4", "A4", "D8", "Q8"}) {
    GroupFixture f(name);
    ClassProductCache cache(f.G, f.dec);
    for (ClassIndex c = 1; c < f.dec.count(); ++c) {
      bool any_single = false;
      for (unsigned n = 2; n <= 8; ++n)
        any_single = any_single || class_power(cache, c, n).multiplicities.size() == 1;
      if (!any_single) continue;
      const std::uint64_t o = f.dec.element_order_of_class[c];
      const std::uint64_t size = f.dec.size(c);
      for (unsigned r = 1; r <= 8; ++r)
        CHECK(class_power(cache, c, r).support_element_count(f.dec) == size);
      auto plus = class_power(cache, c, static_cast<unsigned>(o + 1));
      CHECK(plus.support() == std::vector<ClassIndex>{c});
      auto minus = class_power(cache, c, static_cast<unsigned>(o - 1));
      CHECK(minus.support() == std::vector<ClassIndex>{f.dec.inverse_class[c]});
    }
  }
}
