#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "goeritz.hpp"
#include "spherebraid/errors.hpp"
#include "spherebraid/link_invariants.hpp"
#include "spherebraid/rng.hpp"
#include "spherebraid/seifert.hpp"

using namespace spherebraid;
using testsupport::goeritz_signature;

namespace {

BraidWord word(int strands, std::vector<int> letters) { return BraidWord{strands, std::move(letters)}; }

BraidWord random_word(Rng& rng, int strands, int len) {
  BraidWord w{strands, {}};
  for (int i = 0; i < len; ++i) {
    int k = 1 + static_cast<int>(rng.bits() % (strands - 1));
    w.letters.push_back(rng.uniform() < 0.5 ? k : -k);
  }
  return w;
}

}  // namespace

TEST_CASE("free reduction and permutations") {
  BraidWord w = word(3, {1, 2, -2, -1, 1});
  auto r = w.free_reduced();
  CHECK(r.letters == std::vector<int>{1});
  CHECK(r.free_reduced().letters == r.letters);  // idempotent
  CHECK_FALSE(w.is_pure());
  CHECK(word(3, {1, 1}).is_pure());
  CHECK(word(3, {}).is_pure());
  CHECK(full_twist(4).is_pure());

  // cyclic reduction rotates cancelling boundary letters away
  BraidWord c = word(3, {2, 1, 1, -2}).cyclically_reduced();
  CHECK(c.letters == std::vector<int>{1, 1});

  // free reduction never increases length and preserves the permutation
  Rng rng(5);
  for (int i = 0; i < 300; ++i) {
    BraidWord v = random_word(rng, 4, 12);
    auto vr = v.free_reduced();
    CHECK(vr.length() <= v.length());
    CHECK(vr.permutation() == v.permutation());
  }
}

TEST_CASE("exponent sum is the abelianization") {
  CHECK(exponent_sum(word(2, {1})) == 1);
  CHECK(exponent_sum(word(2, {})) == 0);
  CHECK(exponent_sum(full_twist(2)) == 2);
  CHECK(exponent_sum(full_twist(3)) == 6);
  CHECK(exponent_sum(full_twist(5)) == 20);  // m (m-1)
  Rng rng(9);
  for (int i = 0; i < 200; ++i) {
    BraidWord a = random_word(rng, 4, 9), b = random_word(rng, 4, 7);
    CHECK(exponent_sum(a.concat(b)) == exponent_sum(a) + exponent_sum(b));
    CHECK(exponent_sum(a.inverse()) == -exponent_sum(a));
  }
}

TEST_CASE("signature anchors") {
  CHECK(closure_signature(word(2, {})) == 0);           // 2-unlink
  CHECK(closure_signature(word(2, {1})) == 0);          // unknot
  CHECK(closure_signature(word(2, {1, 1})) == -1);      // Hopf link
  CHECK(closure_signature(word(2, {1, 1, 1})) == -2);   // positive trefoil
  CHECK(closure_signature(word(2, {-1, -1, -1})) == 2); // mirror
  CHECK(closure_signature(word(3, {1, -2, 1, -2})) == 0);  // figure eight
  for (int k = 2; k <= 9; ++k) {
    CHECK(closure_signature(word(2, std::vector<int>(k, 1))) == -(k - 1));  // T(2,k)
  }
  BraidWord t33 = word(3, {1, 2, 1, 2, 1, 2});
  CHECK(closure_signature(t33) == -4);
  BraidWord t34 = word(3, {1, 2, 1, 2, 1, 2, 1, 2});
  CHECK(closure_signature(t34) == -6);
  CHECK(closure_signature(word(3, {1, 1, 1, 2, 2, 2})) == -4);    // trefoil # trefoil
  CHECK(closure_signature(word(3, {1, 1, 1, -2, -2, -2})) == 0);  // trefoil # mirror
}

TEST_CASE("Goeritz oracle anchors") {
  CHECK(goeritz_signature(word(2, {})) == 0);
  CHECK(goeritz_signature(word(2, {1})) == 0);
  CHECK(goeritz_signature(word(2, {1, 1})) == -1);
  CHECK(goeritz_signature(word(2, {1, 1, 1})) == -2);
  CHECK(goeritz_signature(word(2, {-1, -1, -1})) == 2);
  CHECK(goeritz_signature(word(3, {1, -2, 1, -2})) == 0);
  CHECK(goeritz_signature(word(3, {1, 2, 1, 2, 1, 2})) == -4);
  CHECK(goeritz_signature(word(3, {1, 2, 1, 2, 1, 2, 1, 2})) == -6);
  CHECK(goeritz_signature(word(3, {1, 1, 1, 2, 2, 2})) == -4);
  CHECK(goeritz_signature(word(3, {1, 1, 1, -2, -2, -2})) == 0);
  CHECK(goeritz_signature(word(3, {2, -2})) == 0);
  CHECK(goeritz_signature(word(3, {-2})) == 0);
}

TEST_CASE("Seifert matrix size is letters - strands + split components") {
  CHECK(seifert_matrix(word(2, {1, 1, 1})).rows() == 2);
  CHECK(seifert_matrix(word(3, {1, 1, 2, 2})).rows() == 2);
  CHECK(seifert_matrix(word(3, {1, 1})).rows() == 1);  // c=2, m=3, s=2
  CHECK(seifert_matrix(word(4, {})).rows() == 0);
}

TEST_CASE("Bennequin signature equals Goeritz oracle exhaustively (short words)") {
  // all words on 2 strands up to length 8
  for (int len = 0; len <= 8; ++len) {
    long count = 1;
    for (int i = 0; i < len; ++i) count *= 2;
    for (long code = 0; code < count; ++code) {
      BraidWord w{2, {}};
      long c = code;
      for (int i = 0; i < len; ++i) {
        w.letters.push_back((c & 1) ? 1 : -1);
        c >>= 1;
      }
      REQUIRE(closure_signature(w) == goeritz_signature(w));
    }
  }
  // all words on 3 strands up to length 6 (the acceptance suite goes to 8)
  for (int len = 0; len <= 6; ++len) {
    long count = 1;
    for (int i = 0; i < len; ++i) count *= 4;
    for (long code = 0; code < count; ++code) {
      BraidWord w{3, {}};
      long c = code;
      for (int i = 0; i < len; ++i) {
        static const int alphabet[4] = {1, -1, 2, -2};
        w.letters.push_back(alphabet[c & 3]);
        c >>= 2;
      }
      REQUIRE(closure_signature(w) == goeritz_signature(w));
    }
  }
}

TEST_CASE("signature is conjugation invariant") {
  Rng rng(21);
  for (int i = 0; i < 1000; ++i) {
    int strands = 2 + static_cast<int>(rng.bits() % 4);
    BraidWord beta = random_word(rng, strands, 1 + static_cast<int>(rng.bits() % 12));
    BraidWord gamma = random_word(rng, strands, 1 + static_cast<int>(rng.bits() % 6));
    BraidWord conj = gamma.concat(beta).concat(gamma.inverse());
    CHECK(closure_signature(conj) == closure_signature(beta));
  }
}

TEST_CASE("signature is Markov-stabilization invariant") {
  Rng rng(27);
  for (int i = 0; i < 300; ++i) {
    int strands = 2 + static_cast<int>(rng.bits() % 3);
    BraidWord beta = random_word(rng, strands, 1 + static_cast<int>(rng.bits() % 10));
    BraidWord stab{strands + 1, beta.letters};
    stab.letters.push_back((rng.uniform() < 0.5 ? 1 : -1) * strands);
    CHECK(closure_signature(stab) == closure_signature(beta));
  }
}

TEST_CASE("homogenize: homomorphisms are exact, torus powers give slope -2") {
  auto lk = [](const BraidWord& w) { return double(exponent_sum(w)); };
  Rng rng(33);
  for (int i = 0; i < 50; ++i) {
    BraidWord a = random_word(rng, 3, 7);
    auto h = homogenize(lk, a);
    CHECK(h.slope == doctest::Approx(double(exponent_sum(a))).epsilon(1e-12));
    CHECK(h.residual < 1e-9);
  }
  auto sig = [](const BraidWord& w) { return double(closure_signature(w)); };
  auto h = homogenize(sig, BraidWord{2, {1, 1}});
  CHECK(h.slope == doctest::Approx(-2.0).epsilon(1e-12));  // sig(sigma_1^{2k}) = -(2k-1)
  CHECK(homogenize(sig, BraidWord{2, {}}).slope == doctest::Approx(0.0));
}

TEST_CASE("s vanishes on the full twist and on 2-strand pure braids") {
  for (int m = 2; m <= 4; ++m) {
    BraidWord delta2 = full_twist(m).power(2);
    CHECK(s_quasimorphism(delta2).value == doctest::Approx(0.0).epsilon(1e-10));
  }
  for (int j = 1; j <= 4; ++j) {
    BraidWord w{2, std::vector<int>(2 * j, 1)};
    CHECK(s_quasimorphism(w).value == doctest::Approx(0.0).epsilon(1e-10));
    BraidWord v{2, std::vector<int>(2 * j, -1)};
    CHECK(s_quasimorphism(v).value == doctest::Approx(0.0).epsilon(1e-10));
  }
  CHECK_THROWS_AS(s_quasimorphism(BraidWord{2, {1}}), NotPure);
}

TEST_CASE("s is invariant under multiplication by the full twist squared") {
  Rng rng(41);
  int found = 0;
  for (int i = 0; i < 200 && found < 25; ++i) {
    BraidWord a = random_word(rng, 3, 8);
    if (!a.is_pure()) continue;
    ++found;
    BraidWord b = a.concat(full_twist(3).power(2));
    double sa = s_quasimorphism(a).value;
    double sb = s_quasimorphism(b).value;
    CHECK(sa == doctest::Approx(sb).epsilon(1e-8));
  }
  CHECK(found >= 10);
}

TEST_CASE("signature defect is bounded with no growth trend") {
  Rng rng(43);
  double max_defect = 0.0;
  std::vector<double> bucket_mean;
  for (int len : {4, 8, 12, 16}) {
    double sum = 0.0;
    int cnt = 0;
    for (int i = 0; i < 400; ++i) {
      BraidWord a = random_word(rng, 3, len);
      BraidWord b = random_word(rng, 3, len);
      if (!a.is_pure() || !b.is_pure()) continue;
      double d = std::abs(double(closure_signature(a.concat(b)) - closure_signature(a) -
                                 closure_signature(b)));
      max_defect = std::max(max_defect, d);
      sum += d;
      ++cnt;
    }
    REQUIRE(cnt > 10);
    bucket_mean.push_back(sum / cnt);
  }
  // empirical bound (the quasimorphism property): small and trend-free
  CHECK(max_defect <= 6.0);
  CHECK(bucket_mean.back() <= bucket_mean.front() + 1.5);
}
