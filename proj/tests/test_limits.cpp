#include <catch2/catch_amalgamated.hpp>

#include "fincat/cats/finset.hpp"
#include "fincat/cats/semilattice.hpp"
#include "fincat/classify.hpp"
#include "fincat/limits.hpp"
#include "test_oracles.hpp"

using namespace fincat;

TEST_CASE("pullbacks in a meet-semilattice are meets") {
  const Category b2 = cats::semilattice_category(cats::boolean_b2());
  // objects 0, a=1, b=2, top=3
  const Mor a_le_top = b2.hom(1, 3).at(0);
  const Mor b_le_top = b2.hom(2, 3).at(0);
  const PullbackResult pb = pullback(b2, a_le_top, b_le_top);
  REQUIRE(pb.present);
  REQUIRE(pb.apex == Obj{0});  // a /\ b
  const std::vector<Obj> all = all_objects(b2);
  REQUIRE(oracles::is_pullback_square(b2, a_le_top, b_le_top, pb.apex,
                                      pb.to_left, pb.to_right, all));
}

TEST_CASE("pullback of an identity cospan is the object itself, up to iso") {
  const Category b2 = cats::semilattice_category(cats::boolean_b2());
  const Mor id_top = b2.identity(3);
  const PullbackResult pb = pullback(b2, id_top, id_top);
  REQUIRE(pb.present);
  REQUIRE(pb.apex == Obj{3});
  REQUIRE(pb.to_left == id_top);
}

TEST_CASE("truncated finite sets lack the pullback of 2 -> 1 <- 2") {
  const Category sets = cats::finset_category(3);
  const Mor collapse = sets.hom(2, 1).at(0);
  // |hom(3, P)| would have to be 8 * 8 = 64 = |P|^3, so |P| = 4 > 3.
  REQUIRE(sets.hom(3, 2).size() * sets.hom(3, 2).size() == 64);
  const PullbackResult pb = pullback(sets, collapse, collapse);
  REQUIRE_FALSE(pb.present);
}

TEST_CASE("hinted pullbacks in finite sets satisfy the universal property") {
  const Category sets = cats::finset_category(4);
  const std::vector<Obj> all = all_objects(sets);
  for (Obj z = 0; z <= 2; ++z) {
    for (Obj a = 0; a <= 2; ++a) {
      for (Obj b = 0; b <= 2; ++b) {
        for (Mor f : sets.hom(a, z)) {
          for (Mor g : sets.hom(b, z)) {
            const PullbackResult pb = pullback(sets, f, g);
            REQUIRE(pb.present);  // apexes of 2x2-bounded cospans fit in 0..4
            REQUIRE(oracles::is_pullback_square(sets, f, g, pb.apex,
                                                pb.to_left, pb.to_right, all));
          }
        }
      }
    }
  }
}

TEST_CASE("pushout of an identity span is the object itself") {
  const Category b2 = cats::semilattice_category(cats::boolean_b2());
  const PushoutResult po = pushout(b2, b2.identity(2), b2.identity(2));
  REQUIRE(po.present);
  REQUIRE(po.apex == Obj{2});
}

TEST_CASE("pushouts in B2 are joins") {
  const Category b2 = cats::semilattice_category(cats::boolean_b2());
  const Mor bot_le_a = b2.hom(0, 1).at(0);
  const Mor bot_le_b = b2.hom(0, 2).at(0);
  const PushoutResult po = pushout(b2, bot_le_a, bot_le_b);
  REQUIRE(po.present);
  REQUIRE(po.apex == Obj{3});  // a \/ b = 1
}

TEST_CASE("joins in the opposite lattice are meets") {
  const Category op = cats::semilattice_category(cats::boolean_b2()).opposite();
  const Mor top_to_a = op.hom(3, 1).at(0);
  const Mor top_to_b = op.hom(3, 2).at(0);
  const PushoutResult po = pushout(op, top_to_a, top_to_b);
  REQUIRE(po.present);
  REQUIRE(po.apex == Obj{0});
}

TEST_CASE("pushout escaping the truncation is reported absent") {
  const Category sets = cats::finset_category(3);
  // 2 <- 0 -> 2 pushes out to the 4-element coproduct, which is not there.
  const Mor left = sets.hom(0, 2).at(0);
  const PushoutResult po = pushout(sets, left, left);
  REQUIRE_FALSE(po.present);
}

TEST_CASE("hinted pushouts in finite sets are genuine") {
  const Category sets = cats::finset_category(4);
  const Category op = sets.opposite();
  const std::vector<Obj> all = all_objects(sets);
  for (Obj z = 0; z <= 2; ++z) {
    for (Obj a = 0; a <= 2; ++a) {
      for (Mor f : sets.hom(z, a)) {
        for (Mor g : sets.hom(z, 2)) {
          const PushoutResult po = pushout(sets, f, g);
          REQUIRE(po.present);
          REQUIRE(oracles::is_pullback_square(
              op, opposite_mor(f), opposite_mor(g), po.apex,
              opposite_mor(po.from_left), opposite_mor(po.from_right), all));
        }
      }
    }
  }
}

TEST_CASE("non-cospan input is rejected") {
  const Category sets = cats::finset_category(3);
  const Mor f = sets.hom(1, 2).at(0);
  const Mor g = sets.hom(1, 1).at(0);
  REQUIRE_THROWS_AS(pullback(sets, f, g), std::invalid_argument);
}

TEST_CASE("swapping the cospan legs gives an isomorphic apex") {
  const Category sets = cats::finset_category(4);
  for (Obj z = 0; z <= 2; ++z) {
    for (Mor f : sets.hom(2, z)) {
      for (Mor g : sets.hom(1, z)) {
        const PullbackResult ab = pullback(sets, f, g);
        const PullbackResult ba = pullback(sets, g, f);
        REQUIRE(ab.present == ba.present);
        if (!ab.present) continue;
        bool linked = false;
        for (Mor phi : sets.hom(ab.apex, ba.apex)) {
          if (is_iso(sets, phi)) {
            linked = true;
            break;
          }
        }
        REQUIRE(linked);
      }
    }
  }
}
