#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dvb/frames.hpp"
#include "test_support.hpp"

using namespace dvb;
using dvbtest::elem1;
using dvbtest::quad1;
using dvbtest::random_aut;
using dvbtest::random_element;
using dvbtest::rmat1;
using dvbtest::rmu1;

namespace {

const Dims kDims[] = {{1, 1, 1}, {2, 2, 2}, {3, 2, 1}};

inline Frame<Rat> frame1(const Rat& u, const Rat& v, const Rat& w, const Rat& mu) {
  return {rmat1(u), rmat1(v), rmat1(w), rmu1(mu)};
}

template <typename S>
Frame<S> random_frame(Rng& rng, const Dims& d) {
  return {random_invertible<S>(rng, d.n1), random_invertible<S>(rng, d.n2),
          random_invertible<S>(rng, d.n0), dvbtest::random_bilinear<S>(rng, d)};
}

} // namespace

TEST_CASE("worked frame instances on the scalar space") {
  const Frame<Rat> f = frame1(2, 3, 5, 7);
  CHECK(frame_eval(f, elem1(1, 1, 1)) == elem1(2, 3, 47));
  CHECK(frame_to_aut(f) == quad1(2, 3, 5, 42));
  CHECK(frame_from_aut(quad1(2, 3, 5, 42)) == f);
  CHECK(frame_act(f, quad1(1, 1, 1, 1)) == frame1(2, 3, 5, Rat(47, 6)));
  CHECK(frame_transition(canonical_frame<Rat>(Dims{1, 1, 1}), f) == quad1(2, 3, 5, 42));
}

TEST_CASE("frame and automorphism forms convert both ways exactly") {
  Rng rng(503);
  for (const Dims& d : kDims) {
    for (int t = 0; t < 40; ++t) {
      Frame<Rat> f = random_frame<Rat>(rng, d);
      DvsAut<Rat> g = random_aut<Rat>(rng, d);
      CHECK(frame_from_aut(frame_to_aut(f)) == f);
      CHECK(frame_to_aut(frame_from_aut(g)) == g);
      // Same action either way.
      DvsElement<Rat> v = random_element<Rat>(rng, d);
      CHECK(frame_eval(f, v) == aut_apply(frame_to_aut(f), v));
    }
  }
}

TEST_CASE("canonical frame is the identity isomorphism") {
  Rng rng(509);
  for (const Dims& d : kDims) {
    Frame<Rat> c = canonical_frame<Rat>(d);
    CHECK(frame_to_aut(c) == aut_identity<Rat>(d));
    DvsElement<Rat> v = random_element<Rat>(rng, d);
    CHECK(frame_eval(c, v) == v);
  }
}

TEST_CASE("acting on a frame composes the underlying isomorphisms") {
  Rng rng(521);
  for (const Dims& d : kDims) {
    for (int t = 0; t < 40; ++t) {
      Frame<Rat> f = random_frame<Rat>(rng, d);
      DvsAut<Rat> a = random_aut<Rat>(rng, d);
      DvsElement<Rat> v = random_element<Rat>(rng, d);
      CHECK(frame_eval(frame_act(f, a), v) == frame_eval(f, aut_apply(a, v)));
    }
  }
}

TEST_CASE("frame action is a right group action") {
  Rng rng(523);
  for (const Dims& d : kDims) {
    for (int t = 0; t < 30; ++t) {
      Frame<Rat> f = random_frame<Rat>(rng, d);
      DvsAut<Rat> a = random_aut<Rat>(rng, d);
      DvsAut<Rat> b = random_aut<Rat>(rng, d);
      CHECK(frame_act(f, aut_identity<Rat>(d)) == f);
      CHECK(frame_act(frame_act(f, a), b) == frame_act(f, aut_compose(a, b)));
    }
  }
}

TEST_CASE("acted frame has the composed blocks and the offset increment") {
  Rng rng(541);
  for (const Dims& d : kDims) {
    for (int t = 0; t < 30; ++t) {
      Frame<Rat> f = random_frame<Rat>(rng, d);
      DvsAut<Rat> a = random_aut<Rat>(rng, d);
      Frame<Rat> fa = frame_act(f, a);
      CHECK(fa.U == f.U * a.a1);
      CHECK(fa.V == f.V * a.a2);
      CHECK(fa.W == f.W * a.a0);
      BilinearMap<Rat> incr =
          a.mu.compose_out(f.W).compose_sides(inverse(f.U * a.a1), inverse(f.V * a.a2));
      CHECK(fa.mu == f.mu + incr);
    }
  }
}

TEST_CASE("frames form a torsor under the automorphism group") {
  Rng rng(547);
  for (const Dims& d : kDims) {
    const DvsAut<Rat> e = aut_identity<Rat>(d);
    for (int t = 0; t < 30; ++t) {
      Frame<Rat> f = random_frame<Rat>(rng, d);
      Frame<Rat> g = random_frame<Rat>(rng, d);
      Frame<Rat> h = random_frame<Rat>(rng, d);
      // Transitive with the unique connecting element.
      CHECK(frame_act(f, frame_transition(f, g)) == g);
      CHECK(frame_transition(f, f) == e);
      CHECK(aut_compose(frame_transition(f, g), frame_transition(g, h)) ==
            frame_transition(f, h));
      // Free: a nontrivial element moves every frame.
      DvsAut<Rat> a = random_aut<Rat>(rng, d);
      if (!(a == e)) CHECK(!(frame_act(f, a) == f));
    }
  }
}

TEST_CASE("frame conversions reject bad blocks") {
  const Dims d{2, 2, 1};
  Rng rng(557);
  Frame<Rat> f = random_frame<Rat>(rng, d);
  f.U = Matrix<Rat>(3, 3);
  CHECK_THROWS_AS(frame_to_aut(f), Error);

  DvsAut<Rat> g = random_aut<Rat>(rng, d);
  g.a1 = Matrix<Rat>(2, 2); // singular side block
  CHECK_THROWS_AS(frame_from_aut(g), Error);

  Frame<Rat> ok = random_frame<Rat>(rng, d);
  CHECK_THROWS_AS(frame_eval(ok, dvs_zero<Rat>(Dims{1, 1, 1})), Error);
}

TEST_CASE("float frames round-trip within tolerance") {
  Rng rng(563);
  const Dims d{3, 2, 2};
  for (int t = 0; t < 30; ++t) {
    Frame<double> f = random_frame<double>(rng, d);
    Frame<double> g = random_frame<double>(rng, d);
    CHECK(approx_eq(frame_from_aut(frame_to_aut(f)), f, 1e-9));
    CHECK(approx_eq(frame_act(f, frame_transition(f, g)), g, 1e-9));
  }
}
