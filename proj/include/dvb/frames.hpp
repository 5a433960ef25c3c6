#ifndef DVB_FRAMES_HPP
#define DVB_FRAMES_HPP

#include <string>
#include <utility>

#include "dvb/aut.hpp"

namespace dvb {

/// Frame on R^[n]: block bases (U, V, W) and an offset twist. The frame is
/// the isomorphism (x, y, z) -> (Ux, Vy, Wz + mu(Ux, Vy)) from canonical
/// coordinates; note the offset is evaluated at the transformed side points.
template <typename S>
struct Frame {
  Matrix<S> U;
  Matrix<S> V;
  Matrix<S> W;
  BilinearMap<S> mu;

  Dims dims() const { return mu.dims(); }

  friend bool operator==(const Frame&, const Frame&) = default;

  std::string to_string() const {
    return "Frame(U=" + U.to_string() + ", V=" + V.to_string() + ", W=" + W.to_string() +
           ", mu=" + mu.to_string() + ")";
  }
};

template <typename S>
void require_frame_shape(const Frame<S>& f) {
  const Dims d = f.dims();
  if (f.U.rows() != d.n1 || f.U.cols() != d.n1 || f.V.rows() != d.n2 || f.V.cols() != d.n2 ||
      f.W.rows() != d.n0 || f.W.cols() != d.n0)
    throw Error(ErrorKind::DimMismatch, "frame blocks do not match " + d.to_string());
}

template <typename S>
Frame<S> canonical_frame(const Dims& d) {
  return {Matrix<S>::identity(d.n1), Matrix<S>::identity(d.n2), Matrix<S>::identity(d.n0),
          BilinearMap<S>(d)};
}

template <typename S>
DvsElement<S> frame_eval(const Frame<S>& f, const DvsElement<S>& v) {
  require_frame_shape(f);
  if (!(f.dims() == v.dims()))
    throw Error(ErrorKind::DimMismatch,
                "frame_eval " + f.dims().to_string() + " on " + v.dims().to_string());
  Vector<S> x = f.U * v.x;
  Vector<S> y = f.V * v.y;
  Vector<S> z = f.W * v.z + f.mu.eval(x, y);
  return {std::move(x), std::move(y), std::move(z)};
}

/// The automorphism with the same action as the frame.
template <typename S>
DvsAut<S> frame_to_aut(const Frame<S>& f) {
  require_frame_shape(f);
  return {f.U, f.V, f.W, f.mu.compose_sides(f.U, f.V)};
}

/// Inverse of frame_to_aut; needs invertible side blocks.
template <typename S>
Frame<S> frame_from_aut(const DvsAut<S>& g) {
  require_quadruple_shape(g);
  return {g.a1, g.a2, g.a0, g.mu.compose_sides(inverse(g.a1), inverse(g.a2))};
}

/// Right action of the automorphism group on frames, the frame analogue of
/// composing the underlying isomorphisms: (f.a)(v) = f(a.v). In blocks the
/// acted frame is (U a1, V a2, W a0) with offset
///   mu + W o tilde o ((U a1)^-1 x (V a2)^-1),  tilde = a.mu.
template <typename S>
Frame<S> frame_act(const Frame<S>& f, const DvsAut<S>& a) {
  return frame_from_aut(aut_compose(frame_to_aut(f), a));
}

/// The unique a with g = f.a, i.e. to_aut(f)^-1 * to_aut(g).
template <typename S>
DvsAut<S> frame_transition(const Frame<S>& f, const Frame<S>& g) {
  if (!(f.dims() == g.dims()))
    throw Error(ErrorKind::DimMismatch,
                "frame_transition " + f.dims().to_string() + " vs " + g.dims().to_string());
  return aut_compose(aut_inverse(frame_to_aut(f)), frame_to_aut(g));
}

template <typename S>
double max_abs_diff(const Frame<S>& a, const Frame<S>& b) {
  return std::max(std::max(max_abs_diff(a.U, b.U), max_abs_diff(a.V, b.V)),
                  std::max(max_abs_diff(a.W, b.W), max_abs_diff(a.mu, b.mu)));
}

template <typename S>
bool approx_eq(const Frame<S>& a, const Frame<S>& b, double tol) {
  return a.dims() == b.dims() && max_abs_diff(a, b) <= tol;
}

} // namespace dvb

#endif
