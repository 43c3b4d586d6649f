#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qhodge {

/// Integer coordinates of a divisor class in a lattice basis.
struct DivisorClass {
  std::vector<int> coords;

  DivisorClass() = default;
  DivisorClass(std::initializer_list<int> c) : coords(c) {}
  explicit DivisorClass(std::vector<int> c) : coords(std::move(c)) {}

  std::size_t rank() const { return coords.size(); }
  int operator[](std::size_t i) const { return coords[i]; }

  friend DivisorClass operator+(DivisorClass a, const DivisorClass& b) {
    if (a.rank() != b.rank()) throw std::invalid_argument("DivisorClass: rank mismatch");
    for (std::size_t i = 0; i < a.rank(); ++i) a.coords[i] += b.coords[i];
    return a;
  }
  friend DivisorClass operator*(int k, DivisorClass a) {
    for (auto& c : a.coords) c *= k;
    return a;
  }
  friend auto operator<=>(const DivisorClass&, const DivisorClass&) = default;

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < coords.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(coords[i]);
    }
    return s + ")";
  }
};

/// Picard lattice of a smooth projective surface together with the numerical
/// data the wall-crossing formula needs.
struct SurfaceLattice {
  std::string name;
  std::vector<std::vector<int>> gram;  // intersection form in the basis
  DivisorClass canonical;
  int chi_O = 1;
  int irregularity = 0;
  std::map<std::pair<int, int>, int> hodge;  // (s, t) -> h^{s,t}

  std::size_t rank() const { return gram.size(); }

  int hodge_number(int s, int t) const {
    auto it = hodge.find({s, t});
    return it == hodge.end() ? 0 : it->second;
  }

  /// Topological Euler characteristic, sum of (-1)^(s+t) h^{s,t}.
  int euler_characteristic() const {
    int e = 0;
    for (const auto& [st, h] : hodge) e += ((st.first + st.second) % 2 ? -1 : 1) * h;
    return e;
  }
};

inline int intersect(const SurfaceLattice& L, const DivisorClass& A, const DivisorClass& B) {
  if (A.rank() != L.rank() || B.rank() != L.rank())
    throw std::invalid_argument("intersect: class rank " + std::to_string(A.rank()) + "/" +
                                std::to_string(B.rank()) + " does not match lattice rank " +
                                std::to_string(L.rank()));
  int s = 0;
  for (std::size_t i = 0; i < L.rank(); ++i)
    for (std::size_t j = 0; j < L.rank(); ++j) s += A[i] * L.gram[i][j] * B[j];
  return s;
}

inline int self_intersection(const SurfaceLattice& L, const DivisorClass& A) {
  return intersect(L, A, A);
}

namespace surfaces {

/// The Hirzebruch surface F_1 (P^2 blown up at a point) in the basis
/// (sigma, f): sigma the exceptional section, f a fiber of the ruling.
inline SurfaceLattice f1() {
  SurfaceLattice L;
  L.name = "f1";
  L.gram = {{-1, 1}, {1, 0}};
  L.canonical = {-2, -3};
  L.chi_O = 1;
  L.irregularity = 0;
  L.hodge = {{{0, 0}, 1}, {{1, 1}, 2}, {{2, 2}, 1}};
  return L;
}

/// F_1 blown up at one further point, basis (sigma, f, E) with sigma, f
/// pulled back; K = phi^*K + E.
inline SurfaceLattice f1_blowup() {
  SurfaceLattice L;
  L.name = "f1-blowup";
  L.gram = {{-1, 1, 0}, {1, 0, 0}, {0, 0, -1}};
  L.canonical = {-2, -3, 1};
  L.chi_O = 1;
  L.irregularity = 0;
  L.hodge = {{{0, 0}, 1}, {{1, 1}, 3}, {{2, 2}, 1}};
  return L;
}

inline SurfaceLattice by_name(const std::string& name) {
  if (name == "f1") return f1();
  if (name == "f1-blowup") return f1_blowup();
  throw std::invalid_argument("unknown surface '" + name + "' (expected f1 or f1-blowup)");
}

inline DivisorClass sigma() { return {1, 0}; }
inline DivisorClass fiber() { return {0, 1}; }
/// Polarization used throughout: sigma + 2f.
inline DivisorClass standard_polarization() { return {1, 2}; }

/// phi^* D + s E on the blowup.
inline DivisorClass lift(const DivisorClass& d, int s) {
  std::vector<int> c = d.coords;
  c.push_back(s);
  return DivisorClass(std::move(c));
}

}  // namespace surfaces

/// A class zeta defining a wall of type (c1, n).
struct WallClass {
  DivisorClass zeta;
  int zeta_sq = 0;
  int zeta_dot_K = 0;
  int ell = 0;  // (4n - c1^2 + zeta^2) / 4

  friend bool operator==(const WallClass&, const WallClass&) = default;
};

/// A wall of the blown-up surface for the limit polarization, written as
/// phi^* zeta + (2t - a) E with zeta a wall of the base.
struct BlowupWall {
  DivisorClass zeta;  // on F_1
  int zeta_sq = 0;
  int zeta_dot_K = 0;
  int t = 0;
  WallClass lifted;  // on the blowup, ell taken for (phi^*c1 - aE, n)

  friend bool operator==(const BlowupWall&, const BlowupWall&) = default;
};

namespace detail {

inline bool is_odd(int v) { return v % 2 != 0; }
inline int mod2(int v) { return ((v % 2) + 2) % 2; }

inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}
inline std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

inline void check_wall_setup(const SurfaceLattice& L, const DivisorClass& c1,
                             const DivisorClass& H, const DivisorClass& f) {
  const SurfaceLattice ref = surfaces::f1();
  if (L.gram != ref.gram)
    throw std::invalid_argument("wall enumeration is implemented for F_1 only");
  if (f != surfaces::fiber())
    throw std::invalid_argument("wall enumeration: f must be the fiber class (0,1)");
  if (intersect(L, H, surfaces::sigma()) <= 0 || intersect(L, H, f) <= 0)
    throw std::invalid_argument("wall enumeration: H = " + H.to_string() + " is not ample");
  if (!is_odd(intersect(L, H, c1)))
    throw std::invalid_argument("wall enumeration: (H . c1) must be odd, H may lie on a wall");
  if (!is_odd(intersect(L, f, c1)))
    throw std::invalid_argument("wall enumeration: (f . c1) must be odd");
}

/// All zeta = alpha sigma + beta f with zeta H < 0 < zeta f, zeta = c1 mod 2
/// and zeta^2 >= -bound, sorted by coordinates. `ell` is (bound + zeta^2)/4.
///
/// With H = h sigma + k f ample (k > h > 0): zeta f = alpha > 0 and
/// zeta H = alpha (k - h) + beta h < 0 force beta <= -1, so
/// zeta^2 = -alpha^2 + 2 alpha beta < -alpha^2 and alpha^2 < bound. For fixed
/// alpha, zeta^2 >= -bound gives beta >= (alpha^2 - bound) / (2 alpha).
inline std::vector<WallClass> walls_with_bound(const SurfaceLattice& L, const DivisorClass& c1,
                                               const DivisorClass& H, int bound) {
  std::vector<WallClass> out;
  const int h = H[0], k = H[1];
  for (int alpha = 1; alpha * alpha <= bound; ++alpha) {
    if (mod2(alpha) != mod2(c1[0])) continue;
    const auto beta_lo = ceil_div(std::int64_t(alpha) * alpha - bound, 2 * alpha);
    // alpha (k - h) + beta h <= -1
    const auto beta_hi = floor_div(-std::int64_t(alpha) * (k - h) - 1, h);
    for (auto beta = beta_lo; beta <= beta_hi; ++beta) {
      if (mod2(static_cast<int>(beta)) != mod2(c1[1])) continue;
      DivisorClass z{alpha, static_cast<int>(beta)};
      WallClass w;
      w.zeta = z;
      w.zeta_sq = self_intersection(L, z);
      w.zeta_dot_K = intersect(L, z, L.canonical);
      w.ell = (bound + w.zeta_sq) / 4;
      out.push_back(std::move(w));
    }
  }
  std::sort(out.begin(), out.end(),
            [](const WallClass& a, const WallClass& b) { return a.zeta < b.zeta; });
  return out;
}

}  // namespace detail

/// The walls of type (c1, n) separating H from the chamber adjacent to the
/// fiber class: zeta H < 0 < zeta f, zeta = c1 (mod 2), zeta^2 >= -(4n - c1^2).
inline std::vector<WallClass> walls_base(const SurfaceLattice& L, const DivisorClass& c1,
                                         const DivisorClass& H, const DivisorClass& f, int n) {
  detail::check_wall_setup(L, c1, H, f);
  const int bound = 4 * n - self_intersection(L, c1);
  return detail::walls_with_bound(L, c1, H, bound);
}

/// Walls of the blowup for phi^*c1 - aE and the limit polarization, as pairs
/// (zeta, t) with zeta~ = phi^*zeta + (2t - a)E. A class of the blowup lies
/// on the correct side iff its F_1 part does, so it suffices to enumerate base
/// walls for the larger bound 4n - c1~^2 and then the admissible E-multiples.
inline std::vector<BlowupWall> walls_blowup_decompose(const DivisorClass& c1, int a, int n,
                                                      const DivisorClass& H,
                                                      const DivisorClass& f) {
  if (a != 0 && a != 1) throw std::invalid_argument("walls_blowup_decompose: a must be 0 or 1");
  const SurfaceLattice base = surfaces::f1();
  const SurfaceLattice up = surfaces::f1_blowup();
  detail::check_wall_setup(base, c1, H, f);
  const int c1t_sq = self_intersection(base, c1) - a * a;
  const int bound = 4 * n - c1t_sq;
  std::vector<BlowupWall> out;
  for (const WallClass& w : detail::walls_with_bound(base, c1, H, bound)) {
    const int room = w.zeta_sq + bound;  // s^2 <= room
    int s_max = 0;
    while ((s_max + 1) * (s_max + 1) <= room) ++s_max;
    for (int s = -s_max; s <= s_max; ++s) {
      if (detail::mod2(s) != a) continue;
      BlowupWall bw;
      bw.zeta = w.zeta;
      bw.zeta_sq = w.zeta_sq;
      bw.zeta_dot_K = w.zeta_dot_K;
      bw.t = (s + a) / 2;
      bw.lifted.zeta = surfaces::lift(w.zeta, s);
      bw.lifted.zeta_sq = self_intersection(up, bw.lifted.zeta);
      bw.lifted.zeta_dot_K = intersect(up, bw.lifted.zeta, up.canonical);
      bw.lifted.ell = (bound + bw.lifted.zeta_sq) / 4;
      out.push_back(std::move(bw));
    }
  }
  return out;
}

}  // namespace qhodge
