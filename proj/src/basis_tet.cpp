#include "hdiv/basis_tet.hpp"

#include <cmath>
#include <stdexcept>

#include "hdiv/polynomials1d.hpp"

namespace hdiv {

namespace {

std::array<Rational, 3> grad_lambda(const ReferenceElement& ref, int k) {
  std::array<Rational, 3> g;
  for (int c = 0; c < 3; ++c) {
    MPoly d = ref.lambda[k].derivative(c);
    g[c] = d.is_zero() ? Rational(0) : d.terms().begin()->second;
  }
  return g;
}

double rat_norm(const std::array<Rational, 3>& u) {
  double s = 0;
  for (const auto& q : u) s += q.get_d() * q.get_d();
  return std::sqrt(s);
}

Rational norm_sq(const std::array<Rational, 3>& u) {
  Rational s = 0;
  for (const auto& q : u) s += q * q;
  return s;
}

// Pell convergent p/q of sqrt(2) with q > 2^80; the error is below 2^-161,
// far under every tolerance in play, and keeps coefficients rational.
const Rational& sqrt2_rational() {
  static const Rational val = [] {
    mpz_class p = 1, q = 1, bound = mpz_class(1) << 80;
    while (q < bound) {
      mpz_class np = p + 2 * q, nq = p + q;
      p = np;
      q = nq;
    }
    return frac(p, q);
  }();
  return val;
}

VectorField const_dir(const MPoly& s, const std::array<Rational, 3>& u, double scale) {
  VectorField f(3, scale);
  for (int c = 0; c < 3; ++c) f.comp[c] = s.scaled(u[c]);
  return f;
}

struct SecondKindFn {
  VectorField field;    // as materialized for assembly and traces
  VectorField part_a;   // rational part (per-function scale dropped)
  VectorField part_b;   // sqrt(2) part
  int face = 0, triple = 0, i = 0;
};

std::vector<SecondKindFn> second_kind_family(int p) {
  const auto& ref = reference(ElementKind::Tet);
  std::vector<SecondKindFn> out;
  for (int fi = 0; fi < 4; ++fi) {
    const auto& fv = ref.faces[fi];
    int j2 = fv[0], j3 = fv[1], j4 = fv[2];
    std::array<std::array<int, 3>, 3> triples = {{{j2, j3, j4}, {j3, j4, j2}, {j4, j2, j3}}};
    for (int t = 0; t < 3; ++t) {
      auto [k1, k2, k3] = triples[t];
      auto w0 = cross_const(grad_lambda(ref, k2), grad_lambda(ref, k3));
      auto w1 = cross_const(grad_lambda(ref, k3), grad_lambda(ref, k1));
      Rational n0sq = norm_sq(w0), n1sq = norm_sq(w1);
      MPoly s0 = ref.lambda[k1];
      MPoly s1 = ref.lambda[k1] * ref.lambda[k2];
      MPoly gam = ref.lambda[k2] - ref.lambda[k1];
      auto push = [&](VectorField f, VectorField a, VectorField b, int i) {
        out.push_back({std::move(f), std::move(a), std::move(b), fi, t, i});
      };
      push(const_dir(s0, w0, 1.0 / rat_norm(w0)), const_dir(s0, w0, 1.0), VectorField(3), 0);
      if (p >= 2)
        push(const_dir(s1, w1, 1.0 / rat_norm(w1)), const_dir(s1, w1, 1.0), VectorField(3), 1);
      for (int i = 1; i <= p - 2; ++i) {
        MPoly li = compose1(legendre(i), gam);
        MPoly li1 = compose1(legendre(i - 1), gam);
        VectorField t1 = const_dir(li * s1, w1, 1.0);   // weight 1/|w1|
        VectorField t0 = const_dir(li1 * s0, w0, 1.0);  // weight 1/|w0|
        VectorField f(3), a(3), b(3);
        if (n0sq == n1sq) {
          for (int c = 0; c < 3; ++c) f.comp[c] = t1.comp[c] + t0.comp[c];
          f.scale = 1.0 / std::sqrt(n0sq.get_d());
          a = f;
          a.scale = 1.0;
        } else if (n1sq == 2) {
          // (1/sqrt2) t1 + t0 = (1/sqrt2) (t1 + sqrt2 t0)
          for (int c = 0; c < 3; ++c)
            f.comp[c] = t1.comp[c] + t0.comp[c].scaled(sqrt2_rational());
          f.scale = 1.0 / std::sqrt(2.0);
          a = t1;
          b = t0;
        } else {
          // t1 + (1/sqrt2) t0 = (1/sqrt2) (sqrt2 t1 + t0)
          for (int c = 0; c < 3; ++c)
            f.comp[c] = t1.comp[c].scaled(sqrt2_rational()) + t0.comp[c];
          f.scale = 1.0 / std::sqrt(2.0);
          a = t0;
          b = t1;
        }
        push(std::move(f), std::move(a), std::move(b), i + 1);
      }
    }
  }
  return out;
}

}  // namespace

std::vector<BasisFunction> tet_edge_face(int p, TetVariant variant) {
  const auto& ref = reference(ElementKind::Tet);
  std::vector<BasisFunction> out;
  if (variant == TetVariant::FirstKind) {
    MPoly one = MPoly::constant(3, 1);
    for (int fi = 0; fi < 4; ++fi) {
      const auto& fv = ref.faces[fi];
      std::array<std::array<int, 2>, 3> pairs = {
          {{fv[0], fv[1]}, {fv[0], fv[2]}, {fv[1], fv[2]}}};
      for (int t = 0; t < 3; ++t) {
        int k1 = pairs[t][0], k2 = pairs[t][1];
        int k3 = fv[0] + fv[1] + fv[2] - k1 - k2;
        auto u = cross_const(grad_lambda(ref, k1), grad_lambda(ref, k2));
        double un = rat_norm(u);
        for (int i = 0; i < p; ++i) {
          double Ci = std::sqrt(3.0 * (2 * i + 4) * (2 * i + 5));
          MPoly s = ref.lambda[k3] * homogenized_jacobi_at(i, 3, 0, ref.lambda[k2], one - ref.lambda[k1]);
          BasisFunction bf;
          bf.cat = Category::TetEdgeFace;
          bf.entity = fi;
          bf.sub = t;
          bf.idx = {i, 0, 0};
          bf.field = const_dir(s, u, Ci / un);
          out.push_back(std::move(bf));
        }
      }
    }
  } else if (variant == TetVariant::SecondKind) {
    for (auto& fn : second_kind_family(p)) {
      BasisFunction bf;
      bf.cat = Category::TetEdgeFace;
      bf.entity = fn.face;
      bf.sub = fn.triple;
      bf.idx = {fn.i, 0, 0};
      bf.field = std::move(fn.field);
      out.push_back(std::move(bf));
    }
  } else {
    for (int fi = 0; fi < 4; ++fi) {
      const auto& fv = ref.faces[fi];
      int j2 = fv[0], j3 = fv[1], j4 = fv[2];
      std::array<std::array<int, 3>, 3> triples = {{{j2, j3, j4}, {j3, j4, j2}, {j4, j2, j3}}};
      for (int t = 0; t < 3; ++t) {
        auto [k1, k2, k3] = triples[t];
        auto w = cross_const(grad_lambda(ref, k2), grad_lambda(ref, k3));
        MPoly gam = ref.lambda[k3] - ref.lambda[k2];
        for (int i = 0; i < p; ++i) {
          MPoly s = compose1(legendre(i), gam) * ref.lambda[k1];
          BasisFunction bf;
          bf.cat = Category::TetEdgeFace;
          bf.entity = fi;
          bf.sub = t;
          bf.idx = {i, 0, 0};
          bf.field = const_dir(s, w, 1.0);
          out.push_back(std::move(bf));
        }
      }
    }
  }
  return out;
}

void tet_second_kind_parts(int p, std::vector<VectorField>& a, std::vector<VectorField>& b) {
  a.clear();
  b.clear();
  for (auto& fn : second_kind_family(p)) {
    a.push_back(std::move(fn.part_a));
    b.push_back(std::move(fn.part_b));
  }
}

std::vector<BasisFunction> tet_face_bubble(int p) {
  std::vector<BasisFunction> out;
  if (p < 3) return out;
  const auto& ref = reference(ElementKind::Tet);
  MPoly one = MPoly::constant(3, 1);
  for (int fi = 0; fi < 4; ++fi) {
    const auto& fv = ref.faces[fi];
    int j2 = fv[0], j3 = fv[1], j4 = fv[2];
    auto u = cross_const(grad_lambda(ref, j3), grad_lambda(ref, j4));
    double un = rat_norm(u);
    MPoly lll = ref.lambda[j2] * ref.lambda[j3] * ref.lambda[j4];
    for (int m = 0; m <= p - 3; ++m)
      for (int n = 0; n <= p - 3 - m; ++n) {
        double Cmn = std::sqrt(static_cast<double>(2 * n + 3) * (m + n + 3) * (m + 2 * n + 4) *
                               (m + 2 * n + 5) * (2 * m + 2 * n + 7) * (2 * m + 2 * n + 8) *
                               (2 * m + 2 * n + 9) / ((m + 1) * (m + 2)));
        MPoly s1 = homogenized_jacobi_at(m, 2 * n + 3, 2, ref.lambda[j3], one - ref.lambda[j2]);
        MPoly s2 = homogenized_jacobi_at(n, 0, 2, ref.lambda[j4],
                                         one - ref.lambda[j2] - ref.lambda[j3]);
        BasisFunction bf;
        bf.cat = Category::TetFaceBubble;
        bf.entity = fi;
        bf.idx = {m, n, 0};
        bf.field = const_dir(lll * s1 * s2, u, Cmn / un);
        out.push_back(std::move(bf));
      }
  }
  return out;
}

std::vector<BasisFunction> tet_edge_interior(int p) {
  std::vector<BasisFunction> out;
  if (p < 2) return out;
  const auto& ref = reference(ElementKind::Tet);
  MPoly one = MPoly::constant(3, 1);
  for (const auto& e : ref.edge_data) {
    int k1 = e.ends[0], k2 = e.ends[1];
    std::array<Rational, 3> tau = {e.tangent[0], e.tangent[1], e.tangent[2]};
    double tn = rat_norm(tau);
    MPoly ll = ref.lambda[k1] * ref.lambda[k2];
    for (int i = 0; i <= p - 2; ++i) {
      double Ci = (i + 3) * std::sqrt(static_cast<double>(2 * i + 4) * (2 * i + 5) *
                                      (2 * i + 7) / (i + 1));
      MPoly s = ll * homogenized_jacobi_at(i, 1, 2, ref.lambda[k2], one - ref.lambda[k1]);
      BasisFunction bf;
      bf.cat = Category::TetEdgeInterior;
      bf.entity = e.id;
      bf.idx = {i, 0, 0};
      bf.field = const_dir(s, tau, Ci / tn);
      out.push_back(std::move(bf));
    }
  }
  return out;
}

std::vector<BasisFunction> tet_face_interior(int p) {
  std::vector<BasisFunction> out;
  if (p < 3) return out;
  const auto& ref = reference(ElementKind::Tet);
  MPoly one = MPoly::constant(3, 1);
  for (int fi = 0; fi < 4; ++fi) {
    const auto& fv = ref.faces[fi];
    int j2 = fv[0], j3 = fv[1], j4 = fv[2];
    MPoly lll = ref.lambda[j2] * ref.lambda[j3] * ref.lambda[j4];
    for (int m = 0; m <= p - 3; ++m)
      for (int n = 0; n <= p - 3 - m; ++n) {
        double Cmn = std::sqrt(static_cast<double>(2 * n + 3) * (m + n + 3) * (m + 2 * n + 4) *
                               (m + 2 * n + 5) * (2 * m + 2 * n + 7) * (2 * m + 2 * n + 8) *
                               (2 * m + 2 * n + 9) / ((m + 1) * (m + 2)));
        MPoly s1 = homogenized_jacobi_at(m, 2 * n + 3, 2, ref.lambda[j3], one - ref.lambda[j2]);
        MPoly s2 = homogenized_jacobi_at(n, 0, 2, ref.lambda[j4],
                                         one - ref.lambda[j2] - ref.lambda[j3]);
        MPoly base = lll * s1 * s2;
        std::array<std::array<int, 2>, 2> dirs = {{{j2, j3}, {j2, j4}}};
        for (int d = 0; d < 2; ++d) {
          auto [a, b] = dirs[d];
          std::array<Rational, 3> tau;
          for (int c = 0; c < 3; ++c) tau[c] = ref.vertices[b][c] - ref.vertices[a][c];
          BasisFunction bf;
          bf.cat = Category::TetFaceInterior;
          bf.entity = fi;
          bf.idx = {m, n, 0};
          bf.dir = d;
          bf.field = const_dir(base, tau, Cmn / rat_norm(tau));
          out.push_back(std::move(bf));
        }
      }
  }
  return out;
}

std::vector<BasisFunction> tet_interior_bubble(int p) {
  std::vector<BasisFunction> out;
  if (p < 4) return out;
  const auto& ref = reference(ElementKind::Tet);
  MPoly one = MPoly::constant(3, 1);
  MPoly llll = ref.lambda[0] * ref.lambda[1] * ref.lambda[2] * ref.lambda[3];
  for (int l = 0; l <= p - 4; ++l)
    for (int m = 0; m <= p - 4 - l; ++m)
      for (int n = 0; n <= p - 4 - l - m; ++n) {
        double C1 = std::sqrt(static_cast<double>(l + 2 * m + 2 * n + 9) *
                              (l + 2 * m + 2 * n + 10) * (2 * l + 2 * m + 2 * n + 11) *
                              (m + 2 * n + 6) / ((l + 1) * (m + 1) * (n + 1)));
        double C2 = std::sqrt(static_cast<double>(m + 2 * n + 7) * (2 * m + 2 * n + 8) *
                              (n + 3) * (n + 4) * (2 * n + 5) / ((l + 2) * (m + 2) * (n + 2)));
        MPoly sl = compose1(jacobi(l, 2 * m + 2 * n + 8, 2), ref.lambda[1].scaled(2) - one);
        MPoly sm = homogenized_jacobi_at(m, 2 * n + 5, 2, ref.lambda[2], one - ref.lambda[1]);
        MPoly sn = homogenized_jacobi_at(n, 2, 2, ref.lambda[3],
                                         one - ref.lambda[1] - ref.lambda[2]);
        MPoly base = llll * sl * sm * sn;
        for (int d = 0; d < 3; ++d) {
          VectorField f(3, C1 * C2);
          f.comp[d] = base;
          BasisFunction bf;
          bf.cat = Category::TetInteriorBubble;
          bf.idx = {l, m, n};
          bf.dir = d;
          bf.field = std::move(f);
          out.push_back(std::move(bf));
        }
      }
  return out;
}

BasisSet build_tet(int p, TetVariant variant) {
  if (p < 1 || p > 4) throw std::invalid_argument("tet order must be in [1,4]");
  if (variant == TetVariant::AC)
    throw std::invalid_argument("the AC family is study-only and not a complete set");
  BasisSet set;
  set.kind = ElementKind::Tet;
  set.p = p;
  set.variant = variant;
  auto push = [&](std::vector<BasisFunction>&& fns) {
    for (auto& f : fns) {
      f.id = set.dimension();
      set.fns.push_back(std::move(f));
    }
  };
  push(tet_edge_face(p, variant));
  push(tet_face_bubble(p));
  push(tet_edge_interior(p));
  push(tet_face_interior(p));
  push(tet_interior_bubble(p));
  return set;
}

RankCertificate degeneracy_certificate(int p) {
  auto fam = tet_edge_face(p, TetVariant::AC);
  std::vector<VectorField> fields;
  fields.reserve(fam.size());
  for (auto& f : fam) fields.push_back(std::move(f.field));
  return coefficient_rank(fields);
}

}  // namespace hdiv
