#pragma once

#include <array>
#include <vector>

#include "hdiv/vectorfield.hpp"

namespace hdiv {

// Per-edge geometry. `param` is the [-1,1] edge parameter (sigma_j - sigma_i on
// tensor elements, lambda_j2 - lambda_j1 on simplices). `extension` is the
// tensor-element edge extension lambda_i + lambda_j. `restriction` expresses the
// element coordinates as degree-1 polynomials in the edge parameter s in [0,1].
struct EdgeData {
  int id = 0;
  std::array<int, 2> ends{};
  MPoly param{1};
  MPoly extension{1};
  std::vector<Rational> tangent;     // directed tangent (simplex: v_j2 - v_j1; tensor: unit)
  std::vector<Rational> normal_dir;  // 2-D elements: outward normal direction, exact
  double normal_scale = 1.0;         // normal_dir * normal_scale is the unit normal
  std::vector<MPoly> restriction;
};

struct FaceData {
  int id = 0;
  std::vector<int> verts;
  MPoly xi{1}, eta{1};  // hex face parameters (sigma differences)
  MPoly extension{1};   // hex lambda_f
  std::vector<Rational> normal_dir;  // outward normal direction, exact
  double normal_scale = 1.0;
  std::vector<MPoly> restriction;  // element coords in face params (s,t)
};

struct ReferenceElement {
  ElementKind kind;
  int dim = 0;
  std::vector<std::vector<Rational>> vertices;
  std::vector<std::array<int, 2>> edges;
  std::vector<std::vector<int>> faces;  // 3-D elements
  std::vector<MPoly> lambda;
  std::vector<MPoly> sigma;  // tensor elements
  std::vector<EdgeData> edge_data;
  std::vector<FaceData> face_data;
};

// Cached immutable reference geometry.
const ReferenceElement& reference(ElementKind kind);

// Exact pullback onto a facet's own parameter(s).
MPoly restrict_to_edge(const MPoly& a, const EdgeData& e);
MPoly restrict_to_face(const MPoly& a, const FaceData& f);

// n . v restricted to the facet; polynomial part only (the field scale and the
// normal normalizer cannot affect zero-ness).
MPoly normal_trace_on_edge(const VectorField& v, const EdgeData& e);
MPoly normal_trace_on_face(const VectorField& v, const FaceData& f);
MPoly tangent_trace_on_edge(const VectorField& v, const EdgeData& e);

}  // namespace hdiv
