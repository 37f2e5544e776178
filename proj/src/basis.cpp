#include "hdiv/basis.hpp"

namespace hdiv {

const char* category_name(Category c) {
  switch (c) {
    case Category::QuadEdgeRT: return "quad-edge-rt";
    case Category::QuadEdgeHigher: return "quad-edge-higher";
    case Category::QuadInterior1: return "quad-interior-divfree";
    case Category::QuadInterior2: return "quad-interior-sym";
    case Category::QuadInterior3Xi: return "quad-interior-xi";
    case Category::QuadInterior3Eta: return "quad-interior-eta";
    case Category::HexFaceRT: return "hex-face-rt";
    case Category::HexFaceHigherIJ: return "hex-face-higher-ij";
    case Category::HexFaceHigherI: return "hex-face-higher-i";
    case Category::HexFaceHigherJ: return "hex-face-higher-j";
    case Category::HexInterior1: return "hex-interior-divfree";
    case Category::HexInterior2: return "hex-interior-sym";
    case Category::HexInterior3: return "hex-interior-axis";
    case Category::TriEdgeRT: return "tri-edge-rt";
    case Category::TriEdgeHigher: return "tri-edge-higher";
    case Category::TriEdgeInterior: return "tri-edge-interior";
    case Category::TriBubble: return "tri-bubble";
    case Category::TetEdgeFace: return "tet-edge-face";
    case Category::TetFaceBubble: return "tet-face-bubble";
    case Category::TetEdgeInterior: return "tet-edge-interior";
    case Category::TetFaceInterior: return "tet-face-interior";
    case Category::TetInteriorBubble: return "tet-interior-bubble";
  }
  return "?";
}

std::string category_group(Category c) {
  switch (c) {
    case Category::QuadEdgeRT:
    case Category::QuadEdgeHigher:
    case Category::TriEdgeRT:
    case Category::TriEdgeHigher:
      return "edge";
    case Category::QuadInterior1:
    case Category::QuadInterior2:
    case Category::QuadInterior3Xi:
    case Category::QuadInterior3Eta:
      return "interior";
    case Category::HexFaceRT:
    case Category::HexFaceHigherIJ:
    case Category::HexFaceHigherI:
    case Category::HexFaceHigherJ:
      return "face";
    case Category::HexInterior1:
    case Category::HexInterior2:
    case Category::HexInterior3:
      return "interior";
    case Category::TriEdgeInterior:
      return "edge-interior";
    case Category::TriBubble:
      return "interior";
    case Category::TetEdgeFace:
      return "edge-face";
    case Category::TetFaceBubble:
      return "face-bubble";
    case Category::TetEdgeInterior:
      return "edge-interior";
    case Category::TetFaceInterior:
      return "face-interior";
    case Category::TetInteriorBubble:
      return "interior";
  }
  return "?";
}

std::map<std::string, int> BasisSet::group_counts() const {
  std::map<std::string, int> counts;
  for (const auto& f : fns) counts[category_group(f.cat)]++;
  return counts;
}

std::vector<VectorField> BasisSet::fields() const {
  std::vector<VectorField> out;
  out.reserve(fns.size());
  for (const auto& f : fns) out.push_back(f.field);
  return out;
}

int expected_dimension(ElementKind kind, int p) {
  switch (kind) {
    case ElementKind::Quad: return 2 * (p + 2) * (p + 1);
    case ElementKind::Hex: return 3 * (p + 2) * (p + 1) * (p + 1);
    case ElementKind::Tri: return (p + 1) * (p + 2);
    case ElementKind::Tet: return (p + 1) * (p + 2) * (p + 3) / 2;
  }
  return 0;
}

}  // namespace hdiv
