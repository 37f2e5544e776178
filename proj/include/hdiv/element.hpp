#pragma once

namespace hdiv {

enum class ElementKind { Quad, Hex, Tri, Tet };

inline int element_dim(ElementKind k) {
  return (k == ElementKind::Quad || k == ElementKind::Tri) ? 2 : 3;
}

inline const char* element_name(ElementKind k) {
  switch (k) {
    case ElementKind::Quad: return "quad";
    case ElementKind::Hex: return "hex";
    case ElementKind::Tri: return "tri";
    default: return "tet";
  }
}

}  // namespace hdiv
