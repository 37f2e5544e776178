#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "hdiv/refgeom.hpp"

namespace hdiv {

enum class Category {
  QuadEdgeRT,
  QuadEdgeHigher,
  QuadInterior1,
  QuadInterior2,
  QuadInterior3Xi,
  QuadInterior3Eta,
  HexFaceRT,
  HexFaceHigherIJ,
  HexFaceHigherI,
  HexFaceHigherJ,
  HexInterior1,  // sub 1..5
  HexInterior2,  // sub 1..4
  HexInterior3,  // sub 1..3
  TriEdgeRT,
  TriEdgeHigher,
  TriEdgeInterior,
  TriBubble,
  TetEdgeFace,
  TetFaceBubble,
  TetEdgeInterior,
  TetFaceInterior,
  TetInteriorBubble,
};

const char* category_name(Category c);

// Coarse table-row grouping used by dimension reports.
std::string category_group(Category c);

enum class TetVariant { FirstKind, SecondKind, AC };

struct BasisFunction {
  int id = 0;
  Category cat{};
  int sub = 0;               // subfamily for hex interior types
  int entity = -1;           // owning edge or face id, -1 for none
  std::array<int, 3> idx{};  // polynomial-degree indices (i), (m,n) or (l,m,n)
  int dir = -1;              // cartesian direction for directed families
  VectorField field;
};

struct BasisSet {
  ElementKind kind{};
  int p = 0;
  TetVariant variant = TetVariant::FirstKind;  // meaningful for Tet only
  std::vector<BasisFunction> fns;

  int dimension() const { return static_cast<int>(fns.size()); }
  std::map<std::string, int> group_counts() const;
  std::vector<VectorField> fields() const;
};

// Closed-form totals per element kind.
int expected_dimension(ElementKind kind, int p);

}  // namespace hdiv
