#include "hdiv/checks.hpp"

#include <cmath>
#include <map>

namespace hdiv {

namespace {

bool claims_orthonormal(const BasisSet& set, Category c) {
  switch (c) {
    case Category::TriEdgeInterior:
    case Category::TriBubble:
    case Category::TetFaceBubble:
    case Category::TetEdgeInterior:
    case Category::TetFaceInterior:
    case Category::TetInteriorBubble:
      return true;
    case Category::TetEdgeFace:
      return set.variant == TetVariant::FirstKind;
    default:
      return false;
  }
}

// Families are orthonormal across their polynomial indices but not across
// directions or entities, so the grouping keeps those apart.
std::string group_label(const BasisFunction& f) {
  std::string s = category_name(f.cat);
  if (f.entity >= 0) s += " e" + std::to_string(f.entity);
  if (f.cat == Category::TetEdgeFace) s += "." + std::to_string(f.sub);
  if (f.dir >= 0) s += " d" + std::to_string(f.dir);
  return s;
}

bool claims_divergence_free(Category c) {
  switch (c) {
    case Category::QuadEdgeHigher:
    case Category::QuadInterior1:
    case Category::TriEdgeHigher:
    case Category::HexFaceHigherIJ:
    case Category::HexFaceHigherI:
    case Category::HexFaceHigherJ:
    case Category::HexInterior1:
      return true;
    default:
      return false;
  }
}

// -1 when the function owns no facet and must have zero trace everywhere.
int owned_facet(const BasisFunction& f) {
  switch (f.cat) {
    case Category::QuadEdgeRT:
    case Category::QuadEdgeHigher:
    case Category::TriEdgeRT:
    case Category::TriEdgeHigher:
    case Category::HexFaceRT:
    case Category::HexFaceHigherIJ:
    case Category::HexFaceHigherI:
    case Category::HexFaceHigherJ:
    case Category::TetEdgeFace:
    case Category::TetFaceBubble:
      return f.entity;
    default:
      return -1;
  }
}

bool is_constant_one(const MPoly& a) {
  if (a.terms().size() != 1) return false;
  const auto& [e, q] = *a.terms().begin();
  return e == Expo{} && q == 1;
}

}  // namespace

std::vector<GroupDeviation> orthonormal_block_deviations(const BasisSet& set) {
  std::map<std::string, std::vector<int>> groups;
  for (const auto& f : set.fns)
    if (claims_orthonormal(set, f.cat)) groups[group_label(f)].push_back(f.id);
  std::vector<GroupDeviation> out;
  if (groups.empty()) return out;
  SymmetricMatrix M = mass_matrix(set, AssemblyPath::Exact);
  for (const auto& [label, ids] : groups) {
    GroupDeviation dev;
    dev.label = label;
    dev.size = static_cast<int>(ids.size());
    for (size_t a = 0; a < ids.size(); ++a)
      for (size_t b = 0; b < ids.size(); ++b) {
        double want = (a == b) ? 1.0 : 0.0;
        dev.max_dev = std::max(dev.max_dev, std::abs(M(ids[a], ids[b]) - want));
      }
    out.push_back(std::move(dev));
  }
  return out;
}

DivfreeReport check_divergence_free(const BasisSet& set) {
  DivfreeReport rep;
  for (const auto& f : set.fns) {
    if (!claims_divergence_free(f.cat)) continue;
    ++rep.checked;
    if (!divergence(f.field).is_zero()) rep.failed_ids.push_back(f.id);
  }
  return rep;
}

TraceReport check_traces(const BasisSet& set) {
  TraceReport rep;
  const auto& ref = reference(set.kind);
  auto fail = [&](const BasisFunction& f, const std::string& what) {
    rep.failures.push_back(std::string(category_name(f.cat)) + " id " + std::to_string(f.id) +
                           ": " + what);
  };
  for (const auto& f : set.fns) {
    int own = owned_facet(f);
    if (ref.dim == 2) {
      for (const auto& e : ref.edge_data) {
        if (e.id == own) continue;
        ++rep.checked;
        if (!normal_trace_on_edge(f.field, e).is_zero())
          fail(f, "normal trace on edge " + std::to_string(e.id));
      }
    } else {
      for (const auto& fd : ref.face_data) {
        if (fd.id == own) continue;
        ++rep.checked;
        if (!normal_trace_on_face(f.field, fd).is_zero())
          fail(f, "normal trace on face " + std::to_string(fd.id));
      }
    }
    // Lowest-order families: exact trace values on the owning facet.
    if (f.cat == Category::QuadEdgeRT) {
      const auto& e = ref.edge_data[f.entity];
      ++rep.checked;
      if (!tangent_trace_on_edge(f.field, e).is_zero()) fail(f, "tangential trace on own edge");
      ++rep.checked;
      if (!is_constant_one(normal_trace_on_edge(f.field, e)))
        fail(f, "own-edge normal trace is not the unit constant");
    }
    if (f.cat == Category::HexFaceRT) {
      const auto& fd = ref.face_data[f.entity];
      ++rep.checked;
      if (!is_constant_one(normal_trace_on_face(f.field, fd)))
        fail(f, "own-face normal trace is not the unit constant");
    }
    if (f.cat == Category::TriEdgeRT) {
      const auto& e = ref.edge_data[f.entity];
      ++rep.checked;
      MPoly t = normal_trace_on_edge(f.field, e);
      if (t.is_zero() || t.total_degree() != 0)
        fail(f, "own-edge normal trace is not a nonzero constant");
    }
  }
  return rep;
}

}  // namespace hdiv
