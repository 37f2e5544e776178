#include "hdiv/cli.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "hdiv/basis_hex.hpp"
#include "hdiv/basis_quad.hpp"
#include "hdiv/basis_tet.hpp"
#include "hdiv/basis_tri.hpp"
#include "hdiv/checks.hpp"
#include "hdiv/divfree.hpp"
#include "hdiv/rank.hpp"

namespace hdiv {

namespace {

using nlohmann::json;

struct Options {
  std::string element;
  int order = 2;
  std::string variant = "first";
  std::string path = "exact";
  std::string format = "json";
  unsigned seed = 0;
  std::string out;
};

ElementKind parse_element(const std::string& s) {
  if (s == "quad") return ElementKind::Quad;
  if (s == "hex") return ElementKind::Hex;
  if (s == "tri") return ElementKind::Tri;
  if (s == "tet") return ElementKind::Tet;
  throw CLI::ValidationError("--element", "unknown element '" + s + "'");
}

TetVariant parse_variant(const std::string& s) {
  if (s == "first") return TetVariant::FirstKind;
  if (s == "second") return TetVariant::SecondKind;
  if (s == "ac") return TetVariant::AC;
  throw CLI::ValidationError("--variant", "unknown variant '" + s + "'");
}

int max_order(ElementKind kind) {
  return (kind == ElementKind::Quad || kind == ElementKind::Tri) ? 6 : 4;
}

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

BasisSet build_set(ElementKind kind, int p, TetVariant variant) {
  if (p < 1 || p > max_order(kind))
    throw UsageError("order " + std::to_string(p) + " out of range for this element");
  switch (kind) {
    case ElementKind::Quad: return build_quad(p);
    case ElementKind::Hex: return build_hex(p);
    case ElementKind::Tri: return build_tri(p);
    case ElementKind::Tet: return build_tet(p, variant);
  }
  throw UsageError("unreachable");
}

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void emit(const Options& opt, const std::string& payload) {
  if (opt.out.empty()) {
    std::cout << payload;
    if (!payload.empty() && payload.back() != '\n') std::cout << '\n';
  } else {
    std::ofstream f(opt.out);
    if (!f) throw std::runtime_error("cannot open output file " + opt.out);
    f << payload;
    if (!payload.empty() && payload.back() != '\n') f << '\n';
  }
}

json set_header(const Options& opt, const BasisSet& set) {
  json j;
  j["element"] = opt.element;
  j["order"] = set.p;
  if (set.kind == ElementKind::Tet)
    j["variant"] = set.variant == TetVariant::FirstKind ? "first" : "second";
  return j;
}

json matrix_json(const SymmetricMatrix& A) {
  json rows = json::array();
  for (int i = 0; i < A.order(); ++i) {
    json row = json::array();
    for (int j = 0; j < A.order(); ++j) row.push_back(A(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

int cmd_dims(const Options& opt) {
  BasisSet set = build_set(parse_element(opt.element), opt.order, parse_variant(opt.variant));
  int expected = expected_dimension(set.kind, set.p);
  auto groups = set.group_counts();
  bool ok = set.dimension() == expected;
  if (opt.format == "csv") {
    std::ostringstream os;
    os << "group,count\n";
    for (const auto& [g, c] : groups) os << g << ',' << c << '\n';
    os << "total," << set.dimension() << '\n';
    os << "expected," << expected << '\n';
    emit(opt, os.str());
  } else {
    json j = set_header(opt, set);
    j["groups"] = groups;
    j["total"] = set.dimension();
    j["expected"] = expected;
    j["match"] = ok;
    emit(opt, j.dump(2));
  }
  return ok ? 0 : 1;
}

int cmd_matrix(const Options& opt, bool stiffness) {
  BasisSet set = build_set(parse_element(opt.element), opt.order, parse_variant(opt.variant));
  AssemblyPath path = opt.path == "quadrature" ? AssemblyPath::Quadrature : AssemblyPath::Exact;
  SymmetricMatrix A = stiffness ? stiffness_matrix(set, path) : mass_matrix(set, path);
  if (opt.format == "csv") {
    emit(opt, to_csv(A));
  } else {
    json j = set_header(opt, set);
    j["path"] = opt.path;
    j["n"] = A.order();
    j["matrix"] = matrix_json(A);
    emit(opt, j.dump());
  }
  return 0;
}

int cmd_cond(const Options& opt) {
  BasisSet set = build_set(parse_element(opt.element), opt.order, parse_variant(opt.variant));
  AssemblyPath path = opt.path == "quadrature" ? AssemblyPath::Quadrature : AssemblyPath::Exact;
  CondReport m = condition_number(mass_matrix(set, path), false);
  CondReport s = condition_number(stiffness_matrix(set, path), true);
  if (opt.format == "csv") {
    std::ostringstream os;
    os << "matrix,kappa,lambda_max,lambda_min,excluded\n";
    os << "mass," << fmt17(m.kappa) << ',' << fmt17(m.lambda_max) << ',' << fmt17(m.lambda_min)
       << ",0\n";
    os << "stiffness," << fmt17(s.kappa) << ',' << fmt17(s.lambda_max) << ','
       << fmt17(s.lambda_min) << ',' << s.excluded << '\n';
    emit(opt, os.str());
  } else {
    json j = set_header(opt, set);
    j["path"] = opt.path;
    j["mass"] = {{"kappa", m.kappa}, {"lambda_max", m.lambda_max}, {"lambda_min", m.lambda_min}};
    j["stiffness"] = {{"kappa", s.kappa},
                      {"lambda_max", s.lambda_max},
                      {"lambda_min", s.lambda_min},
                      {"excluded", s.excluded}};
    emit(opt, j.dump(2));
  }
  return 0;
}

int cmd_check_orthonormal(const Options& opt) {
  BasisSet set = build_set(parse_element(opt.element), opt.order, parse_variant(opt.variant));
  auto devs = orthonormal_block_deviations(set);
  double worst = 0;
  for (const auto& d : devs) worst = std::max(worst, d.max_dev);
  bool ok = worst <= 1e-10;
  if (opt.format == "csv") {
    std::ostringstream os;
    os << "block,size,max_deviation\n";
    for (const auto& d : devs) os << d.label << ',' << d.size << ',' << fmt17(d.max_dev) << '\n';
    emit(opt, os.str());
  } else {
    json j = set_header(opt, set);
    json blocks = json::array();
    for (const auto& d : devs)
      blocks.push_back({{"block", d.label}, {"size", d.size}, {"max_deviation", d.max_dev}});
    j["blocks"] = std::move(blocks);
    j["max_deviation"] = worst;
    j["tolerance"] = 1e-10;
    j["pass"] = ok;
    emit(opt, j.dump(2));
  }
  return ok ? 0 : 1;
}

int cmd_check_divfree(const Options& opt) {
  BasisSet set = build_set(parse_element(opt.element), opt.order, parse_variant(opt.variant));
  DivfreeReport rep = check_divergence_free(set);
  bool ok = rep.failed_ids.empty();
  if (opt.format == "csv") {
    std::ostringstream os;
    os << "checked,failed\n" << rep.checked << ',' << rep.failed_ids.size() << '\n';
    emit(opt, os.str());
  } else {
    json j = set_header(opt, set);
    j["checked"] = rep.checked;
    j["failed_ids"] = rep.failed_ids;
    j["pass"] = ok;
    emit(opt, j.dump(2));
  }
  return ok ? 0 : 1;
}

int cmd_check_traces(const Options& opt) {
  BasisSet set = build_set(parse_element(opt.element), opt.order, parse_variant(opt.variant));
  TraceReport rep = check_traces(set);
  bool ok = rep.failures.empty();
  if (opt.format == "csv") {
    std::ostringstream os;
    os << "checked,failed\n" << rep.checked << ',' << rep.failures.size() << '\n';
    emit(opt, os.str());
  } else {
    json j = set_header(opt, set);
    j["checked"] = rep.checked;
    j["failures"] = rep.failures;
    j["pass"] = ok;
    emit(opt, j.dump(2));
  }
  return ok ? 0 : 1;
}

int cmd_check_rank(const Options& opt) {
  ElementKind kind = parse_element(opt.element);
  TetVariant variant = parse_variant(opt.variant);
  json j;
  j["element"] = opt.element;
  j["order"] = opt.order;
  bool ok = true;
  if (kind == ElementKind::Tet && variant == TetVariant::AC) {
    if (opt.order < 1 || opt.order > 4) throw UsageError("order out of range");
    auto fam = tet_edge_face(opt.order, TetVariant::AC);
    std::vector<VectorField> fields;
    for (auto& f : fam) fields.push_back(std::move(f.field));
    RankCertificate cert = coefficient_rank(fields);
    j["variant"] = "ac";
    j["count"] = cert.count;
    j["rank"] = cert.rank;
    j["nullity"] = cert.count - cert.rank;
    ok = cert.rank == cert.count;
  } else {
    BasisSet set = build_set(kind, opt.order, variant);
    RankCertificate cert = coefficient_rank(set.fields());
    if (set.kind == ElementKind::Tet)
      j["variant"] = set.variant == TetVariant::FirstKind ? "first" : "second";
    j["count"] = cert.count;
    j["rank"] = cert.rank;
    j["nullity"] = cert.count - cert.rank;
    ok = cert.rank == cert.count;
    if (kind == ElementKind::Tet && variant == TetVariant::SecondKind) {
      // The mixed-length face functions get the exact certificate over
      // Q(sqrt 2) on top of the materialized-coefficient rank.
      std::vector<VectorField> a, b;
      tet_second_kind_parts(opt.order, a, b);
      int r2 = coefficient_rank_sqrt2(a, b);
      j["face_family_count"] = static_cast<int>(a.size());
      j["face_family_rank_exact"] = r2;
      ok = ok && r2 == static_cast<int>(a.size());
    }
  }
  j["pass"] = ok;
  if (opt.format == "csv") {
    std::ostringstream os;
    os << "count,rank,pass\n" << j["count"] << ',' << j["rank"] << ',' << (ok ? 1 : 0) << '\n';
    emit(opt, os.str());
  } else {
    emit(opt, j.dump(2));
  }
  return ok ? 0 : 1;
}

int cmd_degeneracy(const Options& opt) {
  int p = opt.order;
  if (p < 1 || p > 4) throw UsageError("order out of range");
  RankCertificate cert = degeneracy_certificate(p);
  auto fam = tet_edge_face(p, TetVariant::AC);
  // Re-verify every null vector exactly against the polynomial components.
  bool verified = true;
  for (const auto& nv : cert.nullspace) {
    std::vector<MPoly> acc(3, MPoly::zero(3));
    for (size_t k = 0; k < nv.size(); ++k) {
      if (nv[k] == 0) continue;
      for (int c = 0; c < 3; ++c) acc[c] = acc[c] + fam[k].field.comp[c].scaled(nv[k]);
    }
    for (int c = 0; c < 3; ++c) verified = verified && acc[c].is_zero();
  }
  json j;
  j["order"] = p;
  j["count"] = cert.count;
  j["rank"] = cert.rank;
  j["nullity"] = cert.count - cert.rank;
  j["verified"] = verified;
  json nulls = json::array();
  for (const auto& nv : cert.nullspace) {
    json entries = json::array();
    for (size_t k = 0; k < nv.size(); ++k) {
      if (nv[k] == 0) continue;
      entries.push_back({{"id", static_cast<int>(k)},
                         {"face", fam[k].entity},
                         {"edge_cycle", fam[k].sub},
                         {"i", fam[k].idx[0]},
                         {"coefficient", nv[k].get_str()}});
    }
    nulls.push_back(std::move(entries));
  }
  j["null_vectors"] = std::move(nulls);
  int nullity = cert.count - cert.rank;
  bool expected = verified;
  if (p == 1) expected = expected && nullity == 0;
  if (p == 2) expected = expected && nullity == 1;
  j["pass"] = expected;
  if (opt.format == "csv") {
    std::ostringstream os;
    os << "count,rank,nullity,verified\n"
       << cert.count << ',' << cert.rank << ',' << cert.count - cert.rank << ','
       << (verified ? 1 : 0) << '\n';
    emit(opt, os.str());
  } else {
    emit(opt, j.dump(2));
  }
  return expected ? 0 : 1;
}

int cmd_augment_demo(const Options& opt) {
  BasisSet set = build_set(parse_element(opt.element), opt.order, parse_variant(opt.variant));
  std::mt19937 rng(opt.seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  DiscreteField field;
  field.set = &set;
  field.coeff.resize(set.dimension());
  for (auto& c : field.coeff) c = dist(rng);
  AugmentationResult res = augment(field, set.p);
  if (opt.format == "csv") {
    std::ostringstream os;
    os << "q,c_chi,before,after\n";
    os << res.q << ',' << fmt17(res.c_chi) << ',' << fmt17(res.before_norm) << ','
       << fmt17(res.after_norm) << '\n';
    emit(opt, os.str());
  } else {
    json j = set_header(opt, set);
    j["seed"] = opt.seed;
    j["bubble_order"] = res.q;
    j["c_chi"] = res.c_chi;
    j["divergence_norm_before"] = res.before_norm;
    j["divergence_norm_after"] = res.after_norm;
    j["reduction"] = res.before_norm > 0 ? res.after_norm / res.before_norm : 0.0;
    emit(opt, j.dump(2));
  }
  return 0;
}

json cond_row(const BasisSet& set) {
  CondReport m = condition_number(mass_matrix(set, AssemblyPath::Exact), false);
  CondReport s = condition_number(stiffness_matrix(set, AssemblyPath::Exact), true);
  return {{"p", set.p}, {"kappa_mass", m.kappa}, {"kappa_stiffness", s.kappa}};
}

int cmd_tables(const Options& opt) {
  bool do_tri = opt.element.empty() || opt.element == "tri";
  bool do_tet = opt.element.empty() || opt.element == "tet";
  json j;
  std::ostringstream csv;
  csv << "element,variant,p,kappa_mass,kappa_stiffness\n";
  if (opt.element == "quad" || opt.element == "hex") {
    ElementKind kind = parse_element(opt.element);
    json rows = json::array();
    for (int p = 1; p <= 4; ++p) {
      json r = cond_row(build_set(kind, p, TetVariant::FirstKind));
      csv << opt.element << ",," << p << ',' << fmt17(r["kappa_mass"].get<double>()) << ','
          << fmt17(r["kappa_stiffness"].get<double>()) << '\n';
      rows.push_back(std::move(r));
    }
    j[opt.element] = std::move(rows);
    if (opt.format == "csv")
      emit(opt, csv.str());
    else
      emit(opt, j.dump(2));
    return 0;
  }
  if (do_tri) {
    json rows = json::array();
    for (int p = 1; p <= 4; ++p) {
      json r = cond_row(build_tri(p));
      csv << "tri,," << p << ',' << fmt17(r["kappa_mass"].get<double>()) << ','
          << fmt17(r["kappa_stiffness"].get<double>()) << '\n';
      rows.push_back(std::move(r));
    }
    j["tri"] = std::move(rows);
  }
  if (do_tet) {
    json first = json::array(), second = json::array();
    json ratio_m = json::array(), ratio_s = json::array();
    for (int p = 1; p <= 4; ++p) {
      json rf = cond_row(build_tet(p, TetVariant::FirstKind));
      json rs = cond_row(build_tet(p, TetVariant::SecondKind));
      csv << "tet,first," << p << ',' << fmt17(rf["kappa_mass"].get<double>()) << ','
          << fmt17(rf["kappa_stiffness"].get<double>()) << '\n';
      csv << "tet,second," << p << ',' << fmt17(rs["kappa_mass"].get<double>()) << ','
          << fmt17(rs["kappa_stiffness"].get<double>()) << '\n';
      ratio_m.push_back(rf["kappa_mass"].get<double>() / rs["kappa_mass"].get<double>());
      ratio_s.push_back(rf["kappa_stiffness"].get<double>() /
                        rs["kappa_stiffness"].get<double>());
      first.push_back(std::move(rf));
      second.push_back(std::move(rs));
    }
    j["tet"] = {{"first", std::move(first)},
                {"second", std::move(second)},
                {"ratio_mass", std::move(ratio_m)},
                {"ratio_stiffness", std::move(ratio_s)}};
  }
  if (opt.format == "csv")
    emit(opt, csv.str());
  else
    emit(opt, j.dump(2));
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"hierarchical H(div) basis construction and verification"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub, bool need_element) {
    auto* e = sub->add_option("--element", opt.element, "reference element")
                  ->check(CLI::IsMember({"quad", "hex", "tri", "tet"}));
    if (need_element) e->required();
    sub->add_option("--order,-p", opt.order, "polynomial order");
    sub->add_option("--variant", opt.variant, "tet family variant")
        ->check(CLI::IsMember({"first", "second", "ac"}));
    sub->add_option("--path", opt.path, "assembly route")
        ->check(CLI::IsMember({"exact", "quadrature"}));
    sub->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--seed", opt.seed, "random seed");
    sub->add_option("--out", opt.out, "write output to file");
  };

  auto* dims = app.add_subcommand("dims", "per-family dimension counts");
  add_common(dims, true);
  auto* mass = app.add_subcommand("mass", "mass matrix");
  add_common(mass, true);
  auto* stiff = app.add_subcommand("stiffness", "stiffness matrix");
  add_common(stiff, true);
  auto* cond = app.add_subcommand("cond", "condition numbers");
  add_common(cond, true);
  auto* orth = app.add_subcommand("check-orthonormal", "normalized Gram blocks vs identity");
  add_common(orth, true);
  auto* divf = app.add_subcommand("check-divfree", "exact zero divergence of the curl families");
  add_common(divf, true);
  auto* traces = app.add_subcommand("check-traces", "exact facet normal-trace checks");
  add_common(traces, true);
  auto* rank = app.add_subcommand("check-rank", "exact linear independence");
  add_common(rank, true);
  auto* degen = app.add_subcommand("degeneracy", "rank certificate for the study family");
  add_common(degen, false);
  auto* aug = app.add_subcommand("augment-demo", "one-bubble divergence reduction demo");
  add_common(aug, true);
  auto* tables = app.add_subcommand("tables", "conditioning tables");
  add_common(tables, false);

  try {
    app.parse(argc, const_cast<char**>(argv));
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(dims)) return cmd_dims(opt);
    if (app.got_subcommand(mass)) return cmd_matrix(opt, false);
    if (app.got_subcommand(stiff)) return cmd_matrix(opt, true);
    if (app.got_subcommand(cond)) return cmd_cond(opt);
    if (app.got_subcommand(orth)) return cmd_check_orthonormal(opt);
    if (app.got_subcommand(divf)) return cmd_check_divfree(opt);
    if (app.got_subcommand(traces)) return cmd_check_traces(opt);
    if (app.got_subcommand(rank)) return cmd_check_rank(opt);
    if (app.got_subcommand(degen)) return cmd_degeneracy(opt);
    if (app.got_subcommand(aug)) return cmd_augment_demo(opt);
    if (app.got_subcommand(tables)) return cmd_tables(opt);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace hdiv
