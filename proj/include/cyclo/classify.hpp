#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cyclo/catalog.hpp"
#include "cyclo/digraph.hpp"
#include "cyclo/equivalence.hpp"
#include "cyclo/error.hpp"
#include "cyclo/signed_graph.hpp"
#include "cyclo/spectrum.hpp"

namespace cyclo {

/// Gaussian root lattice names used in the comparison tables.
struct LatticeLabel {
  enum class Kind { D_Zi, D_C, E6_Zi, E7_Zi, E8_Zi, E8_C, A_Zi };
  Kind kind = Kind::A_Zi;
  int index = 0;  ///< subscript for D, D^C and A

  std::string to_string() const {
    switch (kind) {
      case Kind::D_Zi: return "D" + std::to_string(index) + "⊗Z[i]";
      case Kind::D_C: return "D" + std::to_string(index) + "^C";
      case Kind::E6_Zi: return "E6⊗Z[i]";
      case Kind::E7_Zi: return "E7⊗Z[i]";
      case Kind::E8_Zi: return "E8⊗Z[i]";
      case Kind::E8_C: return "E8^C";
      case Kind::A_Zi: return "A" + std::to_string(index) + "⊗Z[i]";
    }
    return "?";
  }

  /// Irreducible as a Z-lattice (not of the form L⊗Z[i]).
  bool z_irreducible() const { return kind == Kind::D_C || kind == Kind::E8_C; }

  friend bool operator==(const LatticeLabel&, const LatticeLabel&) = default;
};

/// Item number (1..13) of a family in the classification list, 0 if unlisted.
inline int theorem_item(const CatalogRef& ref) {
  switch (ref.family) {
    case Family::Delta1: return 1;
    case Family::DeltaI: return 2;
    case Family::Sporadic: return 3;
    case Family::Dn: return 4;
    case Family::Ctilde: return 5;
    case Family::Ctilde1: return 6;
    case Family::Ctilde2: return 7;
    case Family::Path: return 8;
    case Family::Square: return 9;
    case Family::Y: return 10;
    case Family::Utilde1: return 11;
    case Family::Utilde6: return 12;
    case Family::CanonicalU: return 13;
    default: return 0;
  }
}

/// Label printed for a catalog digraph in the lattice tables.
inline LatticeLabel lattice_label(const CatalogRef& ref) {
  using K = LatticeLabel::Kind;
  const auto& p = ref.params;
  switch (ref.family) {
    case Family::Delta1: return {K::D_Zi, p.at(0)};
    case Family::DeltaI: return {K::D_C, 2 * p.at(0)};
    case Family::Sporadic:
      switch (ref.sporadic_name()) {
        case SporadicName::S8Dagger: return {K::E8_C, 0};
        case SporadicName::S14: return {K::E7_Zi, 0};
        case SporadicName::S16: return {K::E8_Zi, 0};
      }
      break;
    case Family::CanonicalU:
      if (p.at(0) >= 1 && p[0] <= 11) return {K::E8_Zi, 0};
      break;
    case Family::Utilde1:
    case Family::Utilde6: return {K::E8_C, 0};
    case Family::Y:
      if (p == std::vector<int>{4, 2, 1}) return {K::E8_Zi, 0};
      if (p == std::vector<int>{3, 2, 1}) return {K::E7_Zi, 0};
      break;
    case Family::Square:
      if (p == std::vector<int>{3, 1, 0, 0} || p == std::vector<int>{2, 1, 1, 0} || p == std::vector<int>{1, 1, 1, 1})
        return {K::E8_Zi, 0};
      break;
    case Family::Path:
      if (p.at(0) >= 1) return {K::A_Zi, p[0]};
      break;
    default: break;
  }
  throw NotInTables(ref.to_string() + " is not listed in the lattice tables");
}

struct Container {
  CatalogRef ref;
  std::vector<int> subset;   ///< vertices of the generated container, ascending
  SwitchingWitness witness;  ///< maps H(input) onto H(container restricted to subset)
};

struct ClassificationResult {
  RadiusClass radius = RadiusClass::GreaterThan2;
  std::optional<Container> container;
  std::optional<std::string> lattice;
  std::vector<std::string> notes;
};

/// Containers tried for an n-vertex input, in search order.
inline std::vector<CatalogRef> container_candidates(int n, RadiusClass radius) {
  std::vector<CatalogRef> out;
  if (radius == RadiusClass::LessThan2) {
    if (n >= 3) {
      if (n % 4 != 0) out.push_back(CatalogRef::dn(n));
      if (n % 4 != 2) out.push_back(CatalogRef::ctilde(n));
      if (n % 4 != 1) out.push_back(CatalogRef::ctilde1(n));
      if (n % 4 != 3) out.push_back(CatalogRef::ctilde2(n));
    }
    out.push_back(CatalogRef::path(n));
    for (int a = 0; a <= n - 4; ++a) out.push_back(CatalogRef::square(a, 0, n - 4 - a, 0));
    if (n >= 4) out.push_back(CatalogRef::y(n - 3, 1, 1));
    if (n <= 4) {
      out.push_back(CatalogRef::utilde1());
      out.push_back(CatalogRef::utilde6());
    }
    if (n <= 8)
      for (int i = 1; i <= 11; ++i) out.push_back(CatalogRef::canonical_u(i));
  }
  for (int k = std::max(3, (n + 1) / 2); k <= std::max(3, n); ++k) {
    out.push_back(CatalogRef::delta1(k));
    out.push_back(CatalogRef::delta_i(k));
  }
  if (n <= 8) out.push_back(CatalogRef::sporadic(SporadicName::S8Dagger));
  if (n <= 14) out.push_back(CatalogRef::sporadic(SporadicName::S14));
  out.push_back(CatalogRef::sporadic(SporadicName::S16));
  return out;
}

/// Spectral class of a connected digraph with a catalog container and its
/// embedding witness when the radius is at most 2.
inline ClassificationResult classify(const Digraph& d) {
  const int n = d.size();
  if (n == 0 || !d.is_connected()) throw ContractViolation("classify requires a connected nonempty digraph");
  if (n > kCanonicalSizeCap) throw CapExceeded("classify supports at most 16 vertices");
  ClassificationResult r;
  const HermMatrix h = d.hermitian_adjacency();
  r.radius = radius_class(h);
  r.notes.push_back(std::string("radius=") + std::string(to_string(r.radius)));
  r.notes.push_back(d.has_odd_arc_cycle() ? "associated-signed-graph=connected" : "associated-signed-graph=split");
  if (r.radius == RadiusClass::GreaterThan2) return r;

  for (const CatalogRef& ref : container_candidates(n, r.radius)) {
    const Digraph host = small_family(ref);
    if (host.size() < n) continue;
    auto found = contains_up_to_switching(d, host);
    if (!found) continue;
    r.container = Container{ref, std::move(found->subset), std::move(found->witness)};
    r.notes.push_back("container=" + ref.to_string());
    r.notes.push_back("item=" + std::to_string(theorem_item(ref)));
    break;
  }
  if (!r.container) {
    r.notes.push_back("container=none");
    return r;
  }
  const CatalogRef& ref = r.container->ref;
  const bool whole = static_cast<int>(r.container->subset.size()) == small_family(ref).size();
  std::optional<LatticeLabel> label;
  try {
    label = lattice_label(ref);
  } catch (const NotInTables&) {
  }
  if (whole && label) {
    r.lattice = label->to_string();
  } else {
    std::string s = "rank " + std::to_string(displaced_rank(h).rank);
    if (label) s += ", contained in " + label->to_string();
    r.lattice = s;
  }
  return r;
}

/// Witness that d is switching equivalent to the complete graph when every
/// eigenvalue exceeds -sqrt 2; none when the bound fails.
inline std::optional<SwitchingWitness> check_complete_equiv(const Digraph& d) {
  if (d.size() == 0 || !d.is_connected()) throw ContractViolation("check_complete_equiv requires a connected digraph");
  const HermMatrix h = d.hermitian_adjacency();
  if (!min_eigen_exceeds(h)) return std::nullopt;
  auto w = strong_equiv(h, small_family(CatalogRef::complete(d.size())).hermitian_adjacency());
  if (!w) throw TheoremViolation("smallest eigenvalue exceeds -sqrt2 but no switching to the complete graph exists");
  return w;
}

/// Vectors over Q(i) with a diagonal positive metric: for rows v_x,
/// sum_j v_x[j] conj(v_y[j]) metric[j] = (2I - H)(x, y).
struct RootBasis {
  std::vector<Rational> metric;
  std::vector<std::vector<GaussRational>> vectors;

  int rank() const noexcept { return static_cast<int>(metric.size()); }

  GaussRational inner(int x, int y) const {
    GaussRational s;
    for (int j = 0; j < rank(); ++j) s = s + vectors[x][j] * vectors[y][j].conj() * GaussRational(metric[j]);
    return s;
  }
};

/// LDL* factorization of 2I - H over Q(i); columns where the pivot vanishes
/// are dropped, so the dimension equals the rank of 2I - H.
inline RootBasis gaussian_root_basis(const HermMatrix& h) {
  const int n = h.size();
  const HermMatrix g = h.shifted(2);
  std::vector<std::vector<GaussRational>> l(n);
  RootBasis basis;
  for (int j = 0; j < n; ++j) {
    GaussRational dj = GaussRational(g(j, j));
    for (int c = 0; c < basis.rank(); ++c) dj = dj - GaussRational(l[j][c].norm() * basis.metric[c]);
    if (!dj.im.is_zero()) throw InternalError("nonreal pivot in Hermitian factorization");
    if (dj.re < 0) throw ContractViolation("2I - H is not positive semidefinite (spectral radius exceeds 2)");
    auto residual = [&](int x) {
      GaussRational s = GaussRational(g(x, j));
      for (int c = 0; c < basis.rank(); ++c)
        s = s - l[x][c] * GaussRational(basis.metric[c]) * l[j][c].conj();
      return s;
    };
    if (dj.re.is_zero()) {
      for (int x = j + 1; x < n; ++x)
        if (!residual(x).is_zero())
          throw ContractViolation("2I - H is not positive semidefinite (spectral radius exceeds 2)");
      continue;
    }
    for (int x = j + 1; x < n; ++x) l[x].push_back(residual(x) / dj);
    l[j].push_back(GaussRational(Rational(1)));
    for (int x = 0; x < j; ++x) l[x].push_back(GaussRational());
    basis.metric.push_back(dj.re);
  }
  for (auto& row : l) row.resize(basis.rank());
  basis.vectors = std::move(l);
  return basis;
}

}  // namespace cyclo
