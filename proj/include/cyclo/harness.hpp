#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "cyclo/catalog.hpp"
#include "cyclo/classify.hpp"
#include "cyclo/digraph.hpp"
#include "cyclo/equivalence.hpp"
#include "cyclo/error.hpp"
#include "cyclo/spectrum.hpp"

namespace cyclo {

/// Hereditary spectral predicates usable for pruning: each is preserved by
/// taking induced subdigraphs (monotonicity of the spectral radius and
/// interlacing for the least eigenvalue).
enum class SpectralFilter { None, RadiusAtMost2, RadiusLessThan2, MinAboveMinusSqrt2 };

inline bool passes(SpectralFilter f, const HermMatrix& h) {
  switch (f) {
    case SpectralFilter::None: return true;
    case SpectralFilter::RadiusAtMost2: return radius_class(h) != RadiusClass::GreaterThan2;
    case SpectralFilter::RadiusLessThan2: return radius_class(h) == RadiusClass::LessThan2;
    case SpectralFilter::MinAboveMinusSqrt2: return min_eigen_exceeds(h);
  }
  return true;
}

/// Worker count: CYCLO_THREADS if set and positive, else the hardware count.
inline int worker_count() {
  if (const char* env = std::getenv("CYCLO_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

inline constexpr int kEnumerationCap = 6;

struct EnumerationOptions {
  int n = 0;
  SpectralFilter filter = SpectralFilter::None;
  bool dedup = false;
  bool prune = true;
  int threads = 0;  ///< 0 selects worker_count()
};

struct EnumerationResult {
  int n = 0;
  std::uint64_t total = 0;    ///< 4^(n(n-1)/2)
  std::uint64_t scanned = 0;  ///< complete assignments examined
  std::uint64_t pruned = 0;   ///< assignments skipped inside abandoned subtrees
  std::uint64_t passed = 0;   ///< complete assignments passing the filter
  std::uint64_t connected = 0;
  std::vector<Digraph> digraphs;           ///< connected, passing; one per class when dedup
  std::vector<std::uint64_t> class_sizes;  ///< labeled members per entry of `digraphs` (dedup only)
};

namespace detail {

inline std::uint64_t pow4(int e) { return std::uint64_t{1} << (2 * e); }

inline std::vector<std::int8_t> canonical_key(const Digraph& d) {
  return CodeMatrix::from(canonical_form(d.hermitian_adjacency())).c;
}

struct TaskOutput {
  std::uint64_t scanned = 0, pruned = 0, passed = 0, connected = 0;
  std::vector<Digraph> found;
  std::vector<std::vector<std::int8_t>> keys;
};

class Enumerator {
 public:
  explicit Enumerator(const EnumerationOptions& o) : o_(o), pairs_(pair_count(o.n)) {
    prefix_vertices_ = std::min(o.n, 4);
    prefix_pairs_ = pair_count(prefix_vertices_);
  }

  std::uint64_t task_count() const { return pow4(prefix_pairs_); }

  TaskOutput run_task(std::uint64_t task) const {
    TaskOutput out;
    std::vector<PairState> states(pairs_, PairState::None);
    for (int j = 0; j < prefix_pairs_; ++j) states[j] = static_cast<PairState>((task >> (2 * j)) & 3);
    for (int m = 2; m <= prefix_vertices_; ++m) {
      if (!check_prefix(states, m)) {
        if (m == o_.n) ++out.scanned;
        else out.pruned += pow4(pairs_ - prefix_pairs_);
        return out;
      }
    }
    extend(states, prefix_vertices_, out);
    return out;
  }

 private:
  bool check_prefix(const std::vector<PairState>& states, int m) const {
    if (!o_.prune && m < o_.n) return true;
    if (o_.filter == SpectralFilter::None) return true;
    std::vector<PairState> head(states.begin(), states.begin() + pair_count(m));
    return passes(o_.filter, Digraph::from_pair_states(m, std::move(head)).hermitian_adjacency());
  }

  // vertices 0..m-1 are complete and passed their checks
  void extend(std::vector<PairState>& states, int m, TaskOutput& out) const {
    if (m == o_.n) {
      emit(states, out);
      return;
    }
    const int base = pair_count(m);
    const int width = m;  // pairs (x, m) for x < m
    const std::uint64_t combos = pow4(width);
    for (std::uint64_t c = 0; c < combos; ++c) {
      for (int j = 0; j < width; ++j) states[base + j] = static_cast<PairState>((c >> (2 * j)) & 3);
      if (m + 1 == o_.n) {
        ++out.scanned;
        if (check_prefix(states, m + 1)) emit_checked(states, out);
      } else if (check_prefix(states, m + 1)) {
        extend(states, m + 1, out);
      } else {
        out.pruned += pow4(pairs_ - pair_count(m + 1));
      }
    }
    for (int j = 0; j < width; ++j) states[base + j] = PairState::None;
  }

  // reached only when the prefix covers all n vertices
  void emit(const std::vector<PairState>& states, TaskOutput& out) const {
    ++out.scanned;
    emit_checked(states, out);
  }

  void emit_checked(const std::vector<PairState>& states, TaskOutput& out) const {
    ++out.passed;
    Digraph d = Digraph::from_pair_states(o_.n, states);
    if (!d.is_connected()) return;
    ++out.connected;
    if (o_.dedup) out.keys.push_back(canonical_key(d));
    out.found.push_back(std::move(d));
  }

  EnumerationOptions o_;
  int pairs_;
  int prefix_vertices_ = 0;
  int prefix_pairs_ = 0;
};

}  // namespace detail

/// All connected digraphs on n labeled vertices passing the filter, in
/// pair-state order; with dedup, the first member of each switching class.
/// Results do not depend on the worker count.
inline EnumerationResult enumerate(const EnumerationOptions& options) {
  if (options.n < 1 || options.n > kEnumerationCap)
    throw CapExceeded("enumeration supports 1 <= n <= " + std::to_string(kEnumerationCap));
  const detail::Enumerator en(options);
  const std::uint64_t tasks = en.task_count();
  std::vector<detail::TaskOutput> outputs(tasks);
  const int workers = static_cast<int>(
      std::min<std::uint64_t>(tasks, options.threads > 0 ? options.threads : worker_count()));
  std::atomic<std::uint64_t> next{0};
  auto work = [&] {
    for (std::uint64_t t; (t = next.fetch_add(1)) < tasks;) outputs[t] = en.run_task(t);
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }

  EnumerationResult r;
  r.n = options.n;
  r.total = detail::pow4(pair_count(options.n));
  std::map<std::vector<std::int8_t>, std::size_t> index;
  for (auto& o : outputs) {
    r.scanned += o.scanned;
    r.pruned += o.pruned;
    r.passed += o.passed;
    r.connected += o.connected;
    for (std::size_t j = 0; j < o.found.size(); ++j) {
      if (!options.dedup) {
        r.digraphs.push_back(std::move(o.found[j]));
        continue;
      }
      auto [it, fresh] = index.emplace(std::move(o.keys[j]), r.digraphs.size());
      if (fresh) {
        r.digraphs.push_back(std::move(o.found[j]));
        r.class_sizes.push_back(1);
      } else {
        ++r.class_sizes[it->second];
      }
    }
  }
  if (r.scanned + r.pruned != r.total) throw InternalError("enumeration counts do not reconcile");
  return r;
}

/// Pair states in pair order: "." none, "=" digon, ">" forward, "<" backward.
inline std::string pair_signature(const Digraph& d) {
  std::string s = "n=" + std::to_string(d.size()) + " ";
  for (PairState p : d.pair_states()) s += ".=><"[static_cast<int>(p)];
  return s;
}

struct EnumerationReport {
  int n = 0;
  std::uint64_t total = 0;
  std::uint64_t scanned = 0;
  std::uint64_t pruned = 0;
  std::uint64_t connected = 0;
  std::uint64_t classes = 0;
  std::map<RadiusClass, std::uint64_t> radius_counts;  ///< per switching class
  std::map<int, std::uint64_t> item_counts;            ///< container item per class
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

/// Every connected switching class with spectral radius at most 2 must have
/// a container; classes with radius below 2 must find one among items 4..13.
inline EnumerationReport verify_theorem(int n, int threads = 0) {
  const auto e = enumerate({n, SpectralFilter::RadiusAtMost2, true, true, threads});
  EnumerationReport rep;
  rep.n = n;
  rep.total = e.total;
  rep.scanned = e.scanned;
  rep.pruned = e.pruned;
  rep.connected = e.connected;
  rep.classes = e.digraphs.size();
  std::uint64_t members = 0;
  for (auto s : e.class_sizes) members += s;
  if (members != e.connected) rep.failures.push_back("class sizes do not sum to the connected count");
  for (const Digraph& d : e.digraphs) {
    const auto c = classify(d);
    ++rep.radius_counts[c.radius];
    if (!c.container) {
      rep.failures.push_back(pair_signature(d) + ": no container found");
      continue;
    }
    const int item = theorem_item(c.container->ref);
    ++rep.item_counts[item];
    if (c.radius == RadiusClass::LessThan2 && item < 4)
      rep.failures.push_back(pair_signature(d) + ": radius below 2 but only contained in " +
                             c.container->ref.to_string());
    const Digraph host = small_family(c.container->ref);
    if (!verifies(c.container->witness, d.hermitian_adjacency(),
                  host.subdigraph(c.container->subset).hermitian_adjacency()))
      rep.failures.push_back(pair_signature(d) + ": container witness does not verify");
  }
  return rep;
}

struct Sqrt2Report {
  int n = 0;
  std::uint64_t scanned = 0;
  std::uint64_t pruned = 0;
  std::uint64_t checked = 0;   ///< connected digraphs with least eigenvalue above -sqrt 2
  std::uint64_t witnesses = 0;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

/// Every connected digraph with least eigenvalue above -sqrt 2 is switching
/// equivalent to the complete graph.
inline Sqrt2Report verify_sqrt2(int n, int threads = 0) {
  const auto e = enumerate({n, SpectralFilter::MinAboveMinusSqrt2, false, true, threads});
  Sqrt2Report rep;
  rep.n = n;
  rep.scanned = e.scanned;
  rep.pruned = e.pruned;
  const HermMatrix k = small_family(CatalogRef::complete(n)).hermitian_adjacency();
  for (const Digraph& d : e.digraphs) {
    ++rep.checked;
    try {
      const auto w = check_complete_equiv(d);
      if (!w) {
        rep.violations.push_back(pair_signature(d) + ": passed the filter but check_complete_equiv returned none");
      } else if (!verifies(*w, d.hermitian_adjacency(), k)) {
        rep.violations.push_back(pair_signature(d) + ": witness does not verify");
      } else {
        ++rep.witnesses;
      }
    } catch (const TheoremViolation& err) {
      rep.violations.push_back(pair_signature(d) + ": " + err.what());
    }
  }
  return rep;
}

/// One row of the comparison with the earlier classification.
struct Gm2Row {
  enum class Status { Verified, OurSideOnly, Failed };
  std::string gm2_item;
  std::string gm2_name;
  std::string ours;
  std::string lattice;
  Status status = Status::Verified;
  std::vector<std::string> details;
};

inline std::string_view to_string(Gm2Row::Status s) {
  switch (s) {
    case Gm2Row::Status::Verified: return "verified";
    case Gm2Row::Status::OurSideOnly: return "our-side-only";
    case Gm2Row::Status::Failed: return "FAILED";
  }
  return "?";
}

struct Gm2Report {
  std::vector<Gm2Row> rows;

  std::size_t failures() const {
    return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(),
                                                  [](const Gm2Row& r) { return r.status == Gm2Row::Status::Failed; }));
  }
  bool ok() const { return failures() == 0; }
};

inline int lattice_rank(const LatticeLabel& l) {
  using K = LatticeLabel::Kind;
  switch (l.kind) {
    case K::D_Zi: return l.index;
    case K::D_C: return l.index / 2;
    case K::E6_Zi: return 6;
    case K::E7_Zi: return 7;
    case K::E8_Zi: return 8;
    case K::E8_C: return 4;
    case K::A_Zi: return l.index;
  }
  return -1;
}

/// Rebuilds every row of the comparison table. Rows whose left-hand digraph
/// is only named (not constructed) in the available sources are checked on
/// our side alone: radius below 2 and lattice label consistent with the rank.
inline Gm2Report verify_gm2_table() {
  using K = LatticeLabel::Kind;
  struct Spec {
    const char* item;
    const char* gm2;
    std::optional<CatalogRef> gm2_ref;   // constructible left-hand side
    std::optional<CatalogRef> ours;      // right-hand digraph when it is named in our list
    std::optional<CatalogRef> contained_in;  // for "subset of" rows: the larger digraph
    LatticeLabel lattice;
  };
  const std::vector<Spec> specs{
      {"(f)", "Y4,2,1", CatalogRef::y(4, 2, 1), CatalogRef::canonical_u(5), std::nullopt, {K::E8_Zi, 0}},
      {"(f)", "Y3,2,1", CatalogRef::y(3, 2, 1), std::nullopt, CatalogRef::y(4, 2, 1), {K::E7_Zi, 0}},
      {"(g)", "-", std::nullopt, CatalogRef::utilde6(), std::nullopt, {K::E8_C, 0}},
      {"(h)", "Y1", std::nullopt, CatalogRef::utilde1(), std::nullopt, {K::E8_C, 0}},
      {"(j)", "Square3,1,0,0", CatalogRef::square(3, 1, 0, 0), CatalogRef::canonical_u(3), std::nullopt, {K::E8_Zi, 0}},
      {"(j)", "Square2,1,1,0", CatalogRef::square(2, 1, 1, 0), CatalogRef::canonical_u(2), std::nullopt, {K::E8_Zi, 0}},
      {"(j)", "Square1,1,1,1", CatalogRef::square(1, 1, 1, 1), CatalogRef::canonical_u(9), std::nullopt, {K::E8_Zi, 0}},
      {"(k)", "X1", std::nullopt, std::nullopt, std::nullopt, {K::E6_Zi, 0}},
      {"(k)", "X2", std::nullopt, std::nullopt, std::nullopt, {K::E7_Zi, 0}},
      {"(k)", "X3", std::nullopt, CatalogRef::canonical_u(11), std::nullopt, {K::E8_Zi, 0}},
      {"(k)", "X4", std::nullopt, CatalogRef::canonical_u(4), std::nullopt, {K::E8_Zi, 0}},
      {"(k)", "X5", std::nullopt, std::nullopt, std::nullopt, {K::E7_Zi, 0}},
      {"(k)", "X6", std::nullopt, CatalogRef::canonical_u(8), std::nullopt, {K::E8_Zi, 0}},
      {"(k)", "X7", std::nullopt, CatalogRef::canonical_u(10), std::nullopt, {K::E8_Zi, 0}},
      {"(k)", "X8", std::nullopt, CatalogRef::canonical_u(1), std::nullopt, {K::E8_Zi, 0}},
      {"(l)", "X9", std::nullopt, std::nullopt, std::nullopt, {K::E7_Zi, 0}},
      {"(l)", "X10", std::nullopt, CatalogRef::canonical_u(6), std::nullopt, {K::E8_Zi, 0}},
      {"", "(missing)", std::nullopt, CatalogRef::canonical_u(7), std::nullopt, {K::E8_Zi, 0}},
  };

  Gm2Report rep;
  for (const Spec& s : specs) {
    Gm2Row row;
    row.gm2_item = s.item;
    row.gm2_name = s.gm2;
    row.lattice = s.lattice.to_string();
    auto fail = [&](std::string why) {
      row.status = Gm2Row::Status::Failed;
      row.details.push_back(std::move(why));
    };
    if (s.ours) {
      row.ours = s.ours->to_string();
      const Digraph d = small_family(*s.ours);
      const HermMatrix h = d.hermitian_adjacency();
      if (radius_class(h) != RadiusClass::LessThan2) fail("radius of " + row.ours + " is not below 2");
      if (lattice_label(*s.ours) != s.lattice) fail("lattice label of " + row.ours + " differs from the table");
      const int r = displaced_rank(h).rank;
      if (r != lattice_rank(s.lattice))
        fail("rank " + std::to_string(r) + " does not match " + s.lattice.to_string());
      row.details.push_back("radius LessThan2, rank " + std::to_string(r));
    } else if (s.contained_in) {
      row.ours = "subset of " + s.contained_in->to_string();
    } else {
      row.ours = "subset of an unnamed digraph";
    }

    if (s.gm2_ref) {
      const Digraph left = small_family(*s.gm2_ref);
      const HermMatrix hl = left.hermitian_adjacency();
      if (radius_class(hl) != RadiusClass::LessThan2) fail(s.gm2_ref->to_string() + " radius is not below 2");
      if (s.ours) {
        if (!switching_equiv(left, small_family(*s.ours)))
          fail(s.gm2_ref->to_string() + " is not switching equivalent to " + row.ours);
        else
          row.details.push_back(s.gm2_ref->to_string() + " switching equivalent to " + row.ours);
      }
      if (s.contained_in) {
        const Digraph big = small_family(*s.contained_in);
        if (left.size() >= big.size()) fail("containment is not strict");
        if (!contains_up_to_switching(left, big))
          fail(s.gm2_ref->to_string() + " is not contained in " + s.contained_in->to_string());
        else
          row.details.push_back(s.gm2_ref->to_string() + " contained in " + s.contained_in->to_string());
        const int r = displaced_rank(hl).rank;
        if (r != lattice_rank(s.lattice))
          fail("rank " + std::to_string(r) + " does not match " + s.lattice.to_string());
        if (lattice_label(*s.gm2_ref) != s.lattice) fail("lattice label differs from the table");
      }
    } else if (row.status != Gm2Row::Status::Failed && std::string_view(s.gm2) != "(missing)") {
      row.status = Gm2Row::Status::OurSideOnly;
      row.details.push_back(std::string("left-hand digraph ") + s.gm2 + " is not constructed in the available sources");
    }
    rep.rows.push_back(std::move(row));
  }

  // the digraph absent from the earlier list is new up to switching
  const Digraph u7 = small_family(CatalogRef::canonical_u(7));
  Gm2Row& last = rep.rows.back();
  for (const Spec& s : specs) {
    for (const auto& ref : {s.gm2_ref, s.ours}) {
      if (!ref || *ref == CatalogRef::canonical_u(7)) continue;
      const Digraph other = small_family(*ref);
      if (other.size() != u7.size()) continue;
      if (switching_equiv(u7, other)) {
        last.status = Gm2Row::Status::Failed;
        last.details.push_back("CanonicalU(7) is switching equivalent to " + ref->to_string());
      }
    }
  }
  if (last.status != Gm2Row::Status::Failed) last.details.push_back("not switching equivalent to any other 8-vertex row");
  return rep;
}

}  // namespace cyclo
