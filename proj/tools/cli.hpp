#pragma once

// Batch front end: parses a command line, runs the requested checks and
// writes a JSON or CSV report. Exit codes: 0 all checks pass, 1 a check
// failed, 2 usage or domain error.

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "heckelab/heckelab.hpp"

namespace heckelab::cli {

inline constexpr const char* kToolVersion = "0.1.0";

using json = nlohmann::json;

struct Check {
  std::string id;
  std::string paper_ref;  // name of the relation or statement checked
  bool pass = true;
  json data = json::object();
};

struct Report {
  std::string command;
  json params = json::object();
  std::vector<Check> checks;

  bool pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
  }
};

/// Worker count from HECKELAB_THREADS, else the hardware concurrency.
inline unsigned thread_cap() {
  if (const char* env = std::getenv("HECKELAB_THREADS")) {
    try {
      int n = std::stoi(env);
      if (n >= 1) return static_cast<unsigned>(n);
    } catch (const std::exception&) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

/// f(0..n-1) on up to thread_cap() workers; results in index order.
template <class F>
auto parallel_map(std::size_t n, F f) -> std::vector<decltype(f(std::size_t{}))> {
  using R = decltype(f(std::size_t{}));
  std::vector<std::optional<R>> slots(n);
  const unsigned workers = std::min<unsigned>(thread_cap(), static_cast<unsigned>(std::max<std::size_t>(n, 1)));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (std::size_t k = next++; k < n; k = next++) {
      try {
        slots[k].emplace(f(k));
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  std::vector<R> out;
  out.reserve(n);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

inline json complex_json(Complex z) {
  if (z.imag() == 0.0) return z.real();
  return json::array({z.real(), z.imag()});
}

inline std::string render_json(const Report& r) {
  std::vector<Check> sorted = r.checks;
  std::stable_sort(sorted.begin(), sorted.end(), [](const Check& a, const Check& b) { return a.id < b.id; });
  json checks = json::array();
  int passed = 0;
  for (const auto& c : sorted) {
    checks.push_back({{"id", c.id}, {"paper_ref", c.paper_ref}, {"pass", c.pass}, {"data", c.data}});
    passed += c.pass ? 1 : 0;
  }
  json doc = {{"tool_version", kToolVersion},
              {"command", r.command},
              {"params", r.params},
              {"checks", checks},
              {"summary",
               {{"total", sorted.size()},
                {"passed", passed},
                {"failed", static_cast<int>(sorted.size()) - passed},
                {"pass", r.pass()}}}};
  return doc.dump(2) + "\n";
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline std::string render_csv(const Report& r) {
  std::vector<Check> sorted = r.checks;
  std::stable_sort(sorted.begin(), sorted.end(), [](const Check& a, const Check& b) { return a.id < b.id; });
  std::ostringstream os;
  os << "command,id,paper_ref,pass,data\n";
  for (const auto& c : sorted) {
    os << csv_field(r.command) << ',' << csv_field(c.id) << ',' << csv_field(c.paper_ref) << ','
       << (c.pass ? "true" : "false") << ',' << csv_field(c.data.dump()) << '\n';
  }
  return os.str();
}

namespace detail {

struct Options {
  std::string format = "json";
  unsigned seed = 0;
  std::string type = "finite";
  int rank = 3;
  int cutoff = 3;
  int L = 3;
  std::string window;
  std::string word;
  std::string a, b;
  std::optional<int> hecke_cutoff;
  int box = 0;
  std::optional<int> lattice_cutoff;
  int n = 3;
  int r = 2;
  int l = 2;
  std::vector<int> ls;
  bool q_root = false;
  std::optional<double> q, v;
  std::string partition;
  std::optional<int> affine_cutoff;
  int d = 2;
  bool symbolic = false;
  std::string expr;
  std::string variant = "corrected";
  int N = 32;
  double t = 0.0, t1 = 0.0, t2 = 0.25;
  std::string rep = "pi";
  int m = 2;
  double tol = 1e-10;
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline GroupKind parse_kind(const std::string& s) {
  if (s == "finite") return GroupKind::finite;
  if (s == "affine") return GroupKind::affine;
  throw UsageError("--type must be finite or affine");
}

/// q from --q or --v (v = q^{-1/2}); default q when neither is given.
inline double resolve_q(const Options& o, double fallback) {
  if (o.q && o.v) throw UsageError("give at most one of --q and --v");
  if (o.q) {
    if (*o.q == 0.0) throw DomainError("q must be nonzero");
    return *o.q;
  }
  if (o.v) {
    if (*o.v == 0.0) throw DomainError("v must be nonzero");
    return 1.0 / (*o.v * *o.v);
  }
  return fallback;
}

inline std::vector<int> parse_letters(const std::string& s) {
  std::string t = s;
  for (char& c : t) {
    if (c == ',' || c == 's' || c == '[' || c == ']') c = ' ';
  }
  std::stringstream ss(t);
  std::vector<int> out;
  std::string tok;
  while (ss >> tok) {
    try {
      out.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      throw ParseError("bad word letter \"" + tok + "\"");
    }
  }
  return out;
}

inline long factorial(int n) {
  long f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

inline long binomial(int n, int k) {
  long b = 1;
  for (int j = 1; j <= k; ++j) b = b * (n - k + j) / j;
  return b;
}

// --- coxeter ---------------------------------------------------------------

template <CoxeterElement W>
Report coxeter_word(const Options& o) {
  Report rep;
  rep.command = "coxeter word";
  rep.params = {{"type", o.type}, {"rank", o.rank}, {"window", o.window}, {"word", o.word}};
  W w;
  if (!o.window.empty()) {
    w = W::parse(o.window);
    if (w.rank() != o.rank) throw RankMismatch("window rank " + std::to_string(w.rank()) + " vs --rank");
  } else if (!o.word.empty()) {
    w = from_word<W>(o.rank, Word::parse(o.word));
  } else {
    throw UsageError("coxeter word needs --window or --word");
  }
  const ReducedExpression e = reduced_expression(w);
  const int len = length(w);
  Check c{"reduced-word", "reduced word", true, {}};
  c.data = {{"window", w.to_string()}, {"word", e.word.to_string()}, {"rotation", e.rotation}, {"length", len}};
  c.pass = from_word<W>(o.rank, e.word, e.rotation) == w && static_cast<int>(e.word.size()) == len;
  rep.checks.push_back(std::move(c));
  return rep;
}

template <CoxeterElement W>
Report coxeter_enumerate(const Options& o) {
  Report rep;
  rep.command = "coxeter enumerate";
  rep.params = {{"type", o.type}, {"rank", o.rank}, {"L", o.L}};
  const auto elems = enumerate_up_to_length<W>(o.rank, o.L);
  // Breadth-first distances from the identity, independently of length().
  std::map<W, int> dist{{W::identity(o.rank), 0}};
  std::vector<W> frontier{W::identity(o.rank)};
  for (int d = 1; d <= o.L; ++d) {
    std::vector<W> next;
    for (const W& w : frontier) {
      for (int i : W::generator_indices(o.rank)) {
        W u = w.times_generator(i);
        if (dist.emplace(u, d).second) next.push_back(u);
      }
    }
    frontier = std::move(next);
  }
  std::vector<int> by_length(static_cast<std::size_t>(o.L) + 1, 0);
  bool agree = dist.size() == elems.size();
  json windows = json::array();
  for (const W& w : elems) {
    const int len = length(w);
    if (len <= o.L) ++by_length[static_cast<std::size_t>(len)];
    auto it = dist.find(w);
    agree = agree && it != dist.end() && it->second == len;
    if (elems.size() <= 1000) windows.push_back(w.to_string());
  }
  Check c{"bfs-length", "Coxeter length", agree, {}};
  c.data = {{"count", elems.size()}, {"count_by_length", by_length}, {"elements", windows}};
  rep.checks.push_back(std::move(c));
  return rep;
}

// --- hecke -----------------------------------------------------------------

template <CoxeterElement W>
Report hecke_mul(const Options& o) {
  Report rep;
  rep.command = "hecke mul";
  rep.params = {{"type", o.type}, {"rank", o.rank}, {"a", o.a}, {"b", o.b}};
  if (o.hecke_cutoff) rep.params["cutoff"] = *o.hecke_cutoff;
  const auto a = HeckeElement<W>::parse(o.a, o.rank);
  const auto b = HeckeElement<W>::parse(o.b, o.rank);
  const auto p = mul(a, b, o.hecke_cutoff);
  Check c{"product", "bilinear extension of the defining relations", true, {}};
  c.data = {{"a", a.to_string()}, {"b", b.to_string()}, {"product", p.to_string()}, {"terms", p.size()}};
  rep.checks.push_back(std::move(c));
  return rep;
}

inline std::string presentation_ref(const std::string& id) {
  if (id.rfind("quadratic", 0) == 0) return "quadratic relation (T_s + 1)(T_s - v^-2) = 0";
  if (id.rfind("braid", 0) == 0) return "braid relations";
  return "T_x T_y = T_xy for length-additive products";
}

template <CoxeterElement W>
Report hecke_verify(const Options& o) {
  Report rep;
  rep.command = "hecke verify";
  rep.params = {{"type", o.type}, {"rank", o.rank}, {"cutoff", o.cutoff}};
  const PresentationReport pr = verify_presentation<W>(o.rank, o.cutoff);
  for (const auto& chk : pr.checks) {
    Check c{chk.id, presentation_ref(chk.id), chk.pass, {}};
    c.data = {{"relation", chk.relation}, {"elements", pr.elements}, {"max_length", pr.max_length}};
    if (!chk.pass) c.data["witness"] = chk.witness;
    rep.checks.push_back(std::move(c));
  }
  return rep;
}

// --- bernstein -------------------------------------------------------------

inline std::string bernstein_ref(const std::string& id) {
  if (id.rfind("quadratic", 0) == 0) return "quadratic relation";
  if (id.rfind("inverse", 0) == 0) return "T_i T_i^-1 = 1 = T_i^-1 T_i";
  if (id.rfind("braid", 0) == 0) return "braid relation T_i T_{i+1} T_i = T_{i+1} T_i T_{i+1}";
  if (id.rfind("far-commute", 0) == 0) return "T_i T_j = T_j T_i for |i-j| > 1";
  if (id.rfind("x-inverse", 0) == 0) return "X_i X_i^-1 = 1";
  if (id.rfind("x-commute", 0) == 0) return "X_i X_j = X_j X_i";
  if (id.rfind("cross", 0) == 0) return "T_i X_i T_i = v^-2 X_{i+1}";
  if (id.rfind("x-t-commute", 0) == 0) return "X_j T_i = T_i X_j";
  if (id.rfind("central", 0) == 0) return "X^(1,...,1) is central";
  return "X^lambda X^mu = X^(lambda+mu)";
}

inline Report bernstein_check(const Options& o) {
  Report rep;
  rep.command = "bernstein check";
  rep.params = {{"rank", o.rank}, {"cutoff", o.cutoff}, {"box", o.box}};
  if (o.lattice_cutoff) rep.params["lattice_cutoff"] = *o.lattice_cutoff;
  for (const auto& br : check_bernstein_relations(o.rank, o.cutoff)) {
    Check c{br.id, bernstein_ref(br.id), br.equal, {}};
    c.data = {{"relation", br.relation}};
    if (!br.equal) {
      c.data["lhs"] = br.lhs.to_string();
      c.data["rhs"] = br.rhs.to_string();
    }
    rep.checks.push_back(std::move(c));
  }
  if (o.box > 0) {
    const int r = o.rank;
    std::vector<WeightVector> box;
    WeightVector l(static_cast<std::size_t>(r), -o.box);
    while (true) {
      box.push_back(l);
      std::size_t k = 0;
      while (k < l.size() && l[k] == o.box) l[k++] = -o.box;
      if (k == l.size()) break;
      ++l[k];
    }
    std::map<WeightVector, std::optional<AffineHecke>> cache;
    auto x = [&](const WeightVector& w) -> const std::optional<AffineHecke>& {
      auto it = cache.find(w);
      if (it != cache.end()) return it->second;
      std::optional<AffineHecke> val;
      try {
        val = x_monomial(w, o.lattice_cutoff);
      } catch (const CutoffExceeded&) {
      }
      return cache.emplace(w, std::move(val)).first->second;
    };
    long pairs = 0, skipped = 0, failures = 0;
    json witness;
    for (const auto& a : box) {
      for (const auto& b : box) {
        WeightVector s(a.size());
        for (std::size_t k = 0; k < a.size(); ++k) s[k] = a[k] + b[k];
        const auto& xa = x(a);
        const auto& xb = x(b);
        const auto& xs = x(s);
        if (!xa || !xb || !xs) {
          ++skipped;
          continue;
        }
        ++pairs;
        if (!(mul(*xa, *xb) == *xs)) {
          if (failures++ == 0) witness = {{"lambda", a}, {"mu", b}};
        }
      }
    }
    Check c{"lattice-homomorphism", bernstein_ref("lattice"), failures == 0, {}};
    c.data = {{"radius", o.box}, {"pairs", pairs}, {"skipped_by_cutoff", skipped}, {"failures", failures}};
    if (failures) c.data["witness"] = witness;
    rep.checks.push_back(std::move(c));
  }
  return rep;
}

// --- specht ----------------------------------------------------------------

inline Report specht_table(const Options& o) {
  Report rep;
  rep.command = "specht table";
  const double q = resolve_q(o, 3.0);
  std::vector<int> ls = o.ls.empty() ? std::vector<int>{2} : o.ls;
  std::sort(ls.begin(), ls.end());
  ls.erase(std::unique(ls.begin(), ls.end()), ls.end());
  for (int l : ls) {
    if (l < 2) throw DomainError("--l must be >= 2");
  }
  rep.params = {{"n", o.n}, {"l", ls}, {"q_root", o.q_root}, {"q", q}};
  const auto parts = partitions_of(o.n);
  // Without --q-root, D is taken at the same generic q as S.
  std::vector<Complex> d_points;
  if (o.q_root) {
    for (int l : ls) d_points.push_back(primitive_root_of_unity(l));
  } else {
    d_points.push_back(Complex(q, 0.0));
  }
  struct Row {
    int dim_s;
    std::vector<int> dim_d;
  };
  const auto rows = parallel_map(parts.size(), [&](std::size_t k) {
    Row row{specht_dimension(parts[k], q), {}};
    for (Complex z : d_points) row.dim_d.push_back(d_dimension_at(parts[k], z));
    return row;
  });
  long sum_sq = 0;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    const Row& row = rows[k];
    sum_sq += static_cast<long>(row.dim_s) * row.dim_s;
    Check c{"row" + parts[k].to_string(), "D^lambda is nonzero iff lambda is l-regular", true, {}};
    json regular = json::object(), dim_d = json::object(), q_d = json::object();
    for (std::size_t j = 0; j < ls.size(); ++j) {
      const std::string key = std::to_string(ls[j]);
      const bool reg = is_l_regular(parts[k], ls[j]);
      regular[key] = reg;
      if (o.q_root) {
        dim_d[key] = row.dim_d[j];
        q_d[key] = complex_json(d_points[j]);
        c.pass = c.pass && ((row.dim_d[j] > 0) == reg);
      }
    }
    c.data = {{"partition", parts[k].to_string()}, {"dim_S", row.dim_s}, {"l_regular", regular}, {"q_S", q}};
    if (o.q_root) {
      c.data["dim_D"] = dim_d;
      c.data["q_D"] = q_d;
    } else {
      c.data["dim_D"] = row.dim_d.front();
      c.data["q_D"] = q;
    }
    rep.checks.push_back(std::move(c));
  }
  Check c{"sum-of-squares", "sum of (dim S^lambda)^2 = n!", sum_sq == factorial(o.n), {}};
  c.data = {{"sum", sum_sq}, {"n_factorial", factorial(o.n)}};
  rep.checks.push_back(std::move(c));
  return rep;
}

inline Report specht_dim(const Options& o) {
  Report rep;
  rep.command = "specht dim";
  const double q = resolve_q(o, 3.0);
  const Partition lambda = Partition::parse(o.partition);
  rep.params = {{"partition", lambda.to_string()}, {"q", q}, {"l", o.l}};
  Check c{"dim" + lambda.to_string(), "dimension of S^lambda = H A_lambda' H Sym_lambda", true, {}};
  c.data = {{"partition", lambda.to_string()},
            {"q", q},
            {"dim_S", specht_dimension(lambda, q)},
            {"dim_D_at_root", d_dimension(lambda, o.l)},
            {"l_regular", is_l_regular(lambda, o.l)}};
  rep.checks.push_back(std::move(c));
  return rep;
}

// --- schur -----------------------------------------------------------------

inline Report schur_basis_cmd(const Options& o) {
  Report rep;
  rep.command = "schur basis";
  rep.params = {{"n", o.n}, {"r", o.r}};
  const auto basis = schur_basis(o.n, o.r);
  const long expected = binomial(o.n * o.n + o.r - 1, o.r);
  const auto index = enumerate_index(o.n, o.r);
  json elems = json::array();
  for (const auto& b : basis) {
    elems.push_back({{"row", index[b.row].to_string()},
                     {"col", index[b.col].to_string()},
                     {"minimal", b.minimal.to_string()},
                     {"terms", b.hecke().size()}});
  }
  Check c{"dimension", "double-coset basis of S(n,r)", static_cast<long>(basis.size()) == expected, {}};
  c.data = {{"count", basis.size()}, {"binomial", expected}, {"basis", elems}};
  rep.checks.push_back(std::move(c));
  const int bad = count_bimodule_violations(o.n, o.r);
  Check d{"bimodule", "left S-action commutes with right H-action on T(n,r)", bad == 0, {}};
  d.data = {{"violations", bad}, {"tensor_dim", TensorSpace<>(o.n, o.r).dimension()}};
  rep.checks.push_back(std::move(d));
  return rep;
}

inline Report schur_duality(const Options& o) {
  Report rep;
  rep.command = "schur duality";
  const double q = resolve_q(o, 3.0);
  rep.params = {{"n", o.n}, {"r", o.r}, {"q", q}};
  if (o.affine_cutoff) rep.params["affine_cutoff"] = *o.affine_cutoff;
  const DualityReport d = duality_check(o.n, o.r, q, o.affine_cutoff);
  // A truncated affine count cannot refute the statement, so it only reports.
  Check c{"duality", d.mode == "finite" ? "finite-type instance of S(n,r) = End_H T(n,r)"
                                        : "affine S(n,r) = End_H T(n,r), truncated, non-conclusive",
          d.match || !d.conclusive, {}};
  c.data = {{"n", d.n},     {"r", d.r},         {"q", complex_json(d.q)}, {"dim_endH", d.dim_endH},
            {"dim_S", d.dim_S}, {"match", d.match}, {"mode", d.mode},     {"conclusive", d.conclusive}};
  rep.checks.push_back(std::move(c));
  return rep;
}

inline Report schur_dg(const Options& o) {
  Report rep;
  rep.command = "schur dg-check";
  const double v = o.v.value_or(0.7);
  rep.params = {{"d", o.d}, {"v", v}, {"symbolic", o.symbolic}, {"tol", 1e-12}};
  for (const auto& rel : doty_giaquinto_numeric(o.d, v)) {
    Check c{"numeric-" + rel.id, rel.relation, rel.pass, {}};
    c.data = {{"residual", *rel.residual}, {"scale", rel.scale}, {"coproduct", kCoproductConvention}};
    rep.checks.push_back(std::move(c));
  }
  if (o.symbolic) {
    for (const auto& rel : doty_giaquinto_symbolic(o.d)) {
      Check c{"symbolic-" + rel.id, rel.relation, rel.pass, {}};
      c.data = {{"exact", true}, {"coproduct", kCoproductConvention}};
      rep.checks.push_back(std::move(c));
    }
  }
  return rep;
}

// --- fq --------------------------------------------------------------------

inline TruncatedRep build_rep(const std::string& kind, Complex t, double v, int N, Variant variant) {
  if (kind == "pi") return rep_pi(t, v, N, variant);
  if (kind == "tau") return rep_tau(t);
  throw UsageError("--rep must be pi or tau");
}

inline json rep_params(const TruncatedRep& r, double turns) {
  return {{"variant", to_string(r.variant)}, {"t_turns", turns},       {"t", complex_json(r.t)},
          {"v", r.v},                        {"N", r.N},               {"word", r.word},
          {"coproduct_convention", kMatrixCoproduct}};
}

inline Report fq_normal_form(const Options& o) {
  Report rep;
  rep.command = "fq normal-form";
  rep.params = {{"expr", o.expr}, {"variant", o.variant}};
  const RelationSet rs = RelationSet::make(parse_relation_mode(o.variant));
  const NCPoly p = NCPoly::parse(o.expr);
  const NCPoly nf = normal_form(p, rs);
  Check c{"normal-form", "ordered monomials t11^a t12^b t21^c t22^d", is_normal(nf, rs), {}};
  c.data = {{"input", p.to_string()}, {"normal_form", nf.to_string()}, {"variant", o.variant}};
  rep.checks.push_back(std::move(c));
  return rep;
}

inline void add_residual_checks(Report& rep, const TruncatedRep& r, const RelationSet& rs, double tol,
                                double turns) {
  const ResidualReport res = relation_residual(r, rs);
  for (const auto& rel : res.relations) {
    Check c{rel.id, res.induced ? "induced 2x2 relation" : "defining relation of F_v(SL_2)", rel.residual < tol, {}};
    c.data = rep_params(r, turns);
    c.data["relation_id"] = rel.id;
    c.data["residual"] = rel.residual;
    c.data["tolerance"] = tol;
    c.data["excluded_band"] = res.excluded_band;
    rep.checks.push_back(std::move(c));
  }
}

inline Report fq_rep_check(const Options& o) {
  Report rep;
  rep.command = "fq rep-check";
  const Variant variant = parse_variant(o.variant);
  const Complex t = unit_from_turns(o.t);
  const TruncatedRep r = build_rep(o.rep, t, o.v.value_or(0.5), o.N, variant);
  rep.params = {{"variant", o.variant}, {"rep", o.rep}, {"N", o.N}, {"v", r.v}, {"t", o.t}, {"tol", o.tol}};
  add_residual_checks(rep, r, RelationSet::make(parse_relation_mode(o.variant)), o.tol, o.t);
  if (o.rep == "pi") {
    double worst = 0.0;
    for (int k = 0; k < o.N; ++k) {
      worst = std::max(worst, std::abs(r.image(1, 2)(k, k) - t * std::pow(r.v, 2 * k)));
    }
    Check c{"t12-diagonal", "t12 e_k = t v^{2k} e_k", worst < o.tol && r.image(1, 2).isDiagonal(0.0), {}};
    c.data = {{"max_deviation", worst}};
    rep.checks.push_back(std::move(c));
  }
  return rep;
}

inline Report fq_commutant(const Options& o) {
  Report rep;
  rep.command = "fq commutant";
  const TruncatedRep r = build_rep(o.rep, unit_from_turns(o.t), o.v.value_or(0.5), o.N, parse_variant(o.variant));
  rep.params = {{"variant", o.variant}, {"rep", o.rep}, {"N", o.N}, {"v", r.v}, {"t", o.t}};
  const int dim = commutant_dim(r);
  Check c{"commutant", "irreducible: commutant is the scalars", dim == 1, {}};
  c.data = rep_params(r, o.t);
  c.data["commutant_dim"] = dim;
  rep.checks.push_back(std::move(c));
  return rep;
}

inline Report fq_equiv(const Options& o) {
  Report rep;
  rep.command = "fq equiv";
  const Variant variant = parse_variant(o.variant);
  const Complex ta = unit_from_turns(o.t1), tb = unit_from_turns(o.t2);
  const double v = o.v.value_or(0.5);
  rep.params = {{"variant", o.variant}, {"rep", o.rep}, {"N", o.N}, {"v", v}, {"t1", o.t1}, {"t2", o.t2},
                {"seed", o.seed}};
  const EquivalenceReport e =
      equivalence_check(build_rep(o.rep, ta, v, o.N, variant), build_rep(o.rep, tb, v, o.N, variant), 1e-8, o.seed);
  const bool same = std::abs(ta - tb) < 1e-12;
  Check c{"equivalence", "distinct t give unitarily inequivalent representations", e.equivalent == same, {}};
  c.data = {{"equivalent", e.equivalent},
            {"spectra_match", e.spectra_match},
            {"intertwiner_dim", e.intertwiner_dim},
            {"reason", e.reason},
            {"same_parameter", same}};
  rep.checks.push_back(std::move(c));
  return rep;
}

inline Report fq_tensor(const Options& o) {
  Report rep;
  rep.command = "fq tensor";
  const std::vector<int> word = parse_letters(o.word);
  const TruncatedRep r = tensor_rep(word, o.m, unit_from_turns(o.t), o.v.value_or(0.5), o.N, parse_variant(o.variant));
  rep.params = {{"variant", o.variant}, {"word", word}, {"m", o.m}, {"N", o.N}, {"v", r.v}, {"t", o.t},
                {"tol", o.tol}};
  add_residual_checks(rep, r, RelationSet::make(parse_relation_mode(o.variant)), o.tol, o.t);
  return rep;
}

}  // namespace detail

/// Runs one command line (without the program name).
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  using detail::Options;
  Options o;
  CLI::App app{"Hecke algebra, Schur algebra and F_v(SL_2) checks", "heckelab"};
  app.require_subcommand(1);
  std::function<Report()> action;

  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help,
                  std::function<Report()> fn) {
    CLI::App* sub = parent->add_subcommand(name, help);
    sub->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--seed", o.seed, "seed for randomized steps");
    sub->callback([&action, fn] { action = fn; });
    return sub;
  };
  auto kind_opts = [&](CLI::App* s) {
    s->add_option("--type", o.type, "finite or affine")->check(CLI::IsMember({"finite", "affine"}));
    s->add_option("--rank", o.rank, "rank r")->required();
  };
  auto qv_opts = [&](CLI::App* s) {
    s->add_option("--q", o.q, "numeric q (quadratic eigenvalue v^-2)");
    s->add_option("--v", o.v, "numeric v, q = v^-2");
  };

  auto dispatch_kind = [&](auto finite_fn, auto affine_fn) {
    return [&, finite_fn, affine_fn]() -> Report {
      return detail::parse_kind(o.type) == GroupKind::finite ? finite_fn(o) : affine_fn(o);
    };
  };

  CLI::App* cox = app.add_subcommand("coxeter", "finite and affine symmetric groups");
  cox->require_subcommand(1);
  {
    auto* s = leaf(cox, "word", "reduced word of an element",
                   dispatch_kind(detail::coxeter_word<FinitePermutation>, detail::coxeter_word<AffinePermutation>));
    kind_opts(s);
    s->add_option("--window", o.window, "window such as [3,1,2]");
    s->add_option("--word", o.word, "word such as \"s1 s2\"");
    s = leaf(cox, "enumerate", "elements up to a length",
             dispatch_kind(detail::coxeter_enumerate<FinitePermutation>,
                           detail::coxeter_enumerate<AffinePermutation>));
    kind_opts(s);
    s->add_option("--L", o.L, "maximum length")->required();
  }

  CLI::App* hk = app.add_subcommand("hecke", "Hecke algebra in the Coxeter presentation");
  hk->require_subcommand(1);
  {
    auto* s = leaf(hk, "mul", "product of two elements",
                   dispatch_kind(detail::hecke_mul<FinitePermutation>, detail::hecke_mul<AffinePermutation>));
    kind_opts(s);
    s->add_option("--a", o.a, "left factor, e.g. \"T[s1] + 1*T[]\"")->required();
    s->add_option("--b", o.b, "right factor")->required();
    s->add_option("--cutoff", o.hecke_cutoff, "length cutoff");
    s = leaf(hk, "verify", "quadratic, braid and length-additivity relations",
             dispatch_kind(detail::hecke_verify<FinitePermutation>, detail::hecke_verify<AffinePermutation>));
    kind_opts(s);
    s->add_option("--cutoff", o.cutoff, "maximum length of enumerated elements")->required();
  }

  CLI::App* bern = app.add_subcommand("bernstein", "Bernstein presentation");
  bern->require_subcommand(1);
  {
    auto* s = leaf(bern, "check", "Bernstein relations", [&] { return detail::bernstein_check(o); });
    s->add_option("--rank", o.rank, "rank r >= 2")->required();
    s->add_option("--cutoff", o.cutoff, "translation length cutoff")->required();
    s->add_option("--box", o.box, "radius of the lattice box for X^l X^m = X^(l+m); 0 skips");
    s->add_option("--lattice-cutoff", o.lattice_cutoff, "skip lattice pairs whose translations exceed this length");
  }

  CLI::App* sp = app.add_subcommand("specht", "Specht modules and D-modules");
  sp->require_subcommand(1);
  {
    auto* s = leaf(sp, "table", "dim S and dim D for every partition of n", [&] { return detail::specht_table(o); });
    s->add_option("--n", o.n, "n")->required();
    s->add_option("--l", o.ls, "l for regularity and the root of unity (repeatable)");
    s->add_flag("--q-root", o.q_root, "compute dim D at a primitive l-th root of unity");
    qv_opts(s);
    s = leaf(sp, "dim", "dimension of one Specht module", [&] { return detail::specht_dim(o); });
    s->add_option("--partition", o.partition, "partition such as (2,1)")->required();
    s->add_option("--l", o.l, "l for dim D at a primitive l-th root of unity");
    qv_opts(s);
  }

  CLI::App* sc = app.add_subcommand("schur", "v-Schur algebras");
  sc->require_subcommand(1);
  {
    auto* s = leaf(sc, "basis", "double-coset basis of S(n,r)", [&] { return detail::schur_basis_cmd(o); });
    s->add_option("--n", o.n, "n")->required();
    s->add_option("--r", o.r, "r")->required();
    s = leaf(sc, "duality", "commutant of H on T(n,r)", [&] { return detail::schur_duality(o); });
    s->add_option("--n", o.n, "n")->required();
    s->add_option("--r", o.r, "r")->required();
    s->add_option("--affine-cutoff", o.affine_cutoff, "truncated affine mode (non-conclusive)");
    qv_opts(s);
    s = leaf(sc, "dg-check", "Doty-Giaquinto relations for S(2,d)", [&] { return detail::schur_dg(o); });
    s->add_option("--d", o.d, "d >= 1")->required();
    s->add_option("--v", o.v, "numeric v (default 0.7)");
    s->add_flag("--symbolic", o.symbolic, "also check exactly over Laurent polynomials");
  }

  CLI::App* fq = app.add_subcommand("fq", "quantized functions on SL_2");
  fq->require_subcommand(1);
  {
    auto variant_opt = [&](CLI::App* s) {
      s->add_option("--variant", o.variant, "corrected or paper-literal")
          ->check(CLI::IsMember({"corrected", "paper-literal"}));
    };
    auto* s = leaf(fq, "normal-form", "rewrite to ordered monomials", [&] { return detail::fq_normal_form(o); });
    s->add_option("--expr", o.expr, "expression such as \"t22*t11\"")->required();
    variant_opt(s);
    s = leaf(fq, "rep-check", "relation residuals of tau_t or pi_t", [&] { return detail::fq_rep_check(o); });
    variant_opt(s);
    s->add_option("--rep", o.rep, "pi or tau");
    s->add_option("--N", o.N, "truncation");
    s->add_option("--v", o.v, "0 < v < 1 (default 0.5)");
    s->add_option("--t", o.t, "t on the unit circle, in turns");
    s->add_option("--tol", o.tol, "residual tolerance");
    s = leaf(fq, "commutant", "commutant dimension", [&] { return detail::fq_commutant(o); });
    variant_opt(s);
    s->add_option("--rep", o.rep, "pi or tau");
    s->add_option("--N", o.N, "truncation");
    s->add_option("--v", o.v, "0 < v < 1 (default 0.5)");
    s->add_option("--t", o.t, "t in turns");
    s = leaf(fq, "equiv", "equivalence of two representations", [&] { return detail::fq_equiv(o); });
    variant_opt(s);
    s->add_option("--rep", o.rep, "pi or tau");
    s->add_option("--N", o.N, "truncation");
    s->add_option("--v", o.v, "0 < v < 1 (default 0.5)");
    s->add_option("--t1", o.t1, "first t in turns");
    s->add_option("--t2", o.t2, "second t in turns");
    s = leaf(fq, "tensor", "tensor product along a reduced word", [&] { return detail::fq_tensor(o); });
    variant_opt(s);
    s->add_option("--word", o.word, "letters such as \"1 2\"")->required();
    s->add_option("--m", o.m, "rank m");
    s->add_option("--N", o.N, "truncation");
    s->add_option("--v", o.v, "0 < v < 1 (default 0.5)");
    s->add_option("--t", o.t, "t in turns");
    s->add_option("--tol", o.tol, "residual tolerance");
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    err << app.help();
    return 2;
  }
  if (!action) {
    err << app.help();
    return 2;
  }
  try {
    const Report rep = action();
    out << (o.format == "csv" ? render_csv(rep) : render_json(rep));
    return rep.pass() ? 0 : 1;
  } catch (const detail::UsageError& e) {
    err << "usage error: " << e.what() << "\n";
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
  } catch (const RankMismatch& e) {
    err << "rank mismatch: " << e.what() << "\n";
  } catch (const CutoffExceeded& e) {
    err << "cutoff exceeded: " << e.what() << "\n";
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
  }
  return 2;
}

}  // namespace heckelab::cli
