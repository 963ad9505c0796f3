// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Runs single-threaded.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "cli.hpp"
#include "oracles.hpp"

using namespace heckelab;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;
};

// ---------------------------------------------------------------------------

Outcome hecke_oracle() {
  const auto t0 = Clock::now();
  long pairs = 0, bad = 0;
  for (int n : {3, 4}) {
    oracle::RegularRep reg(n);
    for (const auto& a : reg.elements()) {
      const FiniteHecke ta = FiniteHecke::basis(FinitePermutation(a));
      for (const auto& b : reg.elements()) {
        FiniteHecke prod = mul(ta, FiniteHecke::basis(FinitePermutation(b)));
        std::map<std::vector<int>, LaurentPoly> got;
        for (const auto& [w, c] : prod.terms()) got[w.window()] = c;
        ++pairs;
        if (got != reg.product(a, b)) ++bad;
      }
    }
  }
  const double dt = seconds_since(t0);
  std::ostringstream os;
  os << pairs << " basis pairs (n=3,4), " << bad << " mismatches, " << dt << " s (limit 60 s)";
  return {bad == 0 && dt < 60.0, os.str()};
}

Outcome presentation_suite() {
  Outcome out;
  std::ostringstream os;
  for (int r = 1; r <= 4; ++r) {
    auto rep = verify_presentation<FinitePermutation>(r, 6);
    out.pass = out.pass && rep.pass();
    os << "finite r=" << r << ": " << rep.elements << " elements " << (rep.pass() ? "ok" : "FAIL") << "; ";
  }
  auto rep = verify_presentation<AffinePermutation>(2, 6);
  out.pass = out.pass && rep.pass();
  os << "affine r=2 L=6: " << rep.elements << " elements " << (rep.pass() ? "ok" : "FAIL");
  for (const auto& c : rep.checks) {
    if (!c.pass) os << " [" << c.id << ": " << c.witness << "]";
  }
  out.detail = os.str();
  return out;
}

Outcome bernstein_suite() {
  Outcome out;
  std::ostringstream os;
  for (int r = 2; r <= 3; ++r) {
    int total = 0, bad = 0;
    for (const auto& b : check_bernstein_relations(r, 8)) {
      ++total;
      if (!b.equal) {
        ++bad;
        os << "[" << b.id << " fails] ";
      }
    }
    out.pass = out.pass && bad == 0;
    os << "r=" << r << ": " << total - bad << "/" << total << " relations; ";

    std::vector<WeightVector> box;
    WeightVector l(static_cast<std::size_t>(r), -2);
    while (true) {
      box.push_back(l);
      std::size_t k = 0;
      while (k < l.size() && l[k] == 2) l[k++] = -2;
      if (k == l.size()) break;
      ++l[k];
    }
    std::map<WeightVector, AffineHecke> cache;
    auto x = [&](const WeightVector& w) -> const AffineHecke& {
      auto it = cache.find(w);
      if (it == cache.end()) it = cache.emplace(w, x_monomial(w)).first;
      return it->second;
    };
    long pairs = 0, fails = 0;
    for (const auto& a : box) {
      for (const auto& b : box) {
        WeightVector s(a.size());
        for (std::size_t k = 0; k < a.size(); ++k) s[k] = a[k] + b[k];
        ++pairs;
        if (!(mul(x(a), x(b)) == x(s))) ++fails;
      }
    }
    out.pass = out.pass && fails == 0;
    os << "lattice box radius 2: " << pairs - fails << "/" << pairs << " pairs; ";
  }
  out.detail = os.str();
  return out;
}

Outcome dipper_james_dimensions() {
  Outcome out;
  std::ostringstream os;
  for (int n = 1; n <= 5; ++n) {
    long sum = 0;
    int bad = 0;
    for (const auto& p : partitions_of(n)) {
      const int d = specht_dimension(p, 3.0);
      if (d != oracle::syt_bruteforce(p.parts())) {
        ++bad;
        os << "[" << p.to_string() << ": " << d << "] ";
      }
      sum += static_cast<long>(d) * d;
    }
    const bool ok = bad == 0 && sum == oracle::factorial(n);
    out.pass = out.pass && ok;
    os << "n=" << n << " sum=" << sum << (ok ? " ok; " : " FAIL; ");
  }
  out.detail = os.str();
  return out;
}

Outcome regularity_criterion() {
  Outcome out;
  int cases = 0, bad = 0;
  std::ostringstream os;
  for (int n = 1; n <= 5; ++n) {
    for (const auto& p : partitions_of(n)) {
      for (int l : {2, 3}) {
        ++cases;
        const int d = d_dimension(p, l);
        if ((d > 0) != oracle::l_regular(p.parts(), l)) {
          ++bad;
          os << "[" << p.to_string() << " l=" << l << " dimD=" << d << "] ";
        }
      }
    }
  }
  out.pass = bad == 0;
  os << cases - bad << "/" << cases << " (partition, l) cases agree";
  out.detail = os.str();
  return out;
}

Outcome schur_weyl() {
  Outcome out;
  std::ostringstream os;
  for (auto [n, r] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}}) {
    const long expect = oracle::binomial(n * n + r - 1, r);
    for (double q : {3.0, 0.25, 2.7}) {
      auto d = duality_check(n, r, q);
      const bool ok = d.match && d.dim_S == expect && d.dim_endH == expect;
      out.pass = out.pass && ok;
      if (!ok) os << "[(" << n << "," << r << ") q=" << q << ": " << d.dim_endH << " vs " << d.dim_S << "] ";
    }
    os << "(" << n << "," << r << ") dim " << expect << "; ";
  }
  out.detail = os.str();
  return out;
}

Outcome doty_giaquinto() {
  Outcome out;
  std::ostringstream os;
  for (int d = 1; d <= 4; ++d) {
    for (const auto& rel : doty_giaquinto_symbolic(d)) {
      if (!rel.pass) {
        out.pass = false;
        os << "[symbolic d=" << d << " " << rel.id << "] ";
      }
    }
  }
  double worst = 0.0;
  for (int d = 1; d <= 8; ++d) {
    for (const auto& rel : doty_giaquinto_numeric(d, 0.7, 1e-12)) {
      worst = std::max(worst, *rel.residual);
      if (!rel.pass || !(*rel.residual < 1e-12)) {
        out.pass = false;
        os << "[numeric d=" << d << " " << rel.id << "] ";
      }
    }
  }
  os << "symbolic d<=4 exact; numeric d<=8 at v=0.7 max residual " << worst << " (limit 1e-12)";
  out.detail = os.str();
  return out;
}

Outcome fq_rewriting() {
  Outcome out;
  std::ostringstream os;
  const RelationSet rs = RelationSet::make(RelationMode::corrected);
  auto conf = check_confluence(rs, 3);
  out.pass = conf.pass() && conf.words_checked == 64;
  os << "confluence: " << conf.words_checked - static_cast<int>(conf.failures.size()) << "/" << conf.words_checked
     << " degree-3 words; ";
  int words = 0, not_idem = 0;
  for (int deg = 0; deg <= 3; ++deg) {
    NCWord w(static_cast<std::size_t>(deg), 0);
    while (true) {
      ++words;
      NCPoly nf = normal_form(NCPoly::word(w), rs);
      if (!(normal_form(nf, rs) == nf) || !is_normal(nf, rs)) ++not_idem;
      int k = deg - 1;
      while (k >= 0 && w[static_cast<std::size_t>(k)] == 3) w[static_cast<std::size_t>(k--)] = 0;
      if (k < 0) break;
      ++w[static_cast<std::size_t>(k)];
    }
  }
  out.pass = out.pass && not_idem == 0;
  os << "idempotent on " << words - not_idem << "/" << words << " words of degree <= 3; ";
  int kernel_bad = 0;
  for (std::size_t k = 0; k < rs.rewrite_relation_count(); ++k) {
    const auto& rel = rs.relations[k];
    if (!normal_form(rel.lhs - rel.rhs, rs).is_zero()) ++kernel_bad;
  }
  out.pass = out.pass && kernel_bad == 0;
  os << rs.rewrite_relation_count() - static_cast<std::size_t>(kernel_bad) << "/" << rs.rewrite_relation_count()
     << " relations map to 0";
  out.detail = os.str();
  return out;
}

Outcome fq_representations() {
  Outcome out;
  std::ostringstream os;
  const RelationSet corrected = RelationSet::make(RelationMode::corrected);
  const RelationSet literal = RelationSet::make(RelationMode::paper_literal);
  double worst = 0.0, weakest_literal = 1e300;
  for (double v : {0.3, 0.5, 0.8}) {
    for (Complex t : {Complex(1.0, 0.0), Complex(0.0, 1.0)}) {
      auto good = relation_residual(rep_pi(t, v, 32, Variant::corrected), corrected);
      worst = std::max(worst, good.max_residual);
      auto bad = relation_residual(rep_pi(t, v, 32, Variant::paper_literal), literal);
      weakest_literal = std::min(weakest_literal, bad.find("commutator[t11,t22]")->residual);
    }
  }
  out.pass = worst < 1e-10 && weakest_literal > 0.1;
  os << "corrected max interior residual " << worst << " (limit 1e-10); paper-literal commutator residual >= "
     << weakest_literal << " (must exceed 0.1)";
  out.detail = os.str();
  return out;
}

Outcome fq_irreducibility() {
  Outcome out;
  std::ostringstream os;
  const Complex one(1.0, 0.0), i(0.0, 1.0);
  for (int N : {8, 16}) {
    for (Complex t : {one, i}) {
      const int d = commutant_dim(rep_pi(t, 0.5, N, Variant::corrected));
      out.pass = out.pass && d == 1;
      os << "N=" << N << " t=" << t << " commutant " << d << "; ";
    }
  }
  const auto pi1 = rep_pi(one, 0.5, 12, Variant::corrected);
  const auto pii = rep_pi(i, 0.5, 12, Variant::corrected);
  const bool pi_sep = !equivalence_check(pi1, pii).equivalent && equivalence_check(pi1, pi1).equivalent;
  const bool tau_sep =
      !equivalence_check(rep_tau(one), rep_tau(i)).equivalent && equivalence_check(rep_tau(i), rep_tau(i)).equivalent;
  out.pass = out.pass && pi_sep && tau_sep;
  os << "pi_1 vs pi_i " << (pi_sep ? "separated" : "NOT separated") << ", tau_1 vs tau_i "
     << (tau_sep ? "separated" : "NOT separated");
  out.detail = os.str();
  return out;
}

Outcome determinism() {
  const std::vector<std::string> commands[] = {
      {"fq", "equiv", "--N", "10", "--t1", "0.2", "--t2", "0.2", "--seed", "17"},
      {"specht", "table", "--n", "5", "--l", "2", "--l", "3", "--q-root"},
      {"schur", "dg-check", "--d", "3", "--symbolic"},
      {"bernstein", "check", "--rank", "2", "--cutoff", "8", "--box", "2"}};
  Outcome out;
  int same = 0;
  for (const auto& args : commands) {
    std::ostringstream a, b, err;
    heckelab::cli::run(args, a, err);
    heckelab::cli::run(args, b, err);
    if (a.str() == b.str() && !a.str().empty()) ++same;
  }
  out.pass = same == static_cast<int>(std::size(commands));
  out.detail = std::to_string(same) + "/" + std::to_string(std::size(commands)) + " repeated reports byte-identical";
  return out;
}

}  // namespace

int main() {
  setenv("HECKELAB_THREADS", "1", 1);
  std::cout.precision(3);
  const auto start = Clock::now();
  struct Criterion {
    int number;
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "Hecke product vs regular representation oracle", hecke_oracle},
      {2, "quadratic, braid and length-additivity relations", presentation_suite},
      {3, "Bernstein relations and lattice homomorphism", bernstein_suite},
      {4, "Specht dimensions vs tableau counts, sum of squares", dipper_james_dimensions},
      {5, "D nonzero iff l-regular at roots of unity", regularity_criterion},
      {6, "Schur-Weyl duality, finite instance", schur_weyl},
      {7, "Doty-Giaquinto relations for S(2,d)", doty_giaquinto},
      {8, "F_v(SL_2) normal forms and confluence", fq_rewriting},
      {9, "truncated representation residuals", fq_representations},
      {10, "commutants and inequivalence", fq_irreducibility},
  };
  bool all = true;
  for (const auto& c : criteria) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    all = all && o.pass;
    std::cout << "criterion " << c.number << ": " << (o.pass ? "PASS" : "FAIL") << " | " << c.name << " | "
              << o.detail << " | " << seconds_since(t0) << " s" << std::endl;
  }
  Outcome det = determinism();
  const double total = seconds_since(start);
  const bool c11 = det.pass && total < 300.0;
  all = all && c11;
  std::cout << "criterion 11: " << (c11 ? "PASS" : "FAIL") << " | wall clock and determinism | " << total
            << " s single-threaded (limit 300 s); " << det.detail << std::endl;
  std::cout << (all ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL") << std::endl;
  return all ? 0 : 1;
}
