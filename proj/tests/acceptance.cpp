// Acceptance suite: one line per criterion, PASS/FAIL with the measured
// quantity, nonzero exit when any criterion fails.

#include <chrono>
#include <cstdio>
#include <cmath>
#include <string>
#include <vector>

#include "jbc/characterize.hpp"
#include "jbc/connecting.hpp"
#include "jbc/forward.hpp"
#include "jbc/instance.hpp"
#include "jbc/inverse_factorization.hpp"
#include "jbc/inverse_krein.hpp"
#include "oracle.hpp"

using jbc::Complex;

namespace {

int failures = 0;

void line(int index, bool pass, const std::string& name,
          const std::string& detail) {
  std::printf("[%s] criterion %d: %s — %s\n", pass ? "PASS" : "FAIL", index,
              name.c_str(), detail.c_str());
  if (!pass) ++failures;
}

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

jbc::ResponseVector resp(std::vector<Complex> r) {
  jbc::ResponseVector out;
  out.r = std::move(r);
  return out;
}

// ---------------------------------------------------------------------------
// 1. golden counterexample: exact rotated matrix, INVALID at block 2, < 1 ms

void criterion_1() {
  const std::vector<Complex> candidate = {Complex(1, 0), Complex(1, 0),
                                          Complex(0, 0), Complex(0, 0),
                                          Complex(-1, 0)};
  auto rotated = jbc::rotate(jbc::connecting_from_response(resp(candidate), 3));
  Eigen::MatrixXcd expect(3, 3);
  expect << 1, 1, 0, 1, 1, 1, 0, 1, 0;
  const bool matrix_ok = rotated.entries == expect;

  jbc::characterize(candidate);  // warmup
  const auto start = std::chrono::steady_clock::now();
  auto report = jbc::characterize(candidate);
  const double ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - start)
                        .count();
  const bool verdict_ok = !report.valid && report.first_failure &&
                          *report.first_failure == 2;
  line(1, matrix_ok && verdict_ok && ms < 1.0, "golden counterexample",
       std::string("matrix ") + (matrix_ok ? "exact" : "WRONG") +
           ", first failure " +
           (report.first_failure ? std::to_string(*report.first_failure)
                                 : std::string("none")) +
           ", " + fmt(ms) + " ms");
}

// ---------------------------------------------------------------------------
// 2. oracle equivalence: response formula vs transpose(W) * W, 100 wide sets

void criterion_2() {
  double worst = 0.0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const int depth = 1 + static_cast<int>(seed % 20);
    auto c = jbc::random_coefficients(depth, seed, jbc::Profile::Wide);
    auto from_r = jbc::connecting_from_response(
        jbc::response_vector(c, depth), depth);
    auto from_w = jbc::connecting_oracle(c, depth);
    const double scale = from_w.entries.cwiseAbs().maxCoeff();
    const double err =
        (from_r.entries - from_w.entries).cwiseAbs().maxCoeff() / scale;
    worst = std::max(worst, err);
  }
  line(2, worst <= 1e-10, "connecting operator oracle equivalence",
       "max relative entry error " + fmt(worst) +
           " over 100 sets, depths 1..20 (tolerance 1e-10)");
}

// ---------------------------------------------------------------------------
// 3. roundtrip recovery, both methods, 100 unit-modulus sets, depths 1..15

void criterion_3() {
  const auto start = std::chrono::steady_clock::now();
  double worst_b = 0.0, worst_sq = 0.0, worst_agree = 0.0;
  int failing_sets = 0;
  std::string first_failure;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const int depth = 1 + static_cast<int>(seed % 15);
    auto c = jbc::random_coefficients(depth, seed, jbc::Profile::UnitModulus);
    auto r = jbc::response_vector(c, depth);
    double set_worst = 0.0;
    try {
      auto via_krein = jbc::reconstruct_krein(r, depth);
      auto via_minors = jbc::reconstruct_factorization(r, depth);
      for (int k = 1; k < depth; ++k) {
        const Complex truth = c.a[static_cast<std::size_t>(k)] *
                              c.a[static_cast<std::size_t>(k)];
        for (const auto* rec : {&via_krein, &via_minors}) {
          const double eb =
              std::abs(rec->b[static_cast<std::size_t>(k - 1)] -
                       c.b[static_cast<std::size_t>(k - 1)]);
          const double esq =
              std::abs(rec->a_sq[static_cast<std::size_t>(k - 1)] - truth) /
              std::abs(truth);
          worst_b = std::max(worst_b, eb);
          worst_sq = std::max(worst_sq, esq);
          set_worst = std::max({set_worst, eb, esq});
        }
        const double agree =
            std::max(std::abs(via_krein.b[static_cast<std::size_t>(k - 1)] -
                              via_minors.b[static_cast<std::size_t>(k - 1)]),
                     std::abs(via_krein.a_sq[static_cast<std::size_t>(k - 1)] -
                              via_minors.a_sq[static_cast<std::size_t>(k - 1)]));
        worst_agree = std::max(worst_agree, agree);
        set_worst = std::max(set_worst, agree);
      }
    } catch (const jbc::Error& e) {
      set_worst = std::numeric_limits<double>::infinity();
      if (first_failure.empty()) first_failure = e.what();
    }
    if (set_worst > 1e-8) ++failing_sets;
  }
  const double secs = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  const bool pass = failing_sets == 0 && secs < 10.0;
  line(3, pass, "roundtrip recovery at depths 1..15 (unit-modulus)",
       std::to_string(failing_sets) +
           "/100 sets exceed 1e-8 (worst b " + fmt(worst_b) + ", worst a^2 " +
           fmt(worst_sq) + ", worst agreement " + fmt(worst_agree) + "), " +
           fmt(secs) + " s" +
           (pass ? ""
                 : "; double precision cannot resolve the deepest windows — "
                   "see README, Numerical limits"));
}

// ---------------------------------------------------------------------------
// 4. parity invariance: single sign flips leave response and recovery alone

void criterion_4() {
  double worst_response = 0.0, worst_recovery = 0.0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const int depth = 2 + static_cast<int>(seed % 9);
    auto c = jbc::random_coefficients(depth, seed, jbc::Profile::Wide);
    const int flip = 1 + static_cast<int>(seed % (depth - 1 > 0 ? depth - 1 : 1));
    auto flipped = c;
    flipped.a[static_cast<std::size_t>(flip)] =
        -flipped.a[static_cast<std::size_t>(flip)];
    auto r = jbc::response_vector(c, depth);
    auto r_flipped = jbc::response_vector(flipped, depth);
    worst_response =
        std::max(worst_response, oracle::max_abs_diff(r.r, r_flipped.r));
    auto rec = jbc::reconstruct_factorization(r, depth);
    auto rec_flipped = jbc::reconstruct_factorization(r_flipped, depth);
    auto reck = jbc::reconstruct_krein(r, depth);
    auto reck_flipped = jbc::reconstruct_krein(r_flipped, depth);
    worst_recovery = std::max(
        {worst_recovery, oracle::max_abs_diff(rec.a_sq, rec_flipped.a_sq),
         oracle::max_abs_diff(rec.b, rec_flipped.b),
         oracle::max_abs_diff(reck.a_sq, reck_flipped.a_sq),
         oracle::max_abs_diff(reck.b, reck_flipped.b)});
  }
  line(4, worst_response <= 1e-12 && worst_recovery <= 1e-12,
       "parity invariance under single sign flips",
       "response change " + fmt(worst_response) + ", recovery change " +
           fmt(worst_recovery) + " over 20 sets (tolerance 1e-12)");
}

// ---------------------------------------------------------------------------
// 5. Krein consistency: solve of the connecting system vs direct triangular
//    solve along the comparison trajectory, tau <= 15, both seed pairs

void criterion_5() {
  double worst = 0.0;
  long violations = 0, total = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const int depth = 15;
    auto c = jbc::random_coefficients(depth, seed, jbc::Profile::UnitModulus);
    auto r = jbc::response_vector(c, depth);
    for (const auto& p :
         {jbc::KreinParameters{Complex(0, 0), Complex(1, 0)},
          jbc::KreinParameters{Complex(1, 0), Complex(1, 0)}}) {
      std::vector<Complex> y(static_cast<std::size_t>(depth) + 1);
      y[0] = p.alpha;
      y[1] = p.beta;
      for (int k = 1; k < depth; ++k) {
        y[static_cast<std::size_t>(k + 1)] =
            -(c.a_padded(k - 1) * y[static_cast<std::size_t>(k - 1)] +
              c.b_padded(k) * y[static_cast<std::size_t>(k)]) /
            c.a_padded(k);
      }
      for (int tau = 1; tau <= depth; ++tau) {
        std::vector<Complex> target(y.begin() + 1, y.begin() + 1 + tau);
        auto direct = jbc::control_solve(c, target);
        ++total;
        try {
          auto via_krein = jbc::krein_control(r, p, tau);
          const double err = oracle::max_abs_diff(direct.f, via_krein.f);
          worst = std::max(worst, err);
          if (err > 1e-10) ++violations;
        } catch (const jbc::Error&) {
          ++violations;  // window too ill-conditioned to even solve
        }
      }
    }
  }
  const bool pass = violations == 0;
  line(5, pass, "Krein equation vs direct control solve (tau <= 15)",
       std::to_string(violations) + "/" + std::to_string(total) +
           " windows exceed 1e-10 (worst " + fmt(worst) + ")" +
           (pass ? ""
                 : "; double precision cannot resolve the deepest windows — "
                   "see README, Numerical limits"));
}

// ---------------------------------------------------------------------------
// 6. characterization sufficiency: well-conditioned candidates regenerate

void criterion_6() {
  jbc::ToleranceConfig gate;
  gate.singular_threshold = 1e-6;
  int accepted = 0;
  long attempts = 0;
  double worst = 0.0;
  std::uint64_t seed = 0;
  while (accepted < 50 && attempts < 100000) {
    ++attempts;
    const int window = 2 + static_cast<int>(seed % 7);
    oracle::TestRng rng(seed++);
    std::vector<Complex> candidate(static_cast<std::size_t>(2 * window - 1));
    candidate[0] = std::polar(rng.range(0.5, 2.0), rng.range(0.0, 6.2831853));
    for (std::size_t k = 1; k < candidate.size(); ++k) {
      candidate[k] = rng.box();
    }
    jbc::CharacterizationReport report;
    try {
      report = jbc::characterize(candidate, gate);
    } catch (const jbc::Error&) {
      continue;
    }
    if (!report.valid) continue;
    ++accepted;
    worst = std::max(worst, jbc::verify_roundtrip(candidate));
  }
  line(6, accepted == 50 && worst <= 1e-8,
       "characterization sufficiency on 50 sampled candidates",
       std::to_string(accepted) + " accepted (margins > 1e-6), worst "
                                  "regeneration residual " +
           fmt(worst) + " (tolerance 1e-8)");
}

// ---------------------------------------------------------------------------
// 7. structural invariants

void criterion_7() {
  bool pass = true;
  std::string detail;

  // complex symmetry, exact
  for (std::uint64_t seed = 0; seed < 10 && pass; ++seed) {
    const int depth = 1 + static_cast<int>(seed % 8);
    auto c = jbc::random_coefficients(depth, seed, jbc::Profile::Wide);
    auto m = jbc::connecting_from_response(jbc::response_vector(c, depth),
                                           depth);
    auto rot = jbc::rotate(m);
    if (m.entries != m.entries.transpose().eval() ||
        rot.entries != rot.entries.transpose().eval()) {
      pass = false;
      detail = "complex symmetry violated";
    }
  }

  // weight pattern, exact
  for (int window = 1; window <= 12 && pass; ++window) {
    auto kappa = jbc::krein_weights(window);
    for (int t = 0; t < window; ++t) {
      const int back = window - 1 - t;
      const double expect =
          back % 2 == 0 ? (back / 2 % 2 == 0 ? 1.0 : -1.0) : 0.0;
      if (kappa.values[static_cast<std::size_t>(t)] != expect) {
        pass = false;
        detail = "weight pattern violated";
      }
    }
  }

  // Goursat recursion vs impulse extraction; solution representation
  double worst_kernel = 0.0, worst_rep = 0.0;
  for (std::uint64_t seed = 0; seed < 9; ++seed) {
    const int horizon = 4 + 2 * static_cast<int>(seed);  // up to 20
    auto c = oracle::gentle_instance(horizon, seed);
    auto w = jbc::goursat_kernel(c, horizon);
    auto u = jbc::simulate(c, jbc::BoundaryControl::delta(), horizon);
    for (int n = 1; n <= horizon - 1; ++n) {
      for (int s = n; s <= horizon - 1; ++s) {
        worst_kernel =
            std::max(worst_kernel, std::abs(w.at(n, s) - u.at(n, s + 1)));
      }
    }
    oracle::TestRng rng(seed + 1000);
    std::vector<Complex> f(static_cast<std::size_t>(horizon));
    for (auto& fk : f) fk = 0.5 * rng.box();
    jbc::BoundaryControl control;
    control.f = f;
    auto uf = jbc::simulate(c, control, horizon);
    for (int n = 1; n <= horizon; ++n) {
      Complex prod(1, 0);
      for (int k = 0; k < n; ++k) prod *= c.a_padded(k);
      for (int t = n; t <= horizon; ++t) {
        Complex rep = (t - n < horizon) ? prod * f[static_cast<std::size_t>(t - n)]
                                        : Complex(0, 0);
        for (int s = n; s <= t - 1 && s <= horizon - 1; ++s) {
          const int idx = t - s - 1;
          rep += w.at(n, s) * f[static_cast<std::size_t>(idx)];
        }
        worst_rep = std::max(worst_rep, std::abs(uf.at(n, t) - rep));
      }
    }
  }
  if (worst_kernel > 1e-12) {
    pass = false;
    detail = "kernel extraction gap " + fmt(worst_kernel);
  }
  if (worst_rep > 1e-12) {
    pass = false;
    detail = "representation gap " + fmt(worst_rep);
  }

  // padding invariance of the response window
  double worst_pad = 0.0;
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const int window = 3 + static_cast<int>(seed % 6);
    auto c = jbc::random_coefficients(window, seed, jbc::Profile::Wide);
    auto junk = c;
    junk.depth = 2 * window;
    for (int k = window; k < 2 * window; ++k) {
      junk.a.push_back(Complex(5.0, -3.0 * static_cast<double>(k)));
      junk.b.push_back(Complex(-2.0, 11.0 + static_cast<double>(k)));
    }
    auto r = jbc::response_vector(c, window);
    auto r_junk = jbc::response_vector(junk, window);
    worst_pad = std::max(worst_pad, oracle::max_abs_diff(r.r, r_junk.r));
  }
  if (worst_pad > 1e-12) {
    pass = false;
    detail = "padding invariance gap " + fmt(worst_pad);
  }

  if (pass) {
    detail = "symmetry exact, weights exact, kernel gap " + fmt(worst_kernel) +
             ", representation gap " + fmt(worst_rep) + ", padding gap " +
             fmt(worst_pad);
  }
  line(7, pass, "structural invariants", detail);
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  if (failures == 0) {
    std::printf("acceptance: all 7 criteria passed\n");
  } else {
    std::printf("acceptance: %d criterion(s) failed\n", failures);
  }
  return failures == 0 ? 0 : 1;
}
