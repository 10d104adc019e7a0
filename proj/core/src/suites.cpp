#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ellambda/error.hpp"
#include "ellambda/qseries.hpp"
#include "ellambda/radical_solver.hpp"
#include "ellambda/transforms.hpp"
#include "suite_registry.hpp"

namespace ellambda::detail {

namespace {

using Tasks = std::vector<SuiteTask>;

// Printed 50-digit value of 6 a_11.
constexpr const char* kPrintedSixA11 = "68.601585457080984363818472671223625016723649408286";

class SampleStream {
 public:
  SampleStream(std::uint64_t seed, std::string_view suite) {
    std::uint64_t h = 1469598103934665603ull;
    for (char c : suite) h = (h ^ static_cast<unsigned char>(c)) * 1099511628211ull;
    rng_.seed(seed ^ h);
  }
  /// Uniform in [lo, hi), 53 random bits.
  double uniform(double lo, double hi) { return lo + (hi - lo) * (static_cast<double>(rng_() >> 11) * 0x1.0p-53); }

 private:
  std::mt19937_64 rng_;
};

Real one(long bits) { return Real::from_int(1, bits); }

Sample compare(const Complex& value, const Complex& expected) {
  return Sample{(value - expected).abs(), max(expected.abs(), one(expected.precision()))};
}

// Keeps the sample with the larger relative residual.
void absorb(Sample& acc, const Sample& s) {
  if (acc.scale.is_zero() || s.residual / s.scale > acc.residual / acc.scale) acc = s;
}

Sample zero_sample() { return Sample{Real::zero(64), Real::zero(64)}; }

std::string d_id(long d) { return "d" + std::to_string(d); }

std::string indexed(std::string_view prefix, std::size_t k) {
  std::string n = std::to_string(k);
  if (n.size() < 2) n.insert(0, "0");
  return std::string(prefix) + n;
}

std::vector<std::string> record_refs(const SingularValueRecord& rec) {
  std::vector<std::string> refs{rec.refs};
  refs.insert(refs.end(), rec.discrepancy_ids.begin(), rec.discrepancy_ids.end());
  return refs;
}

SuiteTask single(std::string id, std::vector<std::string> refs, long bits, std::function<Verdict()> fn) {
  SuiteTask task{id, refs, {}};
  task.run = [id, refs, bits, fn = std::move(fn)] { return std::vector<ItemOutcome>{guarded(id, refs, bits, fn)}; };
  return task;
}

Real real_d(long d, long bits) { return Real::from_int(d, bits); }

UpperHalfPoint at_half_plus_sqrt(long d, long bits) { return UpperHalfPoint::half_plus_sqrt(real_d(d, bits), bits); }

// Verdict from a yes/no property with a measured violation.
Verdict property_verdict(bool ok, const Real& violation, long bits, std::string note = {}) {
  Verdict v;
  v.status = ok ? VerdictStatus::Match : VerdictStatus::Mismatch;
  v.residual_abs = violation.rounded(64);
  v.residual_rel = violation.rounded(64);
  v.precision_used = bits;
  v.note = std::move(note);
  return v;
}

std::vector<long> table_d(const TableSet& tables) {
  std::vector<long> ds;
  for (const auto* r : tables.category("weber")) ds.push_back(r->d);
  for (const auto* r : tables.category("berwick")) ds.push_back(r->d);
  std::sort(ds.begin(), ds.end());
  return ds;
}

// ---------------------------------------------------------------------------

Tasks weber_j(const TableSet& tables, const SuiteOptions& opt) {
  Tasks tasks;
  const PrecisionContext ctx = opt.ctx;
  for (const auto* rec : tables.category("weber")) {
    const long d = rec->d;
    const AlgebraicExpr& exact = tables.j_exact(d);
    tasks.push_back(single(d_id(d), record_refs(*rec), ctx.bits, [ctx, d, exact] {
      const PrecisionContext ref_ctx = ctx.with_bits(2 * ctx.bits);
      const Complex ref = j_of_tau(at_half_plus_sqrt(d, ref_ctx.working_bits()), ref_ctx);
      return adjudicate({exact}, ref, ctx).front();
    }));
  }
  return tasks;
}

Tasks berwick_j(const TableSet& tables, const SuiteOptions& opt) {
  Tasks tasks;
  const PrecisionContext ctx = opt.ctx;
  for (const auto* rec : tables.category("berwick")) {
    const std::string base = d_id(rec->d);
    const auto refs = record_refs(*rec);
    tasks.push_back(SuiteTask{base, refs, [ctx, rec, base, refs] {
                                const PrecisionContext ref_ctx = ctx.with_bits(2 * ctx.bits);
                                const Complex ref = j_of_tau(at_half_plus_sqrt(rec->d, ref_ctx.working_bits()), ref_ctx);
                                std::vector<AlgebraicExpr> forms;
                                for (const auto& f : rec->j_forms) forms.push_back(f.expr);
                                const auto verdicts = adjudicate(forms, ref, ctx);
                                std::vector<ItemOutcome> out;
                                for (std::size_t k = 0; k < forms.size(); ++k) {
                                  out.push_back({base + "/" + rec->j_forms[k].name, verdicts[k], refs});
                                }
                                return out;
                              }});
  }
  return tasks;
}

Tasks cubic_identities(const TableSet& tables, const SuiteOptions& opt) {
  Tasks tasks;
  const PrecisionContext ctx = opt.ctx;
  for (long d : table_d(tables)) {
    const AlgebraicExpr& j = tables.j_exact(d);
    const auto& rec = tables.j_record(d);
    tasks.push_back(single(d_id(d), record_refs(rec), ctx.bits, [ctx, d, j] {
      return escalating_check(
          [d, &j](const PrecisionContext& c) {
            const ClosedFormTriple t = closed_forms(j, c);
            const Real alpha = alpha_from_d(real_d(d, c.working_bits()), c);
            const Real residual = max(t.max_deviation, abs(t.a - alpha));
            return Sample{residual, max(abs(t.a), one(c.bits))};
          },
          ctx);
    }));
  }

  // 6 a_11 against the printed 50 significant digits.
  const AlgebraicExpr j11 = tables.j_exact(11);
  tasks.push_back(single("d11/printed-digits", {"d11-display"}, ctx.bits, [ctx, j11] {
    const Real six_a = 6 * closed_forms(j11, ctx).a;
    const Real printed = Real::from_string(kPrintedSixA11, ctx.working_bits());
    const std::string digits = six_a.to_decimal(50);
    Verdict v = property_verdict(digits == kPrintedSixA11, abs(six_a - printed), ctx.bits);
    v.note = "6 a_11 = " + digits;
    return v;
  }));

  SampleStream stream(opt.seed, "cubic-identities");
  for (std::size_t k = 0; k < 50; ++k) {
    const double d = stream.uniform(3.0, 60.0);
    tasks.push_back(single(indexed("random/", k), {}, ctx.bits, [ctx, d] {
      const Real dd = Real::from_double(d, ctx.working_bits());
      const Complex j = j_of_tau(UpperHalfPoint::half_plus_sqrt(dd, ctx.working_bits()), ctx);
      const ClosedFormTriple t = closed_forms(j.re(), ctx);
      const Real alpha = alpha_from_d(dd, ctx);
      const Real residual = max(t.max_deviation, abs(t.a - alpha));
      Verdict v = threshold_check(Sample{residual, max(abs(t.a), one(ctx.bits))}, ctx.tolerance(), ctx.bits);
      v.note = "d = " + dd.to_decimal(17);
      return v;
    }));
  }
  return tasks;
}

// The six arguments with s = sqrt(-d):
//   (1+s)/2, (s-1)/(s+1), 2/(1-s), -2/(1+s), -(s+1)/(s-1), (-1+s)/2.
UpperHalfPoint six_argument_tau(int k, long d, long bits) {
  const Real dd = real_d(d, bits);
  const Real rs = sqrt(dd);
  const Real den = dd + 1;
  switch (k) {
    case 0: return UpperHalfPoint::half_plus_sqrt(dd, bits);
    case 1: return UpperHalfPoint::cayley_sqrt(dd, bits);
    case 2: return UpperHalfPoint(Complex(2 / den, 2 * rs / den));
    case 3: return UpperHalfPoint(Complex(-2 / den, 2 * rs / den));
    case 4: return UpperHalfPoint(Complex((1 - dd) / den, 2 * rs / den));
    default: return UpperHalfPoint(Complex(Real::from_rational(BigRational(-1, 2), bits), rs / 2));
  }
}

Tasks six_arguments_suite(const TableSet& tables, const SuiteOptions& opt) {
  Tasks tasks;
  const PrecisionContext ctx = opt.ctx;
  for (long d : table_d(tables)) {
    const AlgebraicExpr& j = tables.j_exact(d);
    for (int k = 0; k < 6; ++k) {
      const std::string id = d_id(d) + "/tau" + std::to_string(k + 1);
      tasks.push_back(single(id, {}, ctx.bits, [ctx, d, k, j] {
        return escalating_check(
            [d, k, &j](const PrecisionContext& c) {
              const ClosedFormTriple t = closed_forms(j, c);
              const Complex ref = lambda_of_tau(six_argument_tau(k, d, c.working_bits()), c);
              Sample worst = zero_sample();
              for (const Real* x : {&t.a, &t.b, &t.c}) {
                absorb(worst, compare(six_values_from_closed_form(*x, c)[static_cast<std::size_t>(k)], ref));
              }
              return worst;
            },
            ctx);
      }));
    }
  }
  return tasks;
}

Tasks lambda_suite(const std::vector<const SingularValueRecord*>& records, const SuiteOptions& opt,
                   bool per_form_ids) {
  Tasks tasks;
  const PrecisionContext ctx = opt.ctx;
  for (const auto* rec : records) {
    const std::string base = d_id(rec->d);
    const auto refs = record_refs(*rec);
    tasks.push_back(SuiteTask{base, refs, [ctx, rec, base, refs, per_form_ids] {
                                const PrecisionContext ref_ctx = ctx.with_bits(2 * ctx.bits);
                                const Complex ref =
                                    lambda_tilde_numeric(real_d(rec->d, ref_ctx.working_bits()), ref_ctx);
                                std::vector<AlgebraicExpr> forms;
                                for (const auto& f : rec->lambda_forms) forms.push_back(f.expr);
                                const auto verdicts = adjudicate(forms, ref, ctx);
                                std::vector<ItemOutcome> out;
                                for (std::size_t k = 0; k < forms.size(); ++k) {
                                  const std::string id =
                                      per_form_ids ? base + "/" + rec->lambda_forms[k].name : base;
                                  out.push_back({id, verdicts[k], refs});
                                }
                                return out;
                              }});
  }
  return tasks;
}

Tasks lambda_weber(const TableSet& tables, const SuiteOptions& opt) {
  return lambda_suite(tables.category("lambda-weber"), opt, false);
}

Tasks lambda_berwick(const TableSet& tables, const SuiteOptions& opt) {
  std::vector<const SingularValueRecord*> records;
  for (const char* cat : {"lambda-d1-odd", "lambda-d1-div3", "lambda-nonsquarefree", "lambda-d2"}) {
    const auto part = tables.category(cat);
    records.insert(records.end(), part.begin(), part.end());
  }
  std::sort(records.begin(), records.end(), [](const auto* a, const auto* b) { return a->d < b->d; });
  return lambda_suite(records, opt, true);
}

Tasks factorizations(const TableSet& tables, const SuiteOptions& opt) {
  Tasks tasks;
  const PrecisionContext ctx = opt.ctx;
  for (const auto& rec : tables.factorizations()) {
    const FactorizationRecord* r = &rec;
    const AlgebraicExpr& j = tables.j_exact(r->d);
    tasks.push_back(single(d_id(r->d), {r->refs}, ctx.bits, [ctx, r, j] {
      const auto jq = to_quad_field(j, r->m);
      if (!jq) throw Error(ErrorKind::InvalidArgument, "j is not exactly reducible into Q(sqrt " + std::to_string(r->m) + ")");
      const QuadPoly expected = sextic_coeffs(*jq);
      const QuadPoly expanded = quad_poly_expand(r->factors, r->scalar);
      Real worst = Real::zero(64);
      Real scale = one(64);
      for (std::size_t k = 0; k < expected.size(); ++k) {
        const Complex e = expected[k].to_complex(ctx.working_bits());
        worst = max(worst, (expanded[k].to_complex(ctx.working_bits()) - e).abs());
        scale = max(scale, e.abs());
      }
      Verdict v = property_verdict(expected == expanded, worst, 0);
      v.residual_rel = (worst / scale).rounded(64);
      v.note = "exact in Q(sqrt " + std::to_string(r->m) + ")";
      return v;
    }));
  }
  return tasks;
}

Tasks function_equations(const TableSet&, const SuiteOptions& opt) {
  Tasks tasks;
  const PrecisionContext ctx = opt.ctx;
  SampleStream stream(opt.seed, "function-equations");
  for (std::size_t n = 0; n < 20; ++n) {
    const double re = stream.uniform(-0.5, 0.5);
    const double im = stream.uniform(0.5, 4.0);
    const std::string base = indexed("tau", n);
    tasks.push_back(SuiteTask{base, {}, [ctx, re, im, base] {
      const long wb = ctx.working_bits();
      const long bits = ctx.bits;
      const Complex t(Real::from_double(re, wb), Real::from_double(im, wb));
      const UpperHalfPoint tau(t);
      const Real accept = ctx.tolerance();
      const std::string note = "tau = " + t.to_string(17);
      std::vector<ItemOutcome> out;
      const auto item = [&](const char* name, const std::function<Sample()>& fn) {
        out.push_back(guarded(base + "/" + name, {}, bits, [&] {
          Verdict v = threshold_check(fn(), accept, bits);
          v.note = note;
          return v;
        }));
      };

      const WeberTriple w = weber_triple(tau, ctx);
      const Complex lam = lambda_of_tau(tau, ctx);
      const Complex k = modulus_k(tau, ctx);
      const Complex j = j_from_lambda(lam, ctx);
      const Complex f8 = pow(w.f, 8), f1_8 = pow(w.f1, 8), f2_8 = pow(w.f2, 8);
      const Real sqrt2 = sqrt(Real::from_int(2, wb));
      const Complex one_c = Complex::from_int(1, wb);
      const Complex shifted(t.re() + 1, t.im());
      const Complex inverted = -one_c / t;
      const auto eta_ratio = [&] {
        const Complex e1 = eta(tau, ctx);
        const Complex e2 = eta(UpperHalfPoint(2 * t), ctx);
        return sqrt2 * e2 / e1;
      };

      item("weber-sum", [&] { return compare(f1_8 + f2_8, f8); });
      item("weber-product", [&] { return compare(w.f * w.f1 * w.f2, Complex(sqrt2)); });
      item("k-squared", [&] { return compare(k * k, lam); });
      item("landen", [&] {
        return compare(landen_halved_modulus_sq(k), lambda_of_tau(UpperHalfPoint(t / 2), ctx));
      });
      item("lambda-shift", [&] { return compare(lambda_of_tau(UpperHalfPoint(shifted), ctx), lam / (lam - 1)); });
      item("lambda-inversion", [&] { return compare(lambda_of_tau(UpperHalfPoint(inverted), ctx), 1 - lam); });
      item("j-shift", [&] { return compare(j_of_tau(UpperHalfPoint(shifted), ctx), j); });
      item("j-inversion", [&] { return compare(j_of_tau(UpperHalfPoint(inverted), ctx), j); });

      const auto orbit = [&] { return six_lambda_values(lam, ctx).values; };
      item("orbit-sum", [&] {
        Complex s = Complex::zero(wb);
        for (const auto& v : orbit()) s += v;
        return compare(s, Complex::from_int(3, wb));
      });
      item("orbit-product", [&] {
        Complex p = one_c;
        for (const auto& v : orbit()) p *= v;
        return compare(p, one_c);
      });
      item("orbit-e2", [&] {
        const auto vals = orbit();
        Complex s = Complex::zero(wb), sq = Complex::zero(wb);
        for (const auto& v : vals) {
          s += v;
          sq += v * v;
        }
        return compare((s * s - sq) / 2, 6 - j / 256);
      });
      item("lambda-f2-ratio", [&] { return compare(f2_8 / f8, lam); });
      item("f2-eta", [&] { return compare(w.f2, eta_ratio()); });
      item("lambda-f1-ratio", [&] { return compare(f1_8 / f8, lam); });
      item("f2-printed-exponent", [&] {
        const NomeBundle nome(tau, wb);
        return compare(w.f2 * nome.q_pow(BigRational(-1, 48)), eta_ratio());
      });
      return out;
    }});
  }
  return tasks;
}

Tasks derivative(const TableSet&, const SuiteOptions& opt) {
  Tasks tasks;
  const PrecisionContext ctx = opt.ctx;
  static const std::array<std::pair<double, double>, 5> kPoints = {
      {{0.0, 1.0}, {0.0, 2.0}, {0.25, 0.75}, {-0.3, 1.2}, {0.45, 0.6}}};
  for (std::size_t n = 0; n < kPoints.size(); ++n) {
    const auto [re, im] = kPoints[n];
    const std::string base = indexed("tau", n);
    tasks.push_back(SuiteTask{base, {}, [ctx, re = re, im = im, base] {
      const long wb = ctx.working_bits();
      const Complex t(Real::from_double(re, wb), Real::from_double(im, wb));
      const UpperHalfPoint tau(t);
      const Real h = Real::from_string("1e-15", wb);
      const Complex hc(h);
      const Complex fd =
          log(lambda_of_tau(UpperHalfPoint(t + hc), ctx) / lambda_of_tau(UpperHalfPoint(t - hc), ctx)) / (2 * hc);
      const Complex product = lambda_log_derivative(tau, ctx);
      const Real accept = Real::from_string("1e-10", wb);
      const std::string note = "tau = " + t.to_string(6);
      std::vector<ItemOutcome> out;
      out.push_back(guarded(base + "/product", {}, ctx.bits, [&] {
        Verdict v = threshold_check(Sample{(product - fd).abs(), fd.abs()}, accept, ctx.bits);
        v.note = note;
        return v;
      }));
      out.push_back(guarded(base + "/printed-prefactor", {}, ctx.bits, [&] {
        const Complex printed = product * NomeBundle(tau, wb).q_pow(BigRational(1, 2));
        Verdict v = threshold_check(Sample{(printed - fd).abs(), fd.abs()}, accept, ctx.bits);
        v.note = note;
        return v;
      }));
      return out;
    }});
  }
  return tasks;
}

Tasks monotonicity(const TableSet&, const SuiteOptions& opt) {
  Tasks tasks;
  const PrecisionContext ctx = opt.ctx;
  // d = 1, 1.5, ..., 30
  std::vector<double> grid;
  for (int k = 2; k <= 60; ++k) grid.push_back(k / 2.0);

  tasks.push_back(SuiteTask{"grid", {}, [ctx, grid] {
    const long wb = ctx.working_bits();
    const long bits = ctx.bits;
    std::vector<Real> lam, alpha, j;
    for (double d : grid) {
      const Real dd = Real::from_double(d, wb);
      const Complex l = lambda_of_tau(UpperHalfPoint::sqrt_minus(dd, wb), ctx);
      lam.push_back(l.re());
      alpha.push_back(alpha_from_d(dd, ctx));
      j.push_back(j_of_tau(UpperHalfPoint::half_plus_sqrt(dd, wb), ctx).re());
    }
    std::vector<ItemOutcome> out;
    // Largest step against the expected direction (0 when strictly monotone).
    const auto monotone = [&](const char* id, const std::vector<Real>& v, int direction) {
      out.push_back(guarded(id, {}, bits, [&] {
        Real worst = Real::zero(64);
        bool ok = true;
        for (std::size_t k = 1; k < v.size(); ++k) {
          const Real step = direction * (v[k] - v[k - 1]);
          if (step.sign() <= 0) {
            ok = false;
            worst = max(worst, -step);
          }
        }
        return property_verdict(ok, worst, bits);
      }));
    };
    out.push_back(guarded("lambda-range", {}, bits, [&] {
      Real worst = Real::zero(64);
      bool ok = true;
      for (const auto& l : lam) {
        if (l.sign() <= 0 || !(l < one(bits))) {
          ok = false;
          worst = max(worst, max(-l, l - 1));
        }
      }
      return property_verdict(ok, worst, bits, "0 < lambda(sqrt(-d)) < 1 on d in [1, 30]");
    }));
    monotone("lambda-decreasing", lam, -1);
    monotone("alpha-increasing", alpha, +1);
    monotone("j-decreasing", j, -1);
    out.push_back(guarded("j-nonpositive", {}, bits, [&] {
      Real worst = Real::zero(64);
      bool ok = true;
      for (std::size_t k = 0; k < grid.size(); ++k) {
        if (grid[k] < 3.0) continue;
        // j_3 = 0 exactly; allow rounding noise there.
        if (j[k] > ctx.tolerance()) {
          ok = false;
          worst = max(worst, j[k]);
        }
      }
      return property_verdict(ok, worst, bits, "j_d <= 0 on d in [3, 30]");
    }));
    return out;
  }});

  for (long d : {3L, 4L, 5L, 7L, 11L, 15L}) {
    tasks.push_back(single("j-from-alpha/" + d_id(d), {}, ctx.bits, [ctx, d] {
      return escalating_check(
          [d](const PrecisionContext& c) {
            const Real dd = real_d(d, c.working_bits());
            const Real via_alpha = j_from_alpha(alpha_from_d(dd, c).rounded(c.working_bits()));
            const Complex direct = j_of_tau(UpperHalfPoint::half_plus_sqrt(dd, c.working_bits()), c);
            return compare(Complex(via_alpha), direct);
          },
          ctx);
    }));
  }
  return tasks;
}

Tasks ochiai(const TableSet& tables, const SuiteOptions& opt) {
  Tasks tasks;
  const PrecisionContext ctx = opt.ctx;
  SampleStream stream(opt.seed, "ochiai");
  for (std::size_t k = 0; k < 100; ++k) {
    // Magnitudes spread over 10^-3 .. 10^3.
    std::array<double, 3> v{};
    for (auto& x : v) x = std::pow(10.0, stream.uniform(-3.0, 3.0));
    tasks.push_back(single(indexed("random/", k), {}, ctx.bits, [ctx, v] {
      const long wb = ctx.working_bits();
      const OchiaiPair p = ochiai_pair(Real::from_double(v[0], wb), Real::from_double(v[1], wb),
                                       Real::from_double(v[2], wb), ctx);
      return threshold_check(Sample{abs(p.a - p.c), p.a}, ctx.tolerance(), ctx.bits);
    }));
  }
  for (const auto* rec : tables.category("weber")) {
    const long d = rec->d;
    const AlgebraicExpr& j = tables.j_exact(d);
    tasks.push_back(single(d_id(d), record_refs(*rec), ctx.bits, [ctx, j] {
      return escalating_check(
          [&j](const PrecisionContext& c) {
            const OchiaiArgs args = ochiai_substitution(j, c);
            const auto value = [&](const AlgebraicExpr& e) { return eval_expr_working(e, c).re(); };
            const OchiaiPair p = ochiai_pair(value(args.r), value(args.x), value(args.y), c);
            const Real a48 = 48 * closed_forms(j, c).a;
            return Sample{max(abs(p.a - p.c), abs(p.a - a48)), p.a};
          },
          ctx);
    }));
  }
  return tasks;
}

Tasks sqrt21(const TableSet&, const SuiteOptions& opt) {
  using E = AlgebraicExpr;
  Tasks tasks;
  const PrecisionContext ctx = opt.ctx;
  const auto n = [](long v) { return E::integer(v); };
  const auto third = [](E e) { return E::pow(std::move(e), BigRational(1, 3)); };
  const E s21 = E::sqrt(n(21));
  const E s7 = E::sqrt(n(7));
  const E s3 = E::sqrt(n(3));

  const E lhs21 = third(n(3) * s21 + n(8)) + third(n(3) * s21 - n(8));
  const E lhs7 = third(n(27) * s7 + n(24) * s3) + third(n(27) * s7 - n(24) * s3);
  // 1/2 + (9/16) sqrt(-7) + i (5/16) (...)  against 1/2 + (3/2) sqrt(-7)
  const E i = E::imag_unit();
  const E l7_radical = E::add({E::rational(BigRational(1, 2)), E::rational(BigRational(9, 16)) * i * s7,
                               E::rational(BigRational(5, 16)) * i * lhs7});
  const E l7_printed = E::add({E::rational(BigRational(1, 2)), E::rational(BigRational(3, 2)) * i * s7});

  const auto add = [&](std::string id, E lhs, E rhs) {
    tasks.push_back(single(std::move(id), {"cubic-relation-remark"}, ctx.bits,
                           [ctx, lhs, rhs] { return expr_equal_numeric(lhs, rhs, ctx); }));
  };
  add("sqrt21", lhs21, s21);
  add("sqrt7-twin", lhs7, n(3) * s7);
  add("l7-radical-form", l7_radical, l7_printed);
  return tasks;
}

Tasks weber_cubic_roots_suite(const TableSet&, const SuiteOptions& opt) {
  Tasks tasks;
  const PrecisionContext ctx = opt.ctx;
  for (long d : {7L, 11L}) {
    tasks.push_back(single(d_id(d), {"weber-cubic-remark"}, ctx.bits, [ctx, d] {
      const long wb = ctx.working_bits();
      const UpperHalfPoint tau = at_half_plus_sqrt(d, wb);
      const WeberTriple w = weber_triple(tau, ctx);
      const Complex j = j_of_tau(tau, ctx);
      std::vector<Complex> xs;
      for (const auto& z : weber_cubic_roots(j, ctx)) xs.push_back(16 * (z - 1));
      const std::vector<Complex> expected = {-pow(w.f, 24), pow(w.f1, 24), pow(w.f2, 24)};
      const MultisetMatch m = match_multiset(xs, expected, ctx.tolerance());
      return property_verdict(m.matched, m.max_residual, ctx.bits, "x = 16(z - 1) against {-f^24, f1^24, f2^24}");
    }));
  }
  return tasks;
}

Tasks printed_z(const TableSet& tables, const SuiteOptions& opt) {
  Tasks tasks;
  const PrecisionContext ctx = opt.ctx;
  for (const auto* rec : tables.category("weber")) {
    const long d = rec->d;
    const AlgebraicExpr& j = tables.j_exact(d);
    tasks.push_back(SuiteTask{d_id(d), record_refs(*rec), [ctx, d, j, refs = record_refs(*rec)] {
      const Real jv = eval_expr_working(j, ctx).re();
      const WeberCubicRoot root = weber_cubic_root(jv, ctx);
      const Real scale = max(abs(root.z), one(ctx.bits));
      std::vector<ItemOutcome> out;
      out.push_back(guarded(d_id(d), refs, ctx.bits, [&] {
        Verdict v = threshold_check(Sample{abs(root.printed_z - root.z), scale}, ctx.tolerance(), ctx.bits);
        v.note = "z = " + root.z.to_decimal(20) + ", printed radical = " + root.printed_z.to_decimal(20);
        return v;
      }));
      out.push_back(guarded(d_id(d) + "/sqrt3-scaled", refs, ctx.bits, [&] {
        const Real scaled = sqrt(Real::from_int(3, ctx.working_bits())) * root.printed_z;
        return threshold_check(Sample{abs(scaled - root.z), scale}, ctx.tolerance(), ctx.bits);
      }));
      return out;
    }});
  }
  return tasks;
}

}  // namespace

std::vector<SuiteTask> build_suite(std::string_view name, const TableSet& tables, const SuiteOptions& options) {
  using Builder = Tasks (*)(const TableSet&, const SuiteOptions&);
  static const std::vector<std::pair<std::string_view, Builder>> builders = {
      {"weber-j", weber_j},
      {"berwick-j", berwick_j},
      {"cubic-identities", cubic_identities},
      {"theorem-1-1", six_arguments_suite},
      {"lambda-weber", lambda_weber},
      {"lambda-berwick", lambda_berwick},
      {"factorizations", factorizations},
      {"function-equations", function_equations},
      {"derivative", derivative},
      {"monotonicity", monotonicity},
      {"ochiai", ochiai},
      {"sqrt21", sqrt21},
      {"weber-cubic-roots", weber_cubic_roots_suite},
      {"printed-z", printed_z},
  };
  for (const auto& [key, build] : builders) {
    if (key == name) return build(tables, options);
  }
  throw Error(ErrorKind::UnknownSuite, "unknown suite \"" + std::string(name) + "\"");
}

}  // namespace ellambda::detail
