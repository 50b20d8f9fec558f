#include "crowdest/q_analysis.hpp"

#include <algorithm>

#include "crowdest/errors.hpp"
#include "crowdest/poly_lab.hpp"
#include "crowdest/sturm.hpp"

namespace crowdest {

namespace {

// Upper bound on refinement bisections; exact sign arithmetic converges one
// bit per step, so hitting this means a genuine bug.
unsigned max_refine_steps(unsigned digits) { return 64 + digits * 7; }

RatInterval q_enclosure(const QFunction& qf, const Rat& lo, const Rat& hi) {
  RatInterval x{lo, hi};
  if (lo == hi) {
    Rat v = q_eval(qf, lo);
    return {v, v};
  }
  RatInterval n = qf.numerator.eval_interval(x);
  RatInterval dnm = qf.denominator.eval_interval(x);
  if (dnm.contains_zero())
    throw PoleError("denominator enclosure straddles zero; interval too wide");
  Rat q1 = n.lo / dnm.lo, q2 = n.lo / dnm.hi, q3 = n.hi / dnm.lo, q4 = n.hi / dnm.hi;
  return {std::min(std::min(q1, q2), std::min(q3, q4)),
          std::max(std::max(q1, q2), std::max(q3, q4))};
}

struct LocatedPoint {
  sturm::RootBracket bracket;
  RatInterval q{Rat(0), Rat(0)};
};

// Isolates the critical points and refines until the Q enclosures are
// pairwise disjoint, so the extrema can be identified.
std::vector<LocatedPoint> locate_points(const QFunction& qf, const IntPoly& w,
                                        const sturm::Chain& chain) {
  std::vector<LocatedPoint> pts;
  for (auto& b : sturm::isolate_positive_roots(w)) pts.push_back({b, {Rat(0), Rat(0)}});
  auto tighten = [&](LocatedPoint& p) {
    while (true) {
      try {
        p.q = q_enclosure(qf, p.bracket.lo, p.bracket.hi);
        return;
      } catch (const PoleError&) {
        sturm::refine_step(w, chain, p.bracket);
      }
    }
  };
  for (auto& p : pts) tighten(p);
  bool ordered = false;
  unsigned guard = 0;
  while (!ordered) {
    ordered = true;
    for (size_t i = 0; i < pts.size() && ordered; ++i)
      for (size_t j = i + 1; j < pts.size() && ordered; ++j) {
        const auto& a = pts[i].q;
        const auto& b = pts[j].q;
        if (!(a.hi < b.lo || b.hi < a.lo)) ordered = false;
      }
    if (ordered) break;
    if (++guard > 512) throw InternalError("critical values not separable");
    for (auto& p : pts) {
      sturm::refine_step(w, chain, p.bracket);
      tighten(p);
    }
  }
  return pts;
}

IntPoly derivative_numerator(const QFunction& qf) {
  Polynomial w =
      qf.numerator.derivative() * qf.denominator - qf.numerator * qf.denominator.derivative();
  return intpoly::from_polynomial(w);
}

}  // namespace

QFunction q_function(unsigned d) {
  if (d < 3) throw DomainError("q_function requires d >= 3");
  auto [pt, rt] = reduced_pair(d);
  QFunction qf;
  qf.d = static_cast<long>(d);
  qf.denominator = pt.scaled(Rat(static_cast<long>(d) - 2));
  Polynomial shift({Rat(static_cast<long>(d) - 2), Rat(2)});  // 2x + d - 2
  qf.numerator = qf.denominator + rt * shift;
  long want = 2 * (static_cast<long>(d) / 2);
  if (qf.numerator.degree() != want || qf.denominator.degree() != want)
    throw InternalError("Q_d parts must have degree 2*floor(d/2) at d=" + std::to_string(d));
  return qf;
}

Rat q_eval(const QFunction& qf, const Rat& x) {
  Rat den = qf.denominator.eval(x);
  if (sign(den) == 0) throw PoleError("Q_d evaluated at a denominator root");
  return qf.numerator.eval(x) / den;
}

Rat q_limit(unsigned d) {
  QFunction qf = q_function(d);
  Rat lim = make_rat(-2, (static_cast<long>(d) + 1) * (static_cast<long>(d) - 2));
  if (qf.numerator.leading() / qf.denominator.leading() != lim)
    throw InternalError("Q_d leading coefficient ratio mismatch at d=" + std::to_string(d));
  return lim;
}

CriticalPointReport critical_points(unsigned d, unsigned digits) {
  if (d < 5) throw DomainError("critical_points requires d >= 5");
  if (digits == 0 || digits > 200) throw DomainError("critical_points requires 1 <= digits <= 200");
  QFunction qf = q_function(d);
  IntPoly w = derivative_numerator(qf);
  sturm::Chain chain(w);

  CriticalPointReport rep;
  rep.d = static_cast<long>(d);
  rep.digits = digits;
  rep.q_lim = q_limit(d);

  auto pts = locate_points(qf, w, chain);
  rep.certified_count = static_cast<long>(pts.size());

  // Refine each point until both its location and its Q value are pinned to
  // `digits` significant digits.
  std::vector<CriticalPoint> out;
  for (auto& p : pts) {
    CriticalPoint cp;
    unsigned steps = 0;
    while (true) {
      RatInterval xiv{p.bracket.lo, p.bracket.hi};
      auto xs = dec_sig_interval(xiv, digits);
      std::optional<std::string> qs;
      if (xs) {
        p.q = q_enclosure(qf, p.bracket.lo, p.bracket.hi);
        qs = dec_sig_interval(p.q, digits);
      }
      if (xs && qs) {
        cp.x_str = *xs;
        cp.q_str = *qs;
        break;
      }
      if (++steps > max_refine_steps(digits))
        throw InternalError("bisection failed to certify the requested digits");
      sturm::refine_step(w, chain, p.bracket);
    }
    cp.x_lo = p.bracket.lo;
    cp.x_hi = p.bracket.hi;
    cp.exact = p.bracket.exact;
    cp.q = p.q;
    out.push_back(std::move(cp));
  }
  std::sort(out.begin(), out.end(),
            [](const CriticalPoint& a, const CriticalPoint& b) { return a.x_lo < b.x_lo; });
  rep.points = std::move(out);

  if (!rep.points.empty()) {
    const CriticalPoint* maxp = &rep.points.front();
    const CriticalPoint* minp = &rep.points.front();
    for (const auto& p : rep.points) {
      if (p.q.lo > maxp->q.hi) maxp = &p;
      if (p.q.hi < minp->q.lo) minp = &p;
    }
    rep.x_max = maxp->x_str;
    rep.q_at_x_max = maxp->q_str;
    rep.x_min = minp->x_str;
    rep.q_at_x_min = minp->q_str;
  }
  return rep;
}

Conj2Evidence conj2_evidence(unsigned d, unsigned digits) {
  if (d < 5) throw DomainError("conj2_evidence requires d >= 5");
  if (digits == 0) throw DomainError("conj2_evidence requires digits >= 1");
  QFunction qf = q_function(d);
  Conj2Evidence ev;
  ev.d = static_cast<long>(d);
  const Rat threshold = make_rat(5, 1000);

  BigInt rad(static_cast<long>(d) + 2);
  if (is_perfect_square(rad)) {
    Rat x = make_rat(BigInt(d) + isqrt(rad), BigInt(2));
    Rat q = q_eval(qf, x);
    ev.exact_x = true;
    ev.value = dec_fixed_trunc(q, digits);
    ev.below_threshold = q <= threshold;
    return ev;
  }
  for (unsigned guard = digits + 10;; guard += 10) {
    RatInterval s = sqrt_enclosure(rad, guard);
    RatInterval x{(Rat(static_cast<long>(d)) + s.lo) / 2, (Rat(static_cast<long>(d)) + s.hi) / 2};
    RatInterval n = qf.numerator.eval_interval(x);
    RatInterval dnm = qf.denominator.eval_interval(x);
    if (dnm.contains_zero()) continue;
    Rat q1 = n.lo / dnm.lo, q2 = n.lo / dnm.hi, q3 = n.hi / dnm.lo, q4 = n.hi / dnm.hi;
    RatInterval q{std::min(std::min(q1, q2), std::min(q3, q4)),
                  std::max(std::max(q1, q2), std::max(q3, q4))};
    auto str = dec_fixed_interval(q, digits);
    if (!str) {
      if (guard > digits + 200) throw InternalError("conj2 evaluation failed to stabilize");
      continue;
    }
    ev.value = *str;
    if (q.hi <= threshold)
      ev.below_threshold = true;
    else if (q.lo > threshold)
      ev.below_threshold = false;
    else
      continue;  // straddles 0.005; add guard digits
    return ev;
  }
}

namespace {

// x_min(d) rounded at `decimals` places, as an exact rational.
Rat x_min_rounded(unsigned d, unsigned decimals) {
  QFunction qf = q_function(d);
  IntPoly w = derivative_numerator(qf);
  sturm::Chain chain(w);
  auto pts = locate_points(qf, w, chain);
  if (pts.empty()) throw InternalError("no critical points located for x_min");
  auto* minp = &pts.front();
  for (auto& p : pts)
    if (p.q.hi < minp->q.lo) minp = &p;

  BigInt scale = pow10(decimals);
  auto round_scaled = [&](const Rat& v) {
    // round-half-up(v * 10^dec) = floor((2v*10^dec + 1)/2)
    Rat s = v * Rat(scale);
    BigInt num = 2 * s.get_num() + s.get_den();
    BigInt den = 2 * s.get_den();
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
  };
  unsigned steps = 0;
  while (true) {
    // identical rounding at both bracket ends pins the rounded value
    BigInt rlo = round_scaled(minp->bracket.lo);
    BigInt rhi = round_scaled(minp->bracket.hi);
    if (rlo == rhi) return make_rat(rlo, scale);
    if (++steps > max_refine_steps(decimals))
      throw InternalError("x_min rounding failed to stabilize");
    sturm::refine_step(w, chain, minp->bracket);
  }
}

}  // namespace

CoefficientFit fit_coefficients(const std::vector<long>& d_list, unsigned k, unsigned digits) {
  if (d_list.size() != static_cast<size_t>(k) + 1)
    throw DomainError("fit needs exactly k+1 sample values of d");
  if (digits < 40) throw DomainError("fit requires digits >= 40");
  for (long d : d_list)
    if (d < 5 || d % 2 == 0) throw DomainError("fit samples must be odd and >= 5");
  std::vector<long> ds(d_list);
  std::sort(ds.begin(), ds.end());
  if (std::adjacent_find(ds.begin(), ds.end()) != ds.end())
    throw DomainError("fit samples must be distinct");

  size_t n = k + 1;
  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n));
  std::vector<Rat> rhs(n);
  for (size_t r = 0; r < n; ++r) {
    long d = ds[r];
    Rat base(1);
    Rat inv = make_rat(1, d - 1);
    for (size_t i = 0; i < n; ++i) {
      m[r][i] = base;
      base *= inv;
    }
    Rat y = x_min_rounded(static_cast<unsigned>(d), digits);
    rhs[r] = y - (make_rat(5, 2) * Rat(d) - 2);
  }
  // Exact Gaussian elimination; the generalized Vandermonde matrix in
  // 1/(d-1) is nonsingular for distinct d.
  std::vector<std::vector<Rat>> a(m);
  std::vector<Rat> b(rhs);
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && sign(a[piv][col]) == 0) ++piv;
    if (piv == n) throw InternalError("singular fit system");
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (size_t r = 0; r < n; ++r) {
      if (r == col || sign(a[r][col]) == 0) continue;
      Rat f = a[r][col] / a[col][col];
      for (size_t i = col; i < n; ++i) a[r][i] -= f * a[col][i];
      b[r] -= f * b[col];
    }
  }
  CoefficientFit fit;
  fit.k = k;
  fit.d_samples = ds;
  fit.c_exact.resize(n);
  for (size_t i = 0; i < n; ++i) fit.c_exact[i] = b[i] / a[i][i];
  for (size_t i = 0; i < n; ++i) fit.c.push_back(dec_fixed_trunc(fit.c_exact[i], digits));
  for (size_t r = 0; r < n; ++r) {
    Rat res(0);
    for (size_t i = 0; i < n; ++i) res += m[r][i] * fit.c_exact[i];
    res -= rhs[r];
    fit.residuals.push_back(res.get_num().get_str() + "/" + res.get_den().get_str());
  }
  return fit;
}

AsymptotePrediction asymptote_predictions(unsigned d) {
  if (d < 5 || d % 2 == 0) throw DomainError("asymptote_predictions requires odd d >= 5");
  long ld = static_cast<long>(d);
  AsymptotePrediction p;
  p.x_max = make_rat(ld, 6) - make_rat(1, 8) - make_rat(1, 64 * (ld - 1));
  p.x_min = make_rat(5 * ld, 2) - 2 + make_rat(1, 96) - make_rat(305, 1728) * make_rat(1, ld - 1);
  p.q_min = make_rat(-1, 12 * (ld - 1));
  return p;
}

}  // namespace crowdest
