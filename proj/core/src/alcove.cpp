#include "tiltkit/alcove.hpp"

#include <algorithm>

#include "tiltkit/error.hpp"

namespace tiltkit {

std::string_view to_string(FacetKind k) {
  switch (k) {
    case FacetKind::thin:
      return "thin";
    case FacetKind::full:
      return "full";
    case FacetKind::partial:
      return "partial";
  }
  return "?";
}

FacetKind parse_facet_kind(std::string_view s) {
  if (s == "thin") return FacetKind::thin;
  if (s == "full") return FacetKind::full;
  if (s == "partial") return FacetKind::partial;
  throw ValidationError("unknown facet kind '" + std::string(s) + "'");
}

Rational eval_affine_root(const RootDatum& d, const AffineRoot& a, const QPoint& v, Int n) {
  IntVec alpha = d.root(a.root_index);
  return Rational(dot(v.num, alpha), v.den) + Rational(n * a.m);
}

QPoint reflect(const RootDatum& d, const AffineRoot& a, const QPoint& v, Int n) {
  Rational f = eval_affine_root(d, a, v, n);
  IntVec av = d.coroot(a.root_index);
  std::vector<Rational> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v.coord(i) - f * Rational(av[i]);
  return QPoint::from_rationals(out);
}

bool in_closed_fundamental_alcove(const RootDatum& d, const QPoint& v, Int n) {
  for (const auto& a : d.positive_roots()) {
    Rational p(dot(v.num, a), v.den);
    if (p > 0 || p < -n) return false;
  }
  return true;
}

namespace {

// All mu in X^vee with 0 <= <mu + shift/2, alpha> <= ell for alpha > 0, where
// shift is a doubled offset (0 for the box domain, 2 rho^vee for the dot domain).
std::vector<IntVec> enumerate_domain(const RootDatum& d, Int ell, const IntVec& shift2) {
  if (!d.is_semisimple()) throw ValidationError("fundamental domain is infinite for a non-semisimple root datum");
  if (ell < 1) throw ValidationError("level must be positive");
  const int k = d.semisimple_rank();
  IntMat P = IntMat::from_rows(d.simple_roots(), d.rank());
  std::vector<IntVec> out;
  IntVec c(k, 0);
  for (;;) {
    bool ok = true;
    for (const auto& coeffs : d.root_coefficients()) {
      Int v = dot(coeffs, c);
      if (v > ell) {
        ok = false;
        break;
      }
    }
    if (ok) {
      // Solve P (2 mu + shift2) = 2c.
      auto x = solve(P, scale(2, c));
      if (!x) throw std::logic_error("simple roots are singular");
      IntVec mu(d.rank());
      bool integral = true;
      for (int i = 0; i < d.rank(); ++i) {
        Rational m = ((*x)[i] - Rational(shift2[i])) / 2;
        if (m.denominator() != 1) {
          integral = false;
          break;
        }
        mu[i] = m.numerator();
      }
      if (integral) out.push_back(std::move(mu));
    }
    int i = 0;
    while (i < k && ++c[i] > ell) c[i++] = 0;
    if (i == k) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

Projection project_box(const AffineWeylGroup& g, IntVec mu, Int level) {
  const RootDatum& d = g.datum();
  const auto& gens = g.simple_reflections();
  AffineWeylElt witness = g.identity();
  for (;;) {
    int chosen = -1;
    for (int s = 0; s < gens.size() && chosen < 0; ++s) {
      if (gens.is_finite(s)) {
        if (dot(mu, d.simple_roots()[s]) < 0) chosen = s;
      } else {
        const auto& beta = d.positive_roots()[gens.affine_roots[s].first];
        if (dot(mu, beta) > level) chosen = s;
      }
    }
    if (chosen < 0) break;
    mu = g.act(gens.elements[chosen], mu, level, ActionMode::box);
    witness = g.right_multiply(witness, chosen);
  }
  return {std::move(mu), std::move(witness)};
}

}  // namespace

std::vector<IntVec> dot_fundamental_reps(const RootDatum& d, Int ell) {
  return enumerate_domain(d, ell, d.two_rho_vee());
}

std::vector<IntVec> box_fundamental_reps(const RootDatum& d, Int ell) {
  return enumerate_domain(d, ell, IntVec(d.rank(), 0));
}

Projection project_to_fundamental(const AffineWeylGroup& g, std::span<const Int> mu, Int ell, ActionMode mode) {
  const RootDatum& d = g.datum();
  if (static_cast<int>(mu.size()) != d.rank()) throw ValidationError("coweight has wrong dimension");
  if (ell < 1) throw ValidationError("level must be positive");
  switch (mode) {
    case ActionMode::box:
      return project_box(g, IntVec(mu.begin(), mu.end()), ell);
    case ActionMode::dot: {
      // w . mu = w [] (mu + rho) - rho; work with doubled coordinates at level 2 ell.
      IntVec doubled = add(scale(2, mu), d.two_rho_vee());
      Projection p = project_box(g, std::move(doubled), 2 * ell);
      IntVec rep = sub(p.representative, d.two_rho_vee());
      for (auto& x : rep) x /= 2;
      return {std::move(rep), std::move(p.witness)};
    }
    case ActionMode::cdot: {
      // w .n mu = -(w []n (-mu))
      Projection p = project_box(g, negate(mu), ell);
      return {negate(p.representative), std::move(p.witness)};
    }
  }
  throw ValidationError("unknown action mode");
}

FacetDescriptor facet_stabilizer(const AffineWeylGroup& g, std::span<const Int> lambda, Int ell) {
  const RootDatum& d = g.datum();
  if (static_cast<int>(lambda.size()) != d.rank()) throw ValidationError("coweight has wrong dimension");
  for (const auto& a : d.positive_roots()) {
    Int p = dot(lambda, a);
    if (p < 0 || p > ell)
      throw ValidationError("facet_stabilizer: " + to_string(lambda) + " is not in the box fundamental domain");
  }
  FacetDescriptor f;
  f.base_point = QPoint::integral(negate(lambda));
  f.level = ell;
  for (int i = 0; i < static_cast<int>(d.num_positive_roots()); ++i) {
    for (Int m : {Int{0}, Int{1}}) {
      AffineRoot ar{i, m};
      if (eval_affine_root(d, ar, f.base_point, ell) == 0) f.vanishing.push_back(ar);
    }
  }
  const auto& gens = g.simple_reflections();
  for (int s = 0; s < gens.size(); ++s) {
    auto [ri, m] = gens.affine_roots[s];
    if (eval_affine_root(d, AffineRoot{ri, m}, f.base_point, ell) == 0) f.stabilizer_generators.push_back(s);
  }
  f.stabilizer_order = g.parabolic_order(f.stabilizer_generators);
  std::vector<int> finite(gens.num_finite);
  for (int s = 0; s < gens.num_finite; ++s) finite[s] = s;
  if (f.stabilizer_generators.empty())
    f.kind = FacetKind::full;
  else if (f.stabilizer_generators == finite)
    f.kind = FacetKind::thin;
  else
    f.kind = FacetKind::partial;
  return f;
}

}  // namespace tiltkit
