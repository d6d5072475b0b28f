#include "tiltkit/charformula.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>

#include "tiltkit/error.hpp"

namespace tiltkit {

void CharacterExpr::add(const IntVec& mu, Int coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms.try_emplace(mu, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms.erase(it);
  }
}

Int CharacterExpr::coefficient(const IntVec& mu) const {
  auto it = terms.find(mu);
  return it == terms.end() ? 0 : it->second;
}

std::string_view to_string(CharacterExpr::Basis b) {
  switch (b) {
    case CharacterExpr::Basis::nabla: return "N";
    case CharacterExpr::Basis::simple: return "L";
    case CharacterExpr::Basis::tilting: return "T";
  }
  return "?";
}

CharacterExpr::Basis parse_basis(std::string_view s) {
  if (s == "N") return CharacterExpr::Basis::nabla;
  if (s == "L") return CharacterExpr::Basis::simple;
  if (s == "T") return CharacterExpr::Basis::tilting;
  throw ValidationError("unknown character basis '" + std::string(s) + "'");
}

CharacterExpr tilting_character(const LinkageContext& ctx, const Block& block, const AffineWeylElt& w,
                                const PCanTable& table) {
  const auto& g = ctx.group();
  const auto& d = ctx.datum();
  g.validate(w);
  if (!ctx.in_block_coset_set(block, w))
    throw ValidationError("w must be maximal in w W_lambda and minimal in W_f w");
  if (table.ell() != ctx.ell() || table.datum_hash() != d.hash())
    throw DataFileError("pcan table does not belong to this root datum and ell");

  CharacterExpr expr;
  for (const auto& [y, p] : table.column(w)) {
    if (!ctx.in_block_coset_set(block, y)) continue;
    if (!g.bruhat_leq(y, w)) throw std::logic_error("tilting_character: table entry with y not <= w");
    IntVec mu = g.act(y, block.representative, ctx.ell(), ActionMode::dot);
    if (!d.is_dominant(mu)) throw std::logic_error("tilting_character: non-dominant weight " + to_string(mu));
    expr.add(mu, p.eval_at_one());
  }
  IntVec top = g.act(w, block.representative, ctx.ell(), ActionMode::dot);
  if (expr.coefficient(top) != 1) throw std::logic_error("tilting_character: leading coefficient is not 1");
  return expr;
}

Character expand_to_weights(const RootDatum& d, const CharacterExpr& expr) {
  if (expr.basis != CharacterExpr::Basis::nabla) throw ValidationError("expand_to_weights needs the nabla basis");
  Character out;
  for (const auto& [mu, c] : expr.terms) out += weyl_character(d, mu).scaled(c);
  std::erase_if(out.weight_mults, [](const auto& kv) { return kv.second == 0; });
  return out;
}

Int expr_dimension(const RootDatum& d, const CharacterExpr& expr) {
  Int total = 0;
  for (const auto& [mu, c] : expr.terms) total += c * static_cast<Int>(weyl_dim(d, mu));
  return total;
}

bool YRegion::contains(const AffineWeylElt& w) const { return position(w).has_value(); }

std::optional<std::size_t> YRegion::position(const AffineWeylElt& w) const {
  auto it = std::find(members.begin(), members.end(), w);
  if (it == members.end()) return std::nullopt;
  return static_cast<std::size_t>(it - members.begin());
}

namespace {

// 2 <w []ell rho^vee, alpha_0>, computed as <w []2ell 2rho^vee, alpha_0>.
Int doubled_witness(const AffineWeylGroup& g, const AffineWeylElt& w, Int ell) {
  const auto& d = g.datum();
  return dot(g.act(w, d.two_rho_vee(), 2 * ell, ActionMode::box), d.highest_root());
}

YRegion region_header(const LinkageContext& ctx) {
  const auto& d = ctx.datum();
  if (!d.is_irreducible() || !d.is_semisimple()) throw ValidationError("the Y region needs a quasi-simple root datum");
  YRegion r;
  r.ell = ctx.ell();
  r.coxeter_number = d.coxeter_number();
  if (r.ell < 2 * r.coxeter_number - 2)
    r.warning = "ell = " + std::to_string(r.ell) + " is below 2h - 2 = " + std::to_string(2 * r.coxeter_number - 2);
  return r;
}

}  // namespace

YRegion y_region(const LinkageContext& ctx, int max_length) {
  YRegion r = region_header(ctx);
  const auto& g = ctx.group();
  const Int bound = 2 * ctx.ell() * (r.coxeter_number - 1);
  ElementTable table(g, true);
  int len = 0;
  for (;; ++len) {
    if (len > max_length) throw std::logic_error("y_region: region not closed within the length bound");
    table.extend_to(len);
    bool any = false;
    for (int i : table.layer(len)) {
      Int two = doubled_witness(g, table.element(i), ctx.ell());
      if (two < bound) {
        r.members.push_back(table.element(i));
        r.witnesses.emplace_back(two, 2);
        any = true;
      }
    }
    if (!any) break;
  }
  // Ideal check against every element of ^fW that could lie below a member.
  for (const auto& y : g.enumerate_fW(len))
    if (!r.contains(y))
      for (const auto& w : r.members)
        if (g.bruhat_leq(y, w)) {
          // only guaranteed to be an ideal once ell >= 2h - 2
          if (r.warning)
            throw ValidationError("the Y region at ell = " + std::to_string(ctx.ell()) +
                                  " is not a Bruhat ideal; " + *r.warning);
          throw std::logic_error("y_region: member list is not a Bruhat ideal");
        }
  return r;
}

YRegion truncated_fW_region(const LinkageContext& ctx, int max_length) {
  YRegion r = region_header(ctx);
  r.truncated = true;
  for (auto& w : ctx.group().enumerate_fW(max_length)) {
    r.witnesses.emplace_back(doubled_witness(ctx.group(), w, ctx.ell()), 2);
    r.members.push_back(std::move(w));
  }
  return r;
}

HatMap::HatMap(std::vector<std::pair<AffineWeylElt, AffineWeylElt>> pairs) : pairs_(std::move(pairs)) {
  std::unordered_map<AffineWeylElt, std::size_t, AffineWeylEltHash> images;
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    if (!index_.emplace(pairs_[i].first, i).second) throw DataFileError("hat map: duplicate source element");
    if (!images.emplace(pairs_[i].second, i).second) throw DataFileError("hat map is not injective");
  }
}

const AffineWeylElt* HatMap::find(const AffineWeylElt& y) const {
  auto it = index_.find(y);
  return it == index_.end() ? nullptr : &pairs_[it->second].second;
}

void HatMap::validate_on(const AffineWeylGroup& g, const YRegion& region) const {
  for (const auto& y : region.members) {
    const AffineWeylElt* yh = find(y);
    if (!yh) throw DataFileError("hat map is not defined on " + word_to_string(g.reduced_word(y)));
    if (!g.is_min_in_Wf(*yh)) throw DataFileError("hat map sends an element outside ^fW");
  }
}

HatMap parse_hat_file(std::istream& in, const AffineWeylGroup& g) {
  std::vector<std::pair<AffineWeylElt, AffineWeylElt>> pairs;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos || line[0] == '#') continue;
    auto bar = line.find('|');
    if (bar == std::string::npos || line.find('|', bar + 1) != std::string::npos)
      throw DataFileError("hat file line " + std::to_string(lineno) + ": expected 'y | yhat'");
    try {
      pairs.emplace_back(g.from_word(parse_word(line.substr(0, bar))), g.from_word(parse_word(line.substr(bar + 1))));
    } catch (const ValidationError& e) {
      throw DataFileError("hat file line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return HatMap(std::move(pairs));
}

HatMap load_hat_file(const std::string& path, const AffineWeylGroup& g) {
  std::ifstream in(path);
  if (!in) throw DataFileError("cannot open hat file " + path);
  return parse_hat_file(in, g);
}

void write_hat_file(std::ostream& out, const HatMap& hat, const AffineWeylGroup& g) {
  for (const auto& [y, yh] : hat.pairs())
    out << word_to_string(g.reduced_word(y)) << " | " << word_to_string(g.reduced_word(yh)) << '\n';
}

namespace {

IntVec dominant_dot_zero(const LinkageContext& ctx, const AffineWeylElt& y) {
  IntVec zero(ctx.datum().rank(), 0);
  IntVec mu = ctx.group().act(y, zero, ctx.ell(), ActionMode::dot);
  if (!ctx.datum().is_dominant(mu))
    throw ValidationError("y .ell 0 = " + to_string(mu) + " is not dominant; is 0 in C_ell?");
  return mu;
}

}  // namespace

CharacterExpr nabla_in_simples(const LinkageContext& ctx, const YRegion& region, const AffineWeylElt& w,
                               const PCanTable& table, const HatMap& hat) {
  if (!region.contains(w)) throw ValidationError("w is not in the Y region");
  hat.validate_on(ctx.group(), region);
  CharacterExpr expr;
  expr.basis = CharacterExpr::Basis::simple;
  for (const auto& y : region.members) {
    Int c = table.polynomial(w, *hat.find(y)).eval_at_one();
    if (c != 0) expr.add(dominant_dot_zero(ctx, y), c);
  }
  return expr;
}

CharacterExpr simples_in_nablas_kl(const LinkageContext& ctx, const YRegion& region, const AffineWeylElt& w,
                                   KazhdanLusztigBasis& regular) {
  if (regular.kind() != HeckeModuleKind::regular) throw ValidationError("simples_in_nablas_kl needs the regular KL basis");
  if (!region.contains(w)) throw ValidationError("w is not in the Y region");
  const auto& g = ctx.group();
  const int lw = g.length(w);
  CharacterExpr expr;
  for (const auto& y : region.members) {
    Int c = regular.polynomial(y, w).eval_at_one();
    if (c == 0) continue;
    expr.add(dominant_dot_zero(ctx, y), (lw + g.length(y)) % 2 == 0 ? c : -c);
  }
  return expr;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  IntMatrix c(n, std::vector<Int>(m, 0));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != k) throw ValidationError("matrix dimensions do not match");
    for (std::size_t l = 0; l < k; ++l)
      if (a[i][l] != 0)
        for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][l] * b[l][j];
  }
  return c;
}

IntMatrix invert_unitriangular(const IntMatrix& m, const std::vector<int>& order) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw ValidationError("invert_unitriangular: matrix is not square");
  if (order.size() != n) throw ValidationError("invert_unitriangular: order has the wrong size");
  std::vector<char> seen(n, 0);
  for (int i : order) {
    if (i < 0 || static_cast<std::size_t>(i) >= n || seen[i]) throw ValidationError("invert_unitriangular: order is not a permutation");
    seen[i] = 1;
  }
  IntMatrix a(n, std::vector<Int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[order[i]][order[j]];

  bool lower = true, upper = true;
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i][i] != 1) throw ValidationError("invert_unitriangular: diagonal entry is not 1");
    for (std::size_t j = 0; j < n; ++j) {
      if (j > i && a[i][j] != 0) lower = false;
      if (j < i && a[i][j] != 0) upper = false;
    }
  }
  if (!lower && !upper) throw ValidationError("invert_unitriangular: matrix is not unitriangular in the given order");
  if (!lower)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < i; ++j) std::swap(a[i][j], a[j][i]);

  IntMatrix x(n, std::vector<Int>(n, 0));
  for (std::size_t j = 0; j < n; ++j) {
    x[j][j] = 1;
    for (std::size_t i = j + 1; i < n; ++i) {
      Int s = 0;
      for (std::size_t k = j; k < i; ++k) s += a[i][k] * x[k][j];
      x[i][j] = -s;
    }
  }
  if (!lower)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < i; ++j) std::swap(x[i][j], x[j][i]);

  IntMatrix out(n, std::vector<Int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[order[i]][order[j]] = x[i][j];
  return out;
}

}  // namespace tiltkit
