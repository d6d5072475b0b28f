#include "tiltkit/hecke.hpp"

#include <algorithm>
#include <mutex>
#include <thread>

#include "tiltkit/error.hpp"

namespace tiltkit {

KazhdanLusztigBasis::KazhdanLusztigBasis(std::shared_ptr<const AffineWeylGroup> group, HeckeModuleKind kind,
                                         unsigned threads)
    : group_(std::move(group)),
      kind_(kind),
      threads_(std::max(1u, threads)),
      table_(*group_, kind == HeckeModuleKind::antispherical) {}

int KazhdanLusztigBasis::computed_length() const {
  std::shared_lock lock(mutex_);
  return filled_;
}

void KazhdanLusztigBasis::ensure(int max_len) {
  {
    std::shared_lock lock(mutex_);
    if (filled_ >= max_len) return;
  }
  std::unique_lock lock(mutex_);
  ensure_locked(max_len);
}

void KazhdanLusztigBasis::ensure_locked(int max_len) {
  if (filled_ >= max_len) return;
  // One extra layer so that ascents out of the top layer are classified.
  table_.extend_to(max_len + 1);
  columns_.resize(table_.size());
  for (int len = filled_ + 1; len <= max_len; ++len) {
    const auto& layer = table_.layer(len);
    const unsigned workers = layer.size() >= 64 ? threads_ : 1u;
    if (workers == 1) {
      for (int w : layer) columns_[w] = compute_column(w);
    } else {
      std::vector<std::thread> pool;
      for (unsigned t = 0; t < workers; ++t)
        pool.emplace_back([&, t] {
          for (std::size_t i = t; i < layer.size(); i += workers) columns_[layer[i]] = compute_column(layer[i]);
        });
      for (auto& th : pool) th.join();
    }
    for (int w : layer) check_column(w, columns_[w]);
    filled_ = len;
  }
}

int KazhdanLusztigBasis::index(const AffineWeylElt& w) {
  group_->validate(w);
  if (kind_ == HeckeModuleKind::antispherical && !group_->is_min_in_Wf(w))
    throw ValidationError("element is not minimal in its coset W_f w");
  ensure(group_->length(w));
  std::shared_lock lock(mutex_);
  int i = table_.index_of(w);
  if (i == ElementTable::kNone) throw std::logic_error("element missing from KL table");
  return i;
}

AffineWeylElt KazhdanLusztigBasis::element(int index) const {
  std::shared_lock lock(mutex_);
  return table_.element(index);
}

int KazhdanLusztigBasis::length(int index) const {
  std::shared_lock lock(mutex_);
  return table_.length(index);
}

HeckeVector KazhdanLusztigBasis::mult_locked(const HeckeVector& x, int s) const {
  HeckeVector out;
  auto accumulate = [&out](int key, const LaurentPoly& p) {
    if (p.is_zero()) return;
    LaurentPoly& slot = out[key];
    slot += p;
    if (slot.is_zero()) out.erase(key);
  };
  for (const auto& [y, p] : x) {
    int ys = table_.right(y, s);
    if (table_.ascent(y, s)) {
      if (ys == ElementTable::kNone) {
        if (kind_ == HeckeModuleKind::antispherical) continue;  // ys not in ^fW: N_y underline H_s = 0
        throw std::logic_error("KL table too short for right multiplication");
      }
      accumulate(ys, p);
      accumulate(y, p.shifted(1));
    } else {
      accumulate(ys, p);
      accumulate(y, p.shifted(-1));
    }
  }
  return out;
}

HeckeVector KazhdanLusztigBasis::mult_underline_Hs(const HeckeVector& x, int s) {
  if (s < 0 || s >= group_->num_generators()) throw ValidationError("generator index out of range");
  int top = 0;
  {
    std::shared_lock lock(mutex_);
    for (const auto& [y, p] : x) {
      if (y < 0 || static_cast<std::size_t>(y) >= table_.size()) throw ValidationError("vector index out of range");
      top = std::max(top, table_.length(y));
    }
  }
  ensure(top);
  std::shared_lock lock(mutex_);
  return mult_locked(x, s);
}

HeckeVector KazhdanLusztigBasis::compute_column(int w) const {
  if (table_.length(w) == 0) return HeckeVector{{w, LaurentPoly(1)}};
  int s = 0;
  while (table_.ascent(w, s)) ++s;  // lowest-index right descent
  const int x = table_.right(w, s);
  HeckeVector c = mult_locked(columns_[x], s);
  // Remove constant terms below the diagonal, from the top down.
  std::vector<int> support;
  for (const auto& [y, p] : c)
    if (y != w) support.push_back(y);
  std::sort(support.begin(), support.end(),
            [this](int a, int b) { return table_.length(a) != table_.length(b) ? table_.length(a) > table_.length(b) : a < b; });
  for (int y : support) {
    auto it = c.find(y);
    if (it == c.end()) continue;
    Int mu = it->second.constant_term();
    if (mu == 0) continue;
    for (const auto& [z, q] : columns_[y]) {
      LaurentPoly& slot = c[z];
      slot -= q * LaurentPoly(mu);
      if (slot.is_zero()) c.erase(z);
    }
  }
  return c;
}

void KazhdanLusztigBasis::check_column(int w, const HeckeVector& col) const {
  const int lw = table_.length(w);
  for (const auto& [y, p] : col) {
    if (y == w) {
      if (!(p == LaurentPoly(1))) throw std::logic_error("KL basis: diagonal coefficient is not 1");
      continue;
    }
    const int ly = table_.length(y);
    if (ly >= lw || !p.has_nonnegative_coefficients() || p.min_degree() < 1 || p.max_degree() > lw - ly)
      throw std::logic_error("KL basis: coefficient " + p.to_string() + " violates positivity or degree bounds");
  }
}

HeckeVector KazhdanLusztigBasis::basis_element(const AffineWeylElt& w) { return basis_element(index(w)); }

HeckeVector KazhdanLusztigBasis::basis_element(int idx) {
  int len = 0;
  {
    std::shared_lock lock(mutex_);
    if (idx < 0 || static_cast<std::size_t>(idx) >= table_.size()) throw ValidationError("basis index out of range");
    len = table_.length(idx);
  }
  ensure(len);
  std::shared_lock lock(mutex_);
  return columns_[idx];
}

LaurentPoly KazhdanLusztigBasis::polynomial(const AffineWeylElt& y, const AffineWeylElt& w) {
  const int wi = index(w);
  group_->validate(y);
  if (kind_ == HeckeModuleKind::antispherical && !group_->is_min_in_Wf(y))
    throw ValidationError("element is not minimal in its coset W_f y");
  std::shared_lock lock(mutex_);
  const int yi = table_.index_of(y);
  if (yi == ElementTable::kNone) return LaurentPoly();
  auto it = columns_[wi].find(yi);
  return it == columns_[wi].end() ? LaurentPoly() : it->second;
}

std::vector<std::pair<AffineWeylElt, LaurentPoly>> KazhdanLusztigBasis::expand(const HeckeVector& x) const {
  std::shared_lock lock(mutex_);
  std::vector<std::pair<AffineWeylElt, LaurentPoly>> out;
  for (const auto& [i, p] : x) out.emplace_back(table_.element(i), p);
  return out;
}

}  // namespace tiltkit
