#include "tiltkit/pcan.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "tiltkit/error.hpp"

namespace tiltkit {

std::string_view to_string(PCanTable::Mode m) { return m == PCanTable::Mode::file ? "file" : "kl_fallback"; }

namespace {

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

[[noreturn]] void fail(std::size_t line, const std::string& msg) {
  throw DataFileError("pcan table line " + std::to_string(line) + ": " + msg);
}

void parse_header(const std::string& line, std::size_t lineno, PCanFile& f) {
  std::istringstream is(line.substr(1));
  std::string tok;
  bool have_ell = false, have_datum = false;
  while (is >> tok) {
    if (tok.rfind("ell=", 0) == 0) {
      try {
        std::size_t pos = 0;
        f.ell = std::stoll(tok.substr(4), &pos);
        if (pos != tok.size() - 4) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        fail(lineno, "malformed ell in header");
      }
      have_ell = true;
    } else if (tok.rfind("datum=", 0) == 0) {
      f.datum_hash = tok.substr(6);
      have_datum = true;
    } else {
      fail(lineno, "unknown header field '" + tok + "'");
    }
  }
  if (!have_ell || !have_datum) fail(lineno, "header must be '#ell=<l> datum=<hash>'");
}

}  // namespace

PCanFile parse_pcan_file(std::istream& in, const AffineWeylGroup& group) {
  PCanFile f;
  std::string line;
  std::size_t lineno = 0;
  bool header = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    if (!header) {
      if (line[0] != '#') fail(lineno, "missing '#ell=... datum=...' header");
      parse_header(line, lineno, f);
      header = true;
      continue;
    }
    if (trim(line)[0] == '#') continue;
    std::vector<std::string> fields;
    std::size_t start = 0;
    for (std::size_t bar; (bar = line.find('|', start)) != std::string::npos; start = bar + 1)
      fields.push_back(trim(std::string_view(line).substr(start, bar - start)));
    fields.push_back(trim(std::string_view(line).substr(start)));
    if (fields.size() != 3) fail(lineno, "expected 'w | y | coefficients'");
    PCanEntry e;
    try {
      e.w = group.from_word(parse_word(fields[0]));
      e.y = group.from_word(parse_word(fields[1]));
    } catch (const ValidationError& err) {
      fail(lineno, err.what());
    }
    std::istringstream cs(fields[2]);
    std::vector<Int> coeffs;
    std::string tok;
    while (cs >> tok) {
      try {
        std::size_t pos = 0;
        coeffs.push_back(std::stoll(tok, &pos));
        if (pos != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        fail(lineno, "malformed coefficient '" + tok + "'");
      }
    }
    if (coeffs.empty()) fail(lineno, "no coefficients");
    e.poly = LaurentPoly::from_coefficients(coeffs);
    f.entries.push_back(std::move(e));
  }
  if (!header) throw DataFileError("pcan table: empty file");
  return f;
}

void write_pcan_file(std::ostream& out, const PCanFile& file, const AffineWeylGroup& group) {
  out << "#ell=" << file.ell << " datum=" << file.datum_hash << '\n';
  for (const auto& e : file.entries) {
    out << word_to_string(group.reduced_word(e.w)) << " | " << word_to_string(group.reduced_word(e.y)) << " |";
    auto c = e.poly.coefficients();
    if (c.empty()) c.push_back(0);
    for (Int x : c) out << ' ' << x;
    out << '\n';
  }
}

PCanFile kl_table_as_file(KazhdanLusztigBasis& kl, Int ell, int max_len) {
  if (kl.kind() != HeckeModuleKind::antispherical) throw ValidationError("kl table export needs the antispherical basis");
  PCanFile f;
  f.ell = ell;
  f.datum_hash = kl.group().datum().hash();
  for (const auto& w : kl.group().enumerate_fW(max_len)) {
    auto col = kl.expand(kl.basis_element(w));
    std::stable_sort(col.begin(), col.end(), [&](const auto& a, const auto& b) {
      return kl.group().length(a.first) > kl.group().length(b.first);
    });
    for (auto& [y, p] : col) f.entries.push_back({w, std::move(y), std::move(p)});
  }
  return f;
}

PCanTable PCanTable::kl_fallback(const LinkageContext& ctx, std::shared_ptr<KazhdanLusztigBasis> kl) {
  if (!kl || kl->kind() != HeckeModuleKind::antispherical)
    throw ValidationError("kl_fallback needs an antispherical KL basis");
  if (!(kl->group().datum() == ctx.datum())) throw ValidationError("KL basis and context use different root data");
  PCanTable t;
  t.group_ = &kl->group();
  t.mode_ = Mode::kl_fallback;
  t.ell_ = ctx.ell();
  t.datum_hash_ = ctx.datum().hash();
  t.kl_ = std::move(kl);
  return t;
}

PCanTable PCanTable::from_file(const LinkageContext& ctx, PCanFile file) {
  const auto& g = ctx.group();
  if (file.ell != ctx.ell())
    throw DataFileError("pcan table is for ell=" + std::to_string(file.ell) + ", expected " + std::to_string(ctx.ell()));
  if (file.datum_hash != ctx.datum().hash())
    throw DataFileError("pcan table datum hash " + file.datum_hash + " does not match " + ctx.datum().hash());
  PCanTable t;
  t.group_ = &g;
  t.mode_ = Mode::file;
  t.ell_ = file.ell;
  t.datum_hash_ = file.datum_hash;
  for (std::size_t i = 0; i < file.entries.size(); ++i) {
    const auto& e = file.entries[i];
    const std::string where = "pcan entry " + std::to_string(i + 1) + ": ";
    if (!g.is_min_in_Wf(e.w) || !g.is_min_in_Wf(e.y))
      throw DataFileError(where + "indices must be minimal in their W_f-coset");
    if (!e.poly.has_nonnegative_coefficients()) throw DataFileError(where + "negative coefficient");
    if (!e.poly.is_zero() && !g.bruhat_leq(e.y, e.w)) throw DataFileError(where + "nonzero entry with y not <= w");
    if (e.y == e.w && !(e.poly == LaurentPoly(1))) throw DataFileError(where + "violates ^l n_{w,w} = 1");
    if (!t.columns_[e.w].emplace(e.y, i).second) throw DataFileError(where + "duplicate entry");
  }
  for (const auto& [w, col] : t.columns_)
    if (!col.count(w)) throw DataFileError("pcan table: column without diagonal entry ^l n_{w,w} = 1");
  t.file_ = std::move(file);
  return t;
}

PCanTable PCanTable::load(const LinkageContext& ctx, const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataFileError("cannot open pcan table " + path.string());
  return from_file(ctx, parse_pcan_file(in, ctx.group()));
}

LaurentPoly PCanTable::polynomial(const AffineWeylElt& y, const AffineWeylElt& w) const {
  if (mode_ == Mode::kl_fallback) return kl_->polynomial(y, w);
  auto col = columns_.find(w);
  if (col == columns_.end())
    throw DataFileError("pcan table has no column for w = " + word_to_string(group_->reduced_word(w)));
  auto it = col->second.find(y);
  return it == col->second.end() ? LaurentPoly() : file_->entries[it->second].poly;
}

std::vector<std::pair<AffineWeylElt, LaurentPoly>> PCanTable::column(const AffineWeylElt& w) const {
  if (mode_ == Mode::kl_fallback) return kl_->expand(kl_->basis_element(w));
  auto col = columns_.find(w);
  if (col == columns_.end())
    throw DataFileError("pcan table has no column for w = " + word_to_string(group_->reduced_word(w)));
  std::vector<std::pair<AffineWeylElt, LaurentPoly>> out;
  std::vector<std::size_t> idx;
  for (const auto& [y, i] : col->second) idx.push_back(i);
  std::sort(idx.begin(), idx.end());
  for (std::size_t i : idx)
    if (!file_->entries[i].poly.is_zero()) out.emplace_back(file_->entries[i].y, file_->entries[i].poly);
  return out;
}

}  // namespace tiltkit
