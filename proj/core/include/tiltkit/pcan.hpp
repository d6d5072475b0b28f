#pragma once

// l-canonical (p-canonical) basis data for the antispherical module.
//
// The l-Kazhdan-Lusztig polynomials are not computed here: they are read from
// a text table, or replaced by the ordinary antispherical KL polynomials in
// kl_fallback mode (correct for large l and low alcoves; no bound is claimed).
//
// Table format (UTF-8, one record per line):
//
//   #ell=<l> datum=<16 hex digits>
//   <w word> | <y word> | c0 c1 c2 ...
//
// where the record gives  ^l n_{y,w} = c0 + c1 v + c2 v^2 + ...  and words are
// space-separated generator indices multiplied left to right ("e" for the
// identity). Records with y != w that are absent from a listed column are zero.

#include <filesystem>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "tiltkit/hecke.hpp"
#include "tiltkit/linkage.hpp"

namespace tiltkit {

struct PCanEntry {
  AffineWeylElt w;
  AffineWeylElt y;
  LaurentPoly poly;
};

struct PCanFile {
  Int ell = 0;
  std::string datum_hash;
  std::vector<PCanEntry> entries;
};

/// Parse the text format; throws DataFileError on malformed input.
PCanFile parse_pcan_file(std::istream& in, const AffineWeylGroup& group);
void write_pcan_file(std::ostream& out, const PCanFile& file, const AffineWeylGroup& group);

/// The ordinary antispherical KL polynomials of all w in ^fW with l(w) <= max_len,
/// as a table in the file format (columns by length, entries by length descending).
PCanFile kl_table_as_file(KazhdanLusztigBasis& kl, Int ell, int max_len);

class PCanTable {
 public:
  enum class Mode { kl_fallback, file };

  /// kl_fallback: ^l n_{y,w} := n_{y,w}.
  static PCanTable kl_fallback(const LinkageContext& ctx, std::shared_ptr<KazhdanLusztigBasis> kl);
  /// Validate a parsed file against the context; throws DataFileError.
  static PCanTable from_file(const LinkageContext& ctx, PCanFile file);
  static PCanTable load(const LinkageContext& ctx, const std::filesystem::path& path);

  Mode mode() const { return mode_; }
  Int ell() const { return ell_; }
  const std::string& datum_hash() const { return datum_hash_; }

  /// ^l n_{y,w}. In file mode the column of w must be present in the table.
  LaurentPoly polynomial(const AffineWeylElt& y, const AffineWeylElt& w) const;
  /// Nonzero entries of the column of w.
  std::vector<std::pair<AffineWeylElt, LaurentPoly>> column(const AffineWeylElt& w) const;

  const PCanFile* file() const { return file_ ? &*file_ : nullptr; }

 private:
  PCanTable() = default;

  const AffineWeylGroup* group_ = nullptr;
  Mode mode_ = Mode::kl_fallback;
  Int ell_ = 0;
  std::string datum_hash_;
  std::shared_ptr<KazhdanLusztigBasis> kl_;
  std::optional<PCanFile> file_;
  // w -> (y -> entry index)
  std::unordered_map<AffineWeylElt, std::unordered_map<AffineWeylElt, std::size_t, AffineWeylEltHash>,
                     AffineWeylEltHash>
      columns_;
};

std::string_view to_string(PCanTable::Mode m);

}  // namespace tiltkit
