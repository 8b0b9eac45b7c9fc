#ifndef CANTOR_CATALOG_HPP
#define CANTOR_CATALOG_HPP

#include <string>
#include <vector>

#include "cantor/enumerate.hpp"
#include "cantor/ordering.hpp"
#include "cantor/realroots.hpp"

namespace cantor {

// One catalog row: the c-th real algebraic number in height order.
struct CatalogEntry {
  long long c = 0;
  int n = 0;  // height
  int k = 0;  // degree of the minimal polynomial
  CompositionLayout layout;
  Signature sig;
  Polynomial poly;      // canonical minimal polynomial
  AlgebraicReal value;  // the root itself
  std::string decimal;  // sign + 10 truncated fractional digits
  OrderKey key;
};

// Counts per height: row n carries degrees k = 1..n-1 (just k = 1 for n = 1).
struct PhiRow {
  int n = 0;
  std::vector<long long> counts;
  long long total() const;
};

struct PhiTable {
  std::vector<PhiRow> rows;
  std::vector<long long> totals() const;
};

// The complete ordered catalog for heights 1..max_height. `jobs` >= 1 runs
// per-(n, k) tasks concurrently; the result is identical for every value.
std::vector<CatalogEntry> build_catalog(int max_height, int jobs = 1);

PhiTable phi_table(const std::vector<CatalogEntry>& entries, int max_height);

// Value column text: exact reduced fraction for degree 1 ("1/2", "-5/2",
// "0"); sign plus `digits` truncated fractional digits otherwise
// ("-1.3247179572").
std::string value_string(const CatalogEntry& e, int digits);

// digits = fractional digits of the decimal rendering. All emitters use LF
// line endings; JSON adds exact isolating-interval endpoints per entry.
std::string emit_csv(const std::vector<CatalogEntry>& entries, int digits);
std::string emit_json(const std::vector<CatalogEntry>& entries, int digits);
std::string emit_text(const std::vector<CatalogEntry>& entries, int digits);

std::string format_phi(const PhiTable& table);

struct VerifyOutcome {
  long long rows_checked = 0;
  std::vector<std::string> mismatches;
  bool ok() const { return mismatches.empty(); }
};

// Compare the catalog against a reference CSV with columns
// c,n,k,composition,signs,value[,...], optionally patched by an errata CSV
// with columns c,field,table_value,corrected_value,note ('#' comments and
// blank lines allowed). Throws std::runtime_error with a line number on
// malformed input.
VerifyOutcome verify_golden(const std::vector<CatalogEntry>& entries,
                            const std::string& golden_path,
                            const std::string& errata_path = std::string());

}  // namespace cantor

#endif  // CANTOR_CATALOG_HPP
