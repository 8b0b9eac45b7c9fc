#include "cantor/catalog.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <future>
#include <iomanip>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "cantor/irreducibility.hpp"

namespace cantor {

namespace {

Int pow10_int(int d) {
  Int p = 1;
  for (int i = 0; i < d; ++i) p *= 10;
  return p;
}

std::string rat_string(const Rat& r) {
  Int num = numerator(r), den = denominator(r);
  std::string s = num.str();
  if (den != 1) s += "/" + den.str();
  return s;
}

// All entries of one (n, k) block, catalog-ordered, with rank keys and the
// 10-digit decimal filled in. c is assigned by the caller.
std::vector<CatalogEntry> entries_for(int n, int k) {
  std::vector<CatalogEntry> out;
  const Int K = Int(n) - k + 1;
  if (K < 1) return out;
  const auto partitions = partition_order(K);
  for (size_t pi = 0; pi < partitions.size(); ++pi) {
    const auto& part = partitions[pi];
    if (static_cast<int>(part.size()) > k + 1) continue;
    const auto comps = composition_order(part);
    for (size_t ci = 0; ci < comps.size(); ++ci) {
      const auto placements = zero_placements(comps[ci], n, k);
      for (size_t zi = 0; zi < placements.size(); ++zi) {
        const auto& layout = placements[zi];
        std::vector<SurvivorBlock> survivors;
        for (const auto& sig : signatures_for(layout)) {
          Polynomial p = signed_polynomial(layout, sig);
          auto [pos, neg] = descartes_bound(p);
          if (pos == 0 && neg == 0 && p.constant() != 0) continue;
          if (!is_irreducible(p).irreducible) continue;
          auto roots = isolate_roots(p);
          if (roots.empty()) continue;
          survivors.push_back(SurvivorBlock{sig, std::move(p), std::move(roots)});
        }
        if (survivors.empty()) continue;
        int sig_rank = -1;
        int root_rank = 0;
        Signature last_sig;
        for (auto& [sig, val] : signature_order(layout, std::move(survivors))) {
          if (sig_rank < 0 || !(sig == last_sig)) {
            ++sig_rank;
            last_sig = sig;
            root_rank = 0;
          } else {
            ++root_rank;
          }
          CatalogEntry e;
          e.n = n;
          e.k = k;
          e.layout = layout;
          e.sig = sig;
          e.poly = val.minpoly;
          e.value = std::move(val);
          e.decimal = decimal_truncated(e.value, 10);
          e.key = OrderKey{n,
                           k,
                           static_cast<int>(pi),
                           static_cast<int>(ci),
                           static_cast<int>(zi),
                           sig_rank,
                           root_rank};
          out.push_back(std::move(e));
        }
      }
    }
  }
  return out;
}

}  // namespace

long long PhiRow::total() const {
  return std::accumulate(counts.begin(), counts.end(), 0LL);
}

std::vector<long long> PhiTable::totals() const {
  std::vector<long long> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.push_back(r.total());
  return out;
}

std::vector<CatalogEntry> build_catalog(int max_height, int jobs) {
  if (max_height < 1) throw std::domain_error("build_catalog: max_height >= 1 required");
  if (jobs < 1) throw std::domain_error("build_catalog: jobs >= 1 required");
  std::vector<std::pair<int, int>> tasks;
  for (int n = 1; n <= max_height; ++n)
    for (int k = 1; k <= (n == 1 ? 1 : n - 1); ++k) tasks.emplace_back(n, k);

  std::vector<std::vector<CatalogEntry>> parts(tasks.size());
  if (jobs == 1) {
    for (size_t i = 0; i < tasks.size(); ++i)
      parts[i] = entries_for(tasks[i].first, tasks[i].second);
  } else {
    // Waves of at most `jobs` concurrent (n, k) tasks; results land in task
    // order, so the merge (and everything downstream) is schedule-independent.
    size_t next = 0;
    while (next < tasks.size()) {
      const size_t batch = std::min(static_cast<size_t>(jobs), tasks.size() - next);
      std::vector<std::future<std::vector<CatalogEntry>>> futs;
      futs.reserve(batch);
      for (size_t j = 0; j < batch; ++j) {
        const auto [n, k] = tasks[next + j];
        futs.push_back(std::async(std::launch::async, [n, k] { return entries_for(n, k); }));
      }
      for (size_t j = 0; j < batch; ++j) parts[next + j] = futs[j].get();
      next += batch;
    }
  }

  std::vector<CatalogEntry> out;
  for (auto& p : parts)
    for (auto& e : p) out.push_back(std::move(e));
  assign_indices(out);
  return out;
}

PhiTable phi_table(const std::vector<CatalogEntry>& entries, int max_height) {
  PhiTable t;
  for (int n = 1; n <= max_height; ++n) {
    PhiRow row;
    row.n = n;
    row.counts.assign(n == 1 ? 1 : static_cast<size_t>(n) - 1, 0);
    t.rows.push_back(std::move(row));
  }
  for (const auto& e : entries) {
    if (e.n < 1 || e.n > max_height) throw std::logic_error("phi_table: entry height out of range");
    auto& row = t.rows[static_cast<size_t>(e.n) - 1];
    if (e.k < 1 || static_cast<size_t>(e.k) > row.counts.size())
      throw std::logic_error("phi_table: entry degree out of range");
    ++row.counts[static_cast<size_t>(e.k) - 1];
  }
  return t;
}

std::string value_string(const CatalogEntry& e, int digits) {
  if (e.k == 1) return rat_string(e.value.isol.lo);
  if (digits == 10) return e.decimal;
  return decimal_truncated(e.value, digits);
}

std::string emit_csv(const std::vector<CatalogEntry>& entries, int digits) {
  std::ostringstream os;
  os << "c,n,k,composition,signs,value,polynomial\n";
  for (const auto& e : entries) {
    os << e.c << ',' << e.n << ',' << e.k << ",\"" << e.layout.display() << "\",\""
       << e.sig.display() << "\"," << value_string(e, digits) << ",\"" << to_string(e.poly)
       << "\"\n";
  }
  return os.str();
}

std::string emit_json(const std::vector<CatalogEntry>& entries, int digits) {
  const Rat eps(1, 2 * pow10_int(digits + 1));
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& e : entries) {
    AlgebraicReal v = e.value;
    refine_to(v, eps);
    nlohmann::ordered_json row;
    row["c"] = e.c;
    row["n"] = e.n;
    row["k"] = e.k;
    row["composition"] = e.layout.display();
    row["signs"] = e.sig.display();
    row["value"] = value_string(e, digits);
    row["decimal"] = decimal_truncated(v, digits);
    row["polynomial"] = to_string(e.poly);
    row["interval"] = {{"lo", rat_string(v.isol.lo)}, {"hi", rat_string(v.isol.hi)}};
    arr.push_back(std::move(row));
  }
  return arr.dump(2) + "\n";
}

std::string emit_text(const std::vector<CatalogEntry>& entries, int digits) {
  std::vector<std::array<std::string, 7>> rows;
  rows.push_back({"c", "n", "k", "composition", "signs", "value", "polynomial"});
  for (const auto& e : entries) {
    std::string value = value_string(e, digits);
    if (e.k >= 2) value += "...";  // truncated, not exact
    rows.push_back({std::to_string(e.c), std::to_string(e.n), std::to_string(e.k),
                    e.layout.display(), e.sig.display(), value, to_string(e.poly)});
  }
  std::array<size_t, 7> width{};
  for (const auto& r : rows)
    for (size_t j = 0; j < 7; ++j) width[j] = std::max(width[j], r[j].size());
  std::ostringstream os;
  for (const auto& r : rows) {
    for (size_t j = 0; j < 7; ++j) {
      const bool right = j < 3;  // numeric columns
      if (j) os << "  ";
      if (right)
        os << std::setw(static_cast<int>(width[j])) << r[j];
      else if (j + 1 < 7)
        os << std::left << std::setw(static_cast<int>(width[j])) << r[j] << std::right;
      else
        os << r[j];  // last column unpadded
    }
    os << "\n";
  }
  return os.str();
}

std::string format_phi(const PhiTable& table) {
  std::ostringstream os;
  size_t maxk = 0;
  for (const auto& r : table.rows) maxk = std::max(maxk, r.counts.size());
  os << "Phi(n,k): count of real algebraic numbers of height n and degree k\n\n";
  os << std::setw(5) << "n\\k";
  for (size_t k = 1; k <= maxk; ++k) os << std::setw(7) << k;
  os << std::setw(10) << "Phi(n)" << "\n";
  for (const auto& r : table.rows) {
    os << std::setw(5) << r.n;
    for (size_t i = 0; i < maxk; ++i) {
      if (i < r.counts.size())
        os << std::setw(7) << r.counts[i];
      else
        os << std::setw(7) << "";
    }
    os << std::setw(10) << r.total() << "\n";
  }
  const auto tot = table.totals();
  os << "\nPhi(1.." << table.rows.back().n << ") = ";
  for (size_t i = 0; i < tot.size(); ++i) {
    if (i) os << ", ";
    os << tot[i];
  }
  os << "\n";
  return os.str();
}

namespace {

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  for (size_t i = 0; i < line.size(); ++i) {
    const char ch = line[i];
    if (quoted) {
      if (ch == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cur += ch;
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

long long parse_ll(const std::string& s, const std::string& path, size_t lineno) {
  try {
    size_t pos = 0;
    long long v = std::stoll(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw std::runtime_error(path + ":" + std::to_string(lineno) + ": expected integer, got \"" +
                             s + "\"");
  }
}

struct GoldenRow {
  int n = 0;
  int k = 0;
  std::string composition, signs, value;
};

std::map<long long, GoldenRow> read_golden(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open golden file: " + path);
  std::map<long long, GoldenRow> rows;
  std::string line;
  size_t lineno = 0;
  bool saw_header = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    if (!saw_header) {
      saw_header = true;  // column header
      continue;
    }
    const auto f = split_csv(line);
    if (f.size() < 6)
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": expected >= 6 columns");
    GoldenRow row;
    const long long c = parse_ll(f[0], path, lineno);
    row.n = static_cast<int>(parse_ll(f[1], path, lineno));
    row.k = static_cast<int>(parse_ll(f[2], path, lineno));
    row.composition = f[3];
    row.signs = f[4];
    row.value = f[5];
    if (!rows.emplace(c, std::move(row)).second)
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": duplicate index c");
  }
  if (rows.empty()) throw std::runtime_error("golden file has no data rows: " + path);
  return rows;
}

void apply_errata(std::map<long long, GoldenRow>& rows, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open errata file: " + path);
  std::string line;
  size_t lineno = 0;
  bool saw_header = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    if (!saw_header) {
      saw_header = true;
      continue;
    }
    const auto f = split_csv(line);
    if (f.size() < 4)
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": expected >= 4 columns");
    const long long c = parse_ll(f[0], path, lineno);
    auto it = rows.find(c);
    if (it == rows.end())
      throw std::runtime_error(path + ":" + std::to_string(lineno) +
                               ": errata index not present in golden file");
    const std::string& field = f[1];
    const std::string& corrected = f[3];
    if (field == "composition")
      it->second.composition = corrected;
    else if (field == "signs")
      it->second.signs = corrected;
    else if (field == "value")
      it->second.value = corrected;
    else if (field == "n")
      it->second.n = static_cast<int>(parse_ll(corrected, path, lineno));
    else if (field == "k")
      it->second.k = static_cast<int>(parse_ll(corrected, path, lineno));
    else
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": unknown field \"" + field +
                               "\"");
  }
}

}  // namespace

VerifyOutcome verify_golden(const std::vector<CatalogEntry>& entries,
                            const std::string& golden_path, const std::string& errata_path) {
  auto rows = read_golden(golden_path);
  if (!errata_path.empty()) apply_errata(rows, errata_path);
  VerifyOutcome out;
  for (const auto& [c, row] : rows) {
    ++out.rows_checked;
    if (c < 1 || static_cast<size_t>(c) > entries.size()) {
      out.mismatches.push_back("c=" + std::to_string(c) + ": not present in catalog (size " +
                               std::to_string(entries.size()) + ")");
      continue;
    }
    const CatalogEntry& e = entries[static_cast<size_t>(c) - 1];
    auto check = [&](const char* what, const std::string& got, const std::string& want) {
      if (got != want)
        out.mismatches.push_back("c=" + std::to_string(c) + ": " + what + " catalog=\"" + got +
                                 "\" golden=\"" + want + "\"");
    };
    check("n", std::to_string(e.n), std::to_string(row.n));
    check("k", std::to_string(e.k), std::to_string(row.k));
    check("composition", e.layout.display(), row.composition);
    check("signs", e.sig.display(), row.signs);
    check("value", value_string(e, 10), row.value);
  }
  return out;
}

}  // namespace cantor
