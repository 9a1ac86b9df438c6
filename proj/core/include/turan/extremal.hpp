#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "turan/matroid.hpp"

namespace turan {

enum class SearchBackend { generic, rank3 };

struct SearchOptions {
  SearchBackend backend = SearchBackend::generic;
  /// Node budget for each independent subtree; nullopt means unlimited.
  std::optional<std::uint64_t> max_nodes;
  int workers = 1;
  /// At most this many witnesses are kept: the smallest canonical forms.
  std::size_t witness_cap = 16;
};

struct SearchReport {
  int n = 0;
  int r = 0;
  int s = 0;
  int t = 0;
  std::uint64_t max_bases = 0;
  /// Canonical forms of optimal matroids, sorted by basis list.
  std::vector<Matroid> witnesses;
  std::uint64_t nodes_explored = 0;
  std::uint64_t pruned_daisy = 0;
  std::uint64_t pruned_bound = 0;
  bool exhaustive = true;
};

/// Largest basis count of a rank-r matroid on n labelled elements with no
/// U_{s,t}-minor. The generic backend (n <= 7, r <= 4) walks all basis
/// families; the rank-3 backend (n <= 12) builds simple rank-3 matroids one
/// point at a time and then places parallel copies and loops.
SearchReport search_ex(int n, int r, int s, int t, const SearchOptions& options = {});

struct BinarySearchReport {
  SearchReport report;
  /// c with 2^r - 2^{r-c} == size, when such a c exists.
  std::optional<int> bose_burton_c;
  std::uint64_t bose_burton_bases = 0;
  bool bose_burton_attains = false;
};

/// Most bases over all `size`-subsets of nonzero vectors of GF(2)^r.
BinarySearchReport search_binary_max_bases(int r, int size, const SearchOptions& options = {});

enum class Parity { odd, even };

struct CertificateCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct Rank3Decomposition {
  int m = 0;
  Parity parity = Parity::odd;
  int k = 0;
  std::vector<ElementSet> lines;
  ElementSet y;
  /// Line-size threshold used at each greedy step.
  std::vector<int> thresholds;
  /// Extra points added to every threshold (nonzero only after an even-case retry).
  int threshold_offset = 0;
  std::vector<CertificateCheck> certificate;
};

/// Greedy line decomposition of a rank-3 matroid without a U_{3,2m+1}
/// (odd) or U_{3,2m+2} (even) restriction, with every conclusion about the
/// leftover set Y checked directly. Throws std::invalid_argument when the
/// hypotheses fail and TheoremViolation when a certificate check fails.
Rank3Decomposition decompose_rank3(const Matroid& m, int mm, Parity parity);

struct U35Classification {
  enum class Kind { no_u25_minor, two_lines };
  Kind kind = Kind::no_u25_minor;
  /// Set only for two_lines; together they cover every non-loop.
  ElementSet first;
  ElementSet second;
};

/// Splits rank-3 matroids without a U_{3,5}-restriction into those with no
/// U_{2,5}-minor and unions of two lines.
U35Classification classify_u35_free(const Matroid& m);

/// Fewest rank-at-most-2 sets covering the ground set (n <= 30, r >= 2).
int line_cover_number(const Matroid& m);

/// Largest t such that the m-fold truncation of PG(r+m-1, q) has a U_{s,t}-minor.
int truncation_probe(int r, int m, int q, int s);

/// CSV with one row per n in [n_lo, n_hi] (rows with n < r are skipped).
std::string density_table(int r, int s, int t, int n_lo, int n_hi, const SearchOptions& options = {});

/// Quotes a CSV field when it contains a comma, quote, CR or LF.
std::string csv_field(const std::string& field);

}  // namespace turan
