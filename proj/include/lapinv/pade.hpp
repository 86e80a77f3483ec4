#ifndef LAPINV_PADE_HPP
#define LAPINV_PADE_HPP

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "lapinv/mpnum.hpp"

namespace lapinv::pade {

/// Smallest precision accepted for table construction.
inline constexpr int kMinTablePrecision = 30;

/// Guard digits carried by stored poles and weights, and the extra digits
/// used while expanding the polynomial coefficients on top of those.
inline constexpr int kWeightGuardDigits = 50;
inline constexpr int kCoefficientGuardDigits = 20;

inline int internal_digits(int precision) { return precision + kWeightGuardDigits; }

/// The (2N-1, 2N) Padé approximant of 1F1(1, beta, z) / Gamma(beta).
/// Coefficients are in increasing powers of z; denominator[0] == 1.
struct PadeRational {
  mp::ExactReal beta;
  int twoN = 0;
  int precision = 0;
  std::vector<mp::BigReal> numerator;
  std::vector<mp::BigReal> denominator;

  int digits() const { return denominator.front().digits(); }
};

/// Poles (upper half plane only) and weights for one (beta, 2N, precision).
/// Values are held at internal_digits(precision).
struct PoleWeightTable {
  mp::ExactReal beta;
  int twoN = 0;
  int precision = 0;
  std::vector<mp::BigComplex> poles;
  std::vector<mp::BigComplex> weights;
  /// Worst |Gamma(beta+k) 2 Re sum w_j a_j^-(beta+k) + 1| over k < 2*twoN.
  mp::BigReal canonical_residual;

  int digits() const { return poles.front().digits(); }
};

/// Rejects non-positive integer beta (InvalidBeta) and odd or non-positive
/// twoN (InvalidOrder).
void validate_arguments(const mp::ExactReal& beta, int twoN, int precision);

PadeRational build_pade(const mp::ExactReal& beta, int twoN, int precision);

/// First `count` Maclaurin coefficients of numerator/denominator.
std::vector<mp::BigReal> maclaurin_coefficients(const PadeRational& pade, int count);

/// Evaluates a real-coefficient polynomial (increasing powers) at z.
mp::BigComplex horner(const std::vector<mp::BigReal>& coeffs, const mp::BigComplex& z);

/// All 2N roots of the denominator, upper representative first in each
/// conjugate pair, pairs ordered by |Im| then Re.
std::vector<mp::BigComplex> find_poles(const PadeRational& pade);

/// Per-k canonical residuals |Gamma(beta+k) 2 Re sum w_j a_j^-(beta+k) + 1|.
std::vector<mp::BigReal> canonical_residuals(const mp::ExactReal& beta, int twoN,
                                             const std::vector<mp::BigComplex>& poles,
                                             const std::vector<mp::BigComplex>& weights);

/// Residues w_j = a_j^(beta-1) num(a_j) / den'(a_j) for the upper-half-plane
/// poles, followed by the canonical-equation check.
PoleWeightTable compute_weights(const PadeRational& pade, const std::vector<mp::BigComplex>& poles);

/// Validates the stored geometry: Re a > 0, Im a > 0, N entries.
void check_pole_geometry(const PoleWeightTable& table);

PoleWeightTable build_table(const mp::ExactReal& beta, int twoN, int precision);

/// Lossless JSON text of a table, including a SHA-256 content checksum.
std::string serialize_table(const PoleWeightTable& table);
/// Throws CacheCorruption on malformed text or checksum mismatch.
PoleWeightTable deserialize_table(const std::string& text);

std::string sha256_hex(const std::string& data);

/// Memoizing, disk-backed store of tables keyed by (beta, twoN, precision).
/// With an empty directory the cache is memory-only.
class TableCache {
 public:
  struct Stats {
    std::uint64_t builds = 0;
    std::uint64_t memory_hits = 0;
    std::uint64_t disk_hits = 0;
    std::uint64_t recoveries = 0;
  };

  explicit TableCache(std::filesystem::path directory = {});

  std::shared_ptr<const PoleWeightTable> get_or_build(const mp::ExactReal& beta, int twoN, int precision);

  std::filesystem::path file_for(const mp::ExactReal& beta, int twoN, int precision) const;
  const std::filesystem::path& directory() const { return directory_; }
  Stats stats() const;
  /// Drops the in-memory layer only; files stay.
  void clear_memory();

 private:
  struct Entry {
    std::mutex mutex;
    std::shared_ptr<const PoleWeightTable> table;
  };

  std::shared_ptr<const PoleWeightTable> load_or_build(const mp::ExactReal& beta, int twoN, int precision);

  std::filesystem::path directory_;
  mutable std::mutex mutex_;
  std::map<std::string, std::shared_ptr<Entry>> entries_;
  Stats stats_;
};

/// Directory from LAPINV_CACHE_DIR, else $XDG_CACHE_HOME/lapinv, else
/// ~/.cache/lapinv; empty when none is usable.
std::filesystem::path default_cache_directory();

/// Process-wide cache rooted at default_cache_directory().
TableCache& default_cache();

}  // namespace lapinv::pade

#endif  // LAPINV_PADE_HPP
