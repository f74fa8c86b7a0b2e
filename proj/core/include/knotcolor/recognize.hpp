#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "knotcolor/alexander.hpp"
#include "knotcolor/coloring.hpp"
#include "knotcolor/knotio.hpp"
#include "knotcolor/limits.hpp"
#include "knotcolor/quandle.hpp"

namespace knotcolor {

inline constexpr const char *kConventionTag =
    "knotcolor-sign-v1: sign +1 => c(under_out) = c(over) * c(under_in); "
    "sign -1 => c(under_in) = c(over) * c(under_out)";

// Self-validating evidence that a diagram is knotted.
struct KnottednessCertificate {
  KnotDiagram knot;
  Quandle quandle;
  int library_index = -1;
  Coloring coloring;
};

enum class ScanStatus { uncolorable, colorable, budget_exceeded };
const char *to_string(ScanStatus s);

struct QuandleOutcome {
  int index = 0;
  std::string quandle;
  ScanStatus status = ScanStatus::uncolorable;
  std::string detail;
};

struct CertifyOptions {
  SearchLimits limits; // per quandle
  bool prefilter = false;
  int jobs = 1;
};

struct CertifyResult {
  std::optional<KnottednessCertificate> certificate;
  // Exhausted: every scanned quandle, in library order. When a certificate
  // exists the trace ends at its quandle.
  std::vector<QuandleOutcome> trace;
  int removed_by_prefilter = 0;

  bool exhausted() const { return !certificate.has_value(); }
  bool budget_hit() const;
};

// Scans the library in order and returns the first quandle with a nontrivial
// colouring. Absence of a certificate is inconclusive, never "unknot".
// Throws std::invalid_argument for an empty library.
CertifyResult certify_knotted(const KnotDiagram &knot, const std::vector<Quandle> &library,
                              const CertifyOptions &options = {});

struct AlexanderMismatch {
  IntPolynomial first, second;
};
struct ColorCountMismatch {
  int library_index = -1;
  std::string quandle;
  bool colorable_first = false, colorable_second = false;
  std::optional<uint64_t> count_first, count_second;
};
using DistinctionWitness = std::variant<AlexanderMismatch, ColorCountMismatch>;

struct DistinguishOptions {
  SearchLimits limits;
  bool count = false;
  bool use_alexander = true;
};

struct QuandleComparison {
  int index = 0;
  std::string quandle;
  bool colorable_first = false, colorable_second = false;
  std::optional<uint64_t> count_first, count_second;
  bool budget_exceeded = false;
};

struct DistinguishResult {
  std::optional<DistinctionWitness> witness;
  IntPolynomial alexander_first, alexander_second;
  std::vector<QuandleComparison> coverage;

  bool distinguished() const { return witness.has_value(); }
};

DistinguishResult distinguish(const KnotDiagram &first, const KnotDiagram &second,
                              const std::vector<Quandle> &library,
                              const DistinguishOptions &options = {});

// Drops affine-tagged quandles when the Alexander polynomial is trivial; such
// quandles colour only trivially.
std::vector<Quandle> affine_prefilter(const KnotDiagram &knot, const std::vector<Quandle> &library);

struct CertificateCheck {
  bool ok = false;
  std::string reason;
  int crossing = 0; // violated crossing, 1-based, when applicable
};

// Re-checks the quandle axioms, every crossing and nontriviality with its own
// table lookups.
CertificateCheck verify_certificate(const KnottednessCertificate &cert);

std::string certificate_to_json(const KnottednessCertificate &cert);
// Throws std::invalid_argument on malformed input; the quandle table is
// re-verified while reading.
KnottednessCertificate certificate_from_json(const std::string &text);

} // namespace knotcolor
