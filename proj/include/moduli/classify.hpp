#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "moduli/construct.hpp"
#include "moduli/descartes.hpp"
#include "moduli/ordering.hpp"
#include "moduli/roots.hpp"

namespace moduli {

// ---------------------------------------------------------------------------
// Forbidden cells

enum class TheoremId {
  OneChangeBound,         // T-c1-bound
  OneChangeBoundMirror,   // C-c1-bound
  OneLongOne,             // T-1n1
  LastBlockOnePart1,      // T-mn1-part1
  LastBlockOnePart2,      // T-mn1-part2
  LastBlockOneBis,        // T-mn1bis
  MiddleBlockOne,         // T-m1q
  Shape321,               // P-321
  MiddleBlockOneNoTie,    // L-no-tie-m1q
};

std::string_view theorem_tag(TheoremId id);
/// Inverse of theorem_tag; nullopt for an unknown tag.
std::optional<TheoremId> parse_theorem_tag(std::string_view tag);

struct TheoremCitation {
  TheoremId id = TheoremId::OneChangeBound;
  std::string note;

  std::string_view tag() const { return theorem_tag(id); }
  friend bool operator==(const TheoremCitation& a, const TheoremCitation& b) { return a.id == b.id; }
};

/// Citation with the standard note for `id`.
TheoremCitation cite(TheoremId id);

/// A citation when an encoded result excludes the generic word for the
/// shape. The word must be generic with as many P letters as the shape has
/// sign changes; otherwise InvalidArgument. Shapes with c = 0 get no
/// citation. Absence of a citation says nothing about realizability.
std::optional<TheoremCitation> forbidden_by_theorem(const SigmaShape& shape, const ModulusOrdering& word);

/// True iff no negative root of a Sigma_{m,1,q} realizer has the modulus of a
/// positive root. Throws InvalidArgument when the roots do not realize such
/// a shape.
bool no_tie_check_m1q(const SignedRootMultiset& roots);

// ---------------------------------------------------------------------------
// Random exact search

/// Looks for a witness of (pattern, generic word). Moduli are dyadic
/// rationals N / 2^16; draws alternate between a log-uniform mode over
/// [2^-8, 2^8) and a cluster mode over [7/8, 9/8]. Sorted moduli get signs
/// from the word. Every candidate is decided exactly. Deterministic for a
/// given seed; budget counts draws.
std::optional<SignedRootMultiset> search_witness(const SignPattern& pattern, const ModulusOrdering& word,
                                                 long budget, std::uint64_t seed);
std::optional<SignedRootMultiset> search_witness(const SigmaShape& shape, const ModulusOrdering& word,
                                                 long budget, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Inequality validators

enum class Relation { Equal, Greater, Less };

struct InequalityCheck {
  std::string name;
  Rational lhs;
  Rational rhs;
  Relation relation = Relation::Equal;
  bool holds = false;
};

struct InequalityReport {
  std::vector<InequalityCheck> checks;
  bool all_hold() const;
};

/// Evaluates, exactly, every applicable identity and inequality for roots
/// realizing Sigma_{1,d-1,1} (sum and reciprocal-sum bounds) or
/// Sigma_{m,n,1} (reciprocal identity for -a1/a0; for n = 3 and ordering
/// N P P N..., the expansion of a4/a0). Throws InvalidArgument for other
/// shapes.
InequalityReport validate_inequalities(const SignedRootMultiset& roots);

// ---------------------------------------------------------------------------
// Atlas

enum class CellStatus { Realizable, Forbidden, Unknown };
enum class WitnessSource { Corpus, Constructed, Searched };

std::string_view status_name(CellStatus s);
std::string_view source_name(WitnessSource s);

struct AtlasCell {
  SignPattern pattern{std::vector<Sign>{Sign::Plus, Sign::Plus}};
  ModulusOrdering word;
  CellStatus status = CellStatus::Unknown;
  std::optional<SignedRootMultiset> witness;
  std::optional<WitnessSource> source;
  std::optional<TheoremCitation> citation;

  friend bool operator==(const AtlasCell&, const AtlasCell&) = default;
};

struct AtlasOptions {
  std::uint64_t seed = 1;
  long budget = 100000;
  /// Draws spent trying to refute each Forbidden cell.
  long crosscheck_budget = 2000;
  /// 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

/// Per-cell seed derived from the run seed and the cell key.
std::uint64_t cell_seed(std::uint64_t seed, const SignPattern& pattern, const ModulusOrdering& word);

/// Thrown when a Forbidden cell turns out to have a witness.
class SoundnessViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Status of one cell. Patterns with at most two sign changes are handled
/// directly; patterns with at most two preservations through negation.
/// Tie words get the no-tie lemma for Sigma_{m,1,q}, the one-change
/// construction when it applies, and Unknown otherwise.
AtlasCell classify_cell(const SignPattern& pattern, const ModulusOrdering& word, const AtlasOptions& options = {});

/// Every shape with a requested c (subset of {0, 1, 2}) against every generic
/// word. Cells fan out over worker threads and come back ordered by shape,
/// then word. Throws SoundnessViolation if a Forbidden cell is refuted.
std::vector<AtlasCell> build_atlas(int degree, std::span<const int> changes, const AtlasOptions& options = {});

/// Realizable cells re-verify their witness; Forbidden cells carry a
/// citation and no witness; Unknown cells carry neither.
bool verify_cell(const AtlasCell& cell);

// ---------------------------------------------------------------------------
// Statistics

/// Empirical summary of n* over found witnesses for a shape.
struct NStarSummary {
  SigmaShape shape;
  std::vector<int> realized;  // sorted, distinct
  int max_n_star() const { return realized.empty() ? -1 : realized.back(); }
};

/// Classifies every generic word of every shape with `changes` sign changes
/// and collects the n* values of the Realizable ones.
std::vector<NStarSummary> n_star_summary(int degree, int changes, const AtlasOptions& options = {});

}  // namespace moduli
