#include <algorithm>
#include <atomic>
#include <exception>
#include <set>
#include <thread>

#include "moduli/classify.hpp"
#include "moduli/corpus.hpp"
#include "moduli/error.hpp"

namespace moduli {

namespace {

bool has_mixed_group(const ModulusOrdering& word) {
  return std::any_of(word.groups().begin(), word.groups().end(),
                     [](const ModulusGroup& g) { return g.positives > 0 && g.negatives > 0; });
}

/// One-change tie words: the positive root may share its modulus with some
/// negatives, other groups are negative only.
std::optional<SignedRootMultiset> construct_one_change_tie(const SigmaShape& shape, const ModulusOrdering& word) {
  if (shape.n > shape.m) {
    const SigmaShape mirrored = reverse_shape(shape);
    auto r = construct_one_change_tie(mirrored, reverse_ordering(word));
    if (r) return r->reciprocal();
    return std::nullopt;
  }
  C1Case spec{shape.m, shape.n, 0, 0, {}, {}};
  bool seen_positive = false;
  for (const auto& g : word.groups()) {
    if (g.positives > 0) {
      seen_positive = true;
      spec.ties = g.negatives;
    } else if (!seen_positive) {
      spec.below += g.negatives;
      spec.below_multiplicities.push_back(g.negatives);
    } else {
      spec.above_multiplicities.insert(spec.above_multiplicities.begin(), g.negatives);
    }
  }
  if (spec.ties + spec.below > 2 * shape.n - 2) return std::nullopt;
  const int d = shape.degree();
  if (d >= 2 * shape.n && !condition_a(spec.above_multiplicities, d, shape.n, spec.ties, spec.below))
    return std::nullopt;
  try {
    SignedRootMultiset roots = realize_c1_case(spec);
    if (realizes(roots, make_pattern(shape), word)) return roots;
  } catch (const Error&) {
  }
  return std::nullopt;
}

AtlasCell classify_direct(const SignPattern& pattern, const ModulusOrdering& word, const AtlasOptions& options) {
  AtlasCell cell{pattern, word, CellStatus::Unknown, std::nullopt, std::nullopt, std::nullopt};
  const auto shape = try_shape_of(pattern);
  const std::uint64_t seed = cell_seed(options.seed, pattern, word);
  auto realizable = [&](SignedRootMultiset w, WitnessSource src) {
    cell.status = CellStatus::Realizable;
    cell.witness = std::move(w);
    cell.source = src;
    return cell;
  };

  if (!word.is_generic()) {
    if (shape && shape->kind == ShapeKind::TwoChanges && shape->n == 1 && has_mixed_group(word)) {
      cell.status = CellStatus::Forbidden;
      cell.citation = cite(TheoremId::MiddleBlockOneNoTie);
      return cell;
    }
    if (auto w = corpus_witness(pattern, word)) return realizable(*std::move(w), WitnessSource::Corpus);
    if (shape && shape->kind == ShapeKind::OneChange)
      if (auto w = construct_one_change_tie(*shape, word)) return realizable(*std::move(w), WitnessSource::Constructed);
    return cell;
  }

  if (shape && shape->changes() > 0) {
    if (auto citation = forbidden_by_theorem(*shape, word)) {
      if (options.crosscheck_budget > 0)
        if (auto w = search_witness(pattern, word, options.crosscheck_budget, seed))
          throw SoundnessViolation("cell " + pattern.to_string() + " " + word.to_string() + " cites " +
                                   std::string(citation->tag()) + " but has a witness");
      cell.status = CellStatus::Forbidden;
      cell.citation = std::move(citation);
      return cell;
    }
  }
  if (auto w = corpus_witness(pattern, word)) return realizable(*std::move(w), WitnessSource::Corpus);
  try {
    if (auto w = construct_witness(pattern, word)) return realizable(*std::move(w), WitnessSource::Constructed);
  } catch (const Error&) {
    // a construction route gave up; fall through to search
  }
  if (options.budget > 0)
    if (auto w = search_witness(pattern, word, options.budget, seed))
      return realizable(*std::move(w), WitnessSource::Searched);
  return cell;
}

}  // namespace

std::string_view status_name(CellStatus s) {
  switch (s) {
    case CellStatus::Realizable: return "realizable";
    case CellStatus::Forbidden: return "forbidden";
    case CellStatus::Unknown: return "unknown";
  }
  return "unknown";
}

std::string_view source_name(WitnessSource s) {
  switch (s) {
    case WitnessSource::Corpus: return "corpus";
    case WitnessSource::Constructed: return "constructed";
    case WitnessSource::Searched: return "searched";
  }
  return "constructed";
}

std::uint64_t cell_seed(std::uint64_t seed, const SignPattern& pattern, const ModulusOrdering& word) {
  // FNV-1a over the key, then a splitmix64 finalizer.
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&](unsigned char byte) {
    h ^= byte;
    h *= 1099511628211ULL;
  };
  for (int i = 0; i < 8; ++i) mix(static_cast<unsigned char>(seed >> (8 * i)));
  for (char ch : pattern.to_string() + "|" + word.to_string()) mix(static_cast<unsigned char>(ch));
  h += 0x9e3779b97f4a7c15ULL;
  h = (h ^ (h >> 30)) * 0xbf58476d1ce4e5b9ULL;
  h = (h ^ (h >> 27)) * 0x94d049bb133111ebULL;
  return h ^ (h >> 31);
}

AtlasCell classify_cell(const SignPattern& pattern, const ModulusOrdering& word, const AtlasOptions& options) {
  if (word.degree() != pattern.degree() || word.positive_count() != pattern.changes())
    throw Error(ErrorKind::InvalidArgument, "word " + word.to_string() + " needs degree " +
                                                std::to_string(pattern.degree()) + " and " +
                                                std::to_string(pattern.changes()) + " letters P");
  if (!try_shape_of(pattern) && try_shape_of(negate_pattern(pattern))) {
    AtlasCell cell = classify_direct(negate_pattern(pattern), negate_ordering(word), options);
    cell.pattern = pattern;
    cell.word = word;
    if (cell.witness) cell.witness = cell.witness->negated();
    return cell;
  }
  return classify_direct(pattern, word, options);
}

std::vector<AtlasCell> build_atlas(int degree, std::span<const int> changes, const AtlasOptions& options) {
  if (degree < 1) throw Error(ErrorKind::InvalidArgument, "atlas degree must be >= 1");
  const std::set<int> cs(changes.begin(), changes.end());
  std::vector<std::pair<SignPattern, ModulusOrdering>> keys;
  for (int c : cs) {
    if (c < 0 || c > 2) throw Error(ErrorKind::UnsupportedShape, "unsupported shape: atlas covers c in {0, 1, 2}");
    if (c > degree) continue;
    for (const auto& shape : shapes_with_changes(degree, c))
      for (auto& w : enumerate_generic(degree, c)) keys.emplace_back(make_pattern(shape), std::move(w));
  }

  std::vector<std::optional<AtlasCell>> cells(keys.size());
  std::vector<std::exception_ptr> errors(keys.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < keys.size(); i = next++) {
      try {
        cells[i] = classify_cell(keys[i].first, keys[i].second, options);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  unsigned threads = options.threads ? options.threads : std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(keys.size(), 1)));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::vector<AtlasCell> out;
  for (auto& c : cells) out.push_back(*std::move(c));
  return out;
}

bool verify_cell(const AtlasCell& cell) {
  switch (cell.status) {
    case CellStatus::Realizable:
      return cell.witness && !cell.citation && realizes(*cell.witness, cell.pattern, cell.word);
    case CellStatus::Forbidden: return cell.citation && !cell.witness;
    case CellStatus::Unknown: return !cell.citation && !cell.witness;
  }
  return false;
}

std::vector<NStarSummary> n_star_summary(int degree, int changes, const AtlasOptions& options) {
  if (changes != 1 && changes != 2) throw Error(ErrorKind::InvalidArgument, "n* summary needs c in {1, 2}");
  const int cs[] = {changes};
  const auto cells = build_atlas(degree, cs, options);
  std::vector<NStarSummary> out;
  for (const auto& cell : cells) {
    const SigmaShape shape = shape_of(cell.pattern);
    if (out.empty() || !(out.back().shape == shape)) out.push_back({shape, {}});
    if (cell.status != CellStatus::Realizable) continue;
    const int n_star = stats_of(cell.word, changes).n_star;
    auto& r = out.back().realized;
    if (std::find(r.begin(), r.end(), n_star) == r.end()) r.insert(std::upper_bound(r.begin(), r.end(), n_star), n_star);
  }
  return out;
}

}  // namespace moduli
