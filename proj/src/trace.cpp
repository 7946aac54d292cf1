#include "heckepos/trace.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "heckepos/errors.hpp"
#include "term_buffer.hpp"

namespace heckepos {

namespace {

using detail::TermBuffer;

// ---------------------------------------------------------------------------
// Basis-by-basis route

/// sum over b in [begin, end) of <T_left T_b T_right, T_b>, evaluated as
/// <T_left T_b, R^t T_b> so that each side branches over one factor only.
template <class C>
QPoly direct_partial(const WeylGroup& g, ElementId left, ElementId right, std::size_t begin, std::size_t end) {
  const auto left_word = g.reduced_word(left);
  const auto right_word = g.reduced_word(right);
  const std::size_t wa = left_word.size() + 1;
  const std::size_t wb = right_word.size() + 1;
  TermBuffer<C> a(g.size(), wa), a_next(g.size(), wa);
  TermBuffer<C> b(g.size(), wb), b_next(g.size(), wb);
  std::vector<C> acc(wa + wb - 1, C(0));

  for (std::size_t id = begin; id < end; ++id) {
    const auto basis = static_cast<ElementId>(id);
    a.set_basis(basis);
    for (auto it = left_word.rbegin(); it != left_word.rend(); ++it) {
      detail::apply_left_gen(g, *it, a, a_next);
      std::swap(a, a_next);
    }
    b.set_basis(basis);
    for (auto it = right_word.rbegin(); it != right_word.rend(); ++it) {
      detail::apply_right_gen_transposed(g, *it, b, b_next);
      std::swap(b, b_next);
    }
    detail::accumulate_pairing(a, b, acc.data());
  }
  return detail::to_qpoly<C>(acc);
}

QPoly direct_partial_exact(const WeylGroup& g, ElementId left, ElementId right, std::size_t begin, std::size_t end) {
  try {
    return direct_partial<std::int64_t>(g, left, right, begin, end);
  } catch (const ArithmeticError&) {
    return direct_partial<mpz_class>(g, left, right, begin, end);
  }
}

// ---------------------------------------------------------------------------
// Averaging route

struct CosetNode {
  ElementId x;
  unsigned depth;
  unsigned letter;
};

/// Minimal left coset representatives of W_{J_prev} in W_{J_prev + new generator},
/// in depth-first preorder of the tree whose parent of x is s x, s the
/// smallest left descent.
struct ChainStage {
  std::vector<CosetNode> nodes;
  unsigned max_length = 0;
  unsigned max_depth = 0;
};

std::size_t parabolic_size(const WeylGroup& g, GenSet gens) {
  std::vector<char> seen(g.size(), 0);
  std::vector<ElementId> frontier{WeylGroup::identity()};
  seen[0] = 1;
  std::size_t count = 1;
  const auto letters = gens.indices();
  while (!frontier.empty()) {
    std::vector<ElementId> next;
    for (ElementId x : frontier) {
      for (unsigned i : letters) {
        const ElementId y = g.right_mul(x, i);
        if (!seen[y]) {
          seen[y] = 1;
          ++count;
          next.push_back(y);
        }
      }
    }
    frontier = std::move(next);
  }
  return count;
}

void collect_cosets(const WeylGroup& g, GenSet previous, GenSet current, ElementId x, unsigned depth,
                    ChainStage& stage) {
  for (unsigned s : current.indices()) {
    const ElementId y = g.left_mul(s, x);
    if (g.length(y) < g.length(x)) continue;
    bool minimal = true;
    for (unsigned j : previous.indices()) {
      if (g.is_right_descent(y, j)) {
        minimal = false;
        break;
      }
    }
    if (!minimal) continue;
    unsigned first = 0;
    while (!g.is_left_descent(first, y)) ++first;
    if (first != s) continue;
    stage.nodes.push_back({y, depth + 1, s});
    stage.max_length = std::max(stage.max_length, g.length(y));
    stage.max_depth = std::max(stage.max_depth, depth + 1);
    collect_cosets(g, previous, current, y, depth + 1, stage);
  }
}

std::vector<ChainStage> build_chain(const WeylGroup& g) {
  std::vector<ChainStage> chain;
  GenSet previous;
  for (unsigned gen : parabolic_chain_order(g)) {
    GenSet current = previous;
    current.insert(gen);
    ChainStage stage;
    stage.nodes.push_back({WeylGroup::identity(), 0, 0});
    collect_cosets(g, previous, current, WeylGroup::identity(), 0, stage);
    chain.push_back(std::move(stage));
    previous = current;
  }
  return chain;
}

template <class C>
std::vector<QPoly> column_impl(const WeylGroup& g, ElementId w_prime, const std::vector<ChainStage>& chain) {
  const std::size_t n = g.size();
  const unsigned nu = g.datum().nu();
  const std::size_t width = 2 * std::size_t{nu} + 1;

  TermBuffer<C> h(n, width), acc(n, width), tmp(n, width);
  h.set_basis(g.inverse(w_prime));
  std::size_t max_depth = 0;
  for (const auto& stage : chain) max_depth = std::max<std::size_t>(max_depth, stage.max_depth);
  std::vector<TermBuffer<C>> levels;
  levels.reserve(max_depth + 1);
  for (std::size_t d = 0; d <= max_depth; ++d) levels.emplace_back(d == 0 ? 1 : n, width);

  unsigned weight_total = 0;
  for (const auto& stage : chain) {
    acc.clear();
    for (const CosetNode& node : stage.nodes) {
      const TermBuffer<C>* current = &h;
      if (node.depth > 0) {
        const TermBuffer<C>& parent = node.depth == 1 ? h : levels[node.depth - 1];
        detail::apply_left_gen(g, node.letter, parent, tmp);
        detail::apply_right_gen(g, node.letter, tmp, levels[node.depth]);
        current = &levels[node.depth];
      }
      const std::size_t shift = stage.max_length - g.length(node.x);
      for (std::size_t t = 0; t < current->num_terms(); ++t) {
        detail::add_shifted(acc.row_for(current->id(t)), current->row(t), width, shift);
      }
    }
    std::swap(h, acc);
    weight_total += stage.max_length;
  }
  if (weight_total != nu) throw IntegrityError("parabolic chain weights do not add up to nu");

  std::vector<QPoly> out(n);
  for (std::size_t t = 0; t < h.num_terms(); ++t) {
    const ElementId z = h.id(t);
    const ElementId x = g.inverse(z);
    QPoly p = detail::to_qpoly<C>(std::span<const C>(h.row(t), width));
    out[x] = p.unshifted(nu - g.length(x));
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------

ChunkedTrace::ChunkedTrace(std::shared_ptr<const WeylGroup> group, ElementId w, ElementId right,
                           std::size_t chunk_size, bool)
    : group_(std::move(group)), left_(w), right_(right), chunk_size_(chunk_size) {
  if (chunk_size_ == 0) throw ConfigurationError("chunk size must be positive");
  if (w >= group_->size() || right >= group_->size()) throw UsageError("element id out of range");
}

ChunkedTrace::ChunkedTrace(std::shared_ptr<const WeylGroup> group, ElementId w, ElementId w_prime,
                           std::size_t chunk_size)
    : ChunkedTrace(group, w, group->inverse(w_prime), chunk_size, true) {}

ChunkedTrace ChunkedTrace::with_right_factor(std::shared_ptr<const WeylGroup> group, ElementId w, ElementId right,
                                             std::size_t chunk_size) {
  return ChunkedTrace(std::move(group), w, right, chunk_size, true);
}

std::size_t ChunkedTrace::num_chunks() const { return (group_->size() + chunk_size_ - 1) / chunk_size_; }

void ChunkedTrace::restore(std::size_t chunk, const QPoly& partial) {
  if (chunk >= num_chunks()) throw IntegrityError("checkpoint chunk index out of range");
  auto [it, inserted] = completed_.try_emplace(chunk, partial);
  if (!inserted && it->second != partial) {
    throw IntegrityError("conflicting partial sums for chunk " + std::to_string(chunk));
  }
}

QPoly ChunkedTrace::compute_chunk(std::size_t chunk) const {
  const std::size_t begin = chunk * chunk_size_;
  const std::size_t end = std::min(group_->size(), begin + chunk_size_);
  return direct_partial_exact(*group_, left_, right_, begin, end);
}

void ChunkedTrace::run(unsigned threads, const ChunkSink& sink, std::optional<std::size_t> limit) {
  std::vector<std::size_t> pending;
  for (std::size_t k = 0; k < num_chunks(); ++k) {
    if (!completed_.count(k)) pending.push_back(k);
  }
  if (limit && pending.size() > *limit) pending.resize(*limit);
  if (pending.empty()) return;

  std::mutex mutex;
  auto finish = [&](std::size_t chunk, QPoly partial) {
    std::lock_guard lock(mutex);
    completed_.emplace(chunk, partial);
    if (sink) sink(ChunkResult{chunk, std::move(partial)});
  };

  const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(pending.size())));
  if (workers == 1) {
    for (std::size_t chunk : pending) finish(chunk, compute_chunk(chunk));
    return;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < workers; ++t) {
    pool.emplace_back([&] {
      try {
        for (std::size_t k; (k = next.fetch_add(1)) < pending.size();) finish(pending[k], compute_chunk(pending[k]));
      } catch (...) {
        std::lock_guard lock(mutex);
        if (!error) error = std::current_exception();
        next.store(pending.size());
      }
    });
  }
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

QPoly ChunkedTrace::total() const {
  if (!done()) {
    throw IntegrityError("trace incomplete: " + std::to_string(completed_.size()) + " of " +
                         std::to_string(num_chunks()) + " chunks");
  }
  QPoly sum;
  for (const auto& [chunk, partial] : completed_) sum += partial;
  return sum;
}

TracePoly nww(std::shared_ptr<const WeylGroup> group, ElementId w, ElementId w_prime, const TraceOptions& options) {
  ChunkedTrace trace(group, w, w_prime, options.chunk_size);
  trace.run(options.threads, options.progress);
  QPoly value = trace.total();
  validate_trace(*group, w, w_prime, value);
  return {std::move(value), w, w_prime};
}

QPoly nww_right_factor_convention(std::shared_ptr<const WeylGroup> group, ElementId w, ElementId w_prime) {
  auto trace = ChunkedTrace::with_right_factor(std::move(group), w, w_prime);
  trace.run();
  return trace.total();
}

std::vector<unsigned> parabolic_chain_order(const WeylGroup& g) {
  // Peel generators off the top so that each step leaves the largest
  // parabolic subgroup, i.e. the smallest coset tree.
  GenSet current = GenSet::full(g.rank());
  std::vector<unsigned> removed;
  while (!current.empty()) {
    unsigned best = 0;
    std::size_t best_size = 0;
    for (unsigned i : current.indices()) {
      GenSet rest = GenSet::from_bits(current.bits() & ~(std::uint32_t{1} << i));
      const std::size_t size = parabolic_size(g, rest);
      if (size > best_size) {
        best_size = size;
        best = i;
      }
    }
    removed.push_back(best);
    current = GenSet::from_bits(current.bits() & ~(std::uint32_t{1} << best));
  }
  std::reverse(removed.begin(), removed.end());
  return removed;
}

std::vector<QPoly> nww_column(const WeylGroup& group, ElementId w_prime, std::uint64_t memory_budget) {
  if (w_prime >= group.size()) throw UsageError("element id out of range");
  const auto chain = build_chain(group);
  std::size_t max_depth = 0;
  for (const auto& stage : chain) max_depth = std::max<std::size_t>(max_depth, stage.max_depth);
  const std::uint64_t width = 2 * std::uint64_t{group.datum().nu()} + 1;
  const std::uint64_t bytes = (max_depth + 3) * group.size() * (width * sizeof(std::int64_t) + sizeof(std::int32_t));
  if (bytes > memory_budget) {
    throw ResourceError("the averaged trace for " + group.datum().type().name() + " needs about " +
                        std::to_string(bytes >> 20) + " MiB, above the memory budget of " +
                        std::to_string(memory_budget >> 20) + " MiB");
  }
  try {
    return column_impl<std::int64_t>(group, w_prime, chain);
  } catch (const ArithmeticError&) {
    return column_impl<mpz_class>(group, w_prime, chain);
  }
}

TracePoly nww_averaged(const WeylGroup& group, ElementId w, ElementId w_prime, std::uint64_t memory_budget) {
  auto column = nww_column(group, w_prime, memory_budget);
  QPoly value = std::move(column.at(w));
  validate_trace(group, w, w_prime, value);
  return {std::move(value), w, w_prime};
}

std::uint64_t top_coeff_count(const WeylGroup& group, ElementId w, ElementId w_prime) {
  const GenSet sw = group.support(w);
  const GenSet swp = group.support(w_prime);
  std::uint64_t count = 0;
  for (std::size_t a = 0; a < group.size(); ++a) {
    const auto id = static_cast<ElementId>(a);
    if (sw.subset_of(group.left_descents(id)) && swp.subset_of(group.right_descents(id))) ++count;
  }
  return count;
}

std::uint64_t commuting_count(const WeylGroup& group, ElementId w, ElementId w_prime) {
  std::uint64_t count = 0;
  for (std::size_t y = 0; y < group.size(); ++y) {
    const auto id = static_cast<ElementId>(y);
    if (group.multiply(w, id) == group.multiply(id, w_prime)) ++count;
  }
  return count;
}

void validate_trace(const WeylGroup& group, ElementId w, ElementId w_prime, const QPoly& p) {
  const int n = static_cast<int>(group.length(w) + group.length(w_prime));
  if (p.degree().value_or(-1) != n) {
    throw IntegrityError("trace polynomial " + p.to_string() + " does not have degree " + std::to_string(n));
  }
  const std::uint64_t expected = top_coeff_count(group, w, w_prime);
  if (p.coefficient(static_cast<std::size_t>(n)) != QPoly::Coeff(static_cast<unsigned long>(expected))) {
    throw IntegrityError("trace polynomial " + p.to_string() + " has top coefficient different from the descent count " +
                         std::to_string(expected));
  }
}

}  // namespace heckepos
