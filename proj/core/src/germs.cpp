#include "chernob/germs.hpp"

#include <bit>
#include <map>
#include <numeric>

#include "chernob/errors.hpp"

namespace chernob {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw ValidationError("partition must have at least one part");
  for (int k : parts_) {
    if (k < 1) throw ValidationError("partition parts must be positive");
  }
  sum_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

VarietyGerm::VarietyGerm(int variable_count, std::vector<Polynomial> equations)
    : variable_count_(variable_count), equations_(std::move(equations)) {
  if (variable_count_ < 1) throw ValidationError("variety germ needs at least one variable");
  if (static_cast<int>(equations_.size()) > variable_count_) {
    throw ValidationError("more equations than variables");
  }
  for (const Polynomial& f : equations_) {
    if (f.variable_count() != variable_count_) {
      throw ValidationError("equation has wrong variable count");
    }
    if (f.is_zero()) throw ValidationError("zero equation in the presentation");
    // Vanishing at the origin: no constant term.
    if (f.terms().back().monomial.is_one()) {
      throw ValidationError("equation does not vanish at the origin");
    }
  }
}

FormCollection::FormCollection(Partition partition, std::vector<std::vector<OneForm>> blocks)
    : partition_(std::move(partition)), blocks_(std::move(blocks)) {
  if (static_cast<int>(blocks_.size()) != partition_.size()) {
    throw ValidationError("collection has " + std::to_string(blocks_.size()) +
                          " blocks, expected " + std::to_string(partition_.size()));
  }
  int n = -1;
  for (int i = 0; i < partition_.size(); ++i) {
    const auto& block = blocks_[static_cast<std::size_t>(i)];
    const int expected = partition_.block_size(i);
    if (static_cast<int>(block.size()) != expected) {
      throw ValidationError("block " + std::to_string(i + 1) + " has " +
                            std::to_string(block.size()) + " forms, expected " +
                            std::to_string(expected));
    }
    for (const OneForm& w : block) {
      if (n == -1) n = w.variable_count();
      if (w.variable_count() != n) {
        throw ValidationError("forms disagree on variable count");
      }
    }
  }
}

LinearCollection::LinearCollection(Partition partition, std::vector<std::vector<OneForm>> blocks)
    : forms_(std::move(partition), std::move(blocks)) {
  for (const auto& block : forms_.blocks()) {
    for (const OneForm& w : block) {
      if (!w.is_constant()) {
        throw ValidationError("linear collection contains a non-constant form");
      }
    }
  }
}

DegeneracyMatrix build_degeneracy_matrix(const VarietyGerm& x, const FormCollection& c,
                                         int block_index) {
  if (block_index < 0 || block_index >= c.block_count()) {
    throw ValidationError("block index out of range");
  }
  const int n = x.variable_count();
  DegeneracyMatrix m;
  m.block_index = block_index;
  for (const Polynomial& f : x.equations()) {
    std::vector<Polynomial> row;
    row.reserve(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) row.push_back(differentiate(f, v));
    m.rows.push_back(std::move(row));
  }
  for (const OneForm& w : c.block(block_index)) {
    m.rows.push_back(w.coefficients());
  }
  return m;
}

namespace {

// Minor over the first popcount(mask) rows and the column set `mask`,
// expanded along its last row, memoized per matrix.
const Polynomial& minor_of(const DegeneracyMatrix& m, std::uint64_t mask,
                           std::map<std::uint64_t, Polynomial>& memo, int variable_count) {
  auto it = memo.find(mask);
  if (it != memo.end()) return it->second;

  const int r = std::popcount(mask);
  Polynomial det = Polynomial::zero(variable_count);
  if (r == 0) {
    det = Polynomial::constant(variable_count, 1);
  } else {
    int position = 0;
    for (int col = 0; col < 64; ++col) {
      if ((mask & (1ull << col)) == 0) continue;
      const Polynomial& entry = m.rows[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(col)];
      if (!entry.is_zero()) {
        const Polynomial sub = minor_of(m, mask & ~(1ull << col), memo, variable_count);
        const Polynomial contribution = entry * sub;
        det = ((r - 1 + position) % 2 == 0) ? det + contribution : det - contribution;
      }
      ++position;
    }
  }
  return memo.emplace(mask, std::move(det)).first->second;
}

void enumerate_subsets(int n, int r, std::uint64_t mask, int next, std::vector<std::uint64_t>& out) {
  if (r == 0) {
    out.push_back(mask);
    return;
  }
  for (int col = next; col <= n - r; ++col) {
    enumerate_subsets(n, r - 1, mask | (1ull << col), col + 1, out);
  }
}

}  // namespace

std::vector<Polynomial> maximal_minors(const DegeneracyMatrix& m) {
  const int rows = m.row_count();
  const int cols = m.column_count();
  if (rows > cols) throw ValidationError("degeneracy matrix has more rows than columns");
  const int variable_count = m.rows.front().front().variable_count();

  // Lexicographic order of column index tuples.
  std::vector<std::uint64_t> subsets;
  enumerate_subsets(cols, rows, 0, 0, subsets);

  std::map<std::uint64_t, Polynomial> memo;
  std::vector<Polynomial> minors;
  minors.reserve(subsets.size());
  for (std::uint64_t mask : subsets) {
    minors.push_back(minor_of(m, mask, memo, variable_count));
  }
  return minors;
}

Ideal special_scheme_ideal(const VarietyGerm& x, const FormCollection& c) {
  if (c.partition().sum() != x.dimension()) {
    throw ValidationError("shape mismatch between X and the collection: partition sums to " +
                          std::to_string(c.partition().sum()) + ", expected " +
                          std::to_string(x.dimension()));
  }
  if (c.variable_count() != x.variable_count()) {
    throw ValidationError("shape mismatch between X and the collection: variable counts differ");
  }
  std::vector<Polynomial> generators = x.equations();
  for (int i = 0; i < c.block_count(); ++i) {
    for (Polynomial& minor : maximal_minors(build_degeneracy_matrix(x, c, i))) {
      if (!minor.is_zero()) generators.push_back(std::move(minor));
    }
  }
  return Ideal(x.variable_count(), std::move(generators));
}

FormCollection collection_from_maps(const std::vector<std::vector<Polynomial>>& maps,
                                    const Partition& partition) {
  if (static_cast<int>(maps.size()) != partition.size()) {
    throw ValidationError("maps list has " + std::to_string(maps.size()) +
                          " tuples, expected " + std::to_string(partition.size()));
  }
  std::vector<std::vector<OneForm>> blocks;
  blocks.reserve(maps.size());
  for (int i = 0; i < partition.size(); ++i) {
    const auto& tuple = maps[static_cast<std::size_t>(i)];
    const int expected = partition.block_size(i);
    if (static_cast<int>(tuple.size()) != expected) {
      throw ValidationError("map tuple " + std::to_string(i + 1) + " has " +
                            std::to_string(tuple.size()) + " components, expected " +
                            std::to_string(expected));
    }
    std::vector<OneForm> block;
    block.reserve(tuple.size());
    for (const Polynomial& component : tuple) {
      if (!component.is_zero() && component.terms().back().monomial.is_one()) {
        throw ValidationError("map component does not vanish at the origin");
      }
      block.push_back(differential(component));
    }
    blocks.push_back(std::move(block));
  }
  return FormCollection(partition, std::move(blocks));
}

bool is_isolated_special_scheme(const VarietyGerm& x, const FormCollection& c,
                                const EngineLimits& limits) {
  return is_zero_dimensional_local(special_scheme_ideal(x, c), limits);
}

}  // namespace chernob
