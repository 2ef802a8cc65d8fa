#pragma once

#include <vector>

#include "chernob/ideal.hpp"
#include "chernob/oneform.hpp"
#include "chernob/polynomial.hpp"
#include "chernob/stdbasis.hpp"

namespace chernob {

// A partition k = (k_1, ..., k_s) of n; block i of a collection carries
// n - k_i + 1 forms.
class Partition {
 public:
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return static_cast<int>(parts_.size()); }
  int part(int i) const { return parts_[static_cast<std::size_t>(i)]; }
  int sum() const { return sum_; }
  int block_size(int i) const { return sum_ - part(i) + 1; }

  bool operator==(const Partition&) const = default;

 private:
  std::vector<int> parts_;
  int sum_ = 0;
};

// The germ (X, 0) in C^N presented by N - n equations vanishing at the
// origin (a complete-intersection presentation; exact obstruction
// computations additionally assume the singularity is isolated, and a
// non-isolated locus surfaces downstream as an infinite colength).
class VarietyGerm {
 public:
  VarietyGerm(int variable_count, std::vector<Polynomial> equations);

  static VarietyGerm affine_space(int variable_count) { return VarietyGerm(variable_count, {}); }

  int variable_count() const { return variable_count_; }
  const std::vector<Polynomial>& equations() const { return equations_; }
  int codimension() const { return static_cast<int>(equations_.size()); }
  int dimension() const { return variable_count_ - codimension(); }

 private:
  int variable_count_;
  std::vector<Polynomial> equations_;
};

// The collection {w^(i)_j}: s blocks of 1-forms, block i of size
// n - k_i + 1 where n is the partition sum.
class FormCollection {
 public:
  FormCollection(Partition partition, std::vector<std::vector<OneForm>> blocks);

  const Partition& partition() const { return partition_; }
  const std::vector<std::vector<OneForm>>& blocks() const { return blocks_; }
  int block_count() const { return static_cast<int>(blocks_.size()); }
  const std::vector<OneForm>& block(int i) const { return blocks_[static_cast<std::size_t>(i)]; }
  int variable_count() const { return blocks_.front().front().variable_count(); }

 private:
  Partition partition_;
  std::vector<std::vector<OneForm>> blocks_;
};

// A collection whose forms all have constant coefficients.
class LinearCollection {
 public:
  LinearCollection(Partition partition, std::vector<std::vector<OneForm>> blocks);

  const FormCollection& forms() const { return forms_; }

 private:
  FormCollection forms_;
};

// Rows: the N - n Jacobian rows df_r first, then block i's form rows;
// columns in variable order. Rank drop at a smooth point of X expresses
// the linear dependence of the block's forms restricted to the tangent
// space.
struct DegeneracyMatrix {
  int block_index = 0;
  std::vector<std::vector<Polynomial>> rows;

  int row_count() const { return static_cast<int>(rows.size()); }
  int column_count() const { return static_cast<int>(rows.front().size()); }
};

DegeneracyMatrix build_degeneracy_matrix(const VarietyGerm& x, const FormCollection& c,
                                         int block_index);

// All maximal minors, column subsets enumerated lexicographically; zero
// minors are included. Laplace expansion memoized over column subsets.
std::vector<Polynomial> maximal_minors(const DegeneracyMatrix& m);

// Equations of X followed by the maximal minors of every block's
// degeneracy matrix (zero minors dropped). The local colength of this
// ideal is the algebraic index of the collection.
Ideal special_scheme_ideal(const VarietyGerm& x, const FormCollection& c);

// Builds the collection of differentials {d f^(i)_j} from map germs;
// tuple i must have n - k_i + 1 components, each vanishing at 0.
FormCollection collection_from_maps(const std::vector<std::vector<Polynomial>>& maps,
                                    const Partition& partition);

// Scheme-level isolation certificate: the special-scheme ideal is
// zero-dimensional in the local ring at the origin. Finite colength is a
// sufficient condition for the collection to have an isolated special
// point; the converse is not claimed.
bool is_isolated_special_scheme(const VarietyGerm& x, const FormCollection& c,
                                const EngineLimits& limits = {});

}  // namespace chernob
